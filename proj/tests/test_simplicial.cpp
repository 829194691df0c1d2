// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "polygran/simplicial.hpp"

using namespace polygran;

namespace {

ErrorKind kind_thrown(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Empty;
}

MapWord random_word(gen::Rng& rng, std::size_t max_len = 8) {
  const std::size_t n = gen::pick(rng, 1, 6);
  std::size_t dim = n;
  std::vector<MapOp> ops;
  const std::size_t len = gen::pick(rng, 0, max_len);
  for (std::size_t k = 0; k < len; ++k) {
    const bool face = dim >= 2 && (dim >= 9 || gen::coin(rng, 0.5));
    if (face) {
      ops.push_back(MapOp::face(gen::pick(rng, 0, dim - 1)));
      --dim;
    } else {
      ops.push_back(MapOp::degeneracy(gen::pick(rng, 0, dim - 1)));
      ++dim;
    }
  }
  return MapWord(n, std::move(ops));
}

}  // namespace

TEST_CASE("face examples") {
  CHECK(face(Simplex({0.4, 0.6, 0.9}), 1) == Simplex({0.4, 0.9}));
  CHECK(face(Simplex({0.3, 0.8}), 0) == Simplex({0.8}));
  CHECK(face(Simplex({0.3, 0.8}), 1) == Simplex({0.3}));
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t i = 0; i < n; ++i) CHECK(face(Simplex::top(n), i) == Simplex::top(n - 1));
  }
  CHECK(kind_thrown([] { face(Simplex({0.5}), 0); }) == ErrorKind::DimensionTooSmall);
  CHECK(kind_thrown([] { face(Simplex({0.1, 0.5}), 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("degeneracy examples") {
  CHECK(degeneracy(Simplex({0.56, 0.76}), 1) == Simplex({0.56, 0.76, 0.76}));
  CHECK(degeneracy(Simplex({0.1, 0.2, 0.3}), 1) == Simplex({0.1, 0.2, 0.2, 0.3}));
  CHECK(degeneracy(Simplex({0.35}), 0) == Simplex({0.35, 0.35}));
  CHECK(kind_thrown([] { degeneracy(Simplex({0.1, 0.5}), 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("word grammar") {
  const MapWord w = MapWord::parse("s0 s2", 3);
  REQUIRE(w.ops().size() == 2);
  CHECK(w.ops()[0] == MapOp::degeneracy(0));
  CHECK(w.ops()[1] == MapOp::degeneracy(2));
  CHECK(w.output_dim() == 5);
  CHECK(w.to_string() == "s0 s2");
  CHECK(w.degeneracies_only());

  CHECK(MapWord::parse("  d1\t s0 \n", 3).to_string() == "d1 s0");
  CHECK(MapWord::parse("", 4).empty());
  CHECK(MapWord::parse("d007", 9).ops()[0] == MapOp::face(7));

  for (const char* bad : {"x1", "d", "s", "d-1", "s1a", "D1", "d1,s0", "d 1", "d99999999999999999999999999"}) {
    CAPTURE(bad);
    CHECK(kind_thrown([&] { MapWord::parse(bad, 3); }) == ErrorKind::InvalidWord);
  }
  // dimension consistency
  CHECK(kind_thrown([] { MapWord::parse("d0", 1); }) == ErrorKind::InvalidWord);
  CHECK(kind_thrown([] { MapWord::parse("s3", 3); }) == ErrorKind::InvalidWord);
  CHECK(kind_thrown([] { MapWord::parse("d0 d0 d0", 3); }) == ErrorKind::InvalidWord);
  CHECK(kind_thrown([] { MapWord::parse("s0", 0); }) == ErrorKind::InvalidWord);
}

TEST_CASE("apply_word") {
  // psi_3(p1, p2, p3) lifted by s0 then s2
  const double p1 = 0.2, p2 = 0.3, p3 = 0.4;
  const Simplex psi({p1, p1 + p2, p1 + p2 + p3});
  const Simplex out = apply_word(psi, MapWord::parse("s0 s2", 3));
  CHECK(out == Simplex({p1, p1, p1 + p2, p1 + p2, p1 + p2 + p3}));

  CHECK(apply_word(psi, MapWord(3, {})) == psi);
  CHECK(apply_word(psi, MapWord(3, {MapOp::face(2)})) == face(psi, 2));
  CHECK(kind_thrown([&] { apply_word(psi, MapWord(2, {})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("canonicalize examples") {
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(canonicalize_word(MapWord(5, {MapOp::degeneracy(j), MapOp::face(j)})).empty());
    CHECK(canonicalize_word(MapWord(5, {MapOp::degeneracy(j), MapOp::face(j + 1)})).empty());
  }
  // d_j applied after d_i with i < j becomes d_{j+1} then d_i
  const MapWord w(5, {MapOp::face(1), MapOp::face(3)});
  const MapWord c = canonicalize_word(w);
  CHECK(c.to_string() == "d4 d1");
  CHECK(canonicalize_word(MapWord(5, {MapOp::face(3), MapOp::face(1)})).to_string() == "d3 d1");
  CHECK(canonicalize_word(MapWord(3, {MapOp::degeneracy(2), MapOp::degeneracy(0)})).to_string() == "s0 s3");
}

TEST_CASE("property: canonical form matches the position-map normal form") {
  gen::Rng rng(41);
  for (int t = 0; t < 5000; ++t) {
    const MapWord w = random_word(rng);
    CAPTURE(w.to_string());
    CAPTURE(w.input_dim());
    const MapWord c = canonicalize_word(w);
    CHECK(c == oracle::normal_form(w));
    CHECK(canonicalize_word(c) == c);
    CHECK(oracle::position_map(c) == oracle::position_map(w));

    const Simplex s = gen::simplex(rng, w.input_dim());
    const Simplex direct = apply_word(s, w);
    CHECK(direct == apply_word(s, c));
    CHECK(direct.values() == oracle::apply_map(oracle::position_map(w), s.values()));
  }
}

TEST_CASE("identity examples") {
  gen::Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const Simplex s = gen::simplex(rng, gen::pick(rng, 1, 7));
    CHECK(face(degeneracy(s, 0), 0) == s);
  }
  const Simplex x({0.1, 0.4, 0.8});
  CHECK(face(face(x, 1), 0) == Simplex({0.8}));
  CHECK(face(face(x, 0), 0) == Simplex({0.8}));
}

TEST_CASE("verify_identities") {
  const auto r = verify_identities(4, 10000, 7);
  CHECK(r.all_passed());
  CHECK(r.dim == 4);
  CHECK(r.trials == 10000);
  for (const auto& f : r.families) {
    CHECK(f.checked > 0);
    CHECK(f.failed == 0);
  }

  // per-trial instance counts for n = 4: d d has C(4,2) = 6 pairs, s s has
  // 4+3+2+1 = 10, and d_i s_j splits (n+1) n = 20 into 6 / 8 / 6.
  CHECK(r[IdentityFamily::FaceFace].checked == 6 * 10000);
  CHECK(r[IdentityFamily::DegenDegen].checked == 10 * 10000);
  CHECK(r[IdentityFamily::FaceDegenBelow].checked == 6 * 10000);
  CHECK(r[IdentityFamily::FaceDegenCancel].checked == 8 * 10000);
  CHECK(r[IdentityFamily::FaceDegenAbove].checked == 6 * 10000);

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto a = verify_identities(n, 1000, 3);
    CHECK(a.all_passed());
    CHECK(a == serial::verify_identities(n, 1000, 3));
  }
  CHECK(verify_identities(2, 100, 1)[IdentityFamily::FaceFace].checked == 0);
  CHECK_THROWS_AS(verify_identities(0, 10, 1), Error);
}

TEST_CASE("check_identities_on flags a broken identity") {
  // sanity check that the tally can fail: a report built from a mismatch
  IdentityReport r;
  check_identities_on(Simplex({0.1, 0.2, 0.3}), r);
  CHECK(r.all_passed());
  r.families[0].failed = 1;
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("property: maps are monotone lattice homomorphisms") {
  gen::Rng rng(61);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int t = 0; t < 500; ++t) {
      const Simplex a = gen::simplex(rng, n);
      const Simplex b = gen::simplex(rng, n);
      for (std::size_t k = 0; k < n; ++k) {
        if (n >= 2) {
          CHECK(face(meet(a, b), k) == meet(face(a, k), face(b, k)));
          CHECK(face(join(a, b), k) == join(face(a, k), face(b, k)));
          if (leq(a, b)) CHECK(leq(face(a, k), face(b, k)));
        }
        CHECK(degeneracy(meet(a, b), k) == meet(degeneracy(a, k), degeneracy(b, k)));
        CHECK(degeneracy(join(a, b), k) == join(degeneracy(a, k), degeneracy(b, k)));
        if (leq(a, b)) CHECK(leq(degeneracy(a, k), degeneracy(b, k)));
        CHECK_NOTHROW(Simplex(degeneracy(a, k).values(), Tolerance{0.0}));
      }
    }
  }
}
