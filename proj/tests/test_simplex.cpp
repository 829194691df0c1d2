// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"
#include "oracles.hpp"
#include "polygran/simplex.hpp"

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

}  // namespace

TEST_CASE("simplex construction") {
  const Simplex s({0.4, 0.6, 0.9});
  CHECK(s.dim() == 3);
  CHECK(s.values() == std::vector<double>{0.4, 0.6, 0.9});

  CHECK(Simplex({0.0, 0.0, 0.0, 0.0}) == Simplex::bottom(4));
  CHECK(kind_thrown([] { Simplex({0.6, 0.4}); }) == ErrorKind::NotMonotone);
  CHECK(kind_thrown([] { Simplex(std::vector<double>{}); }) == ErrorKind::Empty);
  CHECK(kind_thrown([] { Simplex({-0.1, 0.5}); }) == ErrorKind::OutOfRange);
  CHECK(kind_thrown([] { Simplex({0.5, 1.1}); }) == ErrorKind::OutOfRange);
  CHECK(kind_thrown([] { Simplex({std::numeric_limits<double>::quiet_NaN()}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("values inside the tolerance are accepted") {
  const Simplex a({-5e-10, 1.0 + 5e-10});
  CHECK(a[0] == -5e-10);
  CHECK(a[1] == 1.0 + 5e-10);

  // a dip smaller than eps is lifted so the stored order never decreases
  const Simplex b({0.5, 0.5 - 5e-10, 0.7});
  CHECK(b[1] >= b[0]);
  CHECK(b[1] == 0.5);

  CHECK(kind_thrown([] { Simplex({0.5, 0.5 - 1e-6}); }) == ErrorKind::NotMonotone);
  CHECK_NOTHROW(Simplex({0.5, 0.5 - 1e-6}, Tolerance{1e-5}));
}

TEST_CASE("is_strict and friends") {
  CHECK(is_strict(Simplex({0.1, 0.5, 0.8})));
  CHECK_FALSE(is_strict(Simplex({0.1, 0.1, 0.8})));
  CHECK_FALSE(is_strict(Simplex({0.1, 0.5, 1.0})));
  CHECK(is_strict(Simplex({0.0, 0.5})));

  CHECK(is_strictly_increasing(Simplex({0.1, 0.5, 1.0})));
  CHECK_FALSE(is_interior(Simplex({0.0, 0.5})));
  CHECK(is_interior(Simplex({0.1, 0.5})));
}

TEST_CASE("leq, meet, join examples") {
  CHECK(leq(Simplex({0.1, 0.2}), Simplex({0.3, 0.4})));
  CHECK_FALSE(leq(Simplex({0.1, 0.5}), Simplex({0.3, 0.4})));
  CHECK_FALSE(leq(Simplex({0.3, 0.4}), Simplex({0.1, 0.5})));
  const Simplex a({0.2, 0.7, 0.7});
  CHECK(leq(a, a));

  CHECK(meet(Simplex({0.1, 0.5}), Simplex({0.3, 0.4})) == Simplex({0.1, 0.4}));
  CHECK(join(a, Simplex::bottom(3)) == a);
  CHECK(meet(a, Simplex::top(3)) == a);

  CHECK(kind_thrown([] { leq(Simplex({0.1}), Simplex({0.1, 0.2})); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_thrown([] { meet(Simplex({0.1}), Simplex({0.1, 0.2})); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_thrown([] { join(Simplex({0.1}), Simplex({0.1, 0.2})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("meet and join of L_2 grid points stay monotone") {
  // brute force over a 21 x 21 grid of monotone pairs
  std::vector<Simplex> pts;
  for (int i = 0; i <= 20; ++i) {
    for (int j = i; j <= 20; ++j) pts.push_back(Simplex({i / 20.0, j / 20.0}));
  }
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      const Simplex m = meet(a, b);
      const Simplex J = join(a, b);
      CHECK_NOTHROW(Simplex(m.values(), Tolerance{0.0}));
      CHECK_NOTHROW(Simplex(J.values(), Tolerance{0.0}));
      CHECK(m[0] == std::min(a[0], b[0]));
      CHECK(J[1] == std::max(a[1], b[1]));
    }
  }
}

TEST_CASE("top, bottom, projection") {
  CHECK(Simplex::top(3).values() == std::vector<double>{1, 1, 1});
  CHECK(Simplex::bottom(2).values() == std::vector<double>{0, 0});
  CHECK(kind_thrown([] { Simplex::top(0); }) == ErrorKind::DimensionTooSmall);
  CHECK(kind_thrown([] { Simplex::bottom(0); }) == ErrorKind::DimensionTooSmall);

  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Simplex s = gen::simplex(rng, gen::pick(rng, 1, 8));
    CHECK(leq(Simplex::bottom(s.dim()), s));
    CHECK(leq(s, Simplex::top(s.dim())));
  }

  const Simplex s({0.4, 0.6, 0.9});
  CHECK(s.projection(2) == 0.6);
  CHECK(Simplex::top(3).projection(1) == 1.0);
  CHECK(kind_thrown([&] { (void)s.projection(4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_thrown([&] { (void)s.projection(0); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("vertices") {
  const auto v2 = vertices(2);
  REQUIRE(v2.size() == 3);
  CHECK(v2[0] == Simplex({0, 0}));
  CHECK(v2[1] == Simplex({0, 1}));
  CHECK(v2[2] == Simplex({1, 1}));
  CHECK(vertices(3)[1] == Simplex({0, 0, 1}));
  CHECK(kind_thrown([] { vertices(0); }) == ErrorKind::DimensionTooSmall);

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto v = vertices(n);
    CHECK(v.size() == n + 1);
    std::vector<std::vector<double>> diff;
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK_NOTHROW(Simplex(v[k].values(), Tolerance{0.0}));
      std::vector<double> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = v[k][c] - v[0][c];
      diff.push_back(row);
    }
    CHECK(oracle::rank(diff) == n);
  }
}

TEST_CASE("weights transform examples") {
  const WeightVector w = to_weights(Simplex({0.4, 0.6, 0.9}));
  REQUIRE(w.size() == 4);
  CHECK(oracle::close(w.values(), {0.4, 0.2, 0.3, 0.1}, 1e-12));
  CHECK(std::abs(w[0] + w[1] + w[2] + w[3] - 1.0) <= 1e-12);

  CHECK(to_weights(Simplex::bottom(3)).values() == std::vector<double>{0, 0, 0, 1});
  CHECK(to_weights(Simplex::top(3)).values() == std::vector<double>{1, 0, 0, 0});

  CHECK(oracle::close(from_weights(WeightVector({0.4, 0.2, 0.3, 0.1})).values(), {0.4, 0.6, 0.9}, 1e-12));
  CHECK(from_weights(WeightVector({1, 0, 0, 0})) == Simplex::top(3));
}

TEST_CASE("weight vector validation") {
  CHECK(kind_thrown([] { WeightVector(std::vector<double>{}); }) == ErrorKind::Empty);
  CHECK(kind_thrown([] { WeightVector({1.0}); }) == ErrorKind::DimensionTooSmall);
  CHECK(kind_thrown([] { WeightVector({-0.1, 1.1}); }) == ErrorKind::OutOfRange);
  CHECK(kind_thrown([] { WeightVector({0.5, 0.6}); }) == ErrorKind::SumExceeded);
  const WeightVector w({-5e-10, 1.0});
  CHECK(w[0] == 0.0);
}

TEST_CASE("barycentric examples") {
  const auto l = barycentric(vertices(3)[2]);
  CHECK(l == std::vector<double>{0, 0, 1, 0});
  CHECK(oracle::close(barycentric(Simplex({0.4, 0.6, 0.9})), {0.1, 0.3, 0.2, 0.4}, 1e-12));
}

TEST_CASE("property: weights round trip and barycentric reconstruction") {
  gen::Rng rng(21);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = gen::pick(rng, 1, 8);
    const Simplex s = gen::simplex(rng, n);
    const WeightVector w = to_weights(s);
    double sum = 0.0;
    for (double x : w.values()) {
      CHECK(x >= -1e-12);
      sum += x;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    CHECK(oracle::close(from_weights(w).values(), s.values(), 1e-12));

    const WeightVector w2 = gen::weights(rng, n + 1);
    CHECK(oracle::close(to_weights(from_weights(w2)).values(), w2.values(), 1e-12));

    const auto lambda = barycentric(s);
    const auto v = vertices(n);
    std::vector<double> rebuilt(n, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(lambda[k] >= 0.0);
      for (std::size_t c = 0; c < n; ++c) rebuilt[c] += lambda[k] * v[k][c];
    }
    CHECK(oracle::close(rebuilt, s.values(), 1e-12));

    bool all_positive = true;
    for (double l : lambda) all_positive = all_positive && l > 0.0;
    CHECK(all_positive == is_interior(s));
  }
}

TEST_CASE("property: lattice laws") {
  gen::Rng rng(31);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int t = 0; t < 2000; ++t) {
      const Simplex a = gen::simplex(rng, n);
      const Simplex b = gen::simplex(rng, n);
      const Simplex c = gen::simplex(rng, n);
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
      CHECK(join(join(a, b), c) == join(a, join(b, c)));
      CHECK(meet(a, a) == a);
      CHECK(join(a, a) == a);
      CHECK(join(a, meet(a, b)) == a);
      CHECK(meet(a, join(a, b)) == a);
      CHECK(leq(a, b) == (meet(a, b) == a));
      CHECK(leq(a, b) == (join(a, b) == b));
    }
  }
}

TEST_CASE("exact volume") {
  CHECK(exact_volume(3) == Rational{1, 6});
  CHECK(exact_volume(1) == Rational{1, 1});
  CHECK(exact_volume(4) == Rational{1, 24});
  CHECK(exact_volume(20).den == 2432902008176640000ULL);
  CHECK(kind_thrown([] { exact_volume(21); }) == ErrorKind::Overflow);
  CHECK(kind_thrown([] { exact_volume(0); }) == ErrorKind::DimensionTooSmall);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(exact_volume(n).value() == doctest::Approx(oracle::monotone_share(n)));
}
