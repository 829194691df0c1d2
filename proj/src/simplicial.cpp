// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/simplicial.hpp"

#include <charconv>
#include <string>

namespace polygran {

Simplex face(const Simplex& s, std::size_t i) {
  const std::size_t n = s.dim();
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "face map on L_1");
  if (i >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "d_" + std::to_string(i) + " on L_" + std::to_string(n) + " (needs i <= " + std::to_string(n - 1) + ")");
  }
  std::vector<double> out;
  out.reserve(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k != i) out.push_back(s[k]);
  }
  return Simplex(detail::trusted, std::move(out));
}

Simplex degeneracy(const Simplex& s, std::size_t j) {
  const std::size_t n = s.dim();
  if (j >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "s_" + std::to_string(j) + " on L_" + std::to_string(n) + " (needs j <= " + std::to_string(n - 1) + ")");
  }
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(s[k]);
    if (k == j) out.push_back(s[k]);
  }
  return Simplex(detail::trusted, std::move(out));
}

MapWord::MapWord(std::size_t input_dim, std::vector<MapOp> ops)
    : input_dim_(input_dim), output_dim_(input_dim), ops_(std::move(ops)) {
  if (input_dim_ == 0) throw Error(ErrorKind::InvalidWord, "input dimension must be >= 1");
  std::size_t dim = input_dim_;
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    const MapOp& op = ops_[k];
    const std::string where = "operator " + std::to_string(k + 1) + " (" + static_cast<char>(op.kind) +
                              std::to_string(op.index) + ") on L_" + std::to_string(dim);
    if (op.is_face()) {
      if (dim < 2) throw Error(ErrorKind::InvalidWord, where + ": face map needs dimension >= 2");
      if (op.index >= dim) throw Error(ErrorKind::InvalidWord, where + ": index out of range");
      --dim;
    } else {
      if (op.index >= dim) throw Error(ErrorKind::InvalidWord, where + ": index out of range");
      ++dim;
    }
  }
  output_dim_ = dim;
}

MapWord MapWord::parse(std::string_view text, std::size_t input_dim) {
  std::vector<MapOp> ops;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    const bool prefix_ok = tok.size() >= 2 && (tok[0] == 'd' || tok[0] == 's');
    bool digits_ok = prefix_ok;
    for (std::size_t k = 1; digits_ok && k < tok.size(); ++k) digits_ok = tok[k] >= '0' && tok[k] <= '9';
    if (!digits_ok) throw Error(ErrorKind::InvalidWord, "bad token '" + std::string(tok) + "'");

    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::InvalidWord, "index too large in '" + std::string(tok) + "'");
    }
    ops.push_back(tok[0] == 'd' ? MapOp::face(index) : MapOp::degeneracy(index));
  }
  return MapWord(input_dim, std::move(ops));
}

bool MapWord::degeneracies_only() const noexcept {
  for (const MapOp& op : ops_) {
    if (op.is_face()) return false;
  }
  return true;
}

std::string MapWord::to_string() const {
  std::string out;
  for (const MapOp& op : ops_) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(op.kind);
    out += std::to_string(op.index);
  }
  return out;
}

Simplex apply_word(const Simplex& s, const MapWord& w) {
  if (s.dim() != w.input_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "word expects L_" + std::to_string(w.input_dim()) + ", got L_" +
                                                  std::to_string(s.dim()));
  }
  Simplex cur = s;
  for (const MapOp& op : w.ops()) cur = op.is_face() ? face(cur, op.index) : degeneracy(cur, op.index);
  return cur;
}

namespace {

// One rewrite step on the adjacent pair (a, b), a applied first. Returns
// false when the pair is already in normal-form order.
bool rewrite_pair(const MapOp& a, const MapOp& b, std::vector<MapOp>& replacement) {
  replacement.clear();
  if (!a.is_face() && b.is_face()) {
    const std::size_t j = a.index;
    const std::size_t i = b.index;
    if (i == j || i == j + 1) return true;  // d_i s_j = id
    if (i < j) {
      replacement = {MapOp::face(i), MapOp::degeneracy(j - 1)};  // d_i s_j = s_{j-1} d_i
    } else {
      replacement = {MapOp::face(i - 1), MapOp::degeneracy(j)};  // d_i s_j = s_j d_{i-1}
    }
    return true;
  }
  if (a.is_face() && b.is_face() && a.index <= b.index) {
    // d_q d_p with p <= q equals d_p d_{q+1}
    replacement = {MapOp::face(b.index + 1), MapOp::face(a.index)};
    return true;
  }
  if (!a.is_face() && !b.is_face() && a.index >= b.index) {
    // s_q s_p with q <= p equals s_{p+1} s_q
    replacement = {MapOp::degeneracy(b.index), MapOp::degeneracy(a.index + 1)};
    return true;
  }
  return false;
}

}  // namespace

MapWord canonicalize_word(const MapWord& w) {
  std::vector<MapOp> ops = w.ops();
  std::vector<MapOp> replacement;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
      if (rewrite_pair(ops[k], ops[k + 1], replacement)) {
        ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(k), ops.begin() + static_cast<std::ptrdiff_t>(k + 2));
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(k), replacement.begin(), replacement.end());
        changed = true;
        break;
      }
    }
  }
  return MapWord(w.input_dim(), std::move(ops));
}

}  // namespace polygran
