#pragma once

#include <vector>

#include "gg/oracle.hpp"
#include "gg/slg1.hpp"
#include "gg/slg2.hpp"

namespace fixtures {

using gg::Code;
using gg::Id;

// S->AA, A->BC, B->'a', C->'b'; ids S=0 A=1 B=2 C=3, a=0 b=1.
inline gg::Slg1 abab() {
  return {{gg::Rule1::seq({1, 1}), gg::Rule1::seq({2, 3}), gg::Rule1::lit(0), gg::Rule1::lit(1)}, 2, 0};
}

inline gg::Slg1 single_literal(Code c = 0) { return {{gg::Rule1::lit(c)}, c + 1, 0}; }

// [[a,b],[c,d]]: literals 0..3, R1=4 (V a b), R2=5 (V c d), S=6 (H R1 R2).
inline gg::Slg2 two_by_two() {
  return {{gg::Rule2::lit(0), gg::Rule2::lit(1), gg::Rule2::lit(2), gg::Rule2::lit(3), gg::Rule2::vert({0, 1}),
           gg::Rule2::vert({2, 3}), gg::Rule2::horiz({4, 5})},
          4,
          6};
}

inline gg::Slg2 one_by_one(Code c = 0) { return {{gg::Rule2::lit(c)}, c + 1, 0}; }

inline std::vector<gg::BitVector> five_vectors() {
  return {{1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 0, 1, 0}};
}

// Recursive expansion straight from the rules.
inline void naive_expand1(const gg::Slg1& g, Id n, std::vector<Code>& out) {
  const auto& r = g.rules[n];
  if (r.literal) {
    out.push_back(r.code);
    return;
  }
  for (Id k : r.kids) naive_expand1(g, k, out);
}

inline std::vector<Code> naive_expand1(const gg::Slg1& g, Id n) {
  std::vector<Code> out;
  naive_expand1(g, n, out);
  return out;
}

inline std::vector<Code> naive_expand1(const gg::Slg1& g) { return naive_expand1(g, g.start); }

// Cell-by-cell recursive fold with the concatenation operators; empty children skipped.
inline gg::Matrix2D naive_expand2(const gg::Slg2& g, Id n) {
  const auto& r = g.rules[n];
  if (r.kind == gg::Kind2::Literal) return gg::Matrix2D(1, 1, r.code);
  gg::Matrix2D acc;
  bool have = false;
  for (Id k : r.kids) {
    gg::Matrix2D m = naive_expand2(g, k);
    if (m.rows() == 0 || m.cols() == 0) continue;
    if (!have) {
      acc = m;
      have = true;
    } else {
      acc = r.kind == gg::Kind2::Horiz ? gg::vconcat(acc, m) : gg::hconcat(acc, m);
    }
  }
  return acc;
}

inline gg::Matrix2D naive_expand2(const gg::Slg2& g) { return naive_expand2(g, g.start); }

inline gg::Matrix2D submatrix(const gg::Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                              std::uint64_t e_c) {
  gg::Matrix2D s(e_r - b_r, e_c - b_c);
  for (std::uint64_t i = b_r; i < e_r; ++i)
    for (std::uint64_t j = b_c; j < e_c; ++j) s.cell(i - b_r, j - b_c) = m.cell(i, j);
  return s;
}

inline unsigned log2_ceil(std::uint64_t n) {
  unsigned p = 0;
  while ((std::uint64_t{1} << p) < n) ++p;
  return p;
}

}  // namespace fixtures
