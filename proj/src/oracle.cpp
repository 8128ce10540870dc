#include "gg/oracle.hpp"

#include <algorithm>
#include <string>

namespace gg::oracle {

namespace {

void need(bool ok, const char* what) {
  if (!ok) fail(Errc::RangeError, what);
}

void check_rect(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                std::uint64_t e_c) {
  need(b_r <= m.rows() && e_r <= m.rows() && b_c <= m.cols() && e_c <= m.cols(), "rectangle bounds");
}

void check_origin(const Matrix2D& m, std::uint64_t r, std::uint64_t c) {
  need(r >= 1 && c >= 1 && r <= m.rows() && c <= m.cols(), "origin out of range");
}

bool cells_equal(const Matrix2D& m, std::uint64_t r1, std::uint64_t c1, std::uint64_t r2,
                 std::uint64_t c2, std::uint64_t h, std::uint64_t w) {
  for (std::uint64_t i = 0; i < h; ++i)
    for (std::uint64_t j = 0; j < w; ++j)
      if (m.cell(r1 - 1 + i, c1 - 1 + j) != m.cell(r2 - 1 + i, c2 - 1 + j)) return false;
  return true;
}

}  // namespace

std::uint64_t rank(const std::vector<Code>& t, std::uint64_t j, Code a) {
  need(j <= t.size(), "rank position");
  return static_cast<std::uint64_t>(std::count(t.begin(), t.begin() + j, a));
}

int occurs(const std::vector<Code>& t, std::uint64_t b, std::uint64_t e, Code a) {
  need(b <= t.size() && e <= t.size(), "occurs range");
  if (b >= e) return 0;
  return std::find(t.begin() + b, t.begin() + e, a) != t.begin() + e;
}

std::uint64_t sum(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                  std::uint64_t e_c) {
  check_rect(m, b_r, b_c, e_r, e_c);
  std::uint64_t s = 0;
  for (std::uint64_t i = b_r; i < e_r; ++i)
    for (std::uint64_t j = b_c; j < e_c; ++j) s += m.cell(i, j);
  return s;
}

std::uint64_t sum(const Matrix2D& m, const QueryRect& q) { return sum(m, q.b_r, q.b_c, q.e_r, q.e_c); }

std::uint64_t line_sum(const Matrix2D& m, std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) {
  need(e_r >= 1 && e_c >= l, "line sum arguments");
  return sum(m, e_r - 1, e_c - l, e_r, e_c);
}

int all_zero(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
             std::uint64_t e_c) {
  check_rect(m, b_r, b_c, e_r, e_c);
  for (std::uint64_t i = b_r; i < e_r; ++i)
    for (std::uint64_t j = b_c; j < e_c; ++j)
      if (m.cell(i, j) != 0) return 0;
  return 1;
}

int square_all_zero(const Matrix2D& m, std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) {
  need(e_r >= l && e_c >= l, "square all-zero arguments");
  return all_zero(m, e_r - l, e_c - l, e_r, e_c);
}

int equal_rect(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
               std::uint64_t b_c2, std::uint64_t h, std::uint64_t w) {
  check_origin(m, b_r, b_c);
  check_origin(m, b_r2, b_c2);
  need(std::max(b_r, b_r2) + h <= m.rows() + 1 && std::max(b_c, b_c2) + w <= m.cols() + 1,
       "equality extent");
  return cells_equal(m, b_r, b_c, b_r2, b_c2, h, w);
}

std::uint64_t square_lce(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                         std::uint64_t b_c2) {
  check_origin(m, b_r, b_c);
  check_origin(m, b_r2, b_c2);
  const std::uint64_t edge = std::min({m.rows() + 1 - std::max(b_r, b_r2), m.cols() + 1 - std::max(b_c, b_c2)});
  std::uint64_t t = 0;
  // Grow the square one ring at a time.
  while (t < edge) {
    bool ok = true;
    for (std::uint64_t i = 0; i <= t && ok; ++i)
      ok = m.cell(b_r - 1 + i, b_c - 1 + t) == m.cell(b_r2 - 1 + i, b_c2 - 1 + t) &&
           m.cell(b_r - 1 + t, b_c - 1 + i) == m.cell(b_r2 - 1 + t, b_c2 - 1 + i);
    if (!ok) break;
    ++t;
  }
  return t;
}

std::uint64_t line_lce(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                       std::uint64_t b_c2, std::uint64_t l) {
  check_origin(m, b_r, b_c);
  check_origin(m, b_r2, b_c2);
  need(b_r + l <= m.rows() + 1 && b_r2 + l <= m.rows() + 1, "line LCE height");
  const std::uint64_t edge = m.cols() + 1 - std::max(b_c, b_c2);
  std::uint64_t t = 0;
  while (t < edge && cells_equal(m, b_r, b_c + t, b_r2, b_c2 + t, l, 1)) ++t;
  return t;
}

int row_pattern_occurs(const Matrix2D& m, const std::vector<Code>& p) {
  if (p.empty() || p.size() > m.cols()) return 0;
  for (std::uint64_t i = 0; i < m.rows(); ++i)
    for (std::uint64_t j = 0; j + p.size() <= m.cols(); ++j) {
      std::uint64_t k = 0;
      while (k < p.size() && m.cell(i, j + k) == p[k]) ++k;
      if (k == p.size()) return 1;
    }
  return 0;
}

int ov_brute(const std::vector<BitVector>& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x; y < a.size(); ++y) {
      bool orth = true;
      for (std::size_t k = 0; k < a[x].size() && orth; ++k) orth = !(a[x][k] && a[y][k]);
      if (orth) return 1;
    }
  return 0;
}

}  // namespace gg::oracle
