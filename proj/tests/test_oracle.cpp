#include <algorithm>

#include "doctest.h"
#include "gg/generate.hpp"
#include "gg/oracle.hpp"
#include "helpers.hpp"

using namespace gg;

namespace {

Matrix2D random_matrix(gen::Rng& rng, std::uint64_t r, std::uint64_t c, Code sigma) {
  Matrix2D m(r, c);
  for (std::uint64_t i = 0; i < r; ++i)
    for (std::uint64_t j = 0; j < c; ++j) m.cell(i, j) = rng() % sigma;
  return m;
}

}  // namespace

TEST_CASE("rank") {
  std::vector<Code> t{0, 1, 0};
  CHECK(oracle::rank(t, 3, 0) == 2);
  CHECK(oracle::rank(t, 0, 0) == 0);
  CHECK(oracle::rank(t, 0, 7) == 0);
  CHECK(oracle::rank(t, 3, 1) == 1);
  CHECK(oracle::rank(t, 2, 0) == 1);
  CHECK_THROWS_AS(oracle::rank(t, 4, 0), Error);
}

TEST_CASE("occurs") {
  std::vector<Code> t{0, 1};
  CHECK(oracle::occurs(t, 0, 1, 1) == 0);
  CHECK(oracle::occurs(t, 0, 2, 1) == 1);
  CHECK(oracle::occurs(t, 1, 1, 0) == 0);
  CHECK(oracle::occurs(t, 2, 1, 0) == 0);
  CHECK_THROWS_AS(oracle::occurs(t, 0, 3, 0), Error);
}

TEST_CASE("occurs agrees with rank differences") {
  gen::Rng rng(5);
  for (int it = 0; it < 50; ++it) {
    auto t = gen::random_string(rng, 1 + rng() % 30, 4);
    for (std::uint64_t b = 0; b <= t.size(); ++b)
      for (std::uint64_t e = b; e <= t.size(); ++e)
        for (Code a = 0; a < 4; ++a)
          CHECK(oracle::occurs(t, b, e, a) == (oracle::rank(t, e, a) > oracle::rank(t, b, a) ? 1 : 0));
  }
}

TEST_CASE("sum family") {
  Matrix2D m = Matrix2D::from_rows({{1, 2}, {3, 4}});
  CHECK(oracle::sum(m, 0, 0, 2, 2) == 10);
  CHECK(oracle::sum(m, QueryRect{0, 2, 0, 2}) == 10);
  CHECK(oracle::sum(m, 1, 1, 1, 2) == 0);
  CHECK(oracle::line_sum(m, 2, 2, 2) == 7);
  CHECK(oracle::line_sum(m, 1, 2, 1) == 2);
  CHECK(oracle::square_all_zero(m, 2, 2, 0) == 1);
  CHECK(oracle::all_zero(m, 0, 0, 2, 2) == 0);
  CHECK(oracle::all_zero(m, 0, 0, 0, 2) == 1);
  CHECK_THROWS_AS(oracle::sum(m, 0, 0, 3, 2), Error);
  CHECK_THROWS_AS(oracle::line_sum(m, 2, 1, 2), Error);
  CHECK_THROWS_AS(oracle::square_all_zero(m, 1, 2, 2), Error);
  CHECK_THROWS_AS(oracle::line_sum(m, 0, 1, 1), Error);
}

TEST_CASE("line sum and square all-zero match their rewrites") {
  gen::Rng rng(7);
  for (int it = 0; it < 40; ++it) {
    Matrix2D m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 2);
    for (std::uint64_t er = 1; er <= m.rows(); ++er)
      for (std::uint64_t ec = 0; ec <= m.cols(); ++ec)
        for (std::uint64_t l = 0; l <= ec; ++l) {
          CHECK(oracle::line_sum(m, er, ec, l) == oracle::sum(m, er - 1, ec - l, er, ec));
          if (l <= er) CHECK(oracle::square_all_zero(m, er, ec, l) == oracle::all_zero(m, er - l, ec - l, er, ec));
        }
  }
}

TEST_CASE("equality and LCE") {
  Matrix2D m = Matrix2D::from_rows({{0, 1}, {0, 1}});
  CHECK(oracle::square_lce(m, 1, 1, 2, 1) == 1);
  CHECK(oracle::equal_rect(m, 1, 1, 2, 1, 1, 2) == 1);
  CHECK(oracle::equal_rect(m, 1, 1, 1, 2, 1, 1) == 0);
  CHECK(oracle::line_lce(m, 1, 1, 1, 1, 2) == 2);
  CHECK(oracle::square_lce(m, 1, 1, 1, 1) == 2);
  CHECK(oracle::square_lce(m, 1, 1, 1, 2) == 0);
  CHECK_THROWS_AS(oracle::equal_rect(m, 1, 1, 2, 1, 2, 2), Error);
  CHECK_THROWS_AS(oracle::square_lce(m, 0, 1, 1, 1), Error);
}

TEST_CASE("square LCE is the largest matching square") {
  gen::Rng rng(11);
  for (int it = 0; it < 30; ++it) {
    Matrix2D m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, 2);
    const auto r = m.rows(), c = m.cols();
    for (std::uint64_t a = 1; a <= r; ++a)
      for (std::uint64_t b = 1; b <= c; ++b)
        for (std::uint64_t a2 = 1; a2 <= r; ++a2)
          for (std::uint64_t b2 = 1; b2 <= c; ++b2) {
            std::uint64_t t = oracle::square_lce(m, a, b, a2, b2);
            std::uint64_t edge = std::min({r - a + 1, c - b + 1, r - a2 + 1, c - b2 + 1});
            REQUIRE(t <= edge);
            if (t > 0) CHECK(fixtures::submatrix(m, a - 1, b - 1, a - 1 + t, b - 1 + t) ==
                             fixtures::submatrix(m, a2 - 1, b2 - 1, a2 - 1 + t, b2 - 1 + t));
            if (t < edge)
              CHECK_FALSE(fixtures::submatrix(m, a - 1, b - 1, a + t, b + t) ==
                          fixtures::submatrix(m, a2 - 1, b2 - 1, a2 + t, b2 + t));
          }
  }
}

TEST_CASE("row pattern occurrence") {
  Matrix2D z(3, 4, 0);
  CHECK(oracle::row_pattern_occurs(z, {1}) == 0);
  CHECK(oracle::row_pattern_occurs(z, {0, 0, 0, 0, 0}) == 0);
  CHECK(oracle::row_pattern_occurs(z, {0, 0}) == 1);
  Matrix2D m = Matrix2D::from_rows({{0, 1, 0, 0, 1}, {1, 1, 1, 1, 1}});
  CHECK(oracle::row_pattern_occurs(m, {1, 0, 0, 1}) == 1);
  CHECK(oracle::row_pattern_occurs(m, {1, 0, 1}) == 0);
}

TEST_CASE("orthogonal vectors by brute force") {
  CHECK(oracle::ov_brute(fixtures::five_vectors()) == 1);
  CHECK(oracle::ov_brute({{1, 1}}) == 0);
  CHECK(oracle::ov_brute({{0, 0}}) == 1);
  CHECK(oracle::ov_brute({{1, 0}, {1, 1}}) == 0);
  CHECK(oracle::ov_brute({{1, 0}, {0, 1}}) == 1);
}
