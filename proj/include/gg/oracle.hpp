#pragma once

#include <cstdint>
#include <vector>

#include "gg/slg2.hpp"

namespace gg {

// Ranges are (b..e] per axis; b >= e is empty.
struct QueryRect {
  std::uint64_t b_r = 0, e_r = 0, b_c = 0, e_c = 0;
};

using BitVector = std::vector<std::uint8_t>;

namespace oracle {

std::uint64_t rank(const std::vector<Code>& t, std::uint64_t j, Code a);
int occurs(const std::vector<Code>& t, std::uint64_t b, std::uint64_t e, Code a);

std::uint64_t sum(const Matrix2D& m, const QueryRect& q);
std::uint64_t sum(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                  std::uint64_t e_c);
std::uint64_t line_sum(const Matrix2D& m, std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l);
int all_zero(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
             std::uint64_t e_c);
int square_all_zero(const Matrix2D& m, std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l);

// Origins are 1-based top-left corners.
int equal_rect(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
               std::uint64_t b_c2, std::uint64_t h, std::uint64_t w);
std::uint64_t square_lce(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                         std::uint64_t b_c2);
std::uint64_t line_lce(const Matrix2D& m, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                       std::uint64_t b_c2, std::uint64_t l);

int row_pattern_occurs(const Matrix2D& m, const std::vector<Code>& p);
int ov_brute(const std::vector<BitVector>& a);

}  // namespace oracle
}  // namespace gg
