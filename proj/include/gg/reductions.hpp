#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gg/oracle.hpp"
#include "gg/slg1.hpp"
#include "gg/slg2.hpp"

namespace gg {

struct OvInstance {
  std::vector<BitVector> vectors;
  std::size_t d = 0;
  std::size_t n() const { return vectors.size(); }
};

// Checks n >= 1 and a shared dimension.
OvInstance make_ov(std::vector<BitVector> vectors);
OvInstance uniform_ov(const OvInstance& a);

struct PmInstance {
  std::vector<Code> pattern;
  Slg2 grammar;
  std::size_t n = 0, d = 0, l = 0;
};

PmInstance ov_to_pm(const OvInstance& a);

Matrix2D mark_char(const std::vector<Code>& t, Code a);
Matrix2D mark_all_chars(const std::vector<Code>& t, Code sigma);
Matrix2D ext_mark_all_chars(const std::vector<Code>& t, Code sigma);
Slg2 mark_grammar(const Slp1& g, Code sigma);
Slg2 ext_mark_grammar(const Slp1& g, Code sigma);

struct AlphabetMap {
  std::vector<Code> A;  // strictly increasing
  std::optional<Code> forward(Code c) const;
};

struct AlphabetReduced {
  Slp1 grammar;
  AlphabetMap map;
};

AlphabetReduced alphabet_reduce(const Slp1& g);

// Abstract 2D query provider. Unimplemented queries throw Unsupported.
class Queries2D {
 public:
  virtual ~Queries2D() = default;
  virtual std::uint64_t rows() const = 0;
  virtual std::uint64_t cols() const = 0;
  virtual std::uint64_t sum(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                            std::uint64_t e_c) const;
  virtual std::uint64_t line_sum(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const;
  virtual int all_zero(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const;
  virtual int square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const;
  virtual int equal_rect(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2, std::uint64_t b_c2,
                         std::uint64_t h, std::uint64_t w) const;
  virtual std::uint64_t square_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                                   std::uint64_t b_c2) const;
  virtual std::uint64_t line_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                                 std::uint64_t b_c2, std::uint64_t l) const;
};

// Every query by direct scan.
class ScanOracle : public Queries2D {
 public:
  explicit ScanOracle(Matrix2D m) : m_(std::move(m)) {}
  const Matrix2D& matrix() const { return m_; }
  std::uint64_t rows() const override { return m_.rows(); }
  std::uint64_t cols() const override { return m_.cols(); }
  std::uint64_t sum(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const override;
  std::uint64_t line_sum(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const override;
  int all_zero(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const override;
  int square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const override;
  int equal_rect(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2, std::uint64_t b_c2,
                 std::uint64_t h, std::uint64_t w) const override;
  std::uint64_t square_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                           std::uint64_t b_c2) const override;
  std::uint64_t line_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2, std::uint64_t b_c2,
                         std::uint64_t l) const override;

 private:
  Matrix2D m_;
};

// Sum-family queries in O(1) from 2D prefix sums.
class PrefixSumOracle : public Queries2D {
 public:
  explicit PrefixSumOracle(const Matrix2D& m);
  std::uint64_t rows() const override { return r_; }
  std::uint64_t cols() const override { return c_; }
  std::uint64_t sum(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const override;
  std::uint64_t line_sum(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const override;
  int all_zero(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const override;
  int square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const override;

 private:
  std::uint64_t at(std::uint64_t i, std::uint64_t j) const { return p_[i * (c_ + 1) + j]; }
  std::uint64_t r_, c_;
  std::vector<std::uint64_t> p_;
};

enum class QueryKind { Sum, LineSum, AllZero, SquareAllZero, Equal, SquareLce, LineLce, Count_ };

class CountingQueries : public Queries2D {
 public:
  explicit CountingQueries(const Queries2D& inner) : in_(inner) {}
  std::uint64_t calls(QueryKind k) const { return n_[static_cast<int>(k)]; }
  std::uint64_t total() const;
  void reset() { n_.fill(0); }
  std::uint64_t rows() const override { return in_.rows(); }
  std::uint64_t cols() const override { return in_.cols(); }
  std::uint64_t sum(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const override;
  std::uint64_t line_sum(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const override;
  int all_zero(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const override;
  int square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const override;
  int equal_rect(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2, std::uint64_t b_c2,
                 std::uint64_t h, std::uint64_t w) const override;
  std::uint64_t square_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                           std::uint64_t b_c2) const override;
  std::uint64_t line_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2, std::uint64_t b_c2,
                         std::uint64_t l) const override;

 private:
  void bump(QueryKind k) const { ++n_[static_cast<int>(k)]; }
  const Queries2D& in_;
  mutable std::array<std::uint64_t, static_cast<int>(QueryKind::Count_)> n_{};
};

std::uint64_t rank_via_line_sum(const Queries2D& p, const AlphabetMap& map, std::uint64_t j, Code c);
int occurs_via_square_all_zero(const Queries2D& p, const AlphabetMap& map, std::uint64_t b,
                               std::uint64_t e, Code c);
std::uint64_t square_lce_via_line_lce(const Queries2D& p, std::uint64_t b_r, std::uint64_t b_c,
                                      std::uint64_t b_r2, std::uint64_t b_c2);
std::uint64_t line_lce_via_equality(const Queries2D& p, std::uint64_t b_r, std::uint64_t b_c,
                                    std::uint64_t b_r2, std::uint64_t b_c2, std::uint64_t l);

// T' = T next to an all-zero block of T's size, built by doubling.
struct PaddedZero {
  Slg2 grammar;
  Dims orig;
};
PaddedZero pad_zero_right(const Slg2& g);
// p answers square LCE on T'; answers square all-zero on T.
int square_all_zero_via_square_lce(const Queries2D& p, Dims orig, std::uint64_t e_r, std::uint64_t e_c,
                                   std::uint64_t l);

// Provider stages that answer one query through a lower one.
class LineLceViaEquality : public Queries2D {
 public:
  explicit LineLceViaEquality(const Queries2D& in) : in_(in) {}
  std::uint64_t rows() const override { return in_.rows(); }
  std::uint64_t cols() const override { return in_.cols(); }
  std::uint64_t line_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2, std::uint64_t b_c2,
                         std::uint64_t l) const override {
    return line_lce_via_equality(in_, b_r, b_c, b_r2, b_c2, l);
  }

 private:
  const Queries2D& in_;
};

class SquareLceViaLineLce : public Queries2D {
 public:
  explicit SquareLceViaLineLce(const Queries2D& in) : in_(in) {}
  std::uint64_t rows() const override { return in_.rows(); }
  std::uint64_t cols() const override { return in_.cols(); }
  std::uint64_t square_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                           std::uint64_t b_c2) const override {
    return square_lce_via_line_lce(in_, b_r, b_c, b_r2, b_c2);
  }

 private:
  const Queries2D& in_;
};

class SquareAllZeroViaSquareLce : public Queries2D {
 public:
  SquareAllZeroViaSquareLce(const Queries2D& padded, Dims orig) : in_(padded), orig_(orig) {}
  std::uint64_t rows() const override { return orig_.rows; }
  std::uint64_t cols() const override { return orig_.cols; }
  int square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const override {
    return square_all_zero_via_square_lce(in_, orig_, e_r, e_c, l);
  }

 private:
  const Queries2D& in_;
  Dims orig_;
};

}  // namespace gg
