#pragma once

#include <cstdint>
#include <vector>

#include "gg/slg1.hpp"

namespace gg {

// Naming follows the grammar classes, not the geometry:
//   Horiz children share a width and stack top to bottom (rows add).
//   Vert children share a height and sit left to right (columns add).
enum class Kind2 : std::uint8_t { Literal, Horiz, Vert };

struct Rule2 {
  Kind2 kind = Kind2::Literal;
  Code code = 0;
  std::vector<Id> kids;

  static Rule2 lit(Code c) { return {Kind2::Literal, c, {}}; }
  static Rule2 horiz(std::vector<Id> k) { return {Kind2::Horiz, 0, std::move(k)}; }
  static Rule2 vert(std::vector<Id> k) { return {Kind2::Vert, 0, std::move(k)}; }
};

struct Slg2 {
  std::vector<Rule2> rules;
  Code sigma = 1;
  Id start = 0;
};

struct Dims {
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  bool empty() const { return rows == 0; }
  std::uint64_t cells() const { return rows * cols; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

class Grammar2 {
 public:
  explicit Grammar2(Slg2 g, ValidateOptions opt = {});

  const Slg2& raw() const { return g_; }
  const Rule2& rule(Id n) const { return g_.rules[n]; }
  std::size_t num_rules() const { return g_.rules.size(); }
  Id start() const { return g_.start; }
  Code sigma() const { return g_.sigma; }
  Dims dims(Id n) const { return dims_[n]; }
  Dims dims() const { return dims_[g_.start]; }
  const std::vector<Id>& topo() const { return topo_; }
  bool is_slp() const;

 private:
  Slg2 g_;
  std::vector<Dims> dims_;
  std::vector<Id> topo_;
};

class Slp2 : public Grammar2 {
 public:
  explicit Slp2(Grammar2 g);
  explicit Slp2(Slg2 g) : Slp2(Grammar2(std::move(g))) {}
  Id left(Id n) const { return rule(n).kids[0]; }
  Id right(Id n) const { return rule(n).kids[1]; }
};

// Row-major matrix. at() is 1-based, cell() 0-based.
class Matrix2D {
 public:
  Matrix2D() = default;
  Matrix2D(std::uint64_t rows, std::uint64_t cols, Code fill = 0);
  Matrix2D(std::uint64_t rows, std::uint64_t cols, std::vector<Code> cells);
  static Matrix2D from_rows(const std::vector<std::vector<Code>>& rows);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  Code at(std::uint64_t i, std::uint64_t j) const;
  Code& cell(std::uint64_t r, std::uint64_t c) { return cells_[r * cols_ + c]; }
  Code cell(std::uint64_t r, std::uint64_t c) const { return cells_[r * cols_ + c]; }
  const std::vector<Code>& cells() const { return cells_; }
  friend bool operator==(const Matrix2D&, const Matrix2D&) = default;

 private:
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  std::vector<Code> cells_;
};

Grammar2 validate_slg2(const Slg2& g, ValidateOptions opt = {});
Dims dims(const Grammar2& g, Id n);
// Columns add.
Matrix2D hconcat(const Matrix2D& a, const Matrix2D& b);
// Rows add.
Matrix2D vconcat(const Matrix2D& a, const Matrix2D& b);
Matrix2D expand2(const Grammar2& g, std::uint64_t cap = default_cap());
Matrix2D expand2(const Grammar2& g, Id n, std::uint64_t cap);
Slp2 slg2_to_slp2(const Slg2& g);
std::uint64_t grammar_size2(const Slg2& g);
inline std::uint64_t grammar_size2(const Grammar2& g) { return grammar_size2(g.raw()); }
Grammar2 canonicalize(const Grammar2& g);

}  // namespace gg
