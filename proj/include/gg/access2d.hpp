#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gg/slg2.hpp"

namespace gg {

struct Bookmark2 {
  Id hook = 0;
  std::uint64_t offset_r = 0;
  std::uint64_t offset_c = 0;
  friend bool operator==(const Bookmark2&, const Bookmark2&) = default;
};

enum class RowSide : std::uint8_t { T, B };
enum class ColSide : std::uint8_t { L, R };
enum class Corner : std::uint8_t { NW, NE, SW, SE };
enum class Split : std::uint8_t { None, Rows, Cols };

inline Corner corner_of(RowSide r, ColSide c) {
  return static_cast<Corner>((r == RowSide::B ? 2 : 0) + (c == ColSide::R ? 1 : 0));
}

struct Map2 {
  Id t = 0;
  std::uint64_t delta_r = 0;
  std::uint64_t delta_c = 0;
  RowSide row_side = RowSide::T;
  ColSide col_side = ColSide::L;
  Split split = Split::None;  // axis the consumed hook splits on
  bool same_point(const Map2& o) const {
    return t == o.t && delta_r == o.delta_r && delta_c == o.delta_c && row_side == o.row_side &&
           col_side == o.col_side;
  }
};

struct Trace2 {
  std::uint64_t iterations = 0;
  std::uint64_t contract_violations = 0;
  bool final_map = false;
};

Bookmark2 hook_offset2(const Slp2& g, Id n, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                       std::uint64_t e_c);

class AccessIndex2 {
 public:
  static constexpr std::uint64_t kMaxTau = 1024;

  AccessIndex2(const Slp2& g, std::uint64_t tau);

  std::uint64_t tau() const { return tau_; }
  unsigned top_r() const { return top_r_; }
  unsigned top_c() const { return top_c_; }
  Dims dims() const { return {rows_[start_], cols_[start_]}; }
  std::size_t entries() const;
  std::size_t bytes() const;
  std::size_t num_vars() const { return rows_.size(); }

  const Bookmark2* entry(Corner c, Id i, unsigned p_r, unsigned p_c, std::uint64_t k_r,
                         std::uint64_t k_c) const;
  Map2 corner_map(Corner c, Id t, unsigned p_r, unsigned p_c, std::uint64_t delta_r,
                  std::uint64_t delta_c) const;
  Code access(std::uint64_t i, std::uint64_t j, Trace2* trace = nullptr) const;
  bool is_literal(Id t) const { return kind_[t] == Kind2::Literal; }
  std::uint64_t rows(Id t) const { return rows_[t]; }
  std::uint64_t cols(Id t) const { return cols_[t]; }
  std::uint64_t power(unsigned p) const { return pow_[p]; }

 private:
  static std::uint64_t key(Id i, unsigned p_r, unsigned p_c, std::uint64_t k_r, std::uint64_t k_c) {
    return (std::uint64_t{i} << 32) | (std::uint64_t{p_r} << 26) | (std::uint64_t{p_c} << 20) |
           (k_r << 10) | k_c;
  }
  Map2 map_unchecked(Corner c, Id t, unsigned p_r, unsigned p_c, std::uint64_t delta_r,
                     std::uint64_t delta_c) const;

  std::uint64_t tau_;
  unsigned top_r_, top_c_;
  Id start_;
  std::vector<std::uint64_t> pow_;
  std::vector<std::uint64_t> rows_, cols_;
  std::vector<Id> x_, y_;
  std::vector<Code> code_;
  std::vector<Kind2> kind_;
  std::array<std::unordered_map<std::uint64_t, Bookmark2>, 4> table_;
};

AccessIndex2 build_index2(const Slp2& g, std::uint64_t tau);
inline Code access2(const AccessIndex2& ix, std::uint64_t i, std::uint64_t j) { return ix.access(i, j); }

}  // namespace gg
