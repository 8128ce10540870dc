#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gg/slg1.hpp"

namespace gg {

struct Bookmark1 {
  Id hook = 0;
  std::uint64_t offset = 0;
  friend bool operator==(const Bookmark1&, const Bookmark1&) = default;
};

enum class Side1 : std::uint8_t { L, R };

struct Map1 {
  Id t = 0;
  std::uint64_t delta = 0;
  Side1 side = Side1::L;
  friend bool operator==(const Map1&, const Map1&) = default;
};

// Per-query diagnostics filled by access1 when requested.
struct Trace1 {
  std::uint64_t steps = 0;
  std::uint64_t contract_violations = 0;
};

Bookmark1 hook_offset1(const Slp1& g, Id n, std::uint64_t b, std::uint64_t e);

// ceil(log_tau n) for n >= 1.
unsigned ceil_log(std::uint64_t n, std::uint64_t tau);
// max(2, floor(log2(n)^eps)).
std::uint64_t tau_preset(std::uint64_t n, double eps = 1.0);

class AccessIndex1 {
 public:
  static constexpr std::uint64_t kMaxTau = std::uint64_t{1} << 20;

  AccessIndex1(const Slp1& g, std::uint64_t tau);

  std::uint64_t tau() const { return tau_; }
  unsigned top_level() const { return top_; }
  std::uint64_t length() const { return len_[start_]; }
  std::size_t entries() const { return left_.size() + right_.size(); }
  std::size_t bytes() const;
  std::size_t num_vars() const { return len_.size(); }

  const Bookmark1* left_entry(Id i, unsigned p, std::uint64_t k) const;
  const Bookmark1* right_entry(Id i, unsigned p, std::uint64_t k) const;

  Map1 left_map(Id t, unsigned p, std::uint64_t delta) const;
  Map1 right_map(Id t, unsigned p, std::uint64_t delta) const;
  Code access(std::uint64_t i, Trace1* trace = nullptr) const;

  template <class F>
  void for_each_entry(F f) const {
    for (const auto& [k, v] : left_) f(false, k, v);
    for (const auto& [k, v] : right_) f(true, k, v);
  }

 private:
  static std::uint64_t key(Id i, unsigned p, std::uint64_t k) {
    return (std::uint64_t{i} << 32) | (std::uint64_t{p} << 24) | k;
  }
  void check(Id t, unsigned p, std::uint64_t delta) const;
  Map1 map_unchecked(bool right, Id t, unsigned p, std::uint64_t delta) const;

  std::uint64_t tau_;
  unsigned top_;
  Id start_;
  std::vector<std::uint64_t> pow_;  // saturating tau^p
  std::vector<std::uint64_t> len_;
  std::vector<Id> x_, y_;
  std::vector<Code> code_;
  std::vector<std::uint8_t> lit_;
  std::unordered_map<std::uint64_t, Bookmark1> left_, right_;
};

AccessIndex1 build_index1(const Slp1& g, std::uint64_t tau);
inline Code access1(const AccessIndex1& ix, std::uint64_t i) { return ix.access(i); }

}  // namespace gg
