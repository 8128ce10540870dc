#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gg/error.hpp"

namespace gg {

using Id = std::uint32_t;
using Code = std::uint64_t;

struct Rule1 {
  bool literal = false;
  Code code = 0;
  std::vector<Id> kids;

  static Rule1 lit(Code c) { return {true, c, {}}; }
  static Rule1 seq(std::vector<Id> k) { return {false, 0, std::move(k)}; }
};

struct Slg1 {
  std::vector<Rule1> rules;
  Code sigma = 1;
  Id start = 0;
};

struct ValidateOptions {
  bool allow_empty = false;
};

// Expansion cap in symbols/cells; GG_CAP_CELLS overrides the 2^26 default.
std::uint64_t default_cap();

// A validated 1D grammar. Ids are the caller's; see canonicalize().
class Grammar1 {
 public:
  explicit Grammar1(Slg1 g, ValidateOptions opt = {});

  const Slg1& raw() const { return g_; }
  const Rule1& rule(Id n) const { return g_.rules[n]; }
  std::size_t num_rules() const { return g_.rules.size(); }
  Id start() const { return g_.start; }
  Code sigma() const { return g_.sigma; }
  std::uint64_t len(Id n) const { return len_[n]; }
  std::uint64_t length() const { return len_[g_.start]; }
  // Children before parents.
  const std::vector<Id>& topo() const { return topo_; }
  bool is_slp() const;

 private:
  Slg1 g_;
  std::vector<std::uint64_t> len_;
  std::vector<Id> topo_;
};

class Slp1 : public Grammar1 {
 public:
  explicit Slp1(Grammar1 g);
  explicit Slp1(Slg1 g) : Slp1(Grammar1(std::move(g))) {}
  Id left(Id n) const { return rule(n).kids[0]; }
  Id right(Id n) const { return rule(n).kids[1]; }
};

Grammar1 validate_slg1(const Slg1& g, ValidateOptions opt = {});
std::uint64_t exp_len(const Grammar1& g, Id n);
std::vector<Code> expand1(const Grammar1& g, std::uint64_t cap = default_cap());
std::vector<Code> expand1(const Grammar1& g, Id n, std::uint64_t cap);
Slp1 slg_to_slp(const Slg1& g);
std::uint64_t grammar_size1(const Slg1& g);
inline std::uint64_t grammar_size1(const Grammar1& g) { return grammar_size1(g.raw()); }

// Drops rules unreachable from the start and renumbers parents-first, start = 0.
Grammar1 canonicalize(const Grammar1& g);

}  // namespace gg
