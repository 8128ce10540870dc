#include "gg/slg1.hpp"

#include <cstdlib>
#include <string>

#include "gg/detail/topo.hpp"

namespace gg {

std::uint64_t default_cap() {
  if (const char* env = std::getenv("GG_CAP_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 26;
}

Grammar1::Grammar1(Slg1 g, ValidateOptions opt) : g_(std::move(g)) {
  const std::size_t n = g_.rules.size();
  if (n == 0) fail(Errc::DanglingReference, "at id 0 (no rules)");
  if (g_.start >= n) fail(Errc::DanglingReference, "at id " + std::to_string(g_.start));
  for (std::size_t i = 0; i < n; ++i) {
    const Rule1& r = g_.rules[i];
    if (r.literal) {
      if (r.code >= g_.sigma) fail(Errc::TerminalOutOfRange, "at id " + std::to_string(i));
      continue;
    }
    for (Id c : r.kids)
      if (c >= n) fail(Errc::DanglingReference, "at id " + std::to_string(c));
  }
  topo_ = detail::topo_order(n, [&](Id v) -> const std::vector<Id>& { return g_.rules[v].kids; });
  len_.assign(n, 0);
  for (Id v : topo_) {
    const Rule1& r = g_.rules[v];
    if (r.literal) {
      len_[v] = 1;
      continue;
    }
    std::uint64_t s = 0;
    for (Id c : r.kids) s = checked_add(s, len_[c]);
    if (s == 0 && !opt.allow_empty) fail(Errc::EmptyExpansion, "at id " + std::to_string(v));
    len_[v] = s;
  }
}

bool Grammar1::is_slp() const {
  for (const Rule1& r : g_.rules)
    if (!r.literal && r.kids.size() != 2) return false;
  for (std::uint64_t l : len_)
    if (l == 0) return false;
  return true;
}

Slp1::Slp1(Grammar1 g) : Grammar1(std::move(g)) {
  for (std::size_t i = 0; i < num_rules(); ++i) {
    const Rule1& r = rule(static_cast<Id>(i));
    if (!r.literal && r.kids.size() != 2) fail(Errc::NotAnSlp, "at id " + std::to_string(i));
  }
}

Grammar1 validate_slg1(const Slg1& g, ValidateOptions opt) { return Grammar1(g, opt); }

std::uint64_t exp_len(const Grammar1& g, Id n) {
  if (n >= g.num_rules()) fail(Errc::RangeError, "id " + std::to_string(n));
  return g.len(n);
}

std::vector<Code> expand1(const Grammar1& g, std::uint64_t cap) { return expand1(g, g.start(), cap); }

std::vector<Code> expand1(const Grammar1& g, Id n, std::uint64_t cap) {
  if (n >= g.num_rules()) fail(Errc::RangeError, "id " + std::to_string(n));
  if (g.len(n) > cap)
    fail(Errc::ExpansionTooLarge, std::to_string(g.len(n)) + " > cap " + std::to_string(cap));
  std::vector<Code> out;
  out.reserve(g.len(n));
  std::vector<std::pair<Id, std::size_t>> stack{{n, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const Rule1& r = g.rule(v);
    if (r.literal) {
      out.push_back(r.code);
      stack.pop_back();
    } else if (next < r.kids.size()) {
      Id c = r.kids[next++];
      stack.push_back({c, 0});
    } else {
      stack.pop_back();
    }
  }
  return out;
}

std::uint64_t grammar_size1(const Slg1& g) {
  std::uint64_t s = 0;
  for (const Rule1& r : g.rules) s += r.literal ? 1 : std::max<std::size_t>(r.kids.size(), 1);
  return s;
}

Grammar1 canonicalize(const Grammar1& g) {
  auto order = detail::reachable_parents_first(
      g.num_rules(), g.start(), [&](Id v) -> const std::vector<Id>& { return g.rule(v).kids; });
  std::vector<Id> remap(g.num_rules(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<Id>(i);
  Slg1 out;
  out.sigma = g.sigma();
  out.start = 0;
  out.rules.reserve(order.size());
  for (Id v : order) {
    Rule1 r = g.rule(v);
    for (Id& c : r.kids) c = remap[c];
    out.rules.push_back(std::move(r));
  }
  return Grammar1(std::move(out), {.allow_empty = true});
}

Slp1 slg_to_slp(const Slg1& in) {
  Grammar1 g(in, {.allow_empty = true});
  if (g.length() == 0) fail(Errc::EmptyLanguage);

  constexpr Id kNone = ~Id{0};
  Slg1 out;
  out.sigma = g.sigma();
  std::vector<Id> mapped(g.num_rules(), kNone);
  auto add = [&](Rule1 r) {
    out.rules.push_back(std::move(r));
    return static_cast<Id>(out.rules.size() - 1);
  };
  for (Id v : g.topo()) {
    const Rule1& r = g.rule(v);
    if (r.literal) {
      mapped[v] = add(r);
      continue;
    }
    std::vector<Id> ks;
    for (Id c : r.kids)
      if (g.len(c) > 0) ks.push_back(mapped[c]);
    if (ks.empty()) continue;
    if (ks.size() == 1) {
      mapped[v] = ks[0];
      continue;
    }
    Id tail = ks.back();
    for (std::size_t i = ks.size() - 2; i >= 1; --i) tail = add(Rule1::seq({ks[i], tail}));
    mapped[v] = add(Rule1::seq({ks[0], tail}));
  }
  out.start = mapped[g.start()];
  return Slp1(canonicalize(Grammar1(std::move(out))));
}

}  // namespace gg
