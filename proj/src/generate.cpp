#include "gg/generate.hpp"

#include <algorithm>

namespace gg::gen {

namespace {

std::uint64_t below(Rng& rng, std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Earlier id, biased toward the most recent ones to build depth.
Id pick(Rng& rng, std::size_t count) {
  if (coin(rng, 0.5)) return static_cast<Id>(below(rng, count));
  const std::size_t w = std::min<std::size_t>(count, 4);
  return static_cast<Id>(count - 1 - below(rng, w));
}

std::size_t literal_count(Rng& rng, std::size_t rules, Code sigma) {
  if (rules <= 1) return 1;
  std::size_t hi = std::min<std::size_t>(sigma, std::max<std::size_t>(1, rules / 3));
  return 1 + below(rng, hi);
}

std::vector<Code> distinct_codes(Rng& rng, std::size_t k, Code sigma) {
  std::vector<Code> out;
  if (sigma <= 4 * k) {
    std::vector<Code> all(sigma);
    for (Code c = 0; c < sigma; ++c) all[c] = c;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(k, sigma));
    out = all;
  } else {
    while (out.size() < k) {
      Code c = below(rng, sigma);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  while (out.size() < k) out.push_back(out[below(rng, out.size())]);
  return out;
}

}  // namespace

Slg1 random_slp1(Rng& rng, std::size_t rules, Code sigma, std::uint64_t max_len) {
  Slg1 g;
  g.sigma = sigma;
  const std::size_t lits = literal_count(rng, rules, sigma);
  std::vector<std::uint64_t> len;
  for (Code c : distinct_codes(rng, lits, sigma)) {
    g.rules.push_back(Rule1::lit(c));
    len.push_back(1);
  }
  while (g.rules.size() < rules) {
    const std::size_t n = g.rules.size();
    Id a = 0, b = 0;
    bool ok = false;
    for (int tries = 0; tries < 32 && !ok; ++tries) {
      a = pick(rng, n);
      b = pick(rng, n);
      if (coin(rng, 0.5)) std::swap(a, b);
      ok = len[a] + len[b] <= max_len;
    }
    if (!ok) a = b = static_cast<Id>(below(rng, lits));
    g.rules.push_back(Rule1::seq({a, b}));
    len.push_back(len[a] + len[b]);
  }
  g.start = static_cast<Id>(g.rules.size() - 1);
  return g;
}

Slg1 random_slg1(Rng& rng, std::size_t rules, std::size_t max_arity, Code sigma, std::uint64_t max_len) {
  Slg1 g;
  g.sigma = sigma;
  const std::size_t lits = literal_count(rng, rules, sigma);
  std::vector<std::uint64_t> len;
  for (Code c : distinct_codes(rng, lits, sigma)) {
    g.rules.push_back(Rule1::lit(c));
    len.push_back(1);
  }
  while (g.rules.size() < rules) {
    const std::size_t n = g.rules.size();
    const bool last = n + 1 == rules;
    std::vector<Id> ks;
    std::uint64_t total = 0;
    for (int tries = 0; tries < 32; ++tries) {
      ks.clear();
      total = 0;
      std::size_t arity = coin(rng, 0.1) ? 0 : 1 + below(rng, max_arity);
      for (std::size_t i = 0; i < arity; ++i) {
        ks.push_back(pick(rng, n));
        total += len[ks.back()];
      }
      if (total <= max_len && (!last || total > 0)) break;
    }
    if (total > max_len || (last && total == 0)) {
      ks = {static_cast<Id>(below(rng, lits))};
      total = 1;
    }
    g.rules.push_back(Rule1::seq(std::move(ks)));
    len.push_back(total);
  }
  g.start = static_cast<Id>(g.rules.size() - 1);
  return g;
}

namespace {

// Partner ids whose shared side matches and whose sum stays under the cap.
std::vector<Id> partners(const std::vector<Dims>& dm, Id a, Kind2 kind, std::uint64_t max_cells) {
  std::vector<Id> out;
  for (Id b = 0; b < dm.size(); ++b) {
    if (dm[b].empty()) continue;
    if (kind == Kind2::Horiz) {
      if (dm[b].cols == dm[a].cols && (dm[a].rows + dm[b].rows) * dm[a].cols <= max_cells) out.push_back(b);
    } else {
      if (dm[b].rows == dm[a].rows && (dm[a].cols + dm[b].cols) * dm[a].rows <= max_cells) out.push_back(b);
    }
  }
  return out;
}

Slg2 random_2d(Rng& rng, std::size_t rules, std::size_t max_arity, Code sigma, std::uint64_t max_cells,
               bool allow_empty) {
  Slg2 g;
  g.sigma = sigma;
  const std::size_t lits = literal_count(rng, rules, sigma);
  std::vector<Dims> dm;
  for (Code c : distinct_codes(rng, lits, sigma)) {
    g.rules.push_back(Rule2::lit(c));
    dm.push_back({1, 1});
  }
  while (g.rules.size() < rules) {
    const std::size_t n = g.rules.size();
    const bool last = n + 1 == rules;
    if (allow_empty && !last && coin(rng, 0.05)) {
      g.rules.push_back(coin(rng, 0.5) ? Rule2::horiz({}) : Rule2::vert({}));
      dm.push_back({});
      continue;
    }
    const Kind2 kind = coin(rng, 0.5) ? Kind2::Horiz : Kind2::Vert;
    Rule2 r{kind, 0, {}};
    Dims d;
    for (int tries = 0; tries < 32 && r.kids.empty(); ++tries) {
      Id a = pick(rng, n);
      if (dm[a].empty()) continue;
      const std::size_t arity = max_arity <= 2 ? 2 : 1 + below(rng, max_arity);
      r.kids = {a};
      d = dm[a];
      for (std::size_t i = 1; i < arity; ++i) {
        auto ps = partners(dm, a, kind, max_cells);
        std::erase_if(ps, [&](Id b) {
          return kind == Kind2::Horiz ? (d.rows + dm[b].rows) * d.cols > max_cells
                                      : (d.cols + dm[b].cols) * d.rows > max_cells;
        });
        if (ps.empty()) break;
        // Prefer recent partners half of the time.
        Id b = coin(rng, 0.5) ? ps[below(rng, ps.size())] : ps[ps.size() - 1 - below(rng, std::min<std::size_t>(ps.size(), 3))];
        r.kids.push_back(b);
        if (kind == Kind2::Horiz)
          d.rows += dm[b].rows;
        else
          d.cols += dm[b].cols;
      }
      if (max_arity <= 2 && r.kids.size() != 2) r.kids.clear();
    }
    if (r.kids.empty()) {
      Id a = static_cast<Id>(below(rng, lits));
      r.kids = {a, a};
      d = kind == Kind2::Horiz ? Dims{2, 1} : Dims{1, 2};
    }
    if (allow_empty && coin(rng, 0.1)) {
      // Splice in an empty child to exercise elimination.
      for (Id b = 0; b < n; ++b)
        if (dm[b].empty()) {
          r.kids.insert(r.kids.begin() + below(rng, r.kids.size() + 1), b);
          break;
        }
    }
    g.rules.push_back(std::move(r));
    dm.push_back(d);
  }
  g.start = static_cast<Id>(g.rules.size() - 1);
  return g;
}

}  // namespace

Slg2 random_slp2(Rng& rng, std::size_t rules, Code sigma, std::uint64_t max_cells) {
  return random_2d(rng, rules, 2, sigma, max_cells, false);
}

Slg2 random_slg2(Rng& rng, std::size_t rules, std::size_t max_arity, Code sigma, std::uint64_t max_cells) {
  return random_2d(rng, rules, std::max<std::size_t>(max_arity, 3), sigma, max_cells, true);
}

Slg1 comb1(std::size_t leaves, Code sigma, bool right) {
  Slg1 g;
  g.sigma = sigma;
  const Code lits = std::min<Code>(sigma, 2);
  for (Code c = 0; c < lits; ++c) g.rules.push_back(Rule1::lit(c));
  Id acc = 0;
  for (std::size_t i = 1; i < leaves; ++i) {
    const Id leaf = static_cast<Id>(i % lits);
    g.rules.push_back(right ? Rule1::seq({leaf, acc}) : Rule1::seq({acc, leaf}));
    acc = static_cast<Id>(g.rules.size() - 1);
  }
  g.start = acc;
  return g;
}

Slg1 fibonacci1(std::size_t k) {
  Slg1 g;
  g.sigma = 2;
  g.rules = {Rule1::lit(1), Rule1::lit(0)};
  for (std::size_t i = 2; i < k; ++i) g.rules.push_back(Rule1::seq({static_cast<Id>(i - 1), static_cast<Id>(i - 2)}));
  g.start = static_cast<Id>(g.rules.size() - 1);
  return g;
}

Slg1 balanced1(std::size_t depth, Code sigma) {
  Slg1 g;
  g.sigma = sigma;
  g.rules = {Rule1::lit(sigma - 1)};
  for (std::size_t i = 0; i < depth; ++i) g.rules.push_back(Rule1::seq({static_cast<Id>(i), static_cast<Id>(i)}));
  g.start = static_cast<Id>(depth);
  return g;
}

Slg2 comb2(std::size_t leaves, Code sigma, Kind2 kind, bool right) {
  Slg2 g;
  g.sigma = sigma;
  const Code lits = std::min<Code>(sigma, 2);
  for (Code c = 0; c < lits; ++c) g.rules.push_back(Rule2::lit(c));
  Id acc = 0;
  for (std::size_t i = 1; i < leaves; ++i) {
    const Id leaf = static_cast<Id>(i % lits);
    g.rules.push_back({kind, 0, right ? std::vector<Id>{leaf, acc} : std::vector<Id>{acc, leaf}});
    acc = static_cast<Id>(g.rules.size() - 1);
  }
  g.start = acc;
  return g;
}

Slg2 balanced2(std::size_t depth, Code sigma) {
  Slg2 g;
  g.sigma = sigma;
  const Code lits = std::min<Code>(sigma, 2);
  for (Code c = 0; c < lits; ++c) g.rules.push_back(Rule2::lit(c));
  // Two interleaved towers so the text is not constant.
  Id a = 0, b = static_cast<Id>(lits - 1);
  for (std::size_t i = 0; i < depth; ++i) {
    const Kind2 k = i % 2 ? Kind2::Vert : Kind2::Horiz;
    g.rules.push_back({k, 0, {a, b}});
    g.rules.push_back({k, 0, {b, a}});
    a = static_cast<Id>(g.rules.size() - 2);
    b = static_cast<Id>(g.rules.size() - 1);
  }
  g.start = a;
  return g;
}

Slg2 fibonacci2(std::size_t k) {
  // Columns of a 1D Fibonacci word stacked into a 2-row strip.
  Slg2 g;
  g.sigma = 2;
  g.rules = {Rule2::lit(1), Rule2::lit(0)};
  g.rules.push_back(Rule2::horiz({0, 1}));
  g.rules.push_back(Rule2::horiz({1, 0}));
  for (std::size_t i = 4; i < k + 2; ++i)
    g.rules.push_back(Rule2::vert({static_cast<Id>(i - 1), static_cast<Id>(i - 2)}));
  g.start = static_cast<Id>(g.rules.size() - 1);
  return g;
}

std::vector<Slg1> corpus1(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<Slg1> out;
  constexpr std::uint64_t kMaxLen = std::uint64_t{1} << 14;
  while (out.size() < count) {
    const std::uint64_t r = below(rng, 10);
    if (r == 0) {
      out.push_back(comb1(1 + below(rng, 58), 1 + below(rng, 4), coin(rng, 0.5)));
    } else if (r == 1) {
      out.push_back(fibonacci1(2 + below(rng, 20)));
    } else if (r == 2) {
      out.push_back(balanced1(below(rng, 15), 1 + below(rng, 3)));
    } else {
      out.push_back(random_slp1(rng, 1 + below(rng, 60), 1 + below(rng, 12), kMaxLen));
    }
  }
  return out;
}

std::vector<Slg2> corpus2(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<Slg2> out;
  constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 20;
  while (out.size() < count) {
    const std::uint64_t r = below(rng, 10);
    if (r == 0) {
      out.push_back(comb2(1 + below(rng, 58), 1 + below(rng, 4), coin(rng, 0.5) ? Kind2::Horiz : Kind2::Vert,
                          coin(rng, 0.5)));
    } else if (r == 1) {
      out.push_back(balanced2(below(rng, 21), 1 + below(rng, 3)));
    } else if (r == 2) {
      out.push_back(fibonacci2(2 + below(rng, 20)));
    } else {
      out.push_back(random_slp2(rng, 1 + below(rng, 60), 1 + below(rng, 12), kMaxCells));
    }
  }
  return out;
}

std::vector<Code> random_string(Rng& rng, std::size_t n, Code sigma) {
  std::vector<Code> t(n);
  for (auto& c : t) c = below(rng, sigma);
  return t;
}

std::vector<BitVector> random_ov(Rng& rng, std::size_t n, std::size_t d, double density) {
  std::vector<BitVector> a(n, BitVector(d));
  for (auto& v : a)
    for (auto& b : v) b = coin(rng, density);
  return a;
}

}  // namespace gg::gen
