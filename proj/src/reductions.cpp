#include "gg/reductions.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace gg {

OvInstance make_ov(std::vector<BitVector> vectors) {
  if (vectors.empty()) fail(Errc::RangeError, "empty OV instance");
  const std::size_t d = vectors[0].size();
  for (const auto& v : vectors) {
    if (v.size() != d) fail(Errc::RangeError, "ragged OV dimensions");
    for (auto b : v)
      if (b > 1) fail(Errc::RangeError, "OV entry not a bit");
  }
  return {std::move(vectors), d};
}

OvInstance uniform_ov(const OvInstance& a) {
  const std::size_t d = a.d;
  OvInstance out;
  out.d = 3 * d;
  out.vectors.reserve(2 * a.n());
  std::vector<BitVector> second;
  for (const auto& x : a.vectors) {
    const std::size_t k = std::count(x.begin(), x.end(), 1);
    BitVector f0 = x, f1 = x;
    f0.insert(f0.end(), d - k, 1);
    f0.insert(f0.end(), d + k, 0);
    f1.insert(f1.end(), d, 0);
    f1.insert(f1.end(), d - k, 1);
    f1.insert(f1.end(), k, 0);
    out.vectors.push_back(std::move(f0));
    second.push_back(std::move(f1));
  }
  for (auto& v : second) out.vectors.push_back(std::move(v));
  return out;
}

PmInstance ov_to_pm(const OvInstance& a) {
  const std::size_t n = a.n(), d = a.d;
  if (n == 0) fail(Errc::RangeError, "empty OV instance");
  const std::size_t l = std::count(a.vectors[0].begin(), a.vectors[0].end(), 1);
  for (std::size_t i = 0; i < n; ++i)
    if (static_cast<std::size_t>(std::count(a.vectors[i].begin(), a.vectors[i].end(), 1)) != l)
      fail(Errc::NonUniformInstance, "vector " + std::to_string(i + 1));
  if (l == 0) fail(Errc::NonUniformInstance, "vectors have no ones");

  PmInstance pm;
  pm.n = n;
  pm.d = d;
  pm.l = l;
  pm.pattern.assign(l + 2, 0);
  pm.pattern.front() = pm.pattern.back() = 1;

  Slg2& g = pm.grammar;
  g.sigma = 2;
  auto add = [&](Rule2 r) {
    g.rules.push_back(std::move(r));
    return static_cast<Id>(g.rules.size() - 1);
  };
  const Id n0 = add(Rule2::lit(0));
  const Id n1 = add(Rule2::lit(1));
  std::vector<Id> col(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Id> ks;
    for (const auto& v : a.vectors) ks.push_back(v[i] ? n1 : n0);
    col[i] = add(Rule2::horiz(std::move(ks)));
  }
  const Id nd = add(Rule2::horiz(std::vector<Id>(n, n1)));
  std::vector<Id> top;
  for (const auto& v : a.vectors) {
    top.push_back(nd);
    for (std::size_t j = 0; j < d; ++j)
      if (v[j]) top.push_back(col[j]);
    top.push_back(nd);
  }
  g.start = add(Rule2::vert(std::move(top)));
  return pm;
}

Matrix2D mark_char(const std::vector<Code>& t, Code a) {
  Matrix2D m(1, t.size());
  for (std::size_t j = 0; j < t.size(); ++j) m.cell(0, j) = t[j] == a;
  return m;
}

Matrix2D mark_all_chars(const std::vector<Code>& t, Code sigma) {
  Matrix2D m(sigma, t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] >= sigma) fail(Errc::RangeError, "code " + std::to_string(t[j]) + " >= sigma");
    m.cell(t[j], j) = 1;
  }
  return m;
}

Matrix2D ext_mark_all_chars(const std::vector<Code>& t, Code sigma) {
  const std::uint64_t n = t.size();
  if (n < 2) fail(Errc::ExtRequiresLengthTwo);
  Matrix2D m(checked_mul(n, sigma), n);
  for (std::size_t j = 0; j < n; ++j) {
    if (t[j] >= sigma) fail(Errc::RangeError, "code " + std::to_string(t[j]) + " >= sigma");
    m.cell(t[j] * n, j) = 1;
  }
  return m;
}

namespace {

struct Builder {
  Slg2 g;
  Id add(Rule2 r) {
    g.rules.push_back(std::move(r));
    return static_cast<Id>(g.rules.size() - 1);
  }
};

void check_codes(const Slp1& g, Code sigma) {
  for (Id i = 0; i < g.num_rules(); ++i)
    if (g.rule(i).literal && g.rule(i).code >= sigma)
      fail(Errc::TerminalOutOfRange, "at id " + std::to_string(i));
}

// Y_i for every rule of g, given the marking column X_c per code.
Id add_columns(Builder& b, const Slp1& g, const std::vector<Id>& x) {
  std::vector<Id> y(g.num_rules());
  for (Id v : g.topo()) {
    const Rule1& r = g.rule(v);
    y[v] = r.literal ? b.add(Rule2::vert({x[r.code]})) : b.add(Rule2::vert({y[r.kids[0]], y[r.kids[1]]}));
  }
  return y[g.start()];
}

}  // namespace

Slg2 mark_grammar(const Slp1& g, Code sigma) {
  check_codes(g, sigma);
  Builder b;
  b.g.sigma = 2;
  const Id m0 = b.add(Rule2::lit(0));
  const Id m1 = b.add(Rule2::lit(1));
  // z[i] is i zero rows; z[0] would be empty and is dropped.
  std::vector<Id> z(sigma);
  for (Code i = 1; i < sigma; ++i) z[i] = i == 1 ? m0 : b.add(Rule2::horiz({z[i - 1], m0}));
  std::vector<Id> x(sigma);
  for (Code i = 0; i < sigma; ++i) {
    std::vector<Id> rhs;
    if (i > 0) rhs.push_back(z[i]);
    rhs.push_back(m1);
    if (sigma - i - 1 > 0) rhs.push_back(z[sigma - i - 1]);
    x[i] = b.add(Rule2::horiz(std::move(rhs)));
  }
  b.g.start = add_columns(b, g, x);
  return b.g;
}

Slg2 ext_mark_grammar(const Slp1& g, Code sigma) {
  check_codes(g, sigma);
  const std::uint64_t n = g.length();
  if (n < 2) fail(Errc::ExtRequiresLengthTwo);
  Builder b;
  b.g.sigma = 2;
  const Id m0 = b.add(Rule2::lit(0));
  const Id m1 = b.add(Rule2::lit(1));
  const unsigned k = std::bit_width(n - 1);
  std::vector<Id> zp(k);
  zp[0] = b.add(Rule2::horiz({m0}));
  for (unsigned i = 1; i < k; ++i) zp[i] = b.add(Rule2::horiz({zp[i - 1], zp[i - 1]}));
  std::vector<Id> parts;
  for (unsigned i = 0; i < k; ++i)
    if ((n - 1) >> i & 1) parts.push_back(zp[i]);
  const Id zz = b.add(Rule2::horiz(std::move(parts)));
  const Id zq = b.add(Rule2::horiz({zz, m0}));
  std::vector<Id> z(sigma);
  for (Code i = 1; i < sigma; ++i) z[i] = i == 1 ? zq : b.add(Rule2::horiz({z[i - 1], zq}));
  std::vector<Id> x(sigma);
  for (Code i = 0; i < sigma; ++i) {
    std::vector<Id> rhs;
    if (i > 0) rhs.push_back(z[i]);
    rhs.push_back(m1);
    rhs.push_back(zz);
    if (sigma - i - 1 > 0) rhs.push_back(z[sigma - i - 1]);
    x[i] = b.add(Rule2::horiz(std::move(rhs)));
  }
  b.g.start = add_columns(b, g, x);
  return b.g;
}

std::optional<Code> AlphabetMap::forward(Code c) const {
  auto it = std::lower_bound(A.begin(), A.end(), c);
  if (it == A.end() || *it != c) return std::nullopt;
  return static_cast<Code>(it - A.begin());
}

AlphabetReduced alphabet_reduce(const Slp1& g) {
  Grammar1 c = canonicalize(g);
  AlphabetMap map;
  for (Id i = 0; i < c.num_rules(); ++i)
    if (c.rule(i).literal) map.A.push_back(c.rule(i).code);
  std::sort(map.A.begin(), map.A.end());
  map.A.erase(std::unique(map.A.begin(), map.A.end()), map.A.end());
  Slg1 out = c.raw();
  out.sigma = map.A.size();
  for (Rule1& r : out.rules)
    if (r.literal) r.code = *map.forward(r.code);
  return {Slp1(std::move(out)), std::move(map)};
}

namespace {
[[noreturn]] void unsupported(const char* q) { fail(Errc::Unsupported, q); }
}  // namespace

std::uint64_t Queries2D::sum(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t) const {
  unsupported("sum");
}
std::uint64_t Queries2D::line_sum(std::uint64_t, std::uint64_t, std::uint64_t) const {
  unsupported("line_sum");
}
int Queries2D::all_zero(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t) const {
  unsupported("all_zero");
}
int Queries2D::square_all_zero(std::uint64_t, std::uint64_t, std::uint64_t) const {
  unsupported("square_all_zero");
}
int Queries2D::equal_rect(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t,
                          std::uint64_t) const {
  unsupported("equal_rect");
}
std::uint64_t Queries2D::square_lce(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t) const {
  unsupported("square_lce");
}
std::uint64_t Queries2D::line_lce(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t,
                                  std::uint64_t) const {
  unsupported("line_lce");
}

std::uint64_t ScanOracle::sum(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                              std::uint64_t e_c) const {
  return oracle::sum(m_, b_r, b_c, e_r, e_c);
}
std::uint64_t ScanOracle::line_sum(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const {
  return oracle::line_sum(m_, e_r, e_c, l);
}
int ScanOracle::all_zero(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r, std::uint64_t e_c) const {
  return oracle::all_zero(m_, b_r, b_c, e_r, e_c);
}
int ScanOracle::square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const {
  return oracle::square_all_zero(m_, e_r, e_c, l);
}
int ScanOracle::equal_rect(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2, std::uint64_t b_c2,
                           std::uint64_t h, std::uint64_t w) const {
  return oracle::equal_rect(m_, b_r, b_c, b_r2, b_c2, h, w);
}
std::uint64_t ScanOracle::square_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                                     std::uint64_t b_c2) const {
  return oracle::square_lce(m_, b_r, b_c, b_r2, b_c2);
}
std::uint64_t ScanOracle::line_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                                   std::uint64_t b_c2, std::uint64_t l) const {
  return oracle::line_lce(m_, b_r, b_c, b_r2, b_c2, l);
}

PrefixSumOracle::PrefixSumOracle(const Matrix2D& m) : r_(m.rows()), c_(m.cols()), p_((r_ + 1) * (c_ + 1), 0) {
  for (std::uint64_t i = 1; i <= r_; ++i)
    for (std::uint64_t j = 1; j <= c_; ++j)
      p_[i * (c_ + 1) + j] = m.cell(i - 1, j - 1) + at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
}

std::uint64_t PrefixSumOracle::sum(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                                   std::uint64_t e_c) const {
  if (b_r > r_ || e_r > r_ || b_c > c_ || e_c > c_) fail(Errc::RangeError, "rectangle bounds");
  if (b_r >= e_r || b_c >= e_c) return 0;
  return at(e_r, e_c) - at(b_r, e_c) - at(e_r, b_c) + at(b_r, b_c);
}
std::uint64_t PrefixSumOracle::line_sum(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const {
  if (e_r < 1 || e_c < l) fail(Errc::RangeError, "line sum arguments");
  return sum(e_r - 1, e_c - l, e_r, e_c);
}
int PrefixSumOracle::all_zero(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                              std::uint64_t e_c) const {
  return sum(b_r, b_c, e_r, e_c) == 0;
}
int PrefixSumOracle::square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const {
  if (e_r < l || e_c < l) fail(Errc::RangeError, "square all-zero arguments");
  return all_zero(e_r - l, e_c - l, e_r, e_c);
}

std::uint64_t CountingQueries::total() const {
  std::uint64_t s = 0;
  for (auto v : n_) s += v;
  return s;
}
std::uint64_t CountingQueries::sum(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                                   std::uint64_t e_c) const {
  bump(QueryKind::Sum);
  return in_.sum(b_r, b_c, e_r, e_c);
}
std::uint64_t CountingQueries::line_sum(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const {
  bump(QueryKind::LineSum);
  return in_.line_sum(e_r, e_c, l);
}
int CountingQueries::all_zero(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                              std::uint64_t e_c) const {
  bump(QueryKind::AllZero);
  return in_.all_zero(b_r, b_c, e_r, e_c);
}
int CountingQueries::square_all_zero(std::uint64_t e_r, std::uint64_t e_c, std::uint64_t l) const {
  bump(QueryKind::SquareAllZero);
  return in_.square_all_zero(e_r, e_c, l);
}
int CountingQueries::equal_rect(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                                std::uint64_t b_c2, std::uint64_t h, std::uint64_t w) const {
  bump(QueryKind::Equal);
  return in_.equal_rect(b_r, b_c, b_r2, b_c2, h, w);
}
std::uint64_t CountingQueries::square_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                                          std::uint64_t b_c2) const {
  bump(QueryKind::SquareLce);
  return in_.square_lce(b_r, b_c, b_r2, b_c2);
}
std::uint64_t CountingQueries::line_lce(std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                                        std::uint64_t b_c2, std::uint64_t l) const {
  bump(QueryKind::LineLce);
  return in_.line_lce(b_r, b_c, b_r2, b_c2, l);
}

std::uint64_t rank_via_line_sum(const Queries2D& p, const AlphabetMap& map, std::uint64_t j, Code c) {
  if (j > p.cols()) fail(Errc::RangeError, "rank position");
  auto f = map.forward(c);
  if (!f) return 0;
  return p.line_sum(*f + 1, j, j);
}

int occurs_via_square_all_zero(const Queries2D& p, const AlphabetMap& map, std::uint64_t b,
                               std::uint64_t e, Code c) {
  const std::uint64_t n = p.cols();
  if (b > n || e > n) fail(Errc::RangeError, "occurs range");
  if (b >= e) return 0;
  auto f = map.forward(c);
  if (!f) return 0;
  return 1 - p.square_all_zero(*f * n + (e - b), e, e - b);
}

namespace {

// Largest t in [0, hi] with pred(t); pred(0) holds and pred is monotone.
template <class Pred>
std::uint64_t last_true(std::uint64_t hi, Pred pred) {
  std::uint64_t lo = 0;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (pred(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

void check_origins(const Queries2D& p, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t b_r2,
                   std::uint64_t b_c2) {
  if (b_r < 1 || b_c < 1 || b_r2 < 1 || b_c2 < 1 || b_r > p.rows() || b_r2 > p.rows() ||
      b_c > p.cols() || b_c2 > p.cols())
    fail(Errc::RangeError, "origin out of range");
}

}  // namespace

std::uint64_t square_lce_via_line_lce(const Queries2D& p, std::uint64_t b_r, std::uint64_t b_c,
                                      std::uint64_t b_r2, std::uint64_t b_c2) {
  check_origins(p, b_r, b_c, b_r2, b_c2);
  const std::uint64_t edge =
      std::min(p.rows() + 1 - std::max(b_r, b_r2), p.cols() + 1 - std::max(b_c, b_c2));
  return last_true(edge, [&](std::uint64_t t) { return p.line_lce(b_r, b_c, b_r2, b_c2, t) >= t; });
}

std::uint64_t line_lce_via_equality(const Queries2D& p, std::uint64_t b_r, std::uint64_t b_c,
                                    std::uint64_t b_r2, std::uint64_t b_c2, std::uint64_t l) {
  check_origins(p, b_r, b_c, b_r2, b_c2);
  if (b_r + l > p.rows() + 1 || b_r2 + l > p.rows() + 1) fail(Errc::RangeError, "line LCE height");
  const std::uint64_t edge = p.cols() + 1 - std::max(b_c, b_c2);
  return last_true(edge, [&](std::uint64_t t) { return p.equal_rect(b_r, b_c, b_r2, b_c2, l, t) == 1; });
}

PaddedZero pad_zero_right(const Slg2& in) {
  Grammar2 g(in, {.allow_empty = true});
  const Dims d = g.dims();
  if (d.empty()) fail(Errc::EmptyLanguage);
  Slg2 out = in;
  auto add = [&](Rule2 r) {
    out.rules.push_back(std::move(r));
    return static_cast<Id>(out.rules.size() - 1);
  };
  const Id zero = add(Rule2::lit(0));
  // Doubling chain along one axis, then the binary decomposition of the length.
  auto power_sum = [&](Id unit, std::uint64_t len, Kind2 kind) {
    std::vector<Id> pw{unit};
    while ((std::uint64_t{1} << pw.size()) <= len) pw.push_back(add({kind, 0, {pw.back(), pw.back()}}));
    std::vector<Id> parts;
    for (std::size_t i = 0; i < pw.size(); ++i)
      if (len >> i & 1) parts.push_back(pw[i]);
    return parts.size() == 1 ? parts[0] : add({kind, 0, std::move(parts)});
  };
  const Id column = power_sum(zero, d.rows, Kind2::Horiz);
  const Id block = power_sum(column, d.cols, Kind2::Vert);
  out.start = add(Rule2::vert({in.start, block}));
  return {std::move(out), d};
}

int square_all_zero_via_square_lce(const Queries2D& p, Dims orig, std::uint64_t e_r, std::uint64_t e_c,
                                   std::uint64_t l) {
  if (e_r > orig.rows || e_c > orig.cols || e_r < l || e_c < l)
    fail(Errc::RangeError, "square all-zero arguments");
  if (l == 0) return 1;
  return p.square_lce(e_r - l + 1, e_c - l + 1, 1, orig.cols + 1) >= l;
}

}  // namespace gg
