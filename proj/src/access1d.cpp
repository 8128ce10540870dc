#include "gg/access1d.hpp"

#include <cmath>
#include <string>

namespace gg {

Bookmark1 hook_offset1(const Slp1& g, Id n, std::uint64_t b, std::uint64_t e) {
  if (n >= g.num_rules() || b >= e || e > g.len(n))
    fail(Errc::RangeError, "window (" + std::to_string(b) + ".." + std::to_string(e) + "]");
  for (;;) {
    if (g.len(n) == 1) return {n, b};
    std::uint64_t l = g.len(g.left(n));
    if (b < l && l < e) return {n, b};
    if (e <= l) {
      n = g.left(n);
    } else {
      n = g.right(n);
      b -= l;
      e -= l;
    }
  }
}

unsigned ceil_log(std::uint64_t n, std::uint64_t tau) {
  unsigned p = 0;
  for (std::uint64_t v = 1; v < n; v = saturating_mul(v, tau)) ++p;
  return p;
}

std::uint64_t tau_preset(std::uint64_t n, double eps) {
  double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  auto t = static_cast<std::uint64_t>(std::floor(std::pow(lg, eps)));
  return t < 2 ? 2 : t;
}

AccessIndex1::AccessIndex1(const Slp1& g, std::uint64_t tau) : tau_(tau), start_(g.start()) {
  if (tau < 2 || tau > kMaxTau) fail(Errc::RangeError, "tau " + std::to_string(tau));
  const std::size_t nv = g.num_rules();
  len_.resize(nv);
  x_.assign(nv, 0);
  y_.assign(nv, 0);
  code_.assign(nv, 0);
  lit_.assign(nv, 0);
  for (Id i = 0; i < nv; ++i) {
    len_[i] = g.len(i);
    const Rule1& r = g.rule(i);
    if (r.literal) {
      lit_[i] = 1;
      code_[i] = r.code;
    } else {
      x_[i] = r.kids[0];
      y_[i] = r.kids[1];
    }
  }
  top_ = ceil_log(g.length(), tau);
  pow_.resize(top_ + 1);
  pow_[0] = 1;
  for (unsigned p = 1; p <= top_; ++p) pow_[p] = saturating_mul(pow_[p - 1], tau);

  for (Id i = 0; i < nv; ++i) {
    const std::uint64_t m = len_[i];
    for (unsigned p = 0; p <= top_; ++p) {
      for (std::uint64_t k = 0; k < tau; ++k) {
        std::uint64_t b = saturating_mul(k, pow_[p]);
        if (b >= m) break;
        std::uint64_t e = std::min(m, b + std::min(pow_[p], m));
        left_.emplace(key(i, p, k), hook_offset1(g, i, b, e));
        right_.emplace(key(i, p, k), hook_offset1(g, i, m - e, m - b));
      }
    }
  }
}

std::size_t AccessIndex1::bytes() const {
  const std::size_t per_entry = sizeof(std::uint64_t) + sizeof(Bookmark1);
  const std::size_t per_var = sizeof(std::uint64_t) + 2 * sizeof(Id) + sizeof(Code) + 1;
  return entries() * per_entry + num_vars() * per_var;
}

const Bookmark1* AccessIndex1::left_entry(Id i, unsigned p, std::uint64_t k) const {
  auto it = left_.find(key(i, p, k));
  return it == left_.end() ? nullptr : &it->second;
}

const Bookmark1* AccessIndex1::right_entry(Id i, unsigned p, std::uint64_t k) const {
  auto it = right_.find(key(i, p, k));
  return it == right_.end() ? nullptr : &it->second;
}

void AccessIndex1::check(Id t, unsigned p, std::uint64_t delta) const {
  if (t >= len_.size() || p > top_ || delta < 1 || delta > len_[t])
    fail(Errc::PreconditionViolated, "map arguments out of range");
  if ((delta - 1) / pow_[p] >= tau_) fail(Errc::PreconditionViolated, "delta exceeds tau^(p+1)");
}

Map1 AccessIndex1::left_map(Id t, unsigned p, std::uint64_t delta) const {
  check(t, p, delta);
  return map_unchecked(false, t, p, delta);
}

Map1 AccessIndex1::right_map(Id t, unsigned p, std::uint64_t delta) const {
  check(t, p, delta);
  return map_unchecked(true, t, p, delta);
}

Map1 AccessIndex1::map_unchecked(bool right, Id t, unsigned p, std::uint64_t delta) const {
  const std::uint64_t m = len_[t];
  const std::uint64_t k = (delta - 1) / pow_[p];
  const std::uint64_t b = k * pow_[p];
  const std::uint64_t e = std::min(m, b + std::min(pow_[p], m));
  const Bookmark1& bm = (right ? right_ : left_).at(key(t, p, k));
  const Id h = bm.hook;
  if (e - b == 1) return {h, 1, Side1::L};
  // a: distance from the window to h's boundary on the reading side.
  const std::uint64_t a = right ? len_[h] - (bm.offset + (e - b)) : bm.offset;
  const Id near = right ? y_[h] : x_[h];
  const Id far = right ? x_[h] : y_[h];
  const std::uint64_t l = len_[near];
  const std::uint64_t d = delta - b;
  const Side1 same = right ? Side1::R : Side1::L;
  const Side1 flip = right ? Side1::L : Side1::R;
  if (d <= l - a) return {near, (l - a) - d + 1, flip};
  return {far, d - (l - a), same};
}

Code AccessIndex1::access(std::uint64_t i, Trace1* trace) const {
  if (i < 1 || i > length()) fail(Errc::PositionOutOfRange, std::to_string(i));
  Map1 s{start_, i, Side1::L};
  for (unsigned p = top_ + 1; p-- > 0;) {
    s = map_unchecked(s.side == Side1::R, s.t, p, s.delta);
    if (trace) {
      ++trace->steps;
      if (s.delta < 1 || s.delta > len_[s.t] || s.delta > pow_[p]) ++trace->contract_violations;
    }
  }
  if (!lit_[s.t]) fail(Errc::PreconditionViolated, "query ended on a non-literal");
  return code_[s.t];
}

AccessIndex1 build_index1(const Slp1& g, std::uint64_t tau) { return AccessIndex1(g, tau); }

}  // namespace gg
