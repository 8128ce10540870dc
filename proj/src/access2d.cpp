#include "gg/access2d.hpp"

#include <algorithm>
#include <string>

#include "gg/access1d.hpp"

namespace gg {

Bookmark2 hook_offset2(const Slp2& g, Id n, std::uint64_t b_r, std::uint64_t b_c, std::uint64_t e_r,
                       std::uint64_t e_c) {
  if (n >= g.num_rules() || b_r >= e_r || b_c >= e_c || e_r > g.dims(n).rows || e_c > g.dims(n).cols)
    fail(Errc::RangeError, "2D window");
  for (;;) {
    const Rule2& r = g.rule(n);
    if (r.kind == Kind2::Literal) return {n, b_r, b_c};
    const bool h = r.kind == Kind2::Horiz;
    std::uint64_t& b = h ? b_r : b_c;
    std::uint64_t& e = h ? e_r : e_c;
    const Dims dx = g.dims(g.left(n));
    const std::uint64_t l = h ? dx.rows : dx.cols;
    if (b < l && l < e) return {n, b_r, b_c};
    if (e <= l) {
      n = g.left(n);
    } else {
      n = g.right(n);
      b -= l;
      e -= l;
    }
  }
}

AccessIndex2::AccessIndex2(const Slp2& g, std::uint64_t tau) : tau_(tau), start_(g.start()) {
  if (tau < 2 || tau > kMaxTau) fail(Errc::RangeError, "tau " + std::to_string(tau));
  const std::size_t nv = g.num_rules();
  rows_.resize(nv);
  cols_.resize(nv);
  x_.assign(nv, 0);
  y_.assign(nv, 0);
  code_.assign(nv, 0);
  kind_.resize(nv);
  for (Id i = 0; i < nv; ++i) {
    rows_[i] = g.dims(i).rows;
    cols_[i] = g.dims(i).cols;
    const Rule2& r = g.rule(i);
    kind_[i] = r.kind;
    if (r.kind == Kind2::Literal) {
      code_[i] = r.code;
    } else {
      x_[i] = r.kids[0];
      y_[i] = r.kids[1];
    }
  }
  top_r_ = ceil_log(rows_[start_], tau);
  top_c_ = ceil_log(cols_[start_], tau);
  pow_.resize(std::max(top_r_, top_c_) + 1);
  pow_[0] = 1;
  for (std::size_t p = 1; p < pow_.size(); ++p) pow_[p] = saturating_mul(pow_[p - 1], tau);

  struct Win {
    std::uint64_t b, e;
  };
  auto windows = [&](std::uint64_t m, unsigned p) {
    std::vector<Win> w;
    for (std::uint64_t k = 0; k < tau; ++k) {
      std::uint64_t b = saturating_mul(k, pow_[p]);
      if (b >= m) break;
      w.push_back({b, std::min(m, b + std::min(pow_[p], m))});
    }
    return w;
  };
  for (Id i = 0; i < nv; ++i) {
    const std::uint64_t mr = rows_[i], mc = cols_[i];
    for (unsigned pr = 0; pr <= top_r_; ++pr) {
      auto wr = windows(mr, pr);
      for (unsigned pc = 0; pc <= top_c_; ++pc) {
        auto wc = windows(mc, pc);
        for (std::uint64_t kr = 0; kr < wr.size(); ++kr) {
          const auto [br, er] = wr[kr];
          for (std::uint64_t kc = 0; kc < wc.size(); ++kc) {
            const auto [bc, ec] = wc[kc];
            const std::uint64_t k = key(i, pr, pc, kr, kc);
            table_[0].emplace(k, hook_offset2(g, i, br, bc, er, ec));
            table_[1].emplace(k, hook_offset2(g, i, br, mc - ec, er, mc - bc));
            table_[2].emplace(k, hook_offset2(g, i, mr - er, bc, mr - br, ec));
            table_[3].emplace(k, hook_offset2(g, i, mr - er, mc - ec, mr - br, mc - bc));
          }
        }
      }
    }
  }
}

std::size_t AccessIndex2::entries() const {
  std::size_t s = 0;
  for (const auto& t : table_) s += t.size();
  return s;
}

std::size_t AccessIndex2::bytes() const {
  const std::size_t per_entry = sizeof(std::uint64_t) + sizeof(Bookmark2);
  const std::size_t per_var = 2 * sizeof(std::uint64_t) + 2 * sizeof(Id) + sizeof(Code) + 1;
  return entries() * per_entry + num_vars() * per_var;
}

const Bookmark2* AccessIndex2::entry(Corner c, Id i, unsigned p_r, unsigned p_c, std::uint64_t k_r,
                                    std::uint64_t k_c) const {
  if (k_r >= tau_ || k_c >= tau_ || p_r > top_r_ || p_c > top_c_) return nullptr;
  const auto& t = table_[static_cast<int>(c)];
  auto it = t.find(key(i, p_r, p_c, k_r, k_c));
  return it == t.end() ? nullptr : &it->second;
}

Map2 AccessIndex2::corner_map(Corner c, Id t, unsigned p_r, unsigned p_c, std::uint64_t delta_r,
                              std::uint64_t delta_c) const {
  if (t >= rows_.size() || p_r > top_r_ || p_c > top_c_ || delta_r < 1 || delta_c < 1 ||
      delta_r > rows_[t] || delta_c > cols_[t])
    fail(Errc::PreconditionViolated, "corner map arguments out of range");
  if ((delta_r - 1) / pow_[p_r] >= tau_ || (delta_c - 1) / pow_[p_c] >= tau_)
    fail(Errc::PreconditionViolated, "delta exceeds tau^(p+1)");
  return map_unchecked(c, t, p_r, p_c, delta_r, delta_c);
}

Map2 AccessIndex2::map_unchecked(Corner c, Id t, unsigned p_r, unsigned p_c, std::uint64_t delta_r,
                                 std::uint64_t delta_c) const {
  const bool mirror_r = c == Corner::SW || c == Corner::SE;
  const bool mirror_c = c == Corner::NE || c == Corner::SE;
  const std::uint64_t kr = (delta_r - 1) / pow_[p_r];
  const std::uint64_t kc = (delta_c - 1) / pow_[p_c];
  const std::uint64_t br = kr * pow_[p_r];
  const std::uint64_t bc = kc * pow_[p_c];
  const std::uint64_t er = std::min(rows_[t], br + std::min(pow_[p_r], rows_[t]));
  const std::uint64_t ec = std::min(cols_[t], bc + std::min(pow_[p_c], cols_[t]));
  const Bookmark2& bm = table_[static_cast<int>(c)].at(key(t, p_r, p_c, kr, kc));
  const Id h = bm.hook;
  if (er - br == 1 && ec - bc == 1) return {h, 1, 1, RowSide::T, ColSide::L, Split::None};

  // Offsets measured from the side the query reads from.
  const std::uint64_t ar = mirror_r ? rows_[h] - bm.offset_r - (er - br) : bm.offset_r;
  const std::uint64_t ac = mirror_c ? cols_[h] - bm.offset_c - (ec - bc) : bm.offset_c;
  const RowSide rs = mirror_r ? RowSide::B : RowSide::T;
  const ColSide cs = mirror_c ? ColSide::R : ColSide::L;
  const RowSide rflip = mirror_r ? RowSide::T : RowSide::B;
  const ColSide cflip = mirror_c ? ColSide::L : ColSide::R;

  if (kind_[h] == Kind2::Horiz) {
    const Id near = mirror_r ? y_[h] : x_[h];
    const Id far = mirror_r ? x_[h] : y_[h];
    const std::uint64_t l = rows_[near];
    const std::uint64_t d = delta_r - br;
    const std::uint64_t dc = ac + (delta_c - bc);
    if (d <= l - ar) return {near, (l - ar) - d + 1, dc, rflip, cs, Split::Rows};
    return {far, d - (l - ar), dc, rs, cs, Split::Rows};
  }
  const Id near = mirror_c ? y_[h] : x_[h];
  const Id far = mirror_c ? x_[h] : y_[h];
  const std::uint64_t l = cols_[near];
  const std::uint64_t d = delta_c - bc;
  const std::uint64_t dr = ar + (delta_r - br);
  if (d <= l - ac) return {near, dr, (l - ac) - d + 1, rs, cflip, Split::Cols};
  return {far, dr, d - (l - ac), rs, cs, Split::Cols};
}

Code AccessIndex2::access(std::uint64_t i, std::uint64_t j, Trace2* trace) const {
  if (i < 1 || j < 1 || i > rows_[start_] || j > cols_[start_])
    fail(Errc::PositionOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  Map2 s{start_, i, j, RowSide::T, ColSide::L, Split::None};
  unsigned pr = top_r_, pc = top_c_;
  auto step = [&] {
    Map2 n = map_unchecked(corner_of(s.row_side, s.col_side), s.t, pr, pc, s.delta_r, s.delta_c);
    if (trace) {
      ++trace->iterations;
      const bool range = n.delta_r >= 1 && n.delta_c >= 1 && n.delta_r <= rows_[n.t] &&
                         n.delta_c <= cols_[n.t];
      const bool disj = (n.delta_r <= pow_[pr] && n.delta_c <= s.delta_c) ||
                        (n.delta_c <= pow_[pc] && n.delta_r <= s.delta_r);
      if (!range || !disj) ++trace->contract_violations;
    }
    s = n;
  };
  while (pr > 0 || pc > 0) {
    step();
    if (s.split == Split::Rows && pr > 0) --pr;
    if (s.split == Split::Cols && pc > 0) --pc;
    while (pow_[pr] > rows_[s.t]) --pr;
    while (pow_[pc] > cols_[s.t]) --pc;
  }
  if (kind_[s.t] != Kind2::Literal) {
    step();
    if (trace) trace->final_map = true;
  }
  return code_[s.t];
}

AccessIndex2 build_index2(const Slp2& g, std::uint64_t tau) { return AccessIndex2(g, tau); }

}  // namespace gg
