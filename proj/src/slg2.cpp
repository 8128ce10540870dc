#include "gg/slg2.hpp"

#include <string>

#include "gg/detail/topo.hpp"

namespace gg {

Grammar2::Grammar2(Slg2 g, ValidateOptions opt) : g_(std::move(g)) {
  const std::size_t n = g_.rules.size();
  if (n == 0) fail(Errc::DanglingReference, "at id 0 (no rules)");
  if (g_.start >= n) fail(Errc::DanglingReference, "at id " + std::to_string(g_.start));
  for (std::size_t i = 0; i < n; ++i) {
    const Rule2& r = g_.rules[i];
    if (r.kind == Kind2::Literal) {
      if (r.code >= g_.sigma) fail(Errc::TerminalOutOfRange, "at id " + std::to_string(i));
      continue;
    }
    for (Id c : r.kids)
      if (c >= n) fail(Errc::DanglingReference, "at id " + std::to_string(c));
  }
  topo_ = detail::topo_order(n, [&](Id v) -> const std::vector<Id>& { return g_.rules[v].kids; });
  dims_.assign(n, Dims{});
  for (Id v : topo_) {
    const Rule2& r = g_.rules[v];
    if (r.kind == Kind2::Literal) {
      dims_[v] = {1, 1};
      continue;
    }
    const bool h = r.kind == Kind2::Horiz;
    Dims d;
    for (Id c : r.kids) {
      Dims k = dims_[c];
      if (k.empty()) continue;
      std::uint64_t shared = h ? k.cols : k.rows;
      std::uint64_t& mine = h ? d.cols : d.rows;
      if (d.empty()) {
        mine = shared;
      } else if (mine != shared) {
        fail(Errc::DimensionMismatch, "at id " + std::to_string(v));
      }
      std::uint64_t& sum = h ? d.rows : d.cols;
      sum = checked_add(sum, h ? k.rows : k.cols);
    }
    if (d.empty()) {
      if (!opt.allow_empty) fail(Errc::EmptyExpansion, "at id " + std::to_string(v));
      d = {};
    }
    checked_mul(d.rows, d.cols);
    dims_[v] = d;
  }
}

bool Grammar2::is_slp() const {
  for (std::size_t i = 0; i < g_.rules.size(); ++i) {
    const Rule2& r = g_.rules[i];
    if (r.kind != Kind2::Literal && r.kids.size() != 2) return false;
    if (dims_[i].empty()) return false;
  }
  return true;
}

Slp2::Slp2(Grammar2 g) : Grammar2(std::move(g)) {
  for (std::size_t i = 0; i < num_rules(); ++i) {
    const Rule2& r = rule(static_cast<Id>(i));
    if (r.kind != Kind2::Literal && r.kids.size() != 2)
      fail(Errc::NotAnSlp, "at id " + std::to_string(i));
  }
}

Matrix2D::Matrix2D(std::uint64_t rows, std::uint64_t cols, Code fill)
    : rows_(rows), cols_(cols), cells_(checked_mul(rows, cols), fill) {}

Matrix2D::Matrix2D(std::uint64_t rows, std::uint64_t cols, std::vector<Code> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != checked_mul(rows, cols)) fail(Errc::DimensionMismatch, "cell count");
}

Matrix2D Matrix2D::from_rows(const std::vector<std::vector<Code>>& rows) {
  const std::uint64_t c = rows.empty() ? 0 : rows[0].size();
  std::vector<Code> cells;
  for (const auto& row : rows) {
    if (row.size() != c) fail(Errc::DimensionMismatch, "ragged rows");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Matrix2D(rows.size(), c, std::move(cells));
}

Code Matrix2D::at(std::uint64_t i, std::uint64_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    fail(Errc::PositionOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return cells_[(i - 1) * cols_ + (j - 1)];
}

Grammar2 validate_slg2(const Slg2& g, ValidateOptions opt) { return Grammar2(g, opt); }

Dims dims(const Grammar2& g, Id n) {
  if (n >= g.num_rules()) fail(Errc::RangeError, "id " + std::to_string(n));
  return g.dims(n);
}

Matrix2D hconcat(const Matrix2D& a, const Matrix2D& b) {
  if (a.rows() != b.rows()) fail(Errc::DimensionMismatch, "hconcat rows");
  Matrix2D m(a.rows(), a.cols() + b.cols());
  for (std::uint64_t r = 0; r < a.rows(); ++r) {
    for (std::uint64_t c = 0; c < a.cols(); ++c) m.cell(r, c) = a.cell(r, c);
    for (std::uint64_t c = 0; c < b.cols(); ++c) m.cell(r, a.cols() + c) = b.cell(r, c);
  }
  return m;
}

Matrix2D vconcat(const Matrix2D& a, const Matrix2D& b) {
  if (a.cols() != b.cols()) fail(Errc::DimensionMismatch, "vconcat cols");
  std::vector<Code> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return Matrix2D(a.rows() + b.rows(), a.cols(), std::move(cells));
}

Matrix2D expand2(const Grammar2& g, std::uint64_t cap) { return expand2(g, g.start(), cap); }

Matrix2D expand2(const Grammar2& g, Id n, std::uint64_t cap) {
  if (n >= g.num_rules()) fail(Errc::RangeError, "id " + std::to_string(n));
  Dims d = g.dims(n);
  if (d.cells() > cap)
    fail(Errc::ExpansionTooLarge, std::to_string(d.cells()) + " > cap " + std::to_string(cap));
  Matrix2D m(d.rows, d.cols);
  struct Frame {
    Id v;
    std::uint64_t r, c;
  };
  std::vector<Frame> stack{{n, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Rule2& r = g.rule(f.v);
    if (r.kind == Kind2::Literal) {
      m.cell(f.r, f.c) = r.code;
      continue;
    }
    std::uint64_t rr = f.r, cc = f.c;
    for (Id k : r.kids) {
      stack.push_back({k, rr, cc});
      if (r.kind == Kind2::Horiz)
        rr += g.dims(k).rows;
      else
        cc += g.dims(k).cols;
    }
  }
  return m;
}

std::uint64_t grammar_size2(const Slg2& g) {
  std::uint64_t s = 0;
  for (const Rule2& r : g.rules)
    s += r.kind == Kind2::Literal ? 1 : std::max<std::size_t>(r.kids.size(), 1);
  return s;
}

Grammar2 canonicalize(const Grammar2& g) {
  auto order = detail::reachable_parents_first(
      g.num_rules(), g.start(), [&](Id v) -> const std::vector<Id>& { return g.rule(v).kids; });
  std::vector<Id> remap(g.num_rules(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<Id>(i);
  Slg2 out;
  out.sigma = g.sigma();
  out.rules.reserve(order.size());
  for (Id v : order) {
    Rule2 r = g.rule(v);
    for (Id& c : r.kids) c = remap[c];
    out.rules.push_back(std::move(r));
  }
  return Grammar2(std::move(out), {.allow_empty = true});
}

Slp2 slg2_to_slp2(const Slg2& in) {
  Grammar2 g(in, {.allow_empty = true});
  if (g.dims().empty()) fail(Errc::EmptyLanguage);

  constexpr Id kNone = ~Id{0};
  Slg2 out;
  out.sigma = g.sigma();
  std::vector<Id> mapped(g.num_rules(), kNone);
  auto add = [&](Rule2 r) {
    out.rules.push_back(std::move(r));
    return static_cast<Id>(out.rules.size() - 1);
  };
  for (Id v : g.topo()) {
    const Rule2& r = g.rule(v);
    if (r.kind == Kind2::Literal) {
      mapped[v] = add(r);
      continue;
    }
    std::vector<Id> ks;
    for (Id c : r.kids)
      if (!g.dims(c).empty()) ks.push_back(mapped[c]);
    if (ks.empty()) continue;
    if (ks.size() == 1) {
      mapped[v] = ks[0];
      continue;
    }
    Id tail = ks.back();
    for (std::size_t i = ks.size() - 2; i >= 1; --i) tail = add({r.kind, 0, {ks[i], tail}});
    mapped[v] = add({r.kind, 0, {ks[0], tail}});
  }
  out.start = mapped[g.start()];
  return Slp2(canonicalize(Grammar2(std::move(out))));
}

}  // namespace gg
