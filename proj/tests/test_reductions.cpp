#include <algorithm>
#include <bit>
#include <map>

#include "doctest.h"
#include "gg/access2d.hpp"
#include "gg/generate.hpp"
#include "gg/oracle.hpp"
#include "gg/reductions.hpp"
#include "helpers.hpp"

using namespace gg;

namespace {

// One literal rule per code and a flat start rule, binarized.
Slp1 string_slp(const std::vector<Code>& t, Code sigma) {
  Slg1 g;
  g.sigma = sigma;
  for (Code c = 0; c < sigma; ++c) g.rules.push_back(Rule1::lit(c));
  std::vector<Id> kids;
  for (Code c : t) kids.push_back(static_cast<Id>(c));
  g.rules.push_back(Rule1::seq(kids));
  g.start = static_cast<Id>(sigma);
  return slg_to_slp(g);
}

Matrix2D random_bits(gen::Rng& rng, std::uint64_t r, std::uint64_t c) {
  Matrix2D m(r, c);
  for (std::uint64_t i = 0; i < r; ++i)
    for (std::uint64_t j = 0; j < c; ++j) m.cell(i, j) = rng() % 2;
  return m;
}

unsigned search_bound(std::uint64_t n) { return std::bit_width(n) + 1; }

std::vector<Code> remap(const std::vector<Code>& t, const AlphabetMap& map) {
  std::vector<Code> out;
  for (Code c : t) out.push_back(*map.forward(c));
  return out;
}

}  // namespace

TEST_CASE("uniform OV formula") {
  OvInstance u = uniform_ov(make_ov({{1, 0}}));
  REQUIRE(u.n() == 2);
  CHECK(u.d == 6);
  CHECK(u.vectors[0] == BitVector{1, 0, 1, 0, 0, 0});
  CHECK(u.vectors[1] == BitVector{1, 0, 0, 0, 1, 0});
  CHECK_THROWS_AS(make_ov({}), Error);
  CHECK_THROWS_AS(make_ov({{1, 0}, {1}}), Error);
}

TEST_CASE("uniform OV keeps the answer on every tiny instance") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const std::size_t vals = std::size_t{1} << d;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<BitVector> vs;
        for (std::size_t x : idx) {
          BitVector v(d);
          for (std::size_t b = 0; b < d; ++b) v[b] = (x >> b) & 1;
          vs.push_back(v);
        }
        OvInstance u = uniform_ov(make_ov(vs));
        CHECK(u.n() == 2 * n);
        for (const auto& v : u.vectors) CHECK(std::count(v.begin(), v.end(), 1) == static_cast<long>(d));
        CHECK(oracle::ov_brute(u.vectors) == oracle::ov_brute(vs));
        std::size_t k = 0;
        while (k < n && ++idx[k] == vals) idx[k++] = 0;
        if (k == n) break;
      }
    }
  }
}

TEST_CASE("uniform OV on random instances") {
  gen::Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    auto vs = gen::random_ov(rng, 1 + rng() % 10, 1 + rng() % 8);
    OvInstance u = uniform_ov(make_ov(vs));
    CHECK(u.n() == 2 * vs.size());
    CHECK(oracle::ov_brute(u.vectors) == oracle::ov_brute(vs));
  }
}

TEST_CASE("OV to pattern matching on the five-vector example") {
  OvInstance a = make_ov(fixtures::five_vectors());
  PmInstance pm = ov_to_pm(a);
  CHECK(pm.pattern == std::vector<Code>{1, 0, 0, 1});
  CHECK(grammar_size2(pm.grammar) == 47);
  Slp2 slp = slg2_to_slp2(pm.grammar);
  Matrix2D t = expand2(Grammar2(pm.grammar));
  CHECK(t.rows() == 5);
  CHECK(t.cols() == 20);
  CHECK(oracle::row_pattern_occurs(t, pm.pattern) == 1);
  AccessIndex2 ix(slp, 2);
  CHECK(access2(ix, 4, 6) == t.at(4, 6));
  CHECK(access2(ix, 4, 9) == t.at(4, 9));
  CHECK(t.at(4, 6) == 0);
  CHECK(t.at(4, 9) == 1);
}

TEST_CASE("OV to pattern matching without an orthogonal pair") {
  OvInstance u = uniform_ov(make_ov({{1, 1}, {1, 0}}));
  REQUIRE(oracle::ov_brute(u.vectors) == 0);
  PmInstance pm = ov_to_pm(u);
  CHECK(oracle::row_pattern_occurs(expand2(Grammar2(pm.grammar)), pm.pattern) == 0);
  CHECK_THROWS_AS(ov_to_pm(make_ov({{1, 0}, {1, 1}})), Error);
}

TEST_CASE("OV to pattern matching agrees with brute force") {
  gen::Rng rng(13);
  for (int it = 0; it < 100; ++it) {
    auto vs = gen::random_ov(rng, 1 + rng() % 8, 1 + rng() % 6);
    OvInstance u = uniform_ov(make_ov(vs));
    PmInstance pm = ov_to_pm(u);
    const std::size_t n = u.n(), d = u.d, l = pm.l;
    CHECK(grammar_size2(pm.grammar) == 2 + (d + 1) * n + (l + 2) * n);
    Matrix2D t = expand2(Grammar2(pm.grammar));
    CHECK(t.rows() == n);
    CHECK(t.cols() == (l + 2) * n);
    CHECK(oracle::row_pattern_occurs(t, pm.pattern) == oracle::ov_brute(vs));
  }
}

TEST_CASE("marking matrices") {
  std::vector<Code> t{0, 1, 0};
  CHECK(mark_char(t, 0) == Matrix2D::from_rows({{1, 0, 1}}));
  CHECK(mark_char(t, 1) == Matrix2D::from_rows({{0, 1, 0}}));
  CHECK(mark_char(t, 5) == Matrix2D(1, 3, 0));
  CHECK(mark_all_chars(t, 2) == Matrix2D::from_rows({{1, 0, 1}, {0, 1, 0}}));
  CHECK(ext_mark_all_chars({0, 1}, 2) == Matrix2D::from_rows({{1, 0}, {0, 0}, {0, 1}, {0, 0}}));
  CHECK_THROWS_AS(ext_mark_all_chars({0}, 2), Error);
  CHECK_THROWS_AS(mark_all_chars({0, 3}, 2), Error);
}

TEST_CASE("marking matrices split along concatenation") {
  gen::Rng rng(17);
  for (int it = 0; it < 50; ++it) {
    auto t = gen::random_string(rng, 2 + rng() % 30, 5);
    std::size_t k = 1 + rng() % (t.size() - 1);
    std::vector<Code> x(t.begin(), t.begin() + k), y(t.begin() + k, t.end());
    CHECK(mark_all_chars(t, 5) == hconcat(mark_all_chars(x, 5), mark_all_chars(y, 5)));
  }
}

TEST_CASE("marking grammars") {
  Slp1 ab = string_slp({0, 1}, 2);
  CHECK(expand2(Grammar2(mark_grammar(ab, 2))) == Matrix2D::from_rows({{1, 0}, {0, 1}}));
  CHECK(expand2(Grammar2(ext_mark_grammar(ab, 2))) == Matrix2D::from_rows({{1, 0}, {0, 0}, {0, 1}, {0, 0}}));
  CHECK_THROWS_AS(ext_mark_grammar(Slp1(fixtures::single_literal(0)), 1), Error);

  gen::Rng rng(19);
  for (int it = 0; it < 100; ++it) {
    const Code sigma = 1 + rng() % 8;
    Slp1 g(gen::random_slp1(rng, 1 + rng() % 30, sigma, 64));
    auto t = expand1(g);
    Slg2 m = mark_grammar(g, sigma);
    CHECK(expand2(Grammar2(m)) == mark_all_chars(t, sigma));
    CHECK(grammar_size2(m) <= 6 * (grammar_size1(g) + sigma));
    if (t.size() >= 2) {
      Slg2 e = ext_mark_grammar(g, sigma);
      CHECK(expand2(Grammar2(e)) == ext_mark_all_chars(t, sigma));
      CHECK(grammar_size2(e) <= 12 * (grammar_size1(g) + sigma));
    }
  }
}

TEST_CASE("alphabet reduction") {
  Slp1 g = string_slp({0, 2, 0, 2}, 100);
  AlphabetReduced r = alphabet_reduce(g);
  CHECK(r.map.A == std::vector<Code>{0, 2});
  CHECK(expand1(r.grammar) == std::vector<Code>{0, 1, 0, 1});
  CHECK(r.grammar.sigma() == 2);
  CHECK(r.grammar.num_rules() <= g.num_rules());
  CHECK_FALSE(r.map.forward(1).has_value());
  CHECK(*r.map.forward(2) == 1);

  ScanOracle marking(mark_all_chars(expand1(r.grammar), 2));
  CountingQueries counter(marking);
  CHECK(rank_via_line_sum(counter, r.map, 4, 1) == 0);
  CHECK(rank_via_line_sum(counter, r.map, 4, 50) == 0);
  CHECK(counter.total() == 0);
  CHECK(rank_via_line_sum(counter, r.map, 4, 2) == 2);
  CHECK(counter.total() == 1);

  Slp1 dense = string_slp({1, 0, 2}, 3);
  AlphabetReduced d = alphabet_reduce(dense);
  CHECK(d.map.A == std::vector<Code>{0, 1, 2});
  CHECK(expand1(d.grammar) == expand1(dense));
}

TEST_CASE("rank and occurs through marking matrices") {
  Slp1 aba = string_slp({0, 1, 0}, 2);
  AlphabetReduced r = alphabet_reduce(aba);
  ScanOracle marking(expand2(Grammar2(mark_grammar(r.grammar, 2))));
  CHECK(marking.line_sum(1, 3, 3) == 2);
  CHECK(rank_via_line_sum(marking, r.map, 3, 0) == 2);

  Slp1 ab = string_slp({0, 1}, 2);
  AlphabetReduced q = alphabet_reduce(ab);
  ScanOracle ext(expand2(Grammar2(ext_mark_grammar(q.grammar, 2))));
  CountingQueries counter(ext);
  CHECK(occurs_via_square_all_zero(counter, q.map, 0, 1, 1) == 0);
  CHECK(counter.calls(QueryKind::SquareAllZero) == 1);
  CHECK(ext.square_all_zero(4, 1, 1) == 1);
  CHECK(occurs_via_square_all_zero(counter, q.map, 1, 1, 0) == 0);
  CHECK(counter.total() == 1);

  // A length-one window on the marking row itself.
  Slp1 ba = string_slp({1, 0}, 2);
  AlphabetReduced s = alphabet_reduce(ba);
  ScanOracle ext_ba(expand2(Grammar2(ext_mark_grammar(s.grammar, 2))));
  CHECK(occurs_via_square_all_zero(ext_ba, s.map, 1, 2, 0) == 1);
  CHECK(occurs_via_square_all_zero(ext_ba, s.map, 0, 1, 0) == 0);
}

TEST_CASE("rank and occurs adapters over exhaustive queries") {
  gen::Rng rng(23);
  for (int it = 0; it < 30; ++it) {
    const Code sigma = 1 + rng() % 8;
    auto t = gen::random_string(rng, 2 + rng() % 127, sigma);
    AlphabetReduced r = alphabet_reduce(string_slp(t, sigma));
    auto u = remap(t, r.map);
    const Code s = r.map.A.size();
    ScanOracle mark(expand2(Grammar2(mark_grammar(r.grammar, s))));
    REQUIRE(mark.matrix() == mark_all_chars(u, s));
    CountingQueries cm(mark);
    for (std::uint64_t j = 0; j <= t.size(); ++j)
      for (Code c = 0; c < sigma; ++c) CHECK(rank_via_line_sum(cm, r.map, j, c) == oracle::rank(t, j, c));
    CHECK(cm.total() <= (t.size() + 1) * sigma);

    if (u.size() < 2 || it % 3 != 0) continue;
    PrefixSumOracle ext(expand2(Grammar2(ext_mark_grammar(r.grammar, s))));
    for (std::uint64_t b = 0; b <= t.size(); ++b)
      for (std::uint64_t e = 0; e <= t.size(); ++e)
        for (Code c = 0; c < sigma; ++c)
          CHECK(occurs_via_square_all_zero(ext, r.map, b, e, c) == oracle::occurs(t, b, e, c));
  }
}

TEST_CASE("LCE adapter chains") {
  Matrix2D ab = Matrix2D::from_rows({{0, 1}, {0, 1}});
  ScanOracle o(ab);
  CHECK(square_lce_via_line_lce(o, 1, 1, 2, 1) == 1);
  CHECK(line_lce_via_equality(o, 1, 1, 1, 1, 2) == 2);
  CHECK(line_lce_via_equality(o, 1, 2, 1, 2, 1) == 1);

  gen::Rng rng(29);
  for (int it = 0; it < 12; ++it) {
    Matrix2D m = random_bits(rng, 1 + rng() % 12, 1 + rng() % 12);
    const auto R = m.rows(), C = m.cols();
    ScanOracle base(m);
    CountingQueries eq(base);
    LineLceViaEquality line(eq);
    CountingQueries lc(line);
    for (std::uint64_t a = 1; a <= R; ++a)
      for (std::uint64_t b = 1; b <= C; ++b)
        for (std::uint64_t a2 = 1; a2 <= R; ++a2)
          for (std::uint64_t b2 = 1; b2 <= C; ++b2) {
            lc.reset();
            CHECK(square_lce_via_line_lce(lc, a, b, a2, b2) == oracle::square_lce(m, a, b, a2, b2));
            CHECK(lc.calls(QueryKind::LineLce) <= search_bound(std::min(R, C)));
            const std::uint64_t hmax = R + 1 - std::max(a, a2);
            for (std::uint64_t l = 0; l <= hmax; ++l) {
              eq.reset();
              CHECK(line_lce_via_equality(eq, a, b, a2, b2, l) == oracle::line_lce(m, a, b, a2, b2, l));
              CHECK(eq.calls(QueryKind::Equal) <= search_bound(C));
            }
          }
  }
}

TEST_CASE("zero padding") {
  Slg2 g = fixtures::two_by_two();
  PaddedZero p = pad_zero_right(g);
  CHECK(p.orig == Dims{2, 2});
  Matrix2D t = expand2(Grammar2(p.grammar));
  CHECK(t == Matrix2D::from_rows({{0, 1, 0, 0}, {2, 3, 0, 0}}));

  gen::Rng rng(31);
  for (int it = 0; it < 60; ++it) {
    Slg2 r = gen::random_slp2(rng, 1 + rng() % 40, 3, 4096);
    Dims d = Grammar2(r).dims();
    PaddedZero q = pad_zero_right(r);
    Matrix2D x = expand2(Grammar2(q.grammar));
    CHECK(x == hconcat(expand2(Grammar2(r)), Matrix2D(d.rows, d.cols, 0)));
    const std::uint64_t extra = grammar_size2(q.grammar) - grammar_size2(r);
    CHECK(extra <= 6 * (std::bit_width(d.rows) + std::bit_width(d.cols)) + 6);
  }
}

TEST_CASE("square all-zero through the padded grammar") {
  gen::Rng rng(37);
  for (int it = 0; it < 25; ++it) {
    Matrix2D m = random_bits(rng, 1 + rng() % 10, 1 + rng() % 10);
    if (it % 2) {
      for (std::uint64_t i = 0; i < m.rows(); ++i)
        for (std::uint64_t j = 0; j < m.cols(); ++j)
          if (rng() % 4) m.cell(i, j) = 0;
    }
    Slg2 g;
    g.sigma = 2;
    g.rules = {Rule2::lit(0), Rule2::lit(1)};
    std::vector<Id> rows;
    for (std::uint64_t i = 0; i < m.rows(); ++i) {
      std::vector<Id> cells;
      for (std::uint64_t j = 0; j < m.cols(); ++j) cells.push_back(static_cast<Id>(m.cell(i, j)));
      g.rules.push_back(Rule2::vert(cells));
      rows.push_back(static_cast<Id>(g.rules.size() - 1));
    }
    g.rules.push_back(Rule2::horiz(rows));
    g.start = static_cast<Id>(g.rules.size() - 1);
    PaddedZero p = pad_zero_right(g);
    ScanOracle padded(expand2(Grammar2(p.grammar)));
    CountingQueries cp(padded);
    SquareAllZeroViaSquareLce saz(cp, p.orig);
    for (std::uint64_t er = 0; er <= m.rows(); ++er)
      for (std::uint64_t ec = 0; ec <= m.cols(); ++ec)
        for (std::uint64_t l = 0; l <= std::min(er, ec); ++l) {
          cp.reset();
          CHECK(saz.square_all_zero(er, ec, l) == oracle::square_all_zero(m, er, ec, l));
          CHECK(cp.total() <= 1);
        }
  }
}

TEST_CASE("occurs through the full chain down to equality") {
  gen::Rng rng(41);
  for (int it = 0; it < 15; ++it) {
    const Code sigma = 1 + rng() % 4;
    auto t = gen::random_string(rng, 2 + rng() % 11, sigma);
    AlphabetReduced r = alphabet_reduce(string_slp(t, sigma));
    if (expand1(r.grammar).size() < 2) continue;
    Slg2 ext = ext_mark_grammar(r.grammar, r.map.A.size());
    PaddedZero p = pad_zero_right(ext);
    ScanOracle base(expand2(Grammar2(p.grammar)));
    CountingQueries eq(base);
    LineLceViaEquality line(eq);
    SquareLceViaLineLce square(line);
    SquareAllZeroViaSquareLce saz(square, p.orig);
    for (std::uint64_t b = 0; b <= t.size(); ++b)
      for (std::uint64_t e = 0; e <= t.size(); ++e)
        for (Code c = 0; c < sigma; ++c) {
          eq.reset();
          CHECK(occurs_via_square_all_zero(saz, r.map, b, e, c) == oracle::occurs(t, b, e, c));
          CHECK(eq.calls(QueryKind::Equal) <= search_bound(p.orig.cols * 2) * search_bound(p.orig.cols * 2));
        }
  }
}
