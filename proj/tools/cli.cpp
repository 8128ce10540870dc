#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "gg/access1d.hpp"
#include "gg/access2d.hpp"
#include "gg/error.hpp"
#include "gg/generate.hpp"
#include "gg/io.hpp"
#include "gg/oracle.hpp"
#include "gg/reductions.hpp"

namespace gg::cli {
namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> tau;
  double epsilon = 1.0;
  std::uint64_t seed = 1;
  std::uint64_t cap = default_cap();
};

std::uint64_t num(const std::string& s) {
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s[0] == '-') throw Usage("expected a non-negative integer, got '" + s + "'");
  return v;
}

std::vector<std::uint64_t> nums(const std::vector<std::string>& a, std::size_t want, const std::string& what) {
  if (a.size() != want) throw Usage(what + " takes " + std::to_string(want) + " arguments");
  std::vector<std::uint64_t> v;
  for (const auto& s : a) v.push_back(num(s));
  return v;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

std::uint64_t pick_tau(const Globals& gl, std::uint64_t n) {
  if (gl.tau) {
    if (*gl.tau < 2) throw Usage("--tau must be at least 2");
    return *gl.tau;
  }
  return tau_preset(n, gl.epsilon);
}

Slg1 load_slg1(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_slg1(in);
}

Slg2 load_slg2(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_slg2(in);
}

// Row-by-row grammar of an explicit matrix.
Slg2 matrix_grammar(const Matrix2D& m) {
  Slg2 g;
  Code sigma = 1;
  for (Code c : m.cells()) sigma = std::max(sigma, c + 1);
  g.sigma = sigma;
  for (Code c = 0; c < sigma; ++c) g.rules.push_back(Rule2::lit(c));
  std::vector<Id> rows;
  for (std::uint64_t i = 0; i < m.rows(); ++i) {
    std::vector<Id> cells;
    for (std::uint64_t j = 0; j < m.cols(); ++j) cells.push_back(static_cast<Id>(m.cell(i, j)));
    g.rules.push_back(Rule2::vert(std::move(cells)));
    rows.push_back(static_cast<Id>(g.rules.size() - 1));
  }
  g.rules.push_back(Rule2::horiz(std::move(rows)));
  g.start = static_cast<Id>(g.rules.size() - 1);
  return g;
}

// A 2D input is either a grammar or a MAT dump.
Slg2 load_2d(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string head;
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (std::istringstream(line) >> head) break;
  }
  std::istringstream again(text);
  if (head == "MAT") return matrix_grammar(parse_mat(again));
  return parse_slg2(again);
}

// Owns a stack of provider stages; top() answers through all of them.
struct Chain {
  std::vector<std::unique_ptr<Queries2D>> stages;
  const Queries2D* base = nullptr;
  const Queries2D& top() const { return stages.empty() ? *base : *stages.back(); }
  template <class T, class... A>
  void push(A&&... a) {
    stages.push_back(std::make_unique<T>(top(), std::forward<A>(a)...));
  }
};

// Level of a chain end: equality < line-lce < square-lce.
int lce_level(const std::string& via) {
  if (via == "equality") return 0;
  if (via == "line-lce") return 1;
  if (via == "square-lce") return 2;
  throw Usage("unknown --via '" + via + "'");
}

void build_lce(Chain& c, int target, int via) {
  if (via >= target) return;
  if (via == 0) c.push<LineLceViaEquality>();
  if (target == 2) c.push<SquareLceViaLineLce>();
}

int cmd_validate(const std::string& path, std::ostream& out) {
  auto g = read_grammar_file(path);
  if (auto* a = std::get_if<Slg1>(&g)) {
    Grammar1 v(*a);
    out << "ok length=" << v.length() << " rules=" << v.num_rules() << '\n';
  } else {
    Grammar2 v(std::get<Slg2>(g));
    out << "ok rows=" << v.dims().rows << " cols=" << v.dims().cols << '\n';
  }
  return 0;
}

int cmd_expand(const Globals& gl, const std::string& path, const std::string& outp, std::ostream& out) {
  auto g = read_grammar_file(path);
  if (auto* a = std::get_if<Slg1>(&g))
    emit(outp, format_codes(expand1(Grammar1(*a), gl.cap)), out);
  else
    emit(outp, format_mat(expand2(Grammar2(std::get<Slg2>(g)), gl.cap)), out);
  return 0;
}

std::vector<std::vector<std::uint64_t>> read_coords(const std::vector<std::string>& args, std::istream& in,
                                                    std::size_t arity) {
  std::vector<std::vector<std::uint64_t>> q;
  if (!args.empty()) {
    if (args.size() % arity) throw Usage("coordinates come in groups of " + std::to_string(arity));
    for (std::size_t i = 0; i < args.size(); i += arity) {
      std::vector<std::uint64_t> c;
      for (std::size_t k = 0; k < arity; ++k) c.push_back(num(args[i + k]));
      q.push_back(c);
    }
    return q;
  }
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    q.push_back(nums(toks, arity, "each query line"));
  }
  return q;
}

int cmd_access(const Globals& gl, const std::string& path, const std::vector<std::string>& args, bool verify,
               std::istream& in, std::ostream& out, std::ostream& err) {
  auto g = read_grammar_file(path);
  int failures = 0;
  if (auto* a = std::get_if<Slg1>(&g)) {
    Slp1 slp = slg_to_slp(*a);
    AccessIndex1 ix(slp, pick_tau(gl, slp.length()));
    std::vector<Code> ref;
    if (verify) {
      if (slp.length() <= gl.cap)
        ref = expand1(slp, gl.cap);
      else
        err << "verify skipped: expansion over cap\n";
    }
    for (const auto& q : read_coords(args, in, 1)) {
      try {
        Code c = ix.access(q[0]);
        out << c << '\n';
        if (!ref.empty() && ref[q[0] - 1] != c) {
          err << "mismatch at " << q[0] << '\n';
          ++failures;
        }
      } catch (const Error& e) {
        err << e.what() << '\n';
        ++failures;
      }
    }
  } else {
    Slp2 slp = slg2_to_slp2(std::get<Slg2>(g));
    const Dims d = slp.dims();
    AccessIndex2 ix(slp, pick_tau(gl, std::max(d.rows, d.cols)));
    std::optional<Matrix2D> ref;
    if (verify) {
      if (d.cells() <= gl.cap)
        ref = expand2(slp, gl.cap);
      else
        err << "verify skipped: expansion over cap\n";
    }
    for (const auto& q : read_coords(args, in, 2)) {
      try {
        Code c = ix.access(q[0], q[1]);
        out << c << '\n';
        if (ref && ref->at(q[0], q[1]) != c) {
          err << "mismatch at " << q[0] << ' ' << q[1] << '\n';
          ++failures;
        }
      } catch (const Error& e) {
        err << e.what() << '\n';
        ++failures;
      }
    }
  }
  return failures ? 1 : 0;
}

OvInstance load_ov(const std::string& path) {
  std::istringstream in(read_file(path));
  return make_ov(parse_ov(in));
}

std::string pattern_text(const std::vector<Code>& p) {
  std::string s;
  for (Code c : p) s += c ? '1' : '0';
  return s;
}

int cmd_ov_reduce(const std::string& path, bool uniform, const std::string& outp, std::ostream& out) {
  OvInstance a = load_ov(path);
  if (uniform) a = uniform_ov(a);
  PmInstance pm = ov_to_pm(a);
  const std::string pat = pattern_text(pm.pattern);
  const auto size = grammar_size2(pm.grammar);
  std::ostringstream text;
  text << "# pattern " << pat << "\n# size " << size << '\n' << format_slg2(pm.grammar);
  emit(outp, text.str(), out);
  if (!outp.empty()) out << "pattern " << pat << "\nsize " << size << '\n';
  return 0;
}

int cmd_ov_solve(const Globals& gl, const std::string& path, const std::string& via, std::ostream& out) {
  OvInstance a = load_ov(path);
  if (via.empty()) {
    out << oracle::ov_brute(a.vectors) << '\n';
  } else if (via == "pm") {
    PmInstance pm = ov_to_pm(uniform_ov(a));
    out << oracle::row_pattern_occurs(expand2(Grammar2(pm.grammar), gl.cap), pm.pattern) << '\n';
  } else {
    throw Usage("unknown --via '" + via + "'");
  }
  return 0;
}

std::uint64_t query_1d(const Globals& gl, const std::string& name, const std::string& path,
                       const std::vector<std::string>& args, const std::string& via) {
  Slp1 slp = slg_to_slp(load_slg1(path));
  if (name == "rank") {
    auto v = nums(args, 2, "rank");
    if (via.empty()) return oracle::rank(expand1(slp, gl.cap), v[0], v[1]);
    if (via != "line-sum") throw Usage("rank supports --via line-sum");
    AlphabetReduced r = alphabet_reduce(slp);
    ScanOracle m(expand2(Grammar2(mark_grammar(r.grammar, r.map.A.size())), gl.cap));
    return rank_via_line_sum(m, r.map, v[0], v[1]);
  }
  auto v = nums(args, 3, "occurs");
  if (via.empty()) return oracle::occurs(expand1(slp, gl.cap), v[0], v[1], v[2]);
  AlphabetReduced r = alphabet_reduce(slp);
  Slg2 ext = ext_mark_grammar(r.grammar, r.map.A.size());
  if (via == "square-all-zero") {
    ScanOracle m(expand2(Grammar2(ext), gl.cap));
    return occurs_via_square_all_zero(m, r.map, v[0], v[1], v[2]);
  }
  PaddedZero p = pad_zero_right(ext);
  ScanOracle base(expand2(Grammar2(p.grammar), gl.cap));
  Chain c{{}, &base};
  build_lce(c, 2, lce_level(via));
  SquareAllZeroViaSquareLce saz(c.top(), p.orig);
  return occurs_via_square_all_zero(saz, r.map, v[0], v[1], v[2]);
}

std::uint64_t query_2d(const Globals& gl, const std::string& name, const std::string& path,
                       const std::vector<std::string>& args, const std::string& via) {
  Slg2 g = load_2d(path);
  Grammar2 gv(g);
  auto direct = [&] { return ScanOracle(expand2(gv, gl.cap)); };
  auto no_via = [&] {
    if (!via.empty()) throw Usage(name + " has no --via chain");
  };
  if (name == "sum") {
    no_via();
    auto v = nums(args, 4, name);
    return direct().sum(v[0], v[1], v[2], v[3]);
  }
  if (name == "line-sum") {
    no_via();
    auto v = nums(args, 3, name);
    return direct().line_sum(v[0], v[1], v[2]);
  }
  if (name == "all-zero") {
    no_via();
    auto v = nums(args, 4, name);
    return direct().all_zero(v[0], v[1], v[2], v[3]);
  }
  if (name == "equal") {
    no_via();
    auto v = nums(args, 6, name);
    return direct().equal_rect(v[0], v[1], v[2], v[3], v[4], v[5]);
  }
  if (name == "square-all-zero") {
    auto v = nums(args, 3, name);
    if (via.empty()) return direct().square_all_zero(v[0], v[1], v[2]);
    PaddedZero p = pad_zero_right(g);
    ScanOracle base(expand2(Grammar2(p.grammar), gl.cap));
    Chain c{{}, &base};
    build_lce(c, 2, lce_level(via));
    return square_all_zero_via_square_lce(c.top(), p.orig, v[0], v[1], v[2]);
  }
  ScanOracle base = direct();
  Chain c{{}, &base};
  if (name == "square-lce") {
    auto v = nums(args, 4, name);
    if (!via.empty()) {
      if (lce_level(via) >= 2) throw Usage("square-lce supports --via line-lce or equality");
      build_lce(c, 2, lce_level(via));
    }
    return c.top().square_lce(v[0], v[1], v[2], v[3]);
  }
  if (name == "line-lce") {
    auto v = nums(args, 5, name);
    if (!via.empty()) {
      if (via != "equality") throw Usage("line-lce supports --via equality");
      build_lce(c, 1, 0);
    }
    return c.top().line_lce(v[0], v[1], v[2], v[3], v[4]);
  }
  throw Usage("unknown query '" + name + "'");
}

int cmd_reduce(const std::string& kind, const std::string& path, std::optional<Code> sigma, const std::string& outp,
               std::ostream& out) {
  if (kind == "pad") {
    emit(outp, format_slg2(pad_zero_right(load_2d(path)).grammar), out);
    return 0;
  }
  Slg1 raw = load_slg1(path);
  Slp1 slp = slg_to_slp(raw);
  const Code s = sigma.value_or(raw.sigma);
  emit(outp, format_slg2(kind == "mark" ? mark_grammar(slp, s) : ext_mark_grammar(slp, s)), out);
  return 0;
}

volatile std::uint64_t keep = 0;

template <class F>
double mean_ns(std::size_t count, F f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto dt = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count();
  return count ? dt / count : 0.0;
}

int cmd_bench(const Globals& gl, const std::string& path, const std::vector<std::uint64_t>& taus, std::size_t queries,
              std::size_t reps, std::ostream& out) {
  auto g = read_grammar_file(path);
  out << "tau,entries,bytes,build_ms,mean_query_ns,loop_iterations_mean\n";
  gen::Rng rng(gl.seed);
  auto row = [&](std::uint64_t tau, std::size_t entries, std::size_t bytes, double build_ms, double q_ns,
                 double iters) {
    out << tau << ',' << entries << ',' << bytes << ',' << build_ms << ',' << q_ns << ',' << iters << '\n';
  };
  for (std::uint64_t tau : taus) {
    if (tau < 2) throw Usage("tau values must be at least 2");
    if (auto* a = std::get_if<Slg1>(&g)) {
      Slp1 slp = slg_to_slp(*a);
      std::optional<AccessIndex1> ix;
      double build = mean_ns(reps, [&] {
        for (std::size_t r = 0; r < reps; ++r) ix.emplace(slp, tau);
      });
      std::vector<std::uint64_t> pos(queries);
      for (auto& p : pos) p = 1 + rng() % slp.length();
      std::uint64_t sink = 0, steps = 0;
      double q = mean_ns(queries, [&] {
        for (auto p : pos) sink += ix->access(p);
      });
      for (auto p : pos) {
        Trace1 t;
        ix->access(p, &t);
        steps += t.steps;
      }
      row(tau, ix->entries(), ix->bytes(), build / 1e6, q, queries ? double(steps) / queries : 0.0);
      keep = sink;
    } else {
      Slp2 slp = slg2_to_slp2(std::get<Slg2>(g));
      std::optional<AccessIndex2> ix;
      double build = mean_ns(reps, [&] {
        for (std::size_t r = 0; r < reps; ++r) ix.emplace(slp, tau);
      });
      const Dims d = slp.dims();
      std::vector<std::pair<std::uint64_t, std::uint64_t>> pos(queries);
      for (auto& p : pos) p = {1 + rng() % d.rows, 1 + rng() % d.cols};
      std::uint64_t sink = 0, iters = 0;
      double q = mean_ns(queries, [&] {
        for (auto [i, j] : pos) sink += ix->access(i, j);
      });
      for (auto [i, j] : pos) {
        Trace2 t;
        ix->access(i, j, &t);
        iters += t.iterations;
      }
      row(tau, ix->entries(), ix->bytes(), build / 1e6, q, queries ? double(iters) / queries : 0.0);
      keep = sink;
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grammar-compressed 1D/2D strings: access indexes, queries and reductions", "gg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  std::uint64_t tau = 0;
  app.add_option("--tau", tau, "branching parameter (default: preset from --epsilon)");
  app.add_option("--epsilon", gl.epsilon, "tau = max(2, floor(log2(n)^epsilon))");
  app.add_option("--seed", gl.seed, "random seed");
  app.add_option("--cap-cells", gl.cap, "largest expansion allowed")->check(CLI::PositiveNumber);

  std::string path, outp, via, name, kind;
  std::vector<std::string> rest;
  bool verify = false, uniform = false;

  auto* validate = app.add_subcommand("validate", "check a grammar file");
  validate->add_option("file", path)->required();

  auto* expand = app.add_subcommand("expand", "write the expansion");
  expand->add_option("file", path)->required();
  expand->add_option("-o,--out", outp);

  auto* access = app.add_subcommand("access", "random access; coordinates from arguments or stdin");
  access->add_option("file", path)->required();
  access->add_option("coords", rest);
  access->add_flag("--verify", verify, "compare against the expansion");

  auto* ov = app.add_subcommand("ov", "orthogonal vectors");
  ov->require_subcommand(1);
  std::size_t ov_n = 8, ov_d = 8;
  double density = 0.5;
  auto* ov_gen = ov->add_subcommand("gen", "random instance");
  ov_gen->add_option("--n", ov_n)->check(CLI::PositiveNumber);
  ov_gen->add_option("--d", ov_d)->check(CLI::PositiveNumber);
  ov_gen->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
  auto* ov_uniform = ov->add_subcommand("uniform", "equalize the number of ones");
  ov_uniform->add_option("file", path)->required();
  auto* ov_reduce = ov->add_subcommand("reduce", "build the pattern matching instance");
  ov_reduce->add_option("file", path)->required();
  ov_reduce->add_option("-o,--out", outp);
  ov_reduce->add_flag("--uniform", uniform, "equalize first");
  auto* ov_solve = ov->add_subcommand("solve", "decide the instance");
  ov_solve->add_option("file", path)->required();
  ov_solve->add_option("--via", via, "pm: through the pattern matching instance");

  auto* query = app.add_subcommand("query", "rank, occurs, sum, line-sum, all-zero, square-all-zero, equal, "
                                             "square-lce, line-lce");
  query->add_option("name", name)->required();
  query->add_option("file", path)->required();
  query->add_option("args", rest);
  query->add_option("--via", via, "answer through a reduction chain");

  auto* reduce = app.add_subcommand("reduce", "marking grammars and zero padding");
  reduce->add_option("kind", kind)->required()->check(CLI::IsMember({"mark", "extmark", "pad"}));
  reduce->add_option("file", path)->required();
  reduce->add_option("-o,--out", outp);
  Code sigma = 0;
  auto* sigma_opt = reduce->add_option("--sigma", sigma, "alphabet size (default: from the file)");

  auto* bench = app.add_subcommand("bench", "index size and query time per tau, CSV");
  std::vector<std::uint64_t> taus{2, 4, 8, 16};
  std::size_t queries = 10000, reps = 1;
  bench->add_option("file", path)->required();
  bench->add_option("--taus", taus)->delimiter(',');
  bench->add_option("--queries", queries);
  bench->add_option("--reps", reps)->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "random grammar");
  std::size_t rules = 40;
  Code gsigma = 4;
  std::uint64_t max_size = 1 << 14;
  gen->add_option("kind", kind)->required()->check(CLI::IsMember({"slp1", "slp2"}));
  gen->add_option("--rules", rules)->check(CLI::PositiveNumber);
  gen->add_option("--sigma", gsigma)->check(CLI::PositiveNumber);
  gen->add_option("--max-size", max_size, "length or cell bound")->check(CLI::PositiveNumber);
  gen->add_option("-o,--out", outp);

  for (auto* s : {validate, expand, access, ov, ov_gen, ov_uniform, ov_reduce, ov_solve, query, reduce, bench, gen})
    s->fallthrough();

  std::vector<const char*> argv{"gg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (app.count("--tau")) gl.tau = tau;

  try {
    if (*validate) return cmd_validate(path, out);
    if (*expand) return cmd_expand(gl, path, outp, out);
    if (*access) return cmd_access(gl, path, rest, verify, in, out, err);
    if (*ov_gen) {
      gen::Rng rng(gl.seed);
      out << format_ov(gen::random_ov(rng, ov_n, ov_d, density));
      return 0;
    }
    if (*ov_uniform) {
      out << format_ov(uniform_ov(load_ov(path)).vectors);
      return 0;
    }
    if (*ov_reduce) return cmd_ov_reduce(path, uniform, outp, out);
    if (*ov_solve) return cmd_ov_solve(gl, path, via, out);
    if (*query) {
      const bool one_d = name == "rank" || name == "occurs";
      out << (one_d ? query_1d(gl, name, path, rest, via) : query_2d(gl, name, path, rest, via)) << '\n';
      return 0;
    }
    if (*reduce) return cmd_reduce(kind, path, sigma_opt->count() ? std::optional<Code>(sigma) : std::nullopt, outp, out);
    if (*bench) return cmd_bench(gl, path, taus, queries, reps, out);
    if (*gen) {
      gen::Rng rng(gl.seed);
      emit(outp,
           kind == "slp1" ? format_slg1(gen::random_slp1(rng, rules, gsigma, max_size))
                          : format_slg2(gen::random_slp2(rng, rules, gsigma, max_size)),
           out);
      return 0;
    }
  } catch (const Usage& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gg::cli
