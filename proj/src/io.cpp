#include "gg/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

namespace gg {

namespace {

struct Lines {
  std::istream& in;
  std::size_t no = 0;
  // Next non-blank line with '#' comments stripped.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++no;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
  [[noreturn]] void bad(const std::string& why) const {
    fail(Errc::ParseError, "line " + std::to_string(no) + ": " + why);
  }
};

std::uint64_t to_u64(const std::string& tok, const Lines& ls) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    ls.bad("expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    ls.bad("integer out of range '" + tok + "'");
  }
}

template <class Rule, class Make>
void parse_rules(Lines& ls, const std::string& magic, std::vector<Rule>& rules, Code& sigma, Id& start,
                 Make make) {
  std::string line;
  if (!ls.next(line)) ls.bad("missing header");
  {
    std::istringstream hs(line);
    std::string m, a, b, extra;
    hs >> m >> a >> b;
    if (m != magic || b.empty() || (hs >> extra)) ls.bad("expected '" + magic + " <n> <sigma>'");
    const std::uint64_t n = to_u64(a, ls);
    sigma = to_u64(b, ls);
    if (sigma == 0) ls.bad("alphabet size must be positive");
    if (n > (std::uint64_t{1} << 31)) ls.bad("too many nonterminals");
    rules.resize(n);
  }
  std::vector<char> seen(rules.size(), 0);
  std::optional<Id> st;
  while (ls.next(line)) {
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "START") {
      std::string v, extra;
      ss >> v;
      if (st || (ss >> extra)) ls.bad("malformed START");
      std::uint64_t s = to_u64(v, ls);
      if (s >= rules.size()) fail(Errc::RangeError, "start id " + std::to_string(s));
      st = static_cast<Id>(s);
      continue;
    }
    if (st) ls.bad("rule after START");
    if (head.size() < 2 || head.back() != ':') ls.bad("expected '<id>:'");
    head.pop_back();
    const std::uint64_t id = to_u64(head, ls);
    if (id >= rules.size()) fail(Errc::RangeError, "rule id " + std::to_string(id));
    if (seen[id]) fail(Errc::DuplicateRule, "at id " + std::to_string(id));
    seen[id] = 1;
    std::string kind;
    ss >> kind;
    std::vector<std::uint64_t> args;
    for (std::string tok; ss >> tok;) args.push_back(to_u64(tok, ls));
    rules[id] = make(kind, args, ls);
    for (Id k : rules[id].kids)
      if (k >= rules.size()) fail(Errc::RangeError, "child id " + std::to_string(k) + " at id " + std::to_string(id));
    if (rules[id].code >= sigma) fail(Errc::RangeError, "terminal at id " + std::to_string(id));
  }
  if (!st) ls.bad("missing START");
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) fail(Errc::ParseError, "missing rule for id " + std::to_string(i));
  start = *st;
}

std::vector<Id> ids(const std::vector<std::uint64_t>& a, const Lines& ls) {
  std::vector<Id> out;
  for (auto v : a) {
    if (v > 0xffffffffull) ls.bad("id out of range");
    out.push_back(static_cast<Id>(v));
  }
  return out;
}

}  // namespace

Slg1 parse_slg1(std::istream& in) {
  Lines ls{in};
  Slg1 g;
  parse_rules(ls, "SLG1", g.rules, g.sigma, g.start,
              [](const std::string& kind, const std::vector<std::uint64_t>& a, const Lines& ls) {
                if (kind == "T") {
                  if (a.size() != 1) ls.bad("T takes one terminal");
                  return Rule1::lit(a[0]);
                }
                if (kind == "N") return Rule1::seq(ids(a, ls));
                ls.bad("unknown rule kind '" + kind + "'");
              });
  return g;
}

Slg2 parse_slg2(std::istream& in) {
  Lines ls{in};
  Slg2 g;
  parse_rules(ls, "SLG2", g.rules, g.sigma, g.start,
              [](const std::string& kind, const std::vector<std::uint64_t>& a, const Lines& ls) {
                if (kind == "L") {
                  if (a.size() != 1) ls.bad("L takes one terminal");
                  return Rule2::lit(a[0]);
                }
                if (kind == "H") return Rule2::horiz(ids(a, ls));
                if (kind == "V") return Rule2::vert(ids(a, ls));
                ls.bad("unknown rule kind '" + kind + "'");
              });
  return g;
}

std::variant<Slg1, Slg2> parse_grammar(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream probe(all);
  Lines ls{probe};
  std::string line, magic;
  if (ls.next(line)) std::istringstream(line) >> magic;
  std::istringstream ss(all);
  if (magic == "SLG1") return parse_slg1(ss);
  if (magic == "SLG2") return parse_slg2(ss);
  ls.bad("unknown header '" + magic + "'");
}

Matrix2D parse_mat(std::istream& in) {
  Lines ls{in};
  std::string line;
  if (!ls.next(line)) ls.bad("missing MAT header");
  std::istringstream hs(line);
  std::string m, a, b;
  hs >> m >> a >> b;
  if (m != "MAT") ls.bad("expected 'MAT <rows> <cols>'");
  const std::uint64_t r = to_u64(a, ls), c = to_u64(b, ls);
  std::vector<Code> cells;
  for (std::uint64_t i = 0; i < r; ++i) {
    if (!ls.next(line)) ls.bad("missing matrix row");
    std::istringstream ss(line);
    std::uint64_t count = 0;
    for (std::string tok; ss >> tok; ++count) cells.push_back(to_u64(tok, ls));
    if (count != c) ls.bad("row has " + std::to_string(count) + " cells, expected " + std::to_string(c));
  }
  return Matrix2D(r, c, std::move(cells));
}

std::vector<BitVector> parse_ov(std::istream& in) {
  Lines ls{in};
  std::vector<BitVector> out;
  std::string line;
  while (ls.next(line)) {
    BitVector v;
    for (char ch : line) {
      if (ch == '0' || ch == '1')
        v.push_back(ch == '1');
      else if (ch != ' ' && ch != '\t' && ch != '\r' && ch != ',')
        ls.bad("bit vectors use 0/1");
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string format_slg1(const Slg1& g) {
  std::ostringstream os;
  os << "SLG1 " << g.rules.size() << ' ' << g.sigma << '\n';
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const Rule1& r = g.rules[i];
    os << i << ':';
    if (r.literal) {
      os << " T " << r.code;
    } else {
      os << " N";
      for (Id k : r.kids) os << ' ' << k;
    }
    os << '\n';
  }
  os << "START " << g.start << '\n';
  return os.str();
}

std::string format_slg2(const Slg2& g) {
  std::ostringstream os;
  os << "SLG2 " << g.rules.size() << ' ' << g.sigma << '\n';
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const Rule2& r = g.rules[i];
    os << i << ':';
    if (r.kind == Kind2::Literal) {
      os << " L " << r.code;
    } else {
      os << (r.kind == Kind2::Horiz ? " H" : " V");
      for (Id k : r.kids) os << ' ' << k;
    }
    os << '\n';
  }
  os << "START " << g.start << '\n';
  return os.str();
}

std::string format_mat(const Matrix2D& m) {
  std::ostringstream os;
  os << "MAT " << m.rows() << ' ' << m.cols() << '\n';
  for (std::uint64_t i = 0; i < m.rows(); ++i) {
    for (std::uint64_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.cell(i, j);
    os << '\n';
  }
  return os.str();
}

std::string format_codes(const std::vector<Code>& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
  os << '\n';
  return os.str();
}

std::string format_ov(const std::vector<BitVector>& a) {
  std::string s;
  for (const auto& v : a) {
    for (auto b : v) s += b ? '1' : '0';
    s += '\n';
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot write " + path);
  f << text;
}

std::variant<Slg1, Slg2> read_grammar_file(const std::string& path) {
  std::istringstream ss(read_file(path));
  return parse_grammar(ss);
}

}  // namespace gg
