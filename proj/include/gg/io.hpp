#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "gg/oracle.hpp"
#include "gg/slg1.hpp"
#include "gg/slg2.hpp"

namespace gg {

Slg1 parse_slg1(std::istream& in);
Slg2 parse_slg2(std::istream& in);
// Dispatches on the header line.
std::variant<Slg1, Slg2> parse_grammar(std::istream& in);
Matrix2D parse_mat(std::istream& in);
std::vector<BitVector> parse_ov(std::istream& in);

std::string format_slg1(const Slg1& g);
std::string format_slg2(const Slg2& g);
std::string format_mat(const Matrix2D& m);
std::string format_codes(const std::vector<Code>& t);
std::string format_ov(const std::vector<BitVector>& a);

std::variant<Slg1, Slg2> read_grammar_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gg
