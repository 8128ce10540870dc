#include "gg/error.hpp"

namespace gg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CyclicGrammar: return "CyclicGrammar";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::TerminalOutOfRange: return "TerminalOutOfRange";
    case Errc::DuplicateRule: return "DuplicateRule";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyExpansion: return "EmptyExpansion";
    case Errc::EmptyLanguage: return "EmptyLanguage";
    case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
    case Errc::ExpansionTooLarge: return "ExpansionTooLarge";
    case Errc::NotAnSlp: return "NotAnSlp";
    case Errc::RangeError: return "RangeError";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::NonUniformInstance: return "NonUniformInstance";
    case Errc::ExtRequiresLengthTwo: return "ExtRequiresLengthTwo";
    case Errc::ParseError: return "ParseError";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

static std::string compose(Errc code, const std::string& detail) {
  std::string s = errc_name(code);
  if (!detail.empty()) s += " " + detail;
  return s;
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace gg
