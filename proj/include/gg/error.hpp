#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gg {

enum class Errc {
  CyclicGrammar,
  DanglingReference,
  TerminalOutOfRange,
  DuplicateRule,
  DimensionMismatch,
  EmptyExpansion,
  EmptyLanguage,
  ArithmeticOverflow,
  ExpansionTooLarge,
  NotAnSlp,
  RangeError,
  PreconditionViolated,
  PositionOutOfRange,
  NonUniformInstance,
  ExtRequiresLengthTwo,
  ParseError,
  Unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = {});

// Lengths are capped at 2^62.
inline constexpr std::uint64_t kMaxLength = std::uint64_t{1} << 62;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > kMaxLength || b > kMaxLength - a) fail(Errc::ArithmeticOverflow, "length exceeds 2^62");
  return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxLength / a) fail(Errc::ArithmeticOverflow, "product exceeds 2^62");
  return a * b;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > top / a) return top;
  return a * b;
}

}  // namespace gg
