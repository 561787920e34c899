#include "rszeta/rational.hpp"

#include <cstdlib>

#include "rszeta/errors.hpp"

namespace rszeta {

Rat make_rat(long num, long den) {
  if (den == 0) {
    throw UsageError("make_rat: zero denominator");
  }
  Rat value(num, den);
  value.canonicalize();
  return value;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw UsageError("parse_rat: empty string");
  }
  Rat value;
  if (value.set_str(s, 10) != 0) {
    throw UsageError("parse_rat: malformed rational '" + s + "'");
  }
  if (value.get_den() == 0) {
    throw UsageError("parse_rat: zero denominator in '" + s + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

Rat pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw EvaluationError("pow: zero raised to a negative power");
    }
    Rat inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rat result = 1;
  Rat square = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) {
      result *= square;
    }
    e >>= 1U;
    if (e != 0) {
      square *= square;
    }
  }
  return result;
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

} // namespace rszeta
