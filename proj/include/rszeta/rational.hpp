#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rszeta {

// Exact rationals over unbounded integers. GMP keeps every arithmetic result in
// lowest terms with a positive denominator; values built from a raw
// numerator/denominator pair must go through make_rat.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Parses "a" or "a/b" (optional sign); throws UsageError on malformed text or b == 0.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& value);

// Integer power, negative exponents allowed for nonzero bases.
Rat pow(const Rat& base, int exponent);

bool is_integer(const Rat& value);

} // namespace rszeta
