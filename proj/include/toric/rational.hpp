#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toric {

// Exact rational. mpq_class keeps the value canonical (gcd 1, positive
// denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q". Throws Error(FileFormat) on anything else,
// including a zero denominator.
Rat parse_rat(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);

Rat make_rat(long num, long den = 1);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat factorial(unsigned n);
Int ceil(const Rat& r);
Int floor(const Rat& r);

}  // namespace toric
