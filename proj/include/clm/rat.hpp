#pragma once

#include <gmpxx.h>

#include <string>

namespace clm {

// Exact rational scalar.  Arithmetic results and parse_rat are always
// canonical (reduced, positive denominator), so equality is plain value
// equality.  The raw two-argument mpq_class constructor does NOT reduce:
// build fractions by division or call canonicalize() on them.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" (arbitrary precision).  Throws
// std::invalid_argument on malformed text or a zero denominator.
Rat parse_rat(const std::string& s);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);

// Binomial coefficient with the convention C(n, r) = 0 whenever r < 0 or
// n < r.  Requires n >= 0.
Int binomial(long n, long r);

}  // namespace clm
