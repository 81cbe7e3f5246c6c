#pragma once

#include <gmpxx.h>

namespace fardiff {

// Counts and sequence terms overflow 64 bits quickly (R(n) does so near
// n ~ 90 already for the Fibonacci family), so everything is exact
// arbitrary-precision from the start. Rationals carry exact moment
// accumulation; conversion to double happens only at reporting boundaries.
using BigInt = mpz_class;
using Rational = mpq_class;

inline double to_double(const BigInt& v) { return v.get_d(); }
inline double to_double(const Rational& v) { return v.get_d(); }

}  // namespace fardiff
