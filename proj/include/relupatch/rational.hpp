#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace relupatch {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator); every helper below preserves that form.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

Rat rat(long num, long den = 1);

// Exact value of the double (every finite double is a dyadic rational).
Rat rat_from_double(double d);

// Accepts "p/q" (decimal integers), plain integers, and decimal strings
// with optional exponent ("0.25", "-3", "1e-2"). Decimal strings are read
// exactly in base ten, not via a binary float.
Rat rat_parse(const std::string& text);

// Lowest-terms "p/q" form, e.g. "13/128", "-3/1", "0/1".
std::string rat_str(const Rat& q);

double rat_to_double(const Rat& q);

Rat rat_abs(const Rat& q);

// True iff the denominator is a power of two (value exactly representable
// in binary floating point with enough significand bits).
bool rat_is_dyadic(const Rat& q);

// Round to `bits` significand bits (implicit leading bit included),
// round-to-nearest ties-to-even, exponent unbounded. Non-dyadic inputs
// are first rounded to 53 bits (the nearest binary double), then to `bits`.
Rat round_significand(const Rat& q, int bits);

// max_j |v_j|; zero for an empty vector.
Rat linf_norm(const RatVec& v);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec mat_vec_mul(const RatMat& m, const RatVec& x);

} // namespace relupatch
