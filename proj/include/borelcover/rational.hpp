#pragma once

#include <gmpxx.h>

#include <string>

namespace borelcover {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(top, bottom) for top >= 0; zero when bottom is out of range.
Integer binomial(long top, long bottom);

/// Generalized binomial C(x, k) = x (x-1) ... (x-k+1) / k! for any integer x.
Integer binomial_signed(const Integer& x, long k);

/// Rational printed as `a/b`, or `a` when the denominator is one.
std::string to_string(const Rational& q);

}  // namespace borelcover
