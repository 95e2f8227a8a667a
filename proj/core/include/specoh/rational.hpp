#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace specoh {

/// Exact rational scalar, always kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace specoh
