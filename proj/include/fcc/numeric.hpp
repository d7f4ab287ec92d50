#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace fcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(m, k) with the combinatorial convention
/// C(m, k) = 0 whenever k < 0, m < 0 or k > m.
BigInt binom(long long m, long long k);

/// Binomial coefficient read as a polynomial in the upper argument:
/// m(m-1)...(m-k+1) / k!. Agrees with binom for m >= 0 and extends to
/// negative m (poly_binom(-1, 2) = 1); 0 for k < 0.
BigInt poly_binom(long long m, long long k);

/// k! for k >= 0.
BigInt factorial(long long k);

/// n-th Catalan number, n >= 0.
BigInt catalan(int n);

/// Number of d-ary trees with n nodes: 1 for n = 0, C(d*n, n-1) / n otherwise.
/// Requires d >= 2, n >= 0.
BigInt fuss_catalan(int d, int n);

/// (x / m) * C(m, k) continued across the m = 0 pole:
///   k >= 1          ->  x * C(m-1, k-1) / k
///   k == 0, m > 0   ->  x / m
///   otherwise       ->  0
/// The k = 0 = m value is pinned to 0; together with the C(m, k) convention
/// above this makes every counting formula below pole-free.
Rational scaled_binom(const BigInt& x, long long m, long long k);

/// Work cap used by enumeration guards: FCC_ORACLE_CAP from the environment
/// when set to a positive integer, otherwise 10^7.
std::uint64_t default_work_cap();

} // namespace fcc
