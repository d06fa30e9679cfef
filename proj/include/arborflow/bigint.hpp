#pragma once

#include <gmpxx.h>

#include <string>

namespace arborflow {

/// Arbitrary-precision signed integer. GMP's mpz_class supplies exact ring
/// arithmetic; everything above this alias is hand-rolled.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Exact quotient a / b; throws std::domain_error unless b divides a.
BigInt divide_exact(const BigInt& a, const BigInt& b);

/// (-1)^k as a BigInt.
inline BigInt sign_pow(long k) { return (k % 2 == 0) ? BigInt(1) : BigInt(-1); }

/// 2^k for k >= 0.
BigInt pow2(unsigned long k);

} // namespace arborflow
