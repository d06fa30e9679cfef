#pragma once

#include "arborflow/bigint.hpp"

#include <cstdint>
#include <random>

namespace arborflow {

/// Element of the prime field Z/p. The modulus is a process-wide setting,
/// defaulting to the Mersenne prime 2^61 - 1; it can be overridden once at
/// startup (CLI honors the ARBORFLOW_PRIME environment variable). Products
/// go through unsigned __int128, inverses through Fermat.
class Fp {
public:
    static constexpr std::uint64_t kDefaultModulus = 2305843009213693951ULL;

    static std::uint64_t modulus();
    /// Replaces the modulus; throws std::invalid_argument unless p is an odd
    /// prime below 2^62 (Miller-Rabin with fixed 64-bit-deterministic bases).
    static void set_modulus(std::uint64_t p);

    Fp() : v_(0) {}
    explicit Fp(std::uint64_t v) : v_(v % modulus()) {}
    explicit Fp(unsigned long long v) : Fp(static_cast<std::uint64_t>(v)) {}
    explicit Fp(long long v);
    explicit Fp(int v) : Fp(static_cast<long long>(v)) {}
    explicit Fp(const BigInt& v);

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    friend Fp operator+(Fp a, Fp b);
    friend Fp operator-(Fp a, Fp b);
    friend Fp operator*(Fp a, Fp b);
    /// Throws std::domain_error on division by zero.
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    Fp pow(std::uint64_t e) const;
    /// a^{p-2}; throws std::domain_error for zero.
    Fp inverse() const;

    /// Uniform element of {0, ..., p-1} resp. {1, ..., p-1}.
    static Fp random(std::mt19937_64& rng);
    static Fp random_nonzero(std::mt19937_64& rng);

    static Fp from_raw(std::uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }

private:
    std::uint64_t v_;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

} // namespace arborflow
