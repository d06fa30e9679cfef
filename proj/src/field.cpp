#include "arborflow/field.hpp"

#include <stdexcept>

namespace arborflow {

namespace {

std::uint64_t& modulus_slot() {
    static std::uint64_t p = Fp::kDefaultModulus;
    return p;
}

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(u128(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // These bases decide primality for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t Fp::modulus() { return modulus_slot(); }

void Fp::set_modulus(std::uint64_t p) {
    if (p < 3 || p >= (1ULL << 62) || !is_prime_u64(p))
        throw std::invalid_argument("Fp: modulus must be an odd prime below 2^62");
    modulus_slot() = p;
}

Fp::Fp(long long v) {
    long long m = static_cast<long long>(modulus());
    long long r = v % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
}

Fp::Fp(const BigInt& v) {
    BigInt p(static_cast<unsigned long>(modulus()));
    BigInt r = v % p;
    // mpz % keeps the sign of the dividend; normalize into [0, p).
    if (r < 0) r += p;
    v_ = r.get_ui();
}

Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= Fp::modulus()) s -= Fp::modulus();
    return Fp::from_raw(s);
}

Fp operator-(Fp a, Fp b) {
    std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + Fp::modulus() - b.v_;
    return Fp::from_raw(s);
}

Fp operator*(Fp a, Fp b) { return Fp::from_raw(mulmod(a.v_, b.v_, Fp::modulus())); }

Fp Fp::pow(std::uint64_t e) const { return from_raw(powmod(v_, e, modulus())); }

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(modulus() - 2);
}

Fp Fp::random(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, modulus() - 1);
    return from_raw(dist(rng));
}

Fp Fp::random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, modulus() - 1);
    return from_raw(dist(rng));
}

} // namespace arborflow
