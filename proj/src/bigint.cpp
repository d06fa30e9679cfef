#include "arborflow/bigint.hpp"

#include <stdexcept>

namespace arborflow {

BigInt divide_exact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("divide_exact: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("divide_exact: remainder is nonzero");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt pow2(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

} // namespace arborflow
