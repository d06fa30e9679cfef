#include "arborflow/bigint.hpp"
#include "arborflow/field.hpp"
#include "arborflow/matrix.hpp"
#include "arborflow/poly.hpp"

#include "doctest.h"

#include <array>
#include <random>

using namespace arborflow;

TEST_SUITE("exactalg") {

TEST_CASE("bigint helpers") {
    CHECK(divide_exact(BigInt(84), BigInt(-7)) == BigInt(-12));
    CHECK(divide_exact(BigInt(0), BigInt(3)) == BigInt(0));
    CHECK_THROWS_AS(divide_exact(BigInt(7), BigInt(2)), std::domain_error);
    CHECK_THROWS_AS(divide_exact(BigInt(1), BigInt(0)), std::domain_error);
    CHECK(sign_pow(0) == BigInt(1));
    CHECK(sign_pow(7) == BigInt(-1));
    CHECK(pow2(0) == BigInt(1));
    CHECK(pow2(64) == BigInt("18446744073709551616"));
}

TEST_CASE("primality test agrees with known primes and pseudoprimes") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(2305843009213693951ULL)); // 2^61 - 1
    CHECK(is_prime_u64(18446744073709551557ULL)); // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));        // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime_u64(2305843009213693953ULL)); // 2^61 + 1 = 3 * 768614...
}

TEST_CASE("field arithmetic at the default modulus") {
    REQUIRE(Fp::modulus() == Fp::kDefaultModulus);
    Fp a(123456789), b(987654321);
    CHECK((a + b).value() == 1111111110ULL);
    CHECK((a - b) == -(b - a));
    CHECK(a * b == b * a);
    CHECK(Fp(Fp::kDefaultModulus) == Fp(0));
    CHECK(Fp(-1LL) == Fp(Fp::kDefaultModulus - 1));
    BigInt big("123456789123456789123456789");
    CHECK(Fp(big) == Fp(big % BigInt(2305843009213693951UL)));
    // Fermat inverse.
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        Fp x = Fp::random_nonzero(rng);
        CHECK(x * x.inverse() == Fp(1));
    }
    CHECK_THROWS_AS(Fp(0).inverse(), std::domain_error);
    CHECK(Fp(2).pow(61) == Fp(1)); // 2^61 = p + 1
}

TEST_CASE("modulus replacement validates and is reversible") {
    CHECK_THROWS_AS(Fp::set_modulus(91), std::invalid_argument);  // 7 * 13
    CHECK_THROWS_AS(Fp::set_modulus(2), std::invalid_argument);   // even
    CHECK_THROWS_AS(Fp::set_modulus(1ULL << 62), std::invalid_argument);
    Fp::set_modulus(1000003);
    CHECK(Fp(1000004) == Fp(1));
    Fp::set_modulus(Fp::kDefaultModulus);
    CHECK(Fp::modulus() == Fp::kDefaultModulus);
}

TEST_CASE("variable registry interns densely and deterministically") {
    VarRegistry reg;
    CHECK(reg.intern("a") == 0);
    CHECK(reg.intern("b") == 1);
    CHECK(reg.intern("a") == 0);
    CHECK(reg.id("b") == 1);
    CHECK(reg.name(1) == "b");
    CHECK(reg.find("c") == std::nullopt);
    CHECK_THROWS_AS(reg.id("c"), std::invalid_argument);
    CHECK(reg.size() == 2);
}

TEST_CASE("polynomial arithmetic and canonical form") {
    VarRegistry reg;
    int xi = reg.intern("x"), yi = reg.intern("y");
    Poly x = Poly::variable(reg, xi), y = Poly::variable(reg, yi);
    Poly two = Poly::constant(reg, 2);

    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).to_string() == "y + x"); // graded order, later variables first
    CHECK((x * x * two - y + Poly::constant(reg, 5)).to_string() == "2*x^2 - y + 5");
    CHECK((x - x).is_zero());
    CHECK(Poly::zero(reg).to_string() == "0");
    CHECK((x.pow(3)).term_count() == 1);
    CHECK(((x + y).pow(2)) == x * x + two * x * y + y * y);
    CHECK(Poly::constant(reg, 7).constant_value() == BigInt(7));
    CHECK_THROWS_AS(x.constant_value(), std::domain_error);
}

TEST_CASE("laurent exponents multiply and cancel") {
    VarRegistry reg;
    int xi = reg.intern("x");
    Poly x = Poly::variable(reg, xi), xinv = Poly::variable(reg, xi, -1);
    CHECK(x * xinv == Poly::constant(reg, 1));
    CHECK((xinv * xinv).to_string() == "x^-2");
    // Substitution of +-1 is allowed for negative exponents, other values not.
    CHECK(xinv.substitute(xi, BigInt(-1)) == Poly::constant(reg, -1));
    CHECK_THROWS_AS(xinv.substitute(xi, BigInt(2)), std::domain_error);
    Poly plain = x + Poly::constant(reg, 3);
    CHECK(plain.substitute(xi, BigInt(2)) == Poly::constant(reg, 5));
}

TEST_CASE("evaluation over the field matches substitution") {
    VarRegistry reg;
    int xi = reg.intern("x"), yi = reg.intern("y");
    Poly p = Poly::variable(reg, xi, -1) * Poly::variable(reg, yi) +
             Poly::variable(reg, yi, 2) - Poly::constant(reg, 4);
    std::array<Fp, 2> point{Fp(5), Fp(10)};
    // x^{-1} y + y^2 - 4 at (5, 10) = 2 + 100 - 4.
    CHECK(p.eval(point) == Fp(98));
    std::array<Fp, 2> zero_x{Fp(0), Fp(10)};
    CHECK_THROWS_AS(p.eval(zero_x), std::domain_error);
}

TEST_CASE("operations demand a shared registry") {
    VarRegistry r1, r2;
    Poly a = Poly::variable(r1, r1.intern("x"));
    Poly b = Poly::variable(r2, r2.intern("x"));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(Poly{} * a, std::invalid_argument); // placeholder operand
}

TEST_CASE("q-sum: fixtures and algebra") {
    VarRegistry reg;
    reg.intern("q");
    Poly q = Poly::variable(reg, reg.id("q"));
    Poly one = Poly::constant(reg, 1);

    CHECK(q_integer(reg, 0).is_zero());
    CHECK(q_integer(reg, 1) == one);
    CHECK(q_integer(reg, 3).to_string() == "q^2 + q + 1");
    // [1] (+) [1] = [2] and [1] (+) [2] = [3].
    CHECK(qsum(one, one) == q_integer(reg, 2));
    CHECK(qsum(one, q_integer(reg, 2)) == q_integer(reg, 3));
    CHECK(qsum(q_integer(reg, 2), q_integer(reg, 3)) == q_integer(reg, 5));

    int ai = reg.intern("a"), bi = reg.intern("b"), ci = reg.intern("c");
    Poly a = Poly::variable(reg, ai), b = Poly::variable(reg, bi), c = Poly::variable(reg, ci);
    CHECK(qsum(a, b) == qsum(b, a));
    CHECK(qsum(qsum(a, b), c) == qsum(a, qsum(b, c)));
    CHECK(qsum(a, Poly::zero(reg)) == a);
    // 1 + (q-1)(a (+) b) = (1 + (q-1)a)(1 + (q-1)b).
    Poly qm1 = q - one;
    CHECK(one + qm1 * qsum(a, b) == (one + qm1 * a) * (one + qm1 * b));
    // Field version at a random point agrees.
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
        Fp fa = Fp::random(rng), fb = Fp::random(rng), fq = Fp::random(rng);
        std::array<Fp, 4> pt{fq, fa, fb, Fp(0)}; // ids: q=0, a=1, b=2, c=3
        CHECK(qsum(a, b).eval(pt) == qsum(fa, fb, fq));
    }
}

namespace {
/// Independent oracle: Leibniz determinant by direct permutation sweep.
BigInt det_leibniz(const Matrix<BigInt>& m) {
    int n = m.rows();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    BigInt total(0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        BigInt prod = sign_pow(inv);
        for (int i = 0; i < n; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}
} // namespace

TEST_CASE("bareiss determinant: fixtures and oracle") {
    CHECK(det_bareiss_int(Matrix<BigInt>(0, 0)) == BigInt(1));
    Matrix<BigInt> one(1, 1);
    one(0, 0) = -7;
    CHECK(det_bareiss_int(one) == BigInt(-7));
    Matrix<BigInt> two(2, 2);
    two(0, 0) = 3; two(0, 1) = 5; two(1, 0) = 2; two(1, 1) = 4;
    CHECK(det_bareiss_int(two) == BigInt(2));
    // Pivot search must survive a zero in the corner.
    Matrix<BigInt> swapped(2, 2);
    swapped(0, 1) = 1; swapped(1, 0) = 1;
    CHECK(det_bareiss_int(swapped) == BigInt(-1));
    // Singular.
    Matrix<BigInt> sing(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sing(i, j) = i + j;
    CHECK(det_bareiss_int(sing) == BigInt(0));
    // Random matrices against the Leibniz oracle.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 1 + static_cast<int>(rng() % 5);
        Matrix<BigInt> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
        CHECK(det_bareiss_int(m) == det_leibniz(m));
    }
    CHECK_THROWS_AS(det_bareiss_int(Matrix<BigInt>(2, 3)), std::invalid_argument);
}

TEST_CASE("field determinant matches the exact one mod p") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> entry(-50, 50);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 1 + static_cast<int>(rng() % 6);
        Matrix<BigInt> m(n, n);
        Matrix<Fp> f(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m(i, j) = entry(rng);
                f(i, j) = Fp(BigInt(m(i, j)));
            }
        CHECK(det_gauss_field(f) == Fp(det_bareiss_int(m)));
    }
}

TEST_CASE("symbolic determinant: leibniz shape and numeric agreement") {
    VarRegistry reg;
    Poly a = Poly::variable(reg, reg.intern("a"));
    Poly b = Poly::variable(reg, reg.intern("b"));
    Poly c = Poly::variable(reg, reg.intern("c"));
    Poly d = Poly::variable(reg, reg.intern("d"));
    Matrix<Poly> m(2, 2);
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
    CHECK(det_expansion_poly(m) == a * d - b * c);

    // 3x3 of distinct variables: 6 Leibniz terms, coefficients +-1.
    Matrix<Poly> g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g(i, j) = Poly::variable(reg, reg.intern("g" + std::to_string(i) + std::to_string(j)));
    Poly det3 = det_expansion_poly(g);
    CHECK(det3.term_count() == 6);
    for (const auto& [mono, coeff] : det3.terms())
        CHECK((coeff == BigInt(1) || coeff == BigInt(-1)));

    // Numeric agreement with Bareiss after substituting integers.
    Matrix<Poly> p(4, 4, Poly::zero(reg));
    Matrix<BigInt> q(4, 4);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int v = entry(rng);
            q(i, j) = v;
            p(i, j) = Poly::constant(reg, v);
        }
    CHECK(det_expansion_poly(p) == Poly::constant(reg, det_bareiss_int(q)));

    CHECK_THROWS_AS(det_expansion_poly(Matrix<Poly>(9, 9, Poly::zero(reg))),
                    std::invalid_argument);
}

} // TEST_SUITE
