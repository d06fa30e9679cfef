#pragma once

#include "arborflow/bigint.hpp"
#include "arborflow/field.hpp"

#include <compare>
#include <optional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arborflow {

/// Name <-> id table for polynomial variables. Ids are dense and assigned in
/// interning order, so a fixed registration sequence gives a fixed id layout.
class VarRegistry {
public:
    /// Returns the id of name, creating it on first use.
    int intern(const std::string& name);
    /// Id lookup; throws std::invalid_argument if the name was never interned.
    int id(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;
    const std::string& name(int id) const;
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

/// Power product with integer (possibly negative) exponents, kept sorted by
/// variable id with all zero exponents dropped.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int id, int exp = 1);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    long total_degree() const;
    int exponent(int id) const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded order: total degree first, then lexicographic on the factor
    /// lists. Any fixed total order would do; this one keeps term lists and
    /// serializations canonical.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<int, int>> factors_; // (var id, exponent != 0)
};

/// Sparse multivariate Laurent polynomial with BigInt coefficients over a
/// VarRegistry. Terms are kept sorted with nonzero coefficients, so equality
/// is structural. All binary operations require the same registry.
class Poly {
public:
    Poly() : reg_(nullptr) {} // usable only as a placeholder
    static Poly zero(const VarRegistry& reg);
    static Poly constant(const VarRegistry& reg, BigInt c);
    static Poly variable(const VarRegistry& reg, int id, int exp = 1);

    const VarRegistry* registry() const { return reg_; }
    const std::vector<std::pair<Monomial, BigInt>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value of a constant polynomial; throws otherwise.
    BigInt constant_value() const;
    long term_count() const { return static_cast<long>(terms_.size()); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly&, const Poly&);

    /// Substitutes an integer constant for one variable. For negative
    /// exponents the value must be 1 or -1 (the only integers with integer
    /// reciprocals); otherwise throws std::domain_error.
    Poly substitute(int id, const BigInt& value) const;

    /// Evaluates over the prime field; point[id] supplies every variable.
    /// Throws std::domain_error when a variable with a negative exponent is
    /// assigned zero.
    Fp eval(std::span<const Fp> point) const;

    /// Canonical text form, e.g. "-3*q^2 + x[1,2]^-1*y[2,3] + 5"; terms in
    /// descending monomial order.
    std::string to_string() const;

private:
    const VarRegistry* reg_;
    std::vector<std::pair<Monomial, BigInt>> terms_; // ascending by monomial

    void require_same_registry(const Poly& o) const;
    static Poly make(const VarRegistry& reg, std::map<Monomial, BigInt> acc);
};

/// q-deformed sum a (+) b = a + b + (q-1)ab; the registry must contain "q".
/// Associative and commutative with neutral element 0, and
/// 1 + (q-1)(a (+) b) = (1 + (q-1)a)(1 + (q-1)b).
Poly qsum(const Poly& a, const Poly& b);

/// Field version of the q-deformed sum for a given q.
Fp qsum(Fp a, Fp b, Fp q);

/// The q-integer [t] = 1 + q + ... + q^{t-1} as a polynomial in "q".
Poly q_integer(const VarRegistry& reg, long t);

} // namespace arborflow
