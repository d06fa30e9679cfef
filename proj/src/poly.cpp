#include "arborflow/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arborflow {

int VarRegistry::intern(const std::string& name) {
    auto [it, fresh] = ids_.try_emplace(name, static_cast<int>(names_.size()));
    if (fresh) names_.push_back(name);
    return it->second;
}

int VarRegistry::id(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw std::invalid_argument("VarRegistry: unknown variable " + name);
    return it->second;
}

std::optional<int> VarRegistry::find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& VarRegistry::name(int id) const {
    if (id < 0 || id >= size()) throw std::invalid_argument("VarRegistry: id out of range");
    return names_[id];
}

Monomial Monomial::var(int id, int exp) {
    Monomial m;
    if (exp != 0) m.factors_.emplace_back(id, exp);
    return m;
}

long Monomial::total_degree() const {
    long d = 0;
    for (auto& [id, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(int id) const {
    for (auto& [v, e] : factors_)
        if (v == id) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.factors_.emplace_back(a->first, e);
            ++a, ++b;
        }
    }
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out = *this;
    for (auto& [id, e] : out.factors_) e = -e;
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    return a.factors_ <=> b.factors_;
}

Poly Poly::zero(const VarRegistry& reg) {
    Poly p;
    p.reg_ = &reg;
    return p;
}

Poly Poly::constant(const VarRegistry& reg, BigInt c) {
    Poly p = zero(reg);
    if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
    return p;
}

Poly Poly::variable(const VarRegistry& reg, int id, int exp) {
    if (id < 0 || id >= reg.size())
        throw std::invalid_argument("Poly: variable id not in registry");
    Poly p = zero(reg);
    p.terms_.emplace_back(Monomial::var(id, exp), BigInt(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

BigInt Poly::constant_value() const {
    if (terms_.empty()) return BigInt(0);
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms_[0].second;
}

void Poly::require_same_registry(const Poly& o) const {
    if (reg_ == nullptr || o.reg_ == nullptr)
        throw std::invalid_argument("Poly: uninitialized operand");
    if (reg_ != o.reg_)
        throw std::invalid_argument("Poly: registry mismatch");
}

Poly Poly::make(const VarRegistry& reg, std::map<Monomial, BigInt> acc) {
    Poly p = zero(reg);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_registry(o);
    Poly out = zero(*reg_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.terms_.push_back(*b++);
        } else {
            BigInt c = a->second + b->second;
            if (c != 0) out.terms_.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_registry(o);
    std::map<Monomial, BigInt> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            acc[ma * mb] += ca * cb;
    return make(*reg_, std::move(acc));
}

Poly Poly::pow(unsigned e) const {
    if (reg_ == nullptr) throw std::invalid_argument("Poly: uninitialized operand");
    Poly out = constant(*reg_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1) out *= base;
        if (e >>= 1) base *= base;
    }
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    a.require_same_registry(b);
    return a.terms_ == b.terms_;
}

Poly Poly::substitute(int id, const BigInt& value) const {
    if (reg_ == nullptr) throw std::invalid_argument("Poly: uninitialized operand");
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(id);
        BigInt scale(1);
        if (e < 0) {
            if (value != 1 && value != -1)
                throw std::domain_error("Poly: negative exponent needs a unit value");
            scale = (value == -1 && (e % 2 != 0)) ? BigInt(-1) : BigInt(1);
        } else if (e > 0) {
            mpz_pow_ui(scale.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e));
        }
        Monomial rest = m * Monomial::var(id, -e);
        acc[rest] += c * scale;
    }
    return make(*reg_, std::move(acc));
}

Fp Poly::eval(std::span<const Fp> point) const {
    if (reg_ == nullptr) throw std::invalid_argument("Poly: uninitialized operand");
    if (static_cast<int>(point.size()) < reg_->size())
        throw std::invalid_argument("Poly: evaluation point too short");
    Fp total(0ULL);
    for (const auto& [m, c] : terms_) {
        Fp term(c);
        for (auto& [id, e] : m.factors()) {
            Fp base = point[id];
            if (e < 0) {
                if (base.is_zero())
                    throw std::domain_error("Poly: zero assigned to inverted variable " +
                                            reg_->name(id));
                term *= base.inverse().pow(static_cast<std::uint64_t>(-static_cast<long long>(e)));
            } else {
                term *= base.pow(static_cast<std::uint64_t>(e));
            }
        }
        total += term;
    }
    return total;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    // Descending monomial order reads naturally (leading term first).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool first = it == terms_.rbegin();
        BigInt abs_c = c < 0 ? BigInt(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        bool coeff_shown = abs_c != 1 || m.is_one();
        if (coeff_shown) out << abs_c.get_str();
        bool star = coeff_shown;
        for (auto& [id, e] : m.factors()) {
            if (star) out << "*";
            out << reg_->name(id);
            if (e != 1) out << "^" << e;
            star = true;
        }
    }
    return out.str();
}

Poly qsum(const Poly& a, const Poly& b) {
    if (a.registry() == nullptr) throw std::invalid_argument("qsum: uninitialized operand");
    auto qid = a.registry()->find("q");
    if (!qid) throw std::invalid_argument("qsum: registry has no variable q");
    Poly q = Poly::variable(*a.registry(), *qid);
    Poly one = Poly::constant(*a.registry(), 1);
    return a + b + (q - one) * a * b;
}

Fp qsum(Fp a, Fp b, Fp q) { return a + b + (q - Fp(1ULL)) * a * b; }

Poly q_integer(const VarRegistry& reg, long t) {
    if (t < 0) throw std::invalid_argument("q_integer: t must be >= 0");
    int qid = reg.id("q");
    Poly out = Poly::zero(reg);
    for (long k = 0; k < t; ++k) out += Poly::variable(reg, qid, static_cast<int>(k));
    return out;
}

} // namespace arborflow
