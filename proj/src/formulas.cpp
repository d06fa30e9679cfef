#include "arborflow/formulas.hpp"

#include "arborflow/matrix.hpp"

#include <stdexcept>

namespace arborflow {

BigInt graham_pollak_value(int n) {
    if (n < 1) throw std::invalid_argument("graham_pollak_value: n must be >= 1");
    if (n == 1) return BigInt(0);
    return sign_pow(n - 1) * BigInt(n - 1) * pow2(static_cast<unsigned long>(n - 2));
}

Poly q_gp_value(VarRegistry& reg, int n) {
    if (n < 1) throw std::invalid_argument("q_gp_value: n must be >= 1");
    int qid = reg.intern("q");
    if (n == 1) return Poly::zero(reg);
    Poly one_plus_q = Poly::constant(reg, 1) + Poly::variable(reg, qid);
    Poly out = Poly::constant(reg, sign_pow(n - 1) * BigInt(n - 1));
    return out * one_plus_q.pow(static_cast<unsigned>(n - 2));
}

Fp q_gp_value(int n, Fp q) {
    if (n < 1) throw std::invalid_argument("q_gp_value: n must be >= 1");
    if (n == 1) return Fp(0ULL);
    Fp out = (Fp(1ULL) + q).pow(static_cast<std::uint64_t>(n - 2)) * Fp(static_cast<std::uint64_t>(n - 1));
    return (n - 1) % 2 == 0 ? out : -out;
}

Poly qsum_rhs(const Tree& t, const WeightAssignment<Poly>& w) {
    const int n = t.vertex_count();
    Poly total = w.zero;
    for (const Edge& e : t.edges()) {
        Poly term = w.beta_of(t, e.plus()) * w.beta_of(t, e.minus());
        for (const Edge& f : t.edges()) {
            if (f == e) continue;
            term = term * qsum(w.beta_of(t, f.plus()), w.beta_of(t, f.minus()));
        }
        total = total + term;
    }
    return detail::negate_if_even_vertices(n, total, w.zero);
}

Fp qsum_rhs(const Tree& t, const WeightAssignment<Fp>& w) {
    const int n = t.vertex_count();
    Fp total = w.zero;
    for (const Edge& e : t.edges()) {
        Fp term = w.beta_of(t, e.plus()) * w.beta_of(t, e.minus());
        for (const Edge& f : t.edges()) {
            if (f == e) continue;
            term = term * qsum(w.beta_of(t, f.plus()), w.beta_of(t, f.minus()), w.q);
        }
        total = total + term;
    }
    return detail::negate_if_even_vertices(n, total, w.zero);
}

const char* identity_name(Identity id) {
    switch (id) {
        case Identity::GP: return "gp";
        case Identity::Q: return "q";
        case Identity::Emmanuel: return "emmanuel";
        case Identity::Indep: return "indep";
        case Identity::CK: return "ck";
        case Identity::QSum: return "qsum";
    }
    return "?";
}

Identity parse_identity(const std::string& name) {
    for (Identity id : {Identity::GP, Identity::Q, Identity::Emmanuel, Identity::Indep,
                        Identity::CK, Identity::QSum})
        if (name == identity_name(id)) return id;
    throw std::invalid_argument("unknown identity: " + name);
}

IdentityReport verify_identity(
    const Tree& t, Identity id,
    const std::function<Fp(const Tree&, const WeightAssignment<Fp>&)>& lhs,
    const std::function<Fp(const Tree&, const WeightAssignment<Fp>&)>& rhs, WeightMode mode,
    int trials, std::uint64_t seed) {
    IdentityReport report;
    report.id = id;
    report.n = t.vertex_count();
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        bool decided = false;
        for (int attempt = 0; attempt < 100 && !decided; ++attempt) {
            WeightAssignment<Fp> w = random_weights(t, rng, mode);
            try {
                Fp left = lhs(t, w);
                Fp right = rhs(t, w);
                decided = true;
                if (left == right) {
                    ++report.passes;
                } else {
                    report.failures.push_back(
                        "n=" + std::to_string(report.n) + " trial=" + std::to_string(trial) +
                        " seed=" + std::to_string(seed) + ": det=" + std::to_string(left.value()) +
                        " rhs=" + std::to_string(right.value()));
                }
            } catch (const std::domain_error&) {
                // degenerate point (a zero hit an inverse); resample
            }
        }
        if (!decided)
            report.failures.push_back("trial=" + std::to_string(trial) +
                                      ": no non-degenerate assignment in 100 attempts");
    }
    return report;
}

IdentityReport verify_identity(const Tree& t, Identity id, int trials, std::uint64_t seed) {
    using WF = const WeightAssignment<Fp>&;
    switch (id) {
        case Identity::GP:
            return verify_identity(
                t, id,
                [](const Tree& tr, WF) { return det_gauss_field(to_field(distance_matrix(tr))); },
                [](const Tree& tr, WF) { return Fp(graham_pollak_value(tr.vertex_count())); },
                WeightMode::Free, trials, seed);
        case Identity::Q:
            return verify_identity(
                t, id,
                [](const Tree& tr, WF w) {
                    const int n = tr.vertex_count();
                    Matrix<Fp> m(n, n, Fp(0ULL));
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                            if (i == j) continue;
                            Fp entry(0ULL), power(1ULL);
                            for (int k = 0; k < tr.distance(i, j); ++k) {
                                entry += power;
                                power *= w.q;
                            }
                            m(i - 1, j - 1) = entry;
                        }
                    return det_gauss_field(std::move(m));
                },
                [](const Tree& tr, WF w) { return q_gp_value(tr.vertex_count(), w.q); },
                WeightMode::Free, trials, seed);
        case Identity::Emmanuel:
            return verify_identity(
                t, id,
                [](const Tree& tr, WF w) {
                    return det_gauss_field(weighted_distance_matrix(tr, w));
                },
                [](const Tree& tr, WF w) { return emmanuel_rhs(tr, w); }, WeightMode::Free,
                trials, seed);
        case Identity::Indep:
            return verify_identity(
                t, id,
                [](const Tree& tr, WF w) { return det_gauss_field(indep_matrix(tr, w)); },
                [](const Tree& tr, WF w) { return indep_rhs(tr, w); }, WeightMode::Indep, trials,
                seed);
        case Identity::CK:
            return verify_identity(
                t, id,
                [](const Tree& tr, WF w) { return det_gauss_field(ck_matrix(tr, w)); },
                [](const Tree& tr, WF w) { return ck_rhs(tr, w); }, WeightMode::CK, trials, seed);
        case Identity::QSum:
            return verify_identity(
                t, id,
                [](const Tree& tr, WF w) { return det_gauss_field(qsum_matrix(tr, w)); },
                [](const Tree& tr, WF w) { return qsum_rhs(tr, w); }, WeightMode::Free, trials,
                seed);
    }
    throw std::invalid_argument("verify_identity: unknown identity");
}

} // namespace arborflow
