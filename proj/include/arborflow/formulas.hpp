#pragma once

#include "arborflow/matrices.hpp"
#include "arborflow/tree.hpp"
#include "arborflow/weights.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace arborflow {

/// det M(T) = (-1)^{n-1} (n-1) 2^{n-2}; 0 for n = 1, -1 for n = 2.
BigInt graham_pollak_value(int n);

/// q-analogue (-1)^{n-1} (n-1) (1+q)^{n-2} of the determinant of the
/// q-distance matrix.
Poly q_gp_value(VarRegistry& reg, int n);

/// Field evaluation of the q-analogue at a given q.
Fp q_gp_value(int n, Fp q);

/// Generic ring helpers shared by the closed forms.
namespace detail {
template <class S>
S negate_if_even_vertices(int n, const S& v, const S& zero) {
    // (-1)^{n-1} * v
    return (n - 1) % 2 == 0 ? v : zero - v;
}
} // namespace detail

/// Determinant of the deformed distance matrix under the reciprocal
/// convention x(e-) = x(e+)^{-1}:
///   (-1)^{n-1} sum_{e={a,b}} y(a,b) y(b,a)
///       prod_{(i,j) in U(e)} ( y(i,j) z(j,i) + y(j,i) x(i,j) )
/// with U(e) the arcs pointing toward e (tail the far endpoint).
template <class S>
S emmanuel_rhs(const Tree& t, const WeightAssignment<S>& w) {
    const int n = t.vertex_count();
    S total = w.zero;
    for (const Edge& e : t.edges()) {
        S term = w.y_of(t, e.plus()) * w.y_of(t, e.minus());
        for (const Arc& g : t.arcs_toward_edge(e))
            term = term * (w.y_of(t, g) * w.z_of(t, g.reversed()) +
                           w.y_of(t, g.reversed()) * w.x_of(t, g));
        total = total + term;
    }
    return detail::negate_if_even_vertices(n, total, w.zero);
}

/// Specialization y = alpha (z - x): the sum no longer depends on the arc
/// directions, only on the edge weight tuples:
///   (-1)^{n-1} sum_e alpha_e^2 (z(e+) - x(e+)) (z(e-) - x(e-))
///       prod_{f != e} alpha_f (z(f+) z(f-) - 1).
template <class S>
S indep_rhs(const Tree& t, const WeightAssignment<S>& w) {
    const int n = t.vertex_count();
    S total = w.zero;
    for (const Edge& e : t.edges()) {
        S term = w.alpha_of(t, e) * w.alpha_of(t, e) *
                 (w.z_of(t, e.plus()) - w.x_of(t, e.plus())) *
                 (w.z_of(t, e.minus()) - w.x_of(t, e.minus()));
        for (const Edge& f : t.edges()) {
            if (f == e) continue;
            term = term * w.alpha_of(t, f) *
                   (w.z_of(t, f.plus()) * w.z_of(t, f.minus()) - w.one);
        }
        total = total + term;
    }
    return detail::negate_if_even_vertices(n, total, w.zero);
}

/// Division-free form at x = 1:
///   (-1)^{n-1} sum_e alpha_e^2 (z(e+) - 1)(z(e-) - 1)
///       prod_{f != e} alpha_f (z(f+) z(f-) - 1).
template <class S>
S ck_rhs(const Tree& t, const WeightAssignment<S>& w) {
    const int n = t.vertex_count();
    S total = w.zero;
    for (const Edge& e : t.edges()) {
        S term = w.alpha_of(t, e) * w.alpha_of(t, e) * (w.z_of(t, e.plus()) - w.one) *
                 (w.z_of(t, e.minus()) - w.one);
        for (const Edge& f : t.edges()) {
            if (f == e) continue;
            term = term * w.alpha_of(t, f) *
                   (w.z_of(t, f.plus()) * w.z_of(t, f.minus()) - w.one);
        }
        total = total + term;
    }
    return detail::negate_if_even_vertices(n, total, w.zero);
}

/// q-deformed-sum form:
///   (-1)^{n-1} sum_e beta(e+) beta(e-) prod_{f != e} (beta(f+) (+) beta(f-)).
Poly qsum_rhs(const Tree& t, const WeightAssignment<Poly>& w);
Fp qsum_rhs(const Tree& t, const WeightAssignment<Fp>& w);

/// Named determinant identities checkable at random field points.
enum class Identity { GP, Q, Emmanuel, Indep, CK, QSum };

const char* identity_name(Identity id);
/// Parses "gp", "q", "emmanuel", "indep", "ck", "qsum"; throws on others.
Identity parse_identity(const std::string& name);

struct IdentityReport {
    Identity id = Identity::GP;
    int n = 0;
    int trials = 0;
    int passes = 0;
    std::vector<std::string> failures; // witnesses: seed, entry values

    bool ok() const { return passes == trials && trials > 0; }
};

/// Schwartz-Zippel style check of lhs == rhs at `trials` random weight
/// assignments (trial k uses seed + k). A trial that hits a degenerate
/// evaluation is resampled, up to 100 attempts.
IdentityReport verify_identity(
    const Tree& t, Identity id,
    const std::function<Fp(const Tree&, const WeightAssignment<Fp>&)>& lhs,
    const std::function<Fp(const Tree&, const WeightAssignment<Fp>&)>& rhs, WeightMode mode,
    int trials, std::uint64_t seed);

/// The named identity with its standard lhs (a determinant) and rhs (the
/// matching closed form).
IdentityReport verify_identity(const Tree& t, Identity id, int trials, std::uint64_t seed);

} // namespace arborflow
