#pragma once

#include "arborflow/matrix.hpp"
#include "arborflow/tree.hpp"
#include "arborflow/weights.hpp"

namespace arborflow {

/// Plain distance matrix M(T)_{ij} = d(i, j); zero diagonal.
Matrix<BigInt> distance_matrix(const Tree& t);

/// q-analogue: entries are the q-integers [d(i, j)] = 1 + q + ... + q^{d-1}.
Matrix<Poly> q_distance_matrix(const Tree& t, VarRegistry& reg);

/// Entry-wise reduction mod p.
Matrix<Fp> to_field(const Matrix<BigInt>& m);

/// Deformed distance matrix M'(T)_{ij} = d'(i, j), the sum of marked-path
/// weights over all markings of the path i -> j (entries computed directly
/// from the definition, not via lifting).
template <class S>
Matrix<S> weighted_distance_matrix(const Tree& t, const WeightAssignment<S>& w) {
    const int n = t.vertex_count();
    Matrix<S> m(n, n, w.zero);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m(i - 1, j - 1) = deformed_distance(t, i, j, w);
    return m;
}

/// weighted_distance_matrix under the independence constraint y = alpha(z-x);
/// requires an Indep or CK mode assignment.
template <class S>
Matrix<S> indep_matrix(const Tree& t, const WeightAssignment<S>& w) {
    if (w.mode == WeightMode::Free)
        throw std::invalid_argument("indep_matrix: needs an Indep or CK assignment");
    return weighted_distance_matrix(t, w);
}

/// Division-free specialization x = 1; requires a CK mode assignment.
template <class S>
Matrix<S> ck_matrix(const Tree& t, const WeightAssignment<S>& w) {
    if (w.mode != WeightMode::CK)
        throw std::invalid_argument("ck_matrix: needs a CK assignment");
    return weighted_distance_matrix(t, w);
}

/// Matrix of q-deformed distances: entry (i, j) is the qsum-fold of beta over
/// the steps of the path i -> j.
template <class S>
Matrix<S> qsum_matrix(const Tree& t, const WeightAssignment<S>& w) {
    const int n = t.vertex_count();
    Matrix<S> m(n, n, w.zero);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m(i - 1, j - 1) = qsum_distance(t, i, j, w);
    return m;
}

} // namespace arborflow
