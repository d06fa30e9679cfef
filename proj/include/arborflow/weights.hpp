#pragma once

#include "arborflow/poly.hpp"
#include "arborflow/tree.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace arborflow {

/// Constraint profile of a weight assignment. In every mode the edge
/// variables x are reciprocal: x(e-) = x(e+)^{-1}.
enum class WeightMode {
    Free,  // x, y, z independent
    Indep, // y(g) = alpha(edge of g) * (z(g) - x(g))
    CK,    // Indep specialized to x = 1 (division-free)
};

/// Per-tree tables of arc/edge weights over a scalar S (Poly for symbolic
/// work, Fp for randomized identity checks, BigInt for constant points).
/// Tables are indexed by Tree::arc_index / Tree::edge_index.
template <class S>
struct WeightAssignment {
    WeightMode mode = WeightMode::Free;
    int n = 0;             // vertex count of the tree it was built for
    std::vector<S> x;      // arc-indexed; x[e-] is the inverse of x[e+]
    std::vector<S> y;      // arc-indexed
    std::vector<S> z;      // arc-indexed
    std::vector<S> alpha;  // edge-indexed
    std::vector<S> beta;   // arc-indexed
    S q;
    S zero; // ring constants of S, usable as fold seeds
    S one;

    const S& x_of(const Tree& t, Arc a) const { return x[t.arc_index(a)]; }
    const S& y_of(const Tree& t, Arc a) const { return y[t.arc_index(a)]; }
    const S& z_of(const Tree& t, Arc a) const { return z[t.arc_index(a)]; }
    const S& alpha_of(const Tree& t, Edge e) const { return alpha[t.edge_index(e)]; }
    const S& beta_of(const Tree& t, Arc a) const { return beta[t.arc_index(a)]; }
};

/// Deterministic variable layout for a tree: for each edge {i,j} (sorted) the
/// names x[i,j] and alpha[i,j], then per arc y[i,j], z[i,j], beta[i,j] (both
/// orientations), then q. Returns the assignment with tables filled per mode;
/// x[j,i] is realized as the Laurent monomial x[i,j]^{-1}.
WeightAssignment<Poly> symbolic_weights(const Tree& t, VarRegistry& reg, WeightMode mode);

/// Random field tables: x(e+) nonzero with x(e-) its inverse, y/z/alpha/beta/q
/// uniform; in Indep/CK modes y is derived from alpha, z, x.
WeightAssignment<Fp> random_weights(const Tree& t, std::mt19937_64& rng, WeightMode mode);

/// Every table entry (and q) equal to the given ring unit.
template <class S>
WeightAssignment<S> constant_weights(const Tree& t, const S& one_value, const S& zero_value) {
    WeightAssignment<S> w;
    w.n = t.vertex_count();
    int arcs = 2 * t.edge_count();
    w.x.assign(arcs, one_value);
    w.y.assign(arcs, one_value);
    w.z.assign(arcs, one_value);
    w.alpha.assign(t.edge_count(), one_value);
    w.beta.assign(arcs, one_value);
    w.q = one_value;
    w.zero = zero_value;
    w.one = one_value;
    return w;
}

inline WeightAssignment<BigInt> all_ones_weights(const Tree& t) {
    return constant_weights<BigInt>(t, BigInt(1), BigInt(0));
}

/// w(path; mark) = prod_{k < mark} x(step k) * y(marked step)
///               * prod_{k > mark} z(step k).
template <class S>
S marked_path_weight(const Tree& t, const MarkedPath& mp, const WeightAssignment<S>& w) {
    if (mp.mark < 0 || mp.mark >= mp.path.length())
        throw std::invalid_argument("marked_path_weight: mark out of range");
    S out = w.one;
    for (int k = 0; k < mp.path.length(); ++k) {
        Arc a = mp.path.step(k);
        if (k < mp.mark)
            out = out * w.x_of(t, a);
        else if (k == mp.mark)
            out = out * w.y_of(t, a);
        else
            out = out * w.z_of(t, a);
    }
    return out;
}

/// Deformed distance d'(i,j): the sum of marked_path_weight over all d(i,j)
/// markings of the path i -> j; zero for i = j.
template <class S>
S deformed_distance(const Tree& t, int i, int j, const WeightAssignment<S>& w) {
    if (i == j) return w.zero;
    TreePath p = t.path_between(i, j);
    S total = w.zero;
    for (int mark = 0; mark < p.length(); ++mark)
        total = total + marked_path_weight(t, MarkedPath{p, mark}, w);
    return total;
}

/// q-deformed distance: the qsum-fold of beta over the steps of i -> j.
template <class S>
S qsum_distance(const Tree& t, int i, int j, const WeightAssignment<S>& w);

template <>
inline Poly qsum_distance<Poly>(const Tree& t, int i, int j, const WeightAssignment<Poly>& w) {
    if (i == j) return w.zero;
    TreePath p = t.path_between(i, j);
    Poly acc = w.beta_of(t, p.step(0));
    for (int k = 1; k < p.length(); ++k) acc = qsum(acc, w.beta_of(t, p.step(k)));
    return acc;
}

template <>
inline Fp qsum_distance<Fp>(const Tree& t, int i, int j, const WeightAssignment<Fp>& w) {
    if (i == j) return w.zero;
    TreePath p = t.path_between(i, j);
    Fp acc = w.beta_of(t, p.step(0));
    for (int k = 1; k < p.length(); ++k) acc = qsum(acc, w.beta_of(t, p.step(k)), w.q);
    return acc;
}

} // namespace arborflow
