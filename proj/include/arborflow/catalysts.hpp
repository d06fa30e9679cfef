#pragma once

#include "arborflow/bigint.hpp"
#include "arborflow/tree.hpp"
#include "arborflow/weights.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace arborflow {

/// Pair (sigma, f): sigma a derangement of 1..n and f(i) a step of the path
/// i -> sigma(i). Index 0 of both arrays is unused.
struct Catalyst {
    std::vector<int> sigma;
    std::vector<Arc> f;

    friend bool operator==(const Catalyst&, const Catalyst&) = default;
};

/// sign(sigma) = (-1)^{n - #cycles}.
int catalyst_sign(const Catalyst& k);

/// Checks the defining conditions (derangement; f(i) on the i -> sigma(i)
/// path).
bool is_valid_catalyst(const Tree& t, const Catalyst& k);

/// The multiset image of f: n arcs, sorted.
std::vector<Arc> arrowflow_of(const Catalyst& k);

enum class FlowClass {
    Unital,           // every edge covered; doubled edge carries opposite arcs
    ZeroSumConnected, // every edge covered; doubled edge carries equal arcs
    Disconnected,     // some edge carries no arc
};

const char* to_string(FlowClass c);

/// Classified arrowflow. Exactly one of the witness fields is populated per
/// class: marked_edge/marked_arrows for Unital, repeated_arc for
/// ZeroSumConnected, uncovered_edge (lexicographically smallest) for
/// Disconnected.
struct Arrowflow {
    std::vector<Arc> arcs; // sorted multiset of size n
    FlowClass cls = FlowClass::Disconnected;
    std::optional<Edge> marked_edge;
    std::optional<std::pair<Arc, Arc>> marked_arrows;
    std::optional<Arc> repeated_arc;
    std::optional<Edge> uncovered_edge;
};

/// Classifies a multiset of n arcs supported on tree edges; throws
/// std::invalid_argument if the multiset size is not n or an arc is not
/// supported on an edge.
Arrowflow classify_arrowflow(const Tree& t, std::vector<Arc> arcs);

/// All unital arrowflows of t: a marked edge (both its arcs) plus one
/// orientation of every other edge; (n-1) * 2^{n-2} of them, enumerated by
/// marked edge then by orientation counter.
std::vector<Arrowflow> unital_arrowflows(const Tree& t);

/// Derangements of 1..n in lexicographic one-line order.
std::vector<std::vector<int>> derangements(int n);

/// Catalysts of one fixed derangement (1-based one-line vector), f-choices
/// iterated as a mixed-radix counter over path steps (rightmost digit
/// fastest).
void for_each_catalyst_of_sigma(const Tree& t, const std::vector<int>& sigma,
                                const std::function<void(const Catalyst&)>& fn);

/// Enumerates every catalyst: derangements in lexicographic one-line order,
/// then the f-counter. Guarded to n <= 7.
void for_each_catalyst(const Tree& t, const std::function<void(const Catalyst&)>& fn);

/// Number of catalysts = sum over derangements of prod_i d(i, sigma(i)).
std::uint64_t count_catalysts(const Tree& t);

/// Full partition of the catalysts by arrowflow key (the sorted arc
/// multiset); map order makes iteration deterministic. Guarded to n <= 6.
std::map<std::vector<Arc>, std::vector<Catalyst>> arrowflow_partition(const Tree& t);

/// Sum of catalyst_sign over a class.
BigInt class_signed_sum(const std::vector<Catalyst>& cls);

/// The sign-reversing involution on a zero-sum class: for a disconnected
/// arrowflow, precompose sigma and f with the transposition of the
/// lexicographically smallest uncovered edge; for a connected zero-sum
/// arrowflow, with the transposition of the two f-preimages of the repeated
/// arc. Throws std::invalid_argument on a unital class.
Catalyst class_involution(const Tree& t, const Catalyst& k, const Arrowflow& af);

/// Convenience overload that classifies first.
Catalyst class_involution(const Tree& t, const Catalyst& k);

/// w(kappa) = prod_i w(P(i, sigma(i)); f(i)) -- the product of the marked
/// path weights of the n marked paths of the catalyst.
template <class S>
S catalyst_weight(const Tree& t, const Catalyst& k, const WeightAssignment<S>& w) {
    S out = w.one;
    const int n = t.vertex_count();
    for (int i = 1; i <= n; ++i) {
        TreePath p = t.path_between(i, k.sigma[i]);
        int mark = -1;
        for (int s = 0; s < p.length(); ++s)
            if (p.step(s) == k.f[i]) mark = s;
        if (mark < 0) throw std::invalid_argument("catalyst_weight: f(i) not on its path");
        out = out * marked_path_weight(t, MarkedPath{p, mark}, w);
    }
    return out;
}

} // namespace arborflow
