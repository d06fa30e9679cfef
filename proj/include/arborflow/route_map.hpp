#pragma once

#include "arborflow/catalysts.hpp"
#include "arborflow/tree.hpp"
#include "arborflow/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace arborflow {

/// The subdivided plane rooted tree T0 of a unital arrowflow: the marked edge
/// {a,b} is subdivided by a new root r = n+1, the arrowflow arcs on {a,b} are
/// replaced by (r,a) and (r,b), and every vertex orders its children with
/// ascending children (arc child -> parent in the orientation) first. The
/// mirror image reverses both the orientation and every child list.
struct PlaneRootedTree {
    int n = 0;    // base tree vertex count; T0 has vertices 1..n+1
    int root = 0; // = n + 1
    Edge marked;  // marked edge {a,b} of the base tree
    bool mirrored = false;
    std::vector<int> parent;                // size n+2; parent[root] = 0
    std::vector<int> depth;                 // size n+2; depth[root] = 0
    std::vector<std::vector<int>> children; // plane (ordered) child lists
    std::vector<Arc> orientation;           // A0, sorted; one arc per T0 edge

    int vertex_count() const { return n + 1; }
    int edge_count() const { return n; }
    bool has_arc(Arc a) const;
    bool is_edge(int u, int v) const { return parent[u] == v || parent[v] == u; }
    /// Plane order <_i: children in order, then the parent (root: children only).
    std::vector<int> ordered_neighbors(int i) const;
    /// Path u -> v through T0 (inclusive).
    TreePath path(int u, int v) const;
};

/// Step classes of arcs supported on T0 relative to the orientation A0.
enum class StepClass { UpForward, UpBackward, DownForward, DownBackward };

StepClass step_class(const PlaneRootedTree& y, Arc a);

/// Builds T0 from a unital arrowflow. The default plane order puts ascending
/// children before descending ones, label-ascending inside each block; an rng
/// shuffles inside the blocks instead (any such order is admissible).
PlaneRootedTree build_t0(const Tree& t, const Arrowflow& af, std::mt19937_64* shuffle = nullptr);

/// Mirror image: all arcs reversed, all child lists reversed.
PlaneRootedTree mirror(const PlaneRootedTree& y);

/// Node of a hemisphere or route map. South/north copies of: the vertex
/// nodes v(i), the direction nodes e(i,j) (one per arc supported on T0), and
/// the sector nodes s_i(u,v) (one per ordered pair of <_i-consecutive
/// neighbors of i).
struct NodeKey {
    std::uint8_t north = 0;
    std::uint8_t kind = 0; // 0 = v, 1 = e, 2 = s
    int a = 0, b = 0, c = 0;

    friend auto operator<=>(const NodeKey&, const NodeKey&) = default;

    static NodeKey v(int i, bool north = false) { return {north, 0, i, 0, 0}; }
    static NodeKey e(int i, int j, bool north = false) { return {north, 1, i, j, 0}; }
    static NodeKey s(int i, int u, int v, bool north = false) { return {north, 2, i, u, v}; }
};

std::string node_name(const NodeKey& k); // "v_4", "e_4_1", "s_4_8_7", "N_v_4", ...

/// Acyclic network with declared sources, sinks, and (for route maps) the
/// bridge arcs joining the south hemisphere to the north hemisphere. Node ids
/// are positions in the sorted key list, so identical inputs give identical
/// networks.
struct Network {
    int n = 0;
    int root = 0;
    std::vector<NodeKey> keys;
    std::map<NodeKey, int> ids;
    std::vector<std::vector<int>> succ; // sorted
    std::vector<std::vector<int>> pred; // sorted
    std::vector<int> sources;           // v(1..n) resp. v(1..n) south
    std::vector<int> sinks;             // e-nodes of A0 resp. v'(1..n)
    std::vector<Arc> bridge_arcs;       // A0, sorted (empty for hemispheres)
    std::vector<std::pair<int, int>> bridges; // aligned with bridge_arcs

    int node_id(const NodeKey& k) const;
    bool has_arc(int u, int v) const;
    std::size_t arc_count() const;
    bool is_acyclic() const;
};

/// Hemisphere H(Y) as a standalone network: sources v(1..n), sinks the
/// e-nodes of the orientation arcs.
Network build_hemisphere(const PlaneRootedTree& y);

/// Route map R(A): south hemisphere of T0, north hemisphere (the mirror
/// hemisphere relabeled through the reflection v'(i) = v(i),
/// e'(i,j) = e(j,i), s'_i(u,v) = s_i(v,u), with every arc reversed), and one
/// bridge e(a) -> e'(a) per orientation arc.
Network build_route_map(const PlaneRootedTree& y);

/// If there is exactly one directed path from -> to, returns it; nullopt if
/// there is none; throws std::logic_error if a branch point reveals two.
std::optional<std::vector<int>> unique_path(const Network& net, int from, int to);

/// Rewrites a marked path of T in T0 coordinates: an {a,b} crossing becomes
/// a, r, b and a mark on the crossing moves to the outgoing root arc
/// ((a,b) -> (r,b), (b,a) -> (r,a)).
MarkedPath to_subdivided(const PlaneRootedTree& y, const MarkedPath& mp);

/// Inverse of to_subdivided on arcs: (r,a) -> (b,a), (r,b) -> (a,b).
Arc project_arc(const PlaneRootedTree& y, Arc t0_arc);

/// Source -> sink path list; paths[i-1] starts at the i-th source.
struct PathFamily {
    std::vector<std::vector<int>> paths;

    friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

/// Lift of a T0 marked path whose marked arc lies in A0: the unique south
/// path v(source) -> e(mark), the bridge, and the unique north path
/// e'(mark) -> v'(target). Throws std::invalid_argument if the mark is not an
/// orientation arc.
std::vector<int> lift_marked_path(const Network& rm, const PlaneRootedTree& y,
                                  const MarkedPath& mp0);

/// Lifts all n marked paths (P(i, sigma(i)); f(i)) of a catalyst whose
/// arrowflow induced the route map; result ordered by source label.
PathFamily lift_catalyst(const Network& rm, const Tree& t, const PlaneRootedTree& y,
                         const Catalyst& k);

/// Reads the catalyst back off a full family: sigma from the endpoints, f
/// from the bridges (through project_arc).
Catalyst project_family(const Network& rm, const Tree& t, const PlaneRootedTree& y,
                        const PathFamily& fam);

/// Family predicates / statistics.
bool is_valid_family(const Network& net, const PathFamily& fam);
bool is_full_family(const Network& rm, const PathFamily& fam); // every bridge exactly once
bool is_non_intersecting(const PathFamily& fam);               // pairwise node-disjoint
std::vector<int> family_permutation(const Network& net, const PathFamily& fam); // 1-based
int family_sign(const Network& net, const PathFamily& fam);
std::vector<std::pair<int, int>> family_steps(const PathFamily& fam); // sorted multiset

/// Tail-swap involution: on an intersecting family, pick the lowest-index
/// path with a shared node, its earliest shared node x, and the lowest-index
/// other path through x, then swap the tails after x. Returns nullopt on a
/// non-intersecting family (fixed point).
std::optional<PathFamily> lgv_involution(const Network& net, const PathFamily& fam);

/// All full families of the route map, enumerated as (source -> bridge) x
/// (bridge -> sink) feasibility-respecting bijection pairs. Guarded to n <= 5.
std::vector<PathFamily> enumerate_full_families(const Network& rm);

/// Closed depth-first walk w_0 = r, ..., w_{2n} = r visiting every T0 edge
/// twice, children in plane order.
std::vector<int> dfs_walk_recursive(const PlaneRootedTree& y);
/// Same walk via the two-back successor rule: w_k = NEXT(w_{k-2}, w_{k-1})
/// where NEXT(i, j) is the <_j-successor of i if i is a child of j, else the
/// first neighbor of j.
std::vector<int> dfs_walk_iterative(const PlaneRootedTree& y);
/// Compact form "r13148474941r26252r" (single characters while n <= 9,
/// space-separated beyond).
std::string walk_to_string(const PlaneRootedTree& y, const std::vector<int>& walk);

/// Positions k in 1..2n-1 that are neither preceded by an upward-backward
/// step nor followed by a downward-backward step; exactly n of them, one per
/// non-root vertex.
std::vector<int> in_indices(const PlaneRootedTree& y, const std::vector<int>& walk);

/// Cyclic chunks of the walk between consecutive in-indices: each is a T0
/// path of step type (UB)^p F (DB)^q, marked at its unique forward step.
std::vector<MarkedPath> interlace_decompose(const PlaneRootedTree& y,
                                            const std::vector<int>& walk);

/// The canonical non-intersecting full family: every interlace chunk lifted,
/// ordered by source label.
PathFamily canonical_nip(const Network& rm, const PlaneRootedTree& y);

/// Net flow of the family's step multiset out of a node set:
/// sum over steps (u,v) of [u in X] - [v in X].
int verify_flow(const Network& net, const PathFamily& fam, const std::vector<int>& node_set);

/// Arc weights of the route map for a weight assignment on the base tree:
/// x on south arcs leaving e(gamma), y on bridges, z on north arcs arriving
/// at e'(gamma), 1 elsewhere. The root arcs borrow the base-tree variables of
/// the marked edge ((r,a) reads the (b,a) entry, (r,b) the (a,b) entry) and
/// the two arcs into the root get weight 1.
template <class S>
class RouteWeights {
public:
    RouteWeights(const Network& rm, const Tree& t, const PlaneRootedTree& y,
                 const WeightAssignment<S>& w)
        : rm_(&rm), t_(&t), y_(&y), w_(&w) {}

    S arc_weight(int u, int v) const;
    S path_weight(const std::vector<int>& path) const;
    S family_weight(const PathFamily& fam) const;

private:
    const Network* rm_;
    const Tree* t_;
    const PlaneRootedTree* y_;
    const WeightAssignment<S>* w_;
};

/// Graphviz rendering; nodes in id order, bridges dashed, sources and sinks
/// pinned to the top and bottom ranks. Byte-stable for identical inputs.
std::string to_dot(const Network& net);

// --- template bodies ---

template <class S>
S RouteWeights<S>::arc_weight(int u, int v) const {
    const NodeKey& from = rm_->keys[u];
    const NodeKey& to = rm_->keys[v];
    auto projected = [&](int i, int j) { return project_arc(*y_, Arc{i, j}); };
    if (from.kind == 1 && to.kind == 1 && !from.north && to.north)
        return w_->y_of(*t_, projected(from.a, from.b)); // bridge
    if (from.kind == 1 && !from.north && !to.north) {
        if (from.b == y_->root) return w_->one; // arcs (a,r), (b,r) carry no x
        return w_->x_of(*t_, projected(from.a, from.b));
    }
    if (to.kind == 1 && to.north && from.north) {
        if (to.b == y_->root) return w_->one;
        return w_->z_of(*t_, projected(to.a, to.b));
    }
    return w_->one;
}

template <class S>
S RouteWeights<S>::path_weight(const std::vector<int>& path) const {
    S out = w_->one;
    for (size_t k = 0; k + 1 < path.size(); ++k)
        out = out * arc_weight(path[k], path[k + 1]);
    return out;
}

template <class S>
S RouteWeights<S>::family_weight(const PathFamily& fam) const {
    S out = w_->one;
    for (const auto& p : fam.paths) out = out * path_weight(p);
    return out;
}

} // namespace arborflow
