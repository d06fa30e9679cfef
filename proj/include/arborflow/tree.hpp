#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace arborflow {

/// Directed edge (i, j) of a tree, written i > j in text form.
struct Arc {
    int tail = 0;
    int head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
    Arc reversed() const { return {head, tail}; }
};

/// Undirected edge with canonical orientation lo < hi.
struct Edge {
    int lo = 0;
    int hi = 0;

    Edge() = default;
    Edge(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {}
    explicit Edge(Arc a) : Edge(a.tail, a.head) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
    /// Canonical arc e+ = (lo, hi).
    Arc plus() const { return {lo, hi}; }
    /// Reversed arc e- = (hi, lo).
    Arc minus() const { return {hi, lo}; }
};

/// Vertex path i_0, i_1, ..., i_m; consecutive vertices are adjacent.
struct TreePath {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int source() const { return vertices.front(); }
    int target() const { return vertices.back(); }
    Arc step(int k) const { return {vertices[k], vertices[k + 1]}; }

    friend bool operator==(const TreePath&, const TreePath&) = default;
};

/// Path with one distinguished step index (0-based); the marked step is
/// path.step(mark), tail steps come before it and head steps after it.
struct MarkedPath {
    TreePath path;
    int mark = 0;

    Arc marked_arc() const { return path.step(mark); }
    friend bool operator==(const MarkedPath&, const MarkedPath&) = default;
};

/// Unrooted tree on vertices 1..n. Construction validates connectivity and
/// acyclicity; edges and adjacency lists are kept sorted so that every
/// traversal is deterministic.
class Tree {
public:
    /// Accepts any list of n-1 undirected edges on 1..n; throws
    /// std::invalid_argument on anything that is not a tree. n = 1 (no edges)
    /// is allowed.
    Tree(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int i, int j) const;

    /// Index of {i,j} in the sorted edge list; throws if absent.
    int edge_index(Edge e) const;
    /// Arcs are indexed 2*edge_index + (0 for e+, 1 for e-).
    int arc_index(Arc a) const;
    /// All 2(n-1) arcs in arc_index order.
    std::vector<Arc> arcs() const;

    /// Unique path i -> j (inclusive); O(path length) via the parent arrays
    /// of a BFS rooted at vertex 1.
    TreePath path_between(int i, int j) const;
    /// Number of steps of path_between(i, j).
    int distance(int i, int j) const;

    /// Arcs (u, v) with {u,v} != e that point toward the edge e: v lies on
    /// the path from u to e. Exactly one orientation of every other edge
    /// qualifies, so the result has n-2 arcs (sorted).
    std::vector<Arc> arcs_toward_edge(Edge e) const;

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;          // sorted
    std::vector<std::vector<int>> adj_; // adj_[v] sorted, index 0 unused
    std::vector<int> parent_;          // BFS tree rooted at 1; parent_[1] = 0
    std::vector<int> depth_;
};

/// Prufer decode: sequence of length n-2 with entries in 1..n gives the tree
/// on n vertices. Empty sequence gives the single edge on {1,2}.
Tree from_prufer(const std::vector<int>& code);

/// Prufer encode, inverse of from_prufer; requires n >= 2.
std::vector<int> to_prufer(const Tree& t);

/// Calls fn for every labeled tree on n vertices in lexicographic Prufer
/// order (n^{n-2} trees). Guarded to 2 <= n <= 8.
void for_each_tree(int n, const std::function<void(const Tree&)>& fn);

/// Materialized for_each_tree.
std::vector<Tree> all_trees(int n);

/// Uniform labeled tree via a random Prufer sequence; n >= 2.
Tree random_tree(int n, std::mt19937_64& rng);

/// Parses the plain text format: first non-comment line "n", then n-1 lines
/// "i j". '#' starts a comment. Throws std::invalid_argument on bad input.
Tree parse_tree(const std::string& text);

/// Writer: "n\n" then sorted "lo hi\n" lines; parse_tree round-trips it.
std::string format_tree(const Tree& t);

} // namespace arborflow
