#include "arborflow/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arborflow {

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("tree: vertex count must be >= 1");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw std::invalid_argument("tree: expected n-1 edges");
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_ + 1, {});
    std::set<Edge> seen;
    for (const Edge& e : edges_) {
        if (e.lo < 1 || e.hi > n_ || e.lo == e.hi)
            throw std::invalid_argument("tree: edge endpoint out of range");
        if (!seen.insert(e).second)
            throw std::invalid_argument("tree: duplicate edge");
        adj_[e.lo].push_back(e.hi);
        adj_[e.hi].push_back(e.lo);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // BFS from vertex 1 establishes the parent arrays and checks connectivity
    // (n-1 edges + connected  =>  tree).
    parent_.assign(n_ + 1, 0);
    depth_.assign(n_ + 1, -1);
    std::deque<int> queue{1};
    depth_[1] = 0;
    int visited = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++visited;
        for (int w : adj_[v])
            if (depth_[w] < 0) {
                depth_[w] = depth_[v] + 1;
                parent_[w] = v;
                queue.push_back(w);
            }
    }
    if (visited != n_) throw std::invalid_argument("tree: not connected");
}

bool Tree::has_edge(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) return false;
    const auto& nb = adj_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

int Tree::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        throw std::invalid_argument("tree: no such edge");
    return static_cast<int>(it - edges_.begin());
}

int Tree::arc_index(Arc a) const {
    Edge e(a);
    return 2 * edge_index(e) + (a == e.plus() ? 0 : 1);
}

std::vector<Arc> Tree::arcs() const {
    std::vector<Arc> out;
    out.reserve(2 * edges_.size());
    for (const Edge& e : edges_) {
        out.push_back(e.plus());
        out.push_back(e.minus());
    }
    return out;
}

TreePath Tree::path_between(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::invalid_argument("path_between: vertex out of range");
    // Climb the deeper endpoint, then both, until the walks meet.
    std::vector<int> up_i{i}, up_j{j};
    int a = i, b = j;
    while (depth_[a] > depth_[b]) up_i.push_back(a = parent_[a]);
    while (depth_[b] > depth_[a]) up_j.push_back(b = parent_[b]);
    while (a != b) {
        up_i.push_back(a = parent_[a]);
        up_j.push_back(b = parent_[b]);
    }
    up_i.insert(up_i.end(), up_j.rbegin() + 1, up_j.rend());
    return TreePath{std::move(up_i)};
}

int Tree::distance(int i, int j) const { return path_between(i, j).length(); }

std::vector<Arc> Tree::arcs_toward_edge(Edge e) const {
    edge_index(e); // validates membership
    std::vector<Arc> out;
    for (const Edge& f : edges_) {
        if (f == e) continue;
        // The orientation (u, v) of f with v on the path u -> e.lo points
        // toward e; equivalently v is strictly closer to the edge.
        TreePath p = path_between(f.lo, e.lo);
        bool hi_inside = p.length() >= 1 && p.vertices[1] == f.hi;
        out.push_back(hi_inside ? f.plus() : f.minus());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Tree from_prufer(const std::vector<int>& code) {
    int n = static_cast<int>(code.size()) + 2;
    std::vector<int> deg(n + 1, 1);
    for (int c : code) {
        if (c < 1 || c > n) throw std::invalid_argument("prufer: entry out of range");
        ++deg[c];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // Smallest-leaf-first decode with a pointer sweep.
    int ptr = 1;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(leaf, c);
        if (--deg[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            while (deg[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n);
    return Tree(n, std::move(edges));
}

std::vector<int> to_prufer(const Tree& t) {
    const int n = t.vertex_count();
    if (n < 2) throw std::invalid_argument("prufer: need n >= 2");
    std::vector<int> deg(n + 1, 0), gone(n + 1, 0), code;
    for (int v = 1; v <= n; ++v) deg[v] = t.degree(v);
    // Strip the smallest live leaf n-2 times. A stripped leaf's neighbor may
    // become a leaf smaller than the scan pointer; it is consumed immediately,
    // so the pointer only ever moves forward.
    int ptr = 0;
    auto advance = [&] {
        do { ++ptr; } while (ptr <= n && (gone[ptr] || deg[ptr] != 1));
        if (ptr > n) throw std::logic_error("prufer: leaf scan overran");
        return ptr;
    };
    int leaf = advance();
    while (static_cast<int>(code.size()) < n - 2) {
        gone[leaf] = 1;
        int next = 0;
        for (int w : t.neighbors(leaf))
            if (!gone[w]) next = w;
        code.push_back(next);
        if (static_cast<int>(code.size()) == n - 2) break;
        leaf = (--deg[next] == 1 && next < ptr) ? next : advance();
    }
    return code;
}

void for_each_tree(int n, const std::function<void(const Tree&)>& fn) {
    if (n < 2 || n > 8) throw std::invalid_argument("for_each_tree: guarded to 2 <= n <= 8");
    std::vector<int> code(n - 2, 1);
    while (true) {
        fn(from_prufer(code));
        int k = static_cast<int>(code.size()) - 1;
        while (k >= 0 && code[k] == n) code[k--] = 1;
        if (k < 0) break;
        ++code[k];
    }
}

std::vector<Tree> all_trees(int n) {
    std::vector<Tree> out;
    for_each_tree(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

Tree random_tree(int n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("random_tree: need n >= 2");
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> code(n - 2);
    for (int& c : code) c = pick(rng);
    return from_prufer(code);
}

Tree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        if (n < 0) {
            if (fields >> n) {
                if (n < 1) throw std::invalid_argument("tree text: n must be >= 1");
            }
            continue; // blank or comment-only line before the header
        }
        int i, j;
        if (!(fields >> i)) continue;
        if (!(fields >> j))
            throw std::invalid_argument("tree text: malformed edge at line " +
                                        std::to_string(lineno));
        edges.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("tree text: missing vertex count");
    return Tree(n, std::move(edges));
}

std::string format_tree(const Tree& t) {
    std::ostringstream out;
    out << t.vertex_count() << "\n";
    for (const Edge& e : t.edges()) out << e.lo << " " << e.hi << "\n";
    return out.str();
}

} // namespace arborflow
