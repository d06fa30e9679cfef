#include "arborflow/route_map.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arborflow {

bool PlaneRootedTree::has_arc(Arc a) const {
    return std::binary_search(orientation.begin(), orientation.end(), a);
}

std::vector<int> PlaneRootedTree::ordered_neighbors(int i) const {
    std::vector<int> out = children[i];
    if (parent[i] != 0) out.push_back(parent[i]);
    return out;
}

TreePath PlaneRootedTree::path(int u, int v) const {
    std::vector<int> up_u{u}, up_v{v};
    int a = u, b = v;
    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
    while (a != b) {
        up_u.push_back(a = parent[a]);
        up_v.push_back(b = parent[b]);
    }
    up_u.insert(up_u.end(), up_v.rbegin() + 1, up_v.rend());
    return TreePath{std::move(up_u)};
}

StepClass step_class(const PlaneRootedTree& y, Arc a) {
    bool up;
    if (y.parent[a.tail] == a.head)
        up = true;
    else if (y.parent[a.head] == a.tail)
        up = false;
    else
        throw std::invalid_argument("step_class: arc not supported on the tree");
    bool forward = y.has_arc(a);
    if (up) return forward ? StepClass::UpForward : StepClass::UpBackward;
    return forward ? StepClass::DownForward : StepClass::DownBackward;
}

PlaneRootedTree build_t0(const Tree& t, const Arrowflow& af, std::mt19937_64* shuffle) {
    if (af.cls != FlowClass::Unital)
        throw std::invalid_argument("build_t0: arrowflow must be unital");
    PlaneRootedTree y;
    y.n = t.vertex_count();
    y.root = y.n + 1;
    y.marked = *af.marked_edge;

    std::vector<std::vector<int>> adj(y.root + 1);
    for (const Edge& e : t.edges()) {
        if (e == y.marked) continue;
        adj[e.lo].push_back(e.hi);
        adj[e.hi].push_back(e.lo);
    }
    adj[y.root] = {y.marked.lo, y.marked.hi};
    adj[y.marked.lo].push_back(y.root);
    adj[y.marked.hi].push_back(y.root);

    y.parent.assign(y.root + 1, 0);
    y.depth.assign(y.root + 1, 0);
    std::deque<int> queue{y.root};
    std::vector<char> seen(y.root + 1, 0);
    seen[y.root] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                y.parent[w] = v;
                y.depth[w] = y.depth[v] + 1;
                queue.push_back(w);
            }
    }

    y.orientation.clear();
    for (const Arc& a : af.arcs)
        if (Edge(a) != y.marked) y.orientation.push_back(a);
    y.orientation.push_back({y.root, y.marked.lo});
    y.orientation.push_back({y.root, y.marked.hi});
    std::sort(y.orientation.begin(), y.orientation.end());

    y.children.assign(y.root + 1, {});
    for (int i = 1; i <= y.root; ++i) {
        std::vector<int> ascending, descending;
        for (int c : adj[i])
            if (y.parent[c] == i) (y.has_arc({c, i}) ? ascending : descending).push_back(c);
        std::sort(ascending.begin(), ascending.end());
        std::sort(descending.begin(), descending.end());
        if (shuffle) {
            std::shuffle(ascending.begin(), ascending.end(), *shuffle);
            std::shuffle(descending.begin(), descending.end(), *shuffle);
        }
        y.children[i] = std::move(ascending);
        y.children[i].insert(y.children[i].end(), descending.begin(), descending.end());
    }
    return y;
}

PlaneRootedTree mirror(const PlaneRootedTree& y) {
    PlaneRootedTree m = y;
    m.mirrored = !y.mirrored;
    for (Arc& a : m.orientation) a = a.reversed();
    std::sort(m.orientation.begin(), m.orientation.end());
    for (auto& kids : m.children) std::reverse(kids.begin(), kids.end());
    return m;
}

std::string node_name(const NodeKey& k) {
    std::string out = k.north ? "N_" : "";
    switch (k.kind) {
        case 0: out += "v_" + std::to_string(k.a); break;
        case 1: out += "e_" + std::to_string(k.a) + "_" + std::to_string(k.b); break;
        default:
            out += "s_" + std::to_string(k.a) + "_" + std::to_string(k.b) + "_" +
                   std::to_string(k.c);
    }
    return out;
}

int Network::node_id(const NodeKey& k) const {
    auto it = ids.find(k);
    if (it == ids.end()) throw std::invalid_argument("network: no node " + node_name(k));
    return it->second;
}

bool Network::has_arc(int u, int v) const {
    const auto& s = succ[u];
    return std::binary_search(s.begin(), s.end(), v);
}

std::size_t Network::arc_count() const {
    std::size_t total = 0;
    for (const auto& s : succ) total += s.size();
    return total;
}

bool Network::is_acyclic() const {
    std::vector<int> indeg(keys.size(), 0);
    for (const auto& s : succ)
        for (int v : s) ++indeg[v];
    std::deque<int> ready;
    for (size_t v = 0; v < keys.size(); ++v)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    size_t removed = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        ++removed;
        for (int w : succ[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return removed == keys.size();
}

namespace {

/// Sector and direction arcs of one hemisphere, in plane coordinates.
void hemisphere_arcs(const PlaneRootedTree& y,
                     std::vector<std::pair<NodeKey, NodeKey>>& arcs) {
    for (int i = 1; i <= y.vertex_count(); ++i) {
        const std::vector<int> nb = y.ordered_neighbors(i);
        const int m = static_cast<int>(nb.size());
        // clockwise sectors
        arcs.push_back({NodeKey::v(i), NodeKey::e(i, nb[0])});
        if (m >= 2) arcs.push_back({NodeKey::v(i), NodeKey::s(i, nb[0], nb[1])});
        for (int k = 0; k + 2 < m; ++k)
            arcs.push_back({NodeKey::s(i, nb[k], nb[k + 1]), NodeKey::s(i, nb[k + 1], nb[k + 2])});
        for (int k = 0; k + 1 < m; ++k) {
            arcs.push_back({NodeKey::e(nb[k], i), NodeKey::s(i, nb[k], nb[k + 1])});
            arcs.push_back({NodeKey::s(i, nb[k], nb[k + 1]), NodeKey::e(i, nb[k + 1])});
        }
        // counterclockwise sectors
        for (int k = 0; k + 1 < m; ++k) {
            arcs.push_back({NodeKey::e(nb[k + 1], i), NodeKey::s(i, nb[k + 1], nb[k])});
            arcs.push_back({NodeKey::s(i, nb[k + 1], nb[k]), NodeKey::e(i, nb[k])});
        }
        for (int k = 0; k + 2 < m; ++k)
            arcs.push_back({NodeKey::s(i, nb[k + 2], nb[k + 1]), NodeKey::s(i, nb[k + 1], nb[k])});
    }
}

void hemisphere_nodes(const PlaneRootedTree& y, std::vector<NodeKey>& keys) {
    for (int i = 1; i <= y.vertex_count(); ++i) {
        keys.push_back(NodeKey::v(i));
        const std::vector<int> nb = y.ordered_neighbors(i);
        for (int j : nb) keys.push_back(NodeKey::e(i, j));
        for (size_t k = 0; k + 1 < nb.size(); ++k) {
            keys.push_back(NodeKey::s(i, nb[k], nb[k + 1]));
            keys.push_back(NodeKey::s(i, nb[k + 1], nb[k]));
        }
    }
}

Network assemble(int n, int root, std::vector<NodeKey> keys,
                 std::vector<std::pair<NodeKey, NodeKey>> arcs) {
    Network net;
    net.n = n;
    net.root = root;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    net.keys = std::move(keys);
    for (size_t i = 0; i < net.keys.size(); ++i) net.ids[net.keys[i]] = static_cast<int>(i);
    net.succ.assign(net.keys.size(), {});
    net.pred.assign(net.keys.size(), {});
    for (const auto& [from, to] : arcs) {
        int u = net.node_id(from), v = net.node_id(to);
        net.succ[u].push_back(v);
        net.pred[v].push_back(u);
    }
    for (auto& s : net.succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    for (auto& p : net.pred) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return net;
}

NodeKey reflect(const NodeKey& k) {
    NodeKey out = k;
    out.north = 1;
    if (k.kind == 1) std::swap(out.a, out.b);
    if (k.kind == 2) std::swap(out.b, out.c);
    return out;
}

} // namespace

Network build_hemisphere(const PlaneRootedTree& y) {
    std::vector<NodeKey> keys;
    std::vector<std::pair<NodeKey, NodeKey>> arcs;
    hemisphere_nodes(y, keys);
    hemisphere_arcs(y, arcs);
    Network net = assemble(y.n, y.root, std::move(keys), std::move(arcs));
    for (int i = 1; i <= y.n; ++i) net.sources.push_back(net.node_id(NodeKey::v(i)));
    for (const Arc& a : y.orientation)
        net.sinks.push_back(net.node_id(NodeKey::e(a.tail, a.head)));
    return net;
}

Network build_route_map(const PlaneRootedTree& y) {
    std::vector<NodeKey> keys;
    std::vector<std::pair<NodeKey, NodeKey>> arcs;
    hemisphere_nodes(y, keys);
    hemisphere_arcs(y, arcs);

    const PlaneRootedTree ym = mirror(y);
    std::vector<NodeKey> mirror_keys;
    std::vector<std::pair<NodeKey, NodeKey>> mirror_arcs;
    hemisphere_nodes(ym, mirror_keys);
    hemisphere_arcs(ym, mirror_arcs);
    for (const NodeKey& k : mirror_keys) keys.push_back(reflect(k));
    for (const auto& [from, to] : mirror_arcs) arcs.push_back({reflect(to), reflect(from)});

    for (const Arc& a : y.orientation)
        arcs.push_back({NodeKey::e(a.tail, a.head), NodeKey::e(a.tail, a.head, true)});

    Network net = assemble(y.n, y.root, std::move(keys), std::move(arcs));
    for (int i = 1; i <= y.n; ++i) net.sources.push_back(net.node_id(NodeKey::v(i)));
    for (int i = 1; i <= y.n; ++i) net.sinks.push_back(net.node_id(NodeKey::v(i, true)));
    net.bridge_arcs = y.orientation;
    for (const Arc& a : y.orientation)
        net.bridges.push_back({net.node_id(NodeKey::e(a.tail, a.head)),
                               net.node_id(NodeKey::e(a.tail, a.head, true))});
    return net;
}

std::optional<std::vector<int>> unique_path(const Network& net, int from, int to) {
    // Nodes that reach `to`, by reverse depth-first search.
    std::vector<char> reaches(net.keys.size(), 0);
    std::vector<int> stack{to};
    reaches[to] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : net.pred[v])
            if (!reaches[u]) {
                reaches[u] = 1;
                stack.push_back(u);
            }
    }
    if (!reaches[from]) return std::nullopt;
    // Walk forward; a second viable successor anywhere would give a second
    // path, which the network contracts rule out.
    std::vector<int> path{from};
    int at = from;
    while (at != to) {
        int next = -1;
        for (int v : net.succ[at]) {
            if (!reaches[v]) continue;
            if (next >= 0)
                throw std::logic_error("unique_path: branch point between " +
                                       node_name(net.keys[from]) + " and " +
                                       node_name(net.keys[to]));
            next = v;
        }
        if (next < 0) throw std::logic_error("unique_path: dead end despite reachability");
        path.push_back(next);
        at = next;
    }
    return path;
}

MarkedPath to_subdivided(const PlaneRootedTree& y, const MarkedPath& mp) {
    std::vector<int> verts{mp.path.vertices.front()};
    int mark = -1;
    for (int k = 0; k < mp.path.length(); ++k) {
        Arc s = mp.path.step(k);
        bool crossing = Edge(s) == y.marked;
        int step_start = static_cast<int>(verts.size()) - 1;
        if (crossing) verts.push_back(y.root);
        verts.push_back(s.head);
        if (k == mp.mark) mark = crossing ? step_start + 1 : step_start;
    }
    return MarkedPath{TreePath{std::move(verts)}, mark};
}

Arc project_arc(const PlaneRootedTree& y, Arc t0_arc) {
    const int a = y.marked.lo, b = y.marked.hi;
    if (t0_arc.tail == y.root) return t0_arc.head == a ? Arc{b, a} : Arc{a, b};
    if (t0_arc.head == y.root) return t0_arc.tail == a ? Arc{a, b} : Arc{b, a};
    return t0_arc;
}

std::vector<int> lift_marked_path(const Network& rm, const PlaneRootedTree& y,
                                  const MarkedPath& mp0) {
    Arc g = mp0.marked_arc();
    if (!y.has_arc(g))
        throw std::invalid_argument("lift_marked_path: marked arc is not an orientation arc");
    int south_end = rm.node_id(NodeKey::e(g.tail, g.head));
    int north_start = rm.node_id(NodeKey::e(g.tail, g.head, true));
    auto south = unique_path(rm, rm.node_id(NodeKey::v(mp0.path.source())), south_end);
    auto north = unique_path(rm, north_start, rm.node_id(NodeKey::v(mp0.path.target(), true)));
    if (!south || !north) throw std::logic_error("lift_marked_path: hemisphere segment missing");
    south->insert(south->end(), north->begin(), north->end());
    return *south;
}

PathFamily lift_catalyst(const Network& rm, const Tree& t, const PlaneRootedTree& y,
                         const Catalyst& k) {
    const int n = t.vertex_count();
    PathFamily fam;
    fam.paths.resize(n);
    for (int i = 1; i <= n; ++i) {
        TreePath p = t.path_between(i, k.sigma[i]);
        int mark = -1;
        for (int s = 0; s < p.length(); ++s)
            if (p.step(s) == k.f[i]) mark = s;
        if (mark < 0) throw std::invalid_argument("lift_catalyst: f(i) not on its path");
        fam.paths[i - 1] = lift_marked_path(rm, y, to_subdivided(y, MarkedPath{p, mark}));
    }
    return fam;
}

Catalyst project_family(const Network& rm, const Tree& t, const PlaneRootedTree& y,
                        const PathFamily& fam) {
    if (!is_full_family(rm, fam))
        throw std::invalid_argument("project_family: not a full family");
    const int n = t.vertex_count();
    Catalyst k;
    k.sigma.assign(n + 1, 0);
    k.f.assign(n + 1, Arc{});
    for (int i = 1; i <= n; ++i) {
        const auto& path = fam.paths[i - 1];
        k.sigma[i] = rm.keys[path.back()].a;
        bool found = false;
        for (size_t s = 0; s + 1 < path.size() && !found; ++s) {
            const NodeKey& from = rm.keys[path[s]];
            const NodeKey& to = rm.keys[path[s + 1]];
            if (from.kind == 1 && to.kind == 1 && !from.north && to.north) {
                k.f[i] = project_arc(y, Arc{from.a, from.b});
                found = true;
            }
        }
        if (!found) throw std::logic_error("project_family: path without a bridge");
    }
    return k;
}

bool is_valid_family(const Network& net, const PathFamily& fam) {
    if (fam.paths.size() != net.sources.size()) return false;
    std::vector<char> sink_used(net.keys.size(), 0);
    for (size_t i = 0; i < fam.paths.size(); ++i) {
        const auto& p = fam.paths[i];
        if (p.empty() || p.front() != net.sources[i]) return false;
        for (size_t k = 0; k + 1 < p.size(); ++k)
            if (!net.has_arc(p[k], p[k + 1])) return false;
        int last = p.back();
        if (std::find(net.sinks.begin(), net.sinks.end(), last) == net.sinks.end()) return false;
        if (sink_used[last]) return false;
        sink_used[last] = 1;
    }
    return true;
}

bool is_full_family(const Network& rm, const PathFamily& fam) {
    if (!is_valid_family(rm, fam)) return false;
    std::map<std::pair<int, int>, int> bridge_uses;
    for (const auto& [s, t] : rm.bridges) bridge_uses[{s, t}] = 0;
    for (const auto& p : fam.paths)
        for (size_t k = 0; k + 1 < p.size(); ++k) {
            auto it = bridge_uses.find({p[k], p[k + 1]});
            if (it != bridge_uses.end()) ++it->second;
        }
    for (const auto& [arc, count] : bridge_uses)
        if (count != 1) return false;
    return true;
}

bool is_non_intersecting(const PathFamily& fam) {
    std::map<int, int> owner;
    for (size_t i = 0; i < fam.paths.size(); ++i)
        for (int v : fam.paths[i]) {
            auto [it, fresh] = owner.try_emplace(v, static_cast<int>(i));
            if (!fresh && it->second != static_cast<int>(i)) return false;
        }
    return true;
}

std::vector<int> family_permutation(const Network& net, const PathFamily& fam) {
    std::vector<int> perm(fam.paths.size() + 1, 0);
    for (size_t i = 0; i < fam.paths.size(); ++i)
        perm[i + 1] = net.keys[fam.paths[i].back()].a;
    return perm;
}

int family_sign(const Network& net, const PathFamily& fam) {
    std::vector<int> perm = family_permutation(net, fam);
    const int n = static_cast<int>(perm.size()) - 1;
    std::vector<char> seen(n + 1, 0);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<int, int>> family_steps(const PathFamily& fam) {
    std::vector<std::pair<int, int>> steps;
    for (const auto& p : fam.paths)
        for (size_t k = 0; k + 1 < p.size(); ++k) steps.push_back({p[k], p[k + 1]});
    std::sort(steps.begin(), steps.end());
    return steps;
}

std::optional<PathFamily> lgv_involution(const Network& net, const PathFamily& fam) {
    (void)net;
    // Count, for every node, how many paths pass through it.
    std::map<int, int> hits;
    for (const auto& p : fam.paths)
        for (int v : p) ++hits[v];
    auto shared = [&](int v) { return hits[v] >= 2; };

    for (size_t p = 0; p < fam.paths.size(); ++p) {
        const auto& first = fam.paths[p];
        for (size_t pos = 0; pos < first.size(); ++pos) {
            int x = first[pos];
            if (!shared(x)) continue;
            // Lowest-index other path through x.
            for (size_t q = 0; q < fam.paths.size(); ++q) {
                if (q == p) continue;
                auto it = std::find(fam.paths[q].begin(), fam.paths[q].end(), x);
                if (it == fam.paths[q].end()) continue;
                size_t qpos = static_cast<size_t>(it - fam.paths[q].begin());
                PathFamily out = fam;
                out.paths[p].assign(first.begin(), first.begin() + pos + 1);
                out.paths[p].insert(out.paths[p].end(), fam.paths[q].begin() + qpos + 1,
                                    fam.paths[q].end());
                out.paths[q].assign(fam.paths[q].begin(), fam.paths[q].begin() + qpos + 1);
                out.paths[q].insert(out.paths[q].end(), first.begin() + pos + 1, first.end());
                return out;
            }
            throw std::logic_error("lgv_involution: shared node with a single owner");
        }
    }
    return std::nullopt;
}

std::vector<PathFamily> enumerate_full_families(const Network& rm) {
    if (rm.n > 5)
        throw std::invalid_argument("enumerate_full_families: guarded to n <= 5");
    const int n = rm.n;
    // Feasible hemisphere segments, memoized: south[i][b] is the unique path
    // from source i+1 to the south end of bridge b (if any), north[b][j] from
    // the north end of bridge b to sink j+1.
    std::vector<std::vector<std::optional<std::vector<int>>>> south(
        n, std::vector<std::optional<std::vector<int>>>(n));
    std::vector<std::vector<std::optional<std::vector<int>>>> north(
        n, std::vector<std::optional<std::vector<int>>>(n));
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < n; ++b) {
            south[i][b] = unique_path(rm, rm.sources[i], rm.bridges[b].first);
            north[b][i] = unique_path(rm, rm.bridges[b].second, rm.sinks[i]);
        }

    std::vector<PathFamily> out;
    std::vector<int> bridge_of(n, -1), sink_of(n, -1);
    std::vector<char> bridge_used(n, 0), sink_used(n, 0);

    std::function<void(int)> pick_sinks = [&](int b) {
        if (b == n) {
            PathFamily fam;
            fam.paths.resize(n);
            for (int i = 0; i < n; ++i) {
                std::vector<int> path = *south[i][bridge_of[i]];
                const auto& tail = *north[bridge_of[i]][sink_of[bridge_of[i]]];
                path.insert(path.end(), tail.begin(), tail.end());
                fam.paths[i] = std::move(path);
            }
            out.push_back(std::move(fam));
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (sink_used[j] || !north[b][j]) continue;
            sink_used[j] = 1;
            sink_of[b] = j;
            pick_sinks(b + 1);
            sink_used[j] = 0;
        }
    };
    std::function<void(int)> pick_bridges = [&](int i) {
        if (i == n) {
            pick_sinks(0);
            return;
        }
        for (int b = 0; b < n; ++b) {
            if (bridge_used[b] || !south[i][b]) continue;
            bridge_used[b] = 1;
            bridge_of[i] = b;
            pick_bridges(i + 1);
            bridge_used[b] = 0;
        }
    };
    pick_bridges(0);
    return out;
}

namespace {

void dfs_rec(const PlaneRootedTree& y, int i, std::vector<int>& out) {
    out.push_back(i);
    for (int c : y.children[i]) {
        dfs_rec(y, c, out);
        out.push_back(i);
    }
}

} // namespace

std::vector<int> dfs_walk_recursive(const PlaneRootedTree& y) {
    std::vector<int> out;
    out.reserve(2 * y.edge_count() + 1);
    dfs_rec(y, y.root, out);
    return out;
}

std::vector<int> dfs_walk_iterative(const PlaneRootedTree& y) {
    const int steps = 2 * y.edge_count();
    std::vector<int> w;
    w.reserve(steps + 1);
    w.push_back(y.root);
    w.push_back(y.children[y.root].front());
    auto next_of = [&](int i, int j) {
        const std::vector<int> nb = y.ordered_neighbors(j);
        if (y.parent[i] == j) {
            auto it = std::find(nb.begin(), nb.end(), i);
            if (it == nb.end() || it + 1 == nb.end())
                throw std::logic_error("dfs walk: successor undefined");
            return *(it + 1);
        }
        if (y.parent[j] != i) throw std::logic_error("dfs walk: non-adjacent step");
        return nb.front();
    };
    for (int k = 2; k <= steps; ++k) w.push_back(next_of(w[k - 2], w[k - 1]));
    return w;
}

std::string walk_to_string(const PlaneRootedTree& y, const std::vector<int>& walk) {
    std::ostringstream out;
    bool compact = y.n <= 9;
    for (size_t k = 0; k < walk.size(); ++k) {
        if (!compact && k) out << " ";
        if (walk[k] == y.root)
            out << "r";
        else
            out << walk[k];
    }
    return out.str();
}

std::vector<int> in_indices(const PlaneRootedTree& y, const std::vector<int>& walk) {
    std::vector<int> out;
    for (size_t k = 1; k + 1 < walk.size(); ++k) {
        bool entering_backward =
            step_class(y, {walk[k - 1], walk[k]}) == StepClass::UpBackward;
        bool leaving_backward =
            step_class(y, {walk[k], walk[k + 1]}) == StepClass::DownBackward;
        if (!entering_backward && !leaving_backward) out.push_back(static_cast<int>(k));
    }
    return out;
}

std::vector<MarkedPath> interlace_decompose(const PlaneRootedTree& y,
                                            const std::vector<int>& walk) {
    const std::vector<int> idx = in_indices(y, walk);
    const int last = static_cast<int>(walk.size()) - 1; // position of the final root
    std::vector<MarkedPath> out;
    for (size_t t = 0; t < idx.size(); ++t) {
        int u = idx[t];
        int v = idx[(t + 1) % idx.size()];
        std::vector<int> verts;
        if (u < v) {
            verts.assign(walk.begin() + u, walk.begin() + v + 1);
        } else {
            verts.assign(walk.begin() + u, walk.begin() + last + 1);
            verts.insert(verts.end(), walk.begin() + 1, walk.begin() + v + 1);
        }
        std::set<int> distinct(verts.begin(), verts.end());
        if (distinct.size() != verts.size())
            throw std::logic_error("interlace: chunk revisits a vertex");
        // The chunk must read (UB)^p F (DB)^q; the forward step is the mark.
        int mark = -1;
        for (size_t k = 0; k + 1 < verts.size(); ++k) {
            StepClass c = step_class(y, {verts[k], verts[k + 1]});
            bool ok = (mark < 0 && c == StepClass::UpBackward) ||
                      (mark < 0 && (c == StepClass::UpForward || c == StepClass::DownForward)) ||
                      (mark >= 0 && c == StepClass::DownBackward);
            if (!ok) throw std::logic_error("interlace: chunk breaks the UB* F DB* pattern");
            if (c == StepClass::UpForward || c == StepClass::DownForward) {
                mark = static_cast<int>(k);
            }
        }
        if (mark < 0) throw std::logic_error("interlace: chunk has no forward step");
        out.push_back(MarkedPath{TreePath{std::move(verts)}, mark});
    }
    return out;
}

PathFamily canonical_nip(const Network& rm, const PlaneRootedTree& y) {
    const std::vector<int> walk = dfs_walk_recursive(y);
    const std::vector<MarkedPath> chunks = interlace_decompose(y, walk);
    PathFamily fam;
    fam.paths.resize(y.n);
    std::vector<char> filled(y.n + 1, 0);
    for (const MarkedPath& chunk : chunks) {
        int source = chunk.path.source();
        if (source < 1 || source > y.n || filled[source])
            throw std::logic_error("canonical family: bad chunk source");
        filled[source] = 1;
        fam.paths[source - 1] = lift_marked_path(rm, y, chunk);
    }
    return fam;
}

int verify_flow(const Network& net, const PathFamily& fam, const std::vector<int>& node_set) {
    (void)net;
    std::set<int> in_set(node_set.begin(), node_set.end());
    int flow = 0;
    for (const auto& p : fam.paths)
        for (size_t k = 0; k + 1 < p.size(); ++k) {
            flow += in_set.count(p[k]);
            flow -= in_set.count(p[k + 1]);
        }
    return flow;
}

std::string to_dot(const Network& net) {
    std::ostringstream out;
    out << "digraph route_map {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=ellipse, fontsize=10];\n";
    if (!net.sources.empty()) {
        out << "  { rank=source;";
        for (int s : net.sources) out << " \"" << node_name(net.keys[s]) << "\";";
        out << " }\n";
    }
    if (!net.sinks.empty()) {
        out << "  { rank=sink;";
        for (int s : net.sinks) out << " \"" << node_name(net.keys[s]) << "\";";
        out << " }\n";
    }
    for (const NodeKey& k : net.keys) out << "  \"" << node_name(k) << "\";\n";
    std::set<std::pair<int, int>> bridge_set(net.bridges.begin(), net.bridges.end());
    for (size_t u = 0; u < net.keys.size(); ++u)
        for (int v : net.succ[u]) {
            out << "  \"" << node_name(net.keys[u]) << "\" -> \"" << node_name(net.keys[v])
                << "\"";
            if (bridge_set.count({static_cast<int>(u), v})) out << " [style=dashed]";
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace arborflow
