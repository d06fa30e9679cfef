#include "arborflow/catalysts.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arborflow {

int catalyst_sign(const Catalyst& k) {
    const int n = static_cast<int>(k.sigma.size()) - 1;
    std::vector<char> seen(n + 1, 0);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = k.sigma[j]) seen[j] = 1;
    }
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

bool is_valid_catalyst(const Tree& t, const Catalyst& k) {
    const int n = t.vertex_count();
    if (static_cast<int>(k.sigma.size()) != n + 1 || static_cast<int>(k.f.size()) != n + 1)
        return false;
    std::vector<char> hit(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int s = k.sigma[i];
        if (s < 1 || s > n || s == i || hit[s]) return false;
        hit[s] = 1;
    }
    for (int i = 1; i <= n; ++i) {
        TreePath p = t.path_between(i, k.sigma[i]);
        bool found = false;
        for (int s = 0; s < p.length() && !found; ++s) found = p.step(s) == k.f[i];
        if (!found) return false;
    }
    return true;
}

std::vector<Arc> arrowflow_of(const Catalyst& k) {
    std::vector<Arc> out(k.f.begin() + 1, k.f.end());
    std::sort(out.begin(), out.end());
    return out;
}

const char* to_string(FlowClass c) {
    switch (c) {
        case FlowClass::Unital: return "unital";
        case FlowClass::ZeroSumConnected: return "zero-sum-connected";
        case FlowClass::Disconnected: return "disconnected";
    }
    return "?";
}

Arrowflow classify_arrowflow(const Tree& t, std::vector<Arc> arcs) {
    const int n = t.vertex_count();
    if (static_cast<int>(arcs.size()) != n)
        throw std::invalid_argument("arrowflow: expected n arcs");
    std::sort(arcs.begin(), arcs.end());
    std::vector<int> per_edge(t.edge_count(), 0);
    for (const Arc& a : arcs) per_edge[t.edge_index(Edge(a))]++; // validates support
    Arrowflow out;
    out.arcs = std::move(arcs);
    for (int ei = 0; ei < t.edge_count(); ++ei) {
        if (per_edge[ei] == 0) {
            out.cls = FlowClass::Disconnected;
            out.uncovered_edge = t.edges()[ei]; // sorted edges: first hit is lex-least
            return out;
        }
    }
    // Covered: n arcs on n-1 edges leaves exactly one doubled edge.
    for (int ei = 0; ei < t.edge_count(); ++ei) {
        if (per_edge[ei] != 2) continue;
        Edge e = t.edges()[ei];
        int plus = 0, minus = 0;
        for (const Arc& a : out.arcs) {
            plus += a == e.plus();
            minus += a == e.minus();
        }
        if (plus == 1 && minus == 1) {
            out.cls = FlowClass::Unital;
            out.marked_edge = e;
            out.marked_arrows = {e.plus(), e.minus()};
        } else {
            out.cls = FlowClass::ZeroSumConnected;
            out.repeated_arc = plus == 2 ? e.plus() : e.minus();
        }
        return out;
    }
    throw std::logic_error("arrowflow: covered multiset without a doubled edge");
}

std::vector<Arrowflow> unital_arrowflows(const Tree& t) {
    const int n = t.vertex_count();
    std::vector<Arrowflow> out;
    if (n < 2) return out;
    for (const Edge& marked : t.edges()) {
        std::vector<Edge> rest;
        for (const Edge& e : t.edges())
            if (e != marked) rest.push_back(e);
        const std::uint64_t combos = 1ULL << rest.size();
        for (std::uint64_t bits = 0; bits < combos; ++bits) {
            std::vector<Arc> arcs{marked.plus(), marked.minus()};
            for (size_t k = 0; k < rest.size(); ++k)
                arcs.push_back((bits >> k) & 1 ? rest[k].minus() : rest[k].plus());
            out.push_back(classify_arrowflow(t, std::move(arcs)));
        }
    }
    return out;
}

std::vector<std::vector<int>> derangements(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool fixed_point = false;
        for (int i = 1; i <= n && !fixed_point; ++i) fixed_point = perm[i - 1] == i;
        if (!fixed_point) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void for_each_catalyst_of_sigma(const Tree& t, const std::vector<int>& sigma,
                                const std::function<void(const Catalyst&)>& fn) {
    const int n = t.vertex_count();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("for_each_catalyst_of_sigma: bad one-line length");
    Catalyst k;
    k.sigma.assign(n + 1, 0);
    k.f.assign(n + 1, Arc{});
    std::vector<TreePath> paths(n + 1);
    std::vector<int> digit(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        k.sigma[i] = sigma[i - 1];
        paths[i] = t.path_between(i, sigma[i - 1]);
    }
    // Mixed-radix odometer over the f-choices, digit n fastest.
    while (true) {
        for (int i = 1; i <= n; ++i) k.f[i] = paths[i].step(digit[i]);
        fn(k);
        int i = n;
        while (i >= 1 && ++digit[i] == paths[i].length()) digit[i--] = 0;
        if (i < 1) break;
    }
}

void for_each_catalyst(const Tree& t, const std::function<void(const Catalyst&)>& fn) {
    const int n = t.vertex_count();
    if (n < 2 || n > 7) throw std::invalid_argument("for_each_catalyst: guarded to 2 <= n <= 7");
    for (const auto& sigma : derangements(n)) for_each_catalyst_of_sigma(t, sigma, fn);
}

std::uint64_t count_catalysts(const Tree& t) {
    const int n = t.vertex_count();
    if (n > 9) throw std::invalid_argument("count_catalysts: factorial sweep guarded to n <= 9");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t total = 0;
    do {
        std::uint64_t prod = 1;
        for (int i = 1; i <= n; ++i) {
            if (perm[i - 1] == i) {
                prod = 0;
                break;
            }
            prod *= static_cast<std::uint64_t>(t.distance(i, perm[i - 1]));
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::map<std::vector<Arc>, std::vector<Catalyst>> arrowflow_partition(const Tree& t) {
    if (t.vertex_count() > 6)
        throw std::invalid_argument("arrowflow_partition: guarded to n <= 6");
    std::map<std::vector<Arc>, std::vector<Catalyst>> out;
    for_each_catalyst(t, [&](const Catalyst& k) { out[arrowflow_of(k)].push_back(k); });
    return out;
}

BigInt class_signed_sum(const std::vector<Catalyst>& cls) {
    BigInt total(0);
    for (const Catalyst& k : cls) total += catalyst_sign(k);
    return total;
}

namespace {

Catalyst swapped(const Catalyst& k, int i, int j) {
    Catalyst out = k;
    std::swap(out.sigma[i], out.sigma[j]);
    std::swap(out.f[i], out.f[j]);
    return out;
}

} // namespace

Catalyst class_involution(const Tree& t, const Catalyst& k, const Arrowflow& af) {
    const int n = t.vertex_count();
    if (af.cls == FlowClass::Unital)
        throw std::invalid_argument("class_involution: class is unital");
    if (af.cls == FlowClass::Disconnected) {
        Edge e = *af.uncovered_edge;
        return swapped(k, e.lo, e.hi);
    }
    Arc rep = *af.repeated_arc;
    int i = 0, j = 0;
    for (int v = 1; v <= n; ++v)
        if (k.f[v] == rep) (i == 0 ? i : j) = v;
    if (i == 0 || j == 0)
        throw std::logic_error("class_involution: repeated arc lacks two preimages");
    return swapped(k, i, j);
}

Catalyst class_involution(const Tree& t, const Catalyst& k) {
    return class_involution(t, k, classify_arrowflow(t, arrowflow_of(k)));
}

} // namespace arborflow
