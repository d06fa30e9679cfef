#include "arborflow/batch.hpp"
#include "arborflow/field.hpp"
#include "arborflow/formulas.hpp"
#include "arborflow/io.hpp"
#include "arborflow/matrices.hpp"
#include "arborflow/matrix.hpp"
#include "arborflow/route_map.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace arborflow;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        if (pos != token.size())
            throw std::invalid_argument("bad integer list entry '" + token + "'");
        out.push_back(v);
    }
    return out;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    return std::stoull(raw);
}

/// Merges a kernel report into the JSON accumulator; keeps at most 50
/// witnesses in the output.
void fold(Json& j, const BatchReport& r) {
    j["items"] = j["items"].get<std::uint64_t>() + r.items;
    auto& fails = j["failures"];
    for (const std::string& f : r.failures) {
        if (fails.size() < 50)
            fails.push_back(f);
        else
            j["suppressed_failures"] = j.value("suppressed_failures", 0) + 1;
    }
}

BatchReport one_tree_gp(const Tree& t) {
    BatchReport r;
    r.items = 1;
    BigInt det = det_bareiss_int(distance_matrix(t));
    if (det != graham_pollak_value(t.vertex_count()))
        r.failures.push_back("det " + to_string(det) + " != closed form");
    return r;
}

BatchReport one_tree_q(const Tree& t) {
    BatchReport r;
    r.items = 1;
    VarRegistry reg;
    Poly det = det_expansion_poly(q_distance_matrix(t, reg));
    if (!(det == q_gp_value(reg, t.vertex_count())))
        r.failures.push_back("q-det " + det.to_string() + " != closed form");
    return r;
}

BatchReport from_identity(const IdentityReport& r) {
    BatchReport b;
    b.items = static_cast<std::uint64_t>(r.trials);
    b.failures = r.failures;
    return b;
}

/// Reverses the first non-bridge arc of the route map in place; returns a
/// description of the damaged arc.
std::string corrupt_route_map(Network& rm) {
    std::set<std::pair<int, int>> bridge(rm.bridges.begin(), rm.bridges.end());
    for (int u = 0; u < static_cast<int>(rm.keys.size()); ++u) {
        for (int v : rm.succ[u]) {
            if (bridge.count({u, v})) continue;
            auto& su = rm.succ[u];
            su.erase(std::find(su.begin(), su.end(), v));
            auto& pv = rm.pred[v];
            pv.erase(std::find(pv.begin(), pv.end(), u));
            auto& sv = rm.succ[v];
            sv.insert(std::lower_bound(sv.begin(), sv.end(), u), u);
            auto& pu = rm.pred[u];
            pu.insert(std::lower_bound(pu.begin(), pu.end(), v), v);
            return node_name(rm.keys[u]) + " -> " + node_name(rm.keys[v]);
        }
    }
    throw std::logic_error("route map has no arc to corrupt");
}

BatchReport nip_corrupt_control(const Tree& t) {
    BatchReport r;
    r.items = 1;
    const auto flows = unital_arrowflows(t);
    PlaneRootedTree y = build_t0(t, flows.front());
    Network rm = build_route_map(y);
    std::string damaged = corrupt_route_map(rm);
    try {
        if (!rm.is_acyclic()) {
            r.failures.push_back("reversed arc " + damaged + ": network is cyclic");
            return r;
        }
        PathFamily fam = canonical_nip(rm, y);
        if (!is_valid_family(rm, fam))
            r.failures.push_back("reversed arc " + damaged + ": family leaves the network");
        else if (!is_full_family(rm, fam))
            r.failures.push_back("reversed arc " + damaged + ": family misses a bridge");
        else if (!is_non_intersecting(fam))
            r.failures.push_back("reversed arc " + damaged + ": paths intersect");
    } catch (const std::exception& e) {
        r.failures.push_back("reversed arc " + damaged + ": " + e.what());
    }
    return r;
}

int run_verify(const std::string& target, const std::string& tree_path, int all_n, int trials,
               std::uint64_t seed, bool serial, bool corrupt, const std::string& out_path) {
    const bool parallel = !serial;
    Json j;
    j["schema"] = kSchema;
    j["target"] = target;
    j["items"] = std::uint64_t{0};
    j["failures"] = Json::array();

    std::vector<Tree> trees;
    if (!tree_path.empty()) {
        trees.push_back(parse_tree(slurp(tree_path)));
        j["n"] = trees.front().vertex_count();
    } else {
        j["all_n"] = all_n;
    }

    auto per_tree = [&](const std::function<BatchReport(const Tree&)>& kernel) {
        if (!trees.empty()) {
            for (const Tree& t : trees) fold(j, kernel(t));
        } else {
            for_each_tree(all_n, [&](const Tree& t) { fold(j, kernel(t)); });
        }
    };

    if (corrupt && target != "nip")
        throw CLI::ValidationError("--corrupt only applies to target nip");

    if (target == "gp") {
        if (trees.empty())
            fold(j, gp_exhaustive_check(all_n, parallel));
        else
            per_tree(one_tree_gp);
    } else if (target == "q") {
        if (trees.empty())
            fold(j, q_det_check(all_n, parallel));
        else
            per_tree(one_tree_q);
    } else if (target == "sum-on-class") {
        per_tree([&](const Tree& t) { return class_sum_check(t, parallel); });
    } else if (target == "lifting") {
        per_tree([&](const Tree& t) { return lifting_check(t, parallel); });
    } else if (target == "nip") {
        if (corrupt)
            per_tree(nip_corrupt_control);
        else
            per_tree([&](const Tree& t) { return nip_check(t, parallel); });
    } else {
        Identity id = parse_identity(target);
        per_tree([&](const Tree& t) {
            return from_identity(verify_identity(t, id, trials, seed));
        });
    }

    const bool ok = j["failures"].empty() && !j.contains("suppressed_failures");
    j["ok"] = ok;
    emit(j.dump(2) + "\n", out_path);
    return ok ? kExitPass : kExitFail;
}

int run_dump(const std::string& what, const std::string& tree_path,
             const std::string& arrowflow_spec, const std::string& out_path) {
    Tree t = parse_tree(slurp(tree_path));
    if (what == "catalysts-json") {
        emit(catalysts_to_json(t).dump(2) + "\n", out_path);
        return kExitPass;
    }
    if (what == "arrowflow-classes-json") {
        emit(classes_to_json(t).dump(2) + "\n", out_path);
        return kExitPass;
    }
    // route-map-dot
    if (arrowflow_spec.empty())
        throw CLI::ValidationError("route-map-dot needs --arrowflow");
    Arrowflow af = classify_arrowflow(t, parse_arrowflow(arrowflow_spec));
    if (af.cls != FlowClass::Unital) {
        std::cerr << "arrowflow " << format_arrowflow(af.arcs) << " is " << to_string(af.cls)
                  << ", not unital; no route map\n";
        return kExitFail;
    }
    PlaneRootedTree y = build_t0(t, af);
    emit(to_dot(build_route_map(y)), out_path);
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of tree distance-matrix determinants"};
    app.require_subcommand(1);

    std::uint64_t seed = env_u64("ARBORFLOW_SEED", 0);
    std::string out_path;

    auto* gen = app.add_subcommand("gen-tree", "Write a tree file");
    int gen_n = 0;
    std::string gen_prufer;
    gen->add_option("--n", gen_n, "vertex count (random tree per seed)");
    gen->add_option("--seed", seed, "RNG seed (default $ARBORFLOW_SEED or 0)");
    gen->add_option("--prufer", gen_prufer, "comma-separated code, overrides --n");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check a determinant identity or class property");
    std::string target, tree_path;
    int all_n = 0, trials = 20;
    bool serial = false, corrupt = false;
    verify->add_option("target", target, "gp|q|sum-on-class|lifting|nip|emmanuel|indep|ck|qsum")
        ->required()
        ->check(CLI::IsMember({"gp", "q", "sum-on-class", "lifting", "nip", "emmanuel",
                               "indep", "ck", "qsum"}));
    verify->add_option("tree", tree_path, "tree file");
    verify->add_option("--all-n", all_n, "run on every labeled tree with this many vertices")
        ->check(CLI::Range(2, 8));
    verify->add_option("--trials", trials, "random evaluations per identity check");
    verify->add_option("--seed", seed, "RNG seed (default $ARBORFLOW_SEED or 0)");
    verify->add_flag("--serial", serial, "force the serial reference kernels");
    verify->add_flag("--corrupt", corrupt,
                     "negative control: damage the route map, expect detection");
    verify->add_option("--out", out_path, "report file (default stdout)");

    auto* dump = app.add_subcommand("dump", "Deterministic artifact dumps");
    std::string what, arrowflow_spec;
    dump->add_option("what", what, "route-map-dot|catalysts-json|arrowflow-classes-json")
        ->required()
        ->check(CLI::IsMember({"route-map-dot", "catalysts-json", "arrowflow-classes-json"}));
    dump->add_option("tree", tree_path, "tree file")->required();
    dump->add_option("--arrowflow", arrowflow_spec, "arc multiset, e.g. \"1>2,2>1\"");
    dump->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (const char* prime = std::getenv("ARBORFLOW_PRIME"); prime && *prime)
            Fp::set_modulus(std::stoull(prime));

        if (gen->parsed()) {
            Tree t = [&] {
                if (!gen_prufer.empty()) return from_prufer(parse_int_list(gen_prufer));
                if (gen_n < 2) throw std::invalid_argument("gen-tree needs --n >= 2 or --prufer");
                std::mt19937_64 rng(seed);
                return random_tree(gen_n, rng);
            }();
            emit(format_tree(t), out_path);
            return kExitPass;
        }
        if (verify->parsed()) {
            if (tree_path.empty() == (all_n == 0))
                throw std::invalid_argument("verify needs exactly one of: tree file, --all-n");
            return run_verify(target, tree_path, all_n, trials, seed, serial, corrupt,
                              out_path);
        }
        return run_dump(what, tree_path, arrowflow_spec, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitPass;
}
