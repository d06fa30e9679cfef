#include "arborflow/batch.hpp"

#include "arborflow/formulas.hpp"
#include "arborflow/matrices.hpp"
#include "arborflow/matrix.hpp"
#include "arborflow/route_map.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arborflow {

namespace {

/// Runs body(i) for i in [0, count), serially or under OpenMP; exceptions and
/// failure messages land in the (sorted) report.
template <class Body>
void run_indexed(std::int64_t count, bool parallel, BatchReport& report, Body&& body) {
    std::vector<std::string> failures;
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) {
            std::vector<std::string> local;
            try {
                body(i, local);
            } catch (const std::exception& e) {
                local.push_back("item " + std::to_string(i) + ": " + e.what());
            }
            if (!local.empty()) {
#pragma omp critical
                failures.insert(failures.end(), local.begin(), local.end());
            }
        }
        report.items += static_cast<std::uint64_t>(count);
        std::sort(failures.begin(), failures.end());
        report.failures.insert(report.failures.end(), failures.begin(), failures.end());
        return;
    }
#endif
    (void)parallel;
    for (std::int64_t i = 0; i < count; ++i) {
        std::vector<std::string> local;
        try {
            body(i, local);
        } catch (const std::exception& e) {
            local.push_back("item " + std::to_string(i) + ": " + e.what());
        }
        failures.insert(failures.end(), local.begin(), local.end());
    }
    report.items += static_cast<std::uint64_t>(count);
    std::sort(failures.begin(), failures.end());
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
}

std::int64_t prufer_space(int n) {
    std::int64_t total = 1;
    for (int k = 0; k < n - 2; ++k) total *= n;
    return total;
}

Tree tree_at(int n, std::int64_t index) {
    std::vector<int> code(n - 2);
    for (int k = n - 3; k >= 0; --k) {
        code[k] = static_cast<int>(index % n) + 1;
        index /= n;
    }
    return from_prufer(code);
}

std::string describe_tree(const Tree& t) {
    std::ostringstream out;
    out << "tree";
    for (const Edge& e : t.edges()) out << " " << e.lo << "-" << e.hi;
    return out.str();
}

int one_line_sign(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n + 1, 0);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = sigma[j - 1]) seen[j] = 1;
    }
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

} // namespace

BatchReport gp_exhaustive_check(int n, bool parallel) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("gp_exhaustive_check: guarded to 2 <= n <= 8");
    BatchReport report;
    const BigInt expected = graham_pollak_value(n);
    run_indexed(prufer_space(n), parallel, report,
                [&](std::int64_t i, std::vector<std::string>& fail) {
                    Tree t = tree_at(n, i);
                    BigInt det = det_bareiss_int(distance_matrix(t));
                    if (det != expected)
                        fail.push_back(describe_tree(t) + ": det " + to_string(det) +
                                       " != " + to_string(expected));
                });
    return report;
}

BatchReport gp_random_check(int n, int count, std::uint64_t seed, bool parallel) {
    BatchReport report;
    const BigInt expected = graham_pollak_value(n);
    run_indexed(count, parallel, report, [&](std::int64_t i, std::vector<std::string>& fail) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
        Tree t = random_tree(n, rng);
        BigInt det = det_bareiss_int(distance_matrix(t));
        if (det != expected)
            fail.push_back(describe_tree(t) + ": det " + to_string(det) +
                           " != " + to_string(expected));
    });
    return report;
}

BatchReport q_det_check(int n, bool parallel) {
    if (n < 2 || n > 8) throw std::invalid_argument("q_det_check: guarded to 2 <= n <= 8");
    BatchReport report;
    run_indexed(prufer_space(n), parallel, report,
                [&](std::int64_t i, std::vector<std::string>& fail) {
                    Tree t = tree_at(n, i);
                    VarRegistry reg;
                    Matrix<Poly> m = q_distance_matrix(t, reg);
                    Poly det = det_expansion_poly(m);
                    if (!(det == q_gp_value(reg, n)))
                        fail.push_back(describe_tree(t) + ": q-det " + det.to_string());
                });
    return report;
}

PartitionSummary partition_summary(const Tree& t, bool parallel) {
    const int n = t.vertex_count();
    if (n < 2 || n > 7)
        throw std::invalid_argument("partition_summary: guarded to 2 <= n <= 7");
    const auto sigmas = derangements(n);
    PartitionSummary global;
    BatchReport scratch;
    run_indexed(static_cast<std::int64_t>(sigmas.size()), parallel, scratch,
                [&](std::int64_t i, std::vector<std::string>&) {
                    const std::vector<int>& sigma = sigmas[i];
                    const int sign = one_line_sign(sigma);
                    PartitionSummary local;
                    for_each_catalyst_of_sigma(t, sigma, [&](const Catalyst& k) {
                        auto key = arrowflow_of(k);
                        auto [it, fresh] = local.try_emplace(std::move(key));
                        if (fresh) it->second.cls = classify_arrowflow(t, it->first).cls;
                        it->second.size += 1;
                        it->second.signed_sum += sign;
                    });
#ifdef _OPENMP
#pragma omp critical
#endif
                    {
                        for (auto& [key, stat] : local) {
                            auto [it, fresh] = global.try_emplace(key, stat);
                            if (!fresh) {
                                it->second.size += stat.size;
                                it->second.signed_sum += stat.signed_sum;
                            }
                        }
                    }
                });
    if (!scratch.failures.empty())
        throw std::logic_error("partition_summary: " + scratch.failures.front());
    return global;
}

BatchReport class_sum_check(const Tree& t, bool parallel) {
    const int n = t.vertex_count();
    BatchReport report;
    PartitionSummary summary = partition_summary(t, parallel);
    const long long unital_target = (n - 1) % 2 == 0 ? 1 : -1; // (-1)^{n-1}
    std::uint64_t unital_seen = 0;
    long long grand_total = 0;
    for (const auto& [key, stat] : summary) {
        ++report.items;
        grand_total += stat.signed_sum;
        if (stat.cls == FlowClass::Unital) {
            ++unital_seen;
            if (stat.signed_sum != unital_target)
                report.failures.push_back(describe_tree(t) + ": unital class sums to " +
                                          std::to_string(stat.signed_sum));
        } else if (stat.signed_sum != 0) {
            report.failures.push_back(describe_tree(t) + ": zero-sum class sums to " +
                                      std::to_string(stat.signed_sum));
        }
    }
    const std::uint64_t unital_expected =
        static_cast<std::uint64_t>(n - 1) * (n >= 2 ? (1ULL << (n - 2)) : 0);
    if (unital_seen != unital_expected)
        report.failures.push_back(describe_tree(t) + ": " + std::to_string(unital_seen) +
                                  " unital classes, expected " +
                                  std::to_string(unital_expected));
    for (const Arrowflow& af : unital_arrowflows(t))
        if (auto it = summary.find(af.arcs); it == summary.end())
            report.failures.push_back(describe_tree(t) + ": unital arrowflow with empty class");
    if (BigInt(static_cast<long>(grand_total)) != graham_pollak_value(n))
        report.failures.push_back(describe_tree(t) + ": grand total " +
                                  std::to_string(grand_total));
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

BatchReport involution_check(const Tree& t, bool parallel, bool check_weights) {
    const int n = t.vertex_count();
    if (n < 2 || n > 7)
        throw std::invalid_argument("involution_check: guarded to 2 <= n <= 7");
    const auto sigmas = derangements(n);
    VarRegistry reg;
    WeightAssignment<Poly> w = symbolic_weights(t, reg, WeightMode::Free);
    BatchReport report;
    run_indexed(static_cast<std::int64_t>(sigmas.size()), parallel, report,
                [&](std::int64_t i, std::vector<std::string>& fail) {
                    for_each_catalyst_of_sigma(t, sigmas[i], [&](const Catalyst& k) {
                        Arrowflow af = classify_arrowflow(t, arrowflow_of(k));
                        if (af.cls == FlowClass::Unital) return;
                        Catalyst img = class_involution(t, k, af);
                        if (!is_valid_catalyst(t, img))
                            fail.push_back("involution image invalid");
                        if (img == k) fail.push_back("involution has a fixed point");
                        if (catalyst_sign(img) != -catalyst_sign(k))
                            fail.push_back("involution does not reverse sign");
                        if (arrowflow_of(img) != af.arcs)
                            fail.push_back("involution leaves the class");
                        if (!(class_involution(t, img, af) == k))
                            fail.push_back("involution does not square to identity");
                        if (check_weights &&
                            !(catalyst_weight(t, img, w) == catalyst_weight(t, k, w)))
                            fail.push_back("involution changes the weight");
                    });
                });
    // items counted derangements; report catalysts-with-zero-sum-class checks
    // through failures only.
    return report;
}

BatchReport nip_check(const Tree& t, bool parallel) {
    const int n = t.vertex_count();
    const auto flows = unital_arrowflows(t);
    BatchReport report;
    run_indexed(static_cast<std::int64_t>(flows.size()), parallel, report,
                [&](std::int64_t i, std::vector<std::string>& fail) {
                    PlaneRootedTree y = build_t0(t, flows[i]);
                    Network rm = build_route_map(y);
                    PathFamily fam = canonical_nip(rm, y);
                    std::string tag = describe_tree(t) + " arrowflow " + std::to_string(i);
                    if (!is_full_family(rm, fam)) fail.push_back(tag + ": not a full family");
                    if (!is_non_intersecting(fam)) fail.push_back(tag + ": paths intersect");
                    std::vector<int> perm = family_permutation(rm, fam);
                    int len = 0, at = 1;
                    do {
                        at = perm[at];
                        ++len;
                    } while (at != 1 && len <= n);
                    if (len != n) fail.push_back(tag + ": permutation is not an n-cycle");
                    if (family_sign(rm, fam) != ((n - 1) % 2 == 0 ? 1 : -1))
                        fail.push_back(tag + ": family sign is wrong");
                });
    return report;
}

BatchReport lifting_check(const Tree& t, bool parallel) {
    const int n = t.vertex_count();
    if (n > 6) throw std::invalid_argument("lifting_check: guarded to n <= 6");
    auto partition = arrowflow_partition(t);
    std::vector<const std::vector<Arc>*> unital_keys;
    std::vector<const std::vector<Catalyst>*> unital_classes;
    for (auto& [key, cls] : partition) {
        if (classify_arrowflow(t, key).cls == FlowClass::Unital) {
            unital_keys.push_back(&key);
            unital_classes.push_back(&cls);
        }
    }
    VarRegistry reg;
    WeightAssignment<Poly> w = symbolic_weights(t, reg, WeightMode::Free);
    BatchReport report;
    run_indexed(static_cast<std::int64_t>(unital_keys.size()), parallel, report,
                [&](std::int64_t i, std::vector<std::string>& fail) {
                    Arrowflow af = classify_arrowflow(t, *unital_keys[i]);
                    PlaneRootedTree y = build_t0(t, af);
                    Network rm = build_route_map(y);
                    RouteWeights<Poly> rw(rm, t, y, w);
                    std::string tag = describe_tree(t) + " class " + std::to_string(i);
                    std::set<std::vector<std::vector<int>>> seen;
                    for (const Catalyst& k : *unital_classes[i]) {
                        PathFamily fam = lift_catalyst(rm, t, y, k);
                        if (!is_full_family(rm, fam)) {
                            fail.push_back(tag + ": lift is not a full family");
                            continue;
                        }
                        seen.insert(fam.paths);
                        if (family_sign(rm, fam) != catalyst_sign(k))
                            fail.push_back(tag + ": lift changes the sign");
                        if (!(project_family(rm, t, y, fam) == k))
                            fail.push_back(tag + ": projection does not invert the lift");
                        if (!(rw.family_weight(fam) == catalyst_weight(t, k, w)))
                            fail.push_back(tag + ": lift changes the weight");
                    }
                    if (seen.size() != unital_classes[i]->size())
                        fail.push_back(tag + ": lift is not injective");
                    if (n <= 5) {
                        auto families = enumerate_full_families(rm);
                        if (families.size() != unital_classes[i]->size())
                            fail.push_back(tag + ": " + std::to_string(families.size()) +
                                           " full families vs class size " +
                                           std::to_string(unital_classes[i]->size()));
                    }
                });
    return report;
}

} // namespace arborflow
