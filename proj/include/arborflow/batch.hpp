#pragma once

#include "arborflow/catalysts.hpp"
#include "arborflow/tree.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arborflow {

/// Outcome of a batch verification kernel. Every kernel exists in a serial
/// reference version and an OpenMP version selected by the `parallel` flag;
/// both produce identical reports (failures sorted, maps merged
/// deterministically).
struct BatchReport {
    std::uint64_t items = 0; // units checked: trees, classes, arrowflows, ...
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && items > 0; }
};

/// det M(T) == (-1)^{n-1}(n-1)2^{n-2} for every labeled tree on n vertices
/// (Prufer sweep; guarded to n <= 8 by the tree enumerator).
BatchReport gp_exhaustive_check(int n, bool parallel);

/// Same check on `count` random trees on n vertices.
BatchReport gp_random_check(int n, int count, std::uint64_t seed, bool parallel);

/// Symbolic q-determinant == (-1)^{n-1}(n-1)(1+q)^{n-2} for every labeled
/// tree on n vertices.
BatchReport q_det_check(int n, bool parallel);

/// Per-arrowflow statistics of the catalyst partition.
struct ClassStat {
    FlowClass cls = FlowClass::Disconnected;
    std::uint64_t size = 0;
    long long signed_sum = 0;
};

using PartitionSummary = std::map<std::vector<Arc>, ClassStat>;

/// Classified signed sums of the full catalyst partition, sharded over
/// derangements when parallel.
PartitionSummary partition_summary(const Tree& t, bool parallel);

/// Checks the signed class sums on one tree: each unital class sums to
/// (-1)^{n-1}, each zero-sum class to 0, the unital keys are exactly the
/// (n-1)2^{n-2} unital arrowflows, and the grand total matches the closed
/// form.
BatchReport class_sum_check(const Tree& t, bool parallel);

/// Streams every catalyst with a zero-sum arrowflow through the class
/// involution and checks: validity, fixed-point-freeness, sign reversal,
/// involutivity, and class preservation.
BatchReport involution_check(const Tree& t, bool parallel, bool check_weights = false);

/// For every unital arrowflow of the tree: builds the route map and checks
/// that the canonical family is a non-intersecting full family whose
/// permutation is an n-cycle of sign (-1)^{n-1}.
BatchReport nip_check(const Tree& t, bool parallel);

/// For every catalyst of every unital class: lift, check full family and
/// sign, project back, and compare the symbolic weight of the catalyst with
/// the weight of its lift.
BatchReport lifting_check(const Tree& t, bool parallel);

} // namespace arborflow
