#include "arborflow/batch.hpp"
#include "arborflow/formulas.hpp"

#include "doctest.h"

using namespace arborflow;

namespace {

bool same_report(const BatchReport& a, const BatchReport& b) {
    return a.items == b.items && a.failures == b.failures;
}

} // namespace

TEST_SUITE("batch") {

TEST_CASE("exhaustive distance-determinant sweep") {
    BatchReport r = gp_exhaustive_check(4, false);
    CHECK(r.items == 16);
    CHECK(r.ok());
    CHECK(same_report(r, gp_exhaustive_check(4, true)));
    CHECK_THROWS_AS(gp_exhaustive_check(9, false), std::invalid_argument);
}

TEST_CASE("random distance-determinant sweep is seed-deterministic") {
    BatchReport a = gp_random_check(15, 25, 7, false);
    BatchReport b = gp_random_check(15, 25, 7, true);
    CHECK(a.items == 25);
    CHECK(a.ok());
    CHECK(same_report(a, b));
    CHECK(same_report(a, gp_random_check(15, 25, 7, false)));
}

TEST_CASE("symbolic q-determinant sweep") {
    BatchReport r = q_det_check(4, false);
    CHECK(r.items == 16);
    CHECK(r.ok());
    CHECK(same_report(r, q_det_check(4, true)));
}

TEST_CASE("partition summary matches the materialized partition") {
    Tree t(5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}});
    PartitionSummary summary = partition_summary(t, false);
    CHECK(same_report(BatchReport{}, BatchReport{})); // silence unused warnings
    auto partition = arrowflow_partition(t);
    REQUIRE(summary.size() == partition.size());
    std::uint64_t total = 0;
    for (const auto& [key, cls] : partition) {
        auto it = summary.find(key);
        REQUIRE(it != summary.end());
        CHECK(it->second.size == cls.size());
        CHECK(BigInt(static_cast<long>(it->second.signed_sum)) == class_signed_sum(cls));
        CHECK(it->second.cls == classify_arrowflow(t, key).cls);
        total += cls.size();
    }
    CHECK(total == count_catalysts(t));
    // Parallel merge lands on the identical map.
    PartitionSummary par = partition_summary(t, true);
    REQUIRE(par.size() == summary.size());
    for (const auto& [key, stat] : summary) {
        auto it = par.find(key);
        REQUIRE(it != par.end());
        CHECK(it->second.size == stat.size);
        CHECK(it->second.signed_sum == stat.signed_sum);
        CHECK(it->second.cls == stat.cls);
    }
}

TEST_CASE("class-sum kernel on small trees") {
    for_each_tree(4, [](const Tree& t) {
        BatchReport r = class_sum_check(t, false);
        CHECK(r.ok());
        CHECK(same_report(r, class_sum_check(t, true)));
    });
}

TEST_CASE("involution kernel with symbolic weights") {
    Tree t(5, {{1, 2}, {1, 3}, {1, 4}, {4, 5}});
    BatchReport r = involution_check(t, false, true);
    CHECK(r.items == 44); // derangements of 5
    CHECK(r.ok());
    CHECK(same_report(r, involution_check(t, true, true)));
}

TEST_CASE("canonical family kernel") {
    Tree t(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    BatchReport r = nip_check(t, false);
    CHECK(r.items == 32); // (n-1) 2^{n-2}
    CHECK(r.ok());
    CHECK(same_report(r, nip_check(t, true)));
}

TEST_CASE("lifting kernel") {
    Tree t(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
    BatchReport r = lifting_check(t, false);
    CHECK(r.items == 32); // unital classes
    CHECK(r.ok());
    CHECK(same_report(r, lifting_check(t, true)));
    std::vector<Edge> long_path;
    for (int v = 1; v < 7; ++v) long_path.push_back({v, v + 1});
    CHECK_THROWS_AS(lifting_check(Tree(7, long_path), false), std::invalid_argument);
}

TEST_CASE("kernels surface failures instead of hiding them") {
    // A direct probe of the reporting path: the random GP kernel on n = 2 has
    // dets equal to -1; check items and emptiness rather than forcing a failure.
    BatchReport r = gp_random_check(2, 3, 1, false);
    CHECK(r.items == 3);
    CHECK(r.failures.empty());
    CHECK(r.ok());
    BatchReport empty;
    CHECK_FALSE(empty.ok()); // zero items is not a pass
}

} // TEST_SUITE
