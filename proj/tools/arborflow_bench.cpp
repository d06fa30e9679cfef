// Times each batch kernel in its serial reference and OpenMP versions and
// checks that both produce identical reports. On a single-core host the two
// times coincide; the point of the comparison is parity, not speedup.

#include "arborflow/batch.hpp"
#include "arborflow/tree.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace arborflow;
using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

bool same(const BatchReport& x, const BatchReport& y) {
    return x.items == y.items && x.failures == y.failures;
}

int failures = 0;

void row(const char* name, const std::function<BatchReport(bool)>& kernel) {
    auto t0 = Clock::now();
    BatchReport serial = kernel(false);
    auto t1 = Clock::now();
    BatchReport parallel = kernel(true);
    auto t2 = Clock::now();
    bool ok = same(serial, parallel) && serial.failures.empty();
    if (!ok) ++failures;
    std::printf("%-28s %10llu items   serial %8.3fs   parallel %8.3fs   %s\n", name,
                static_cast<unsigned long long>(serial.items), seconds(t0, t1),
                seconds(t1, t2), ok ? "identical" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif

    std::mt19937_64 rng(7);
    Tree t6 = random_tree(6, rng);
    Tree t5 = random_tree(5, rng);

    row("gp exhaustive n=7", [](bool p) { return gp_exhaustive_check(7, p); });
    row("gp random n=20 x100", [](bool p) { return gp_random_check(20, 100, 42, p); });
    row("q determinant n=5", [](bool p) { return q_det_check(5, p); });
    row("class sums, one n=6 tree", [&](bool p) { return class_sum_check(t6, p); });
    row("involutions, one n=6 tree", [&](bool p) { return involution_check(t6, p, false); });
    row("canonical NIP, one n=6 tree", [&](bool p) { return nip_check(t6, p); });
    row("lifting, one n=5 tree", [&](bool p) { return lifting_check(t5, p); });

    if (failures) std::printf("%d kernel(s) disagreed\n", failures);
    return failures == 0 ? 0 : 1;
}
