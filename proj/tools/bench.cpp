// Serial-versus-OpenMP benchmark for the data-parallel kernels: the class
// certifiers, the grid oracle, and the projection cross-check sweep. The
// serial path is the reference implementation; both must agree exactly.
#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tproj/certify.hpp"
#include "tproj/crosscheck.hpp"
#include "tproj/linalg.hpp"
#include "tproj/problems.hpp"

using tproj::ExecPolicy;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s %10.1f ms %10.1f ms   %5.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not available (serial build)\n");
#endif
    std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        const tproj::Matrix m{{-1.0, -0.5}, {0.5, -1.0}};
        const tproj::Mapping q = tproj::make_linear_spc(m);
        tproj::SamplePlan plan;
        plan.dim = 2;
        plan.n_samples = 2000000;
        plan.seed = 42;
        tproj::CertReport a, b;
        const double ts = time_ms([&] {
            a = tproj::certify_strict_pseudocontraction(q, q.tag.param, plan, ExecPolicy::Serial);
        });
        const double tp = time_ms([&] {
            b = tproj::certify_strict_pseudocontraction(q, q.tag.param, plan, ExecPolicy::Parallel);
        });
        row("spc certifier (2e6 pairs)", ts, tp,
            a.worst_margin == b.worst_margin && a.witness_x == b.witness_x);
    }

    {
        const tproj::Matrix m{{0.0, 1.0}, {-1.0, 0.0}};
        tproj::Mapping a;
        a.dim = 2;
        a.f = [m](const tproj::Vector& x) { return m.apply(x) + tproj::Vector{0.5, -0.5}; };
        a.tag = tproj::tag_monotone_lipschitz(1.0);
        const tproj::ConvexSet c{tproj::Box(tproj::Vector{-1.0, -1.0}, tproj::Vector{1.0, 1.0})};
        tproj::Vector us, up;
        const double ts =
            time_ms([&] { us = tproj::vi_grid_oracle(c, a, 101, ExecPolicy::Serial); });
        const double tp =
            time_ms([&] { up = tproj::vi_grid_oracle(c, a, 101, ExecPolicy::Parallel); });
        row("grid oracle (res 101)", ts, tp, us == up);
    }

    {
        tproj::CrosscheckSummary s, p;
        const double ts = time_ms([&] {
            s = tproj::crosscheck_haugazeau_vs_qp(200000, 2, 6, 7, 1e-9, ExecPolicy::Serial);
        });
        const double tp = time_ms([&] {
            p = tproj::crosscheck_haugazeau_vs_qp(200000, 2, 6, 7, 1e-9, ExecPolicy::Parallel);
        });
        row("projection sweep (2e5)", ts, tp,
            s.max_discrepancy == p.max_discrepancy && s.failures == p.failures);
    }
    return 0;
}
