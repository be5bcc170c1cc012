#include "tproj/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "tproj/convex_set.hpp"
#include "tproj/iteration.hpp"
#include "tproj/linalg.hpp"
#include "tproj/problems.hpp"
#include "tproj/rng.hpp"

namespace tproj {

namespace {

struct TripleCase {
    Vector x, y, z;
};

TripleCase make_triple(std::uint64_t seed, std::int64_t i, int dim_lo, int dim_hi) {
    const int span = dim_hi - dim_lo + 1;
    const int d = dim_lo + static_cast<int>(i % span);
    const auto idx = static_cast<std::uint64_t>(i);
    return {sample_box(seed, idx, 0, d, 5.0), sample_box(seed, idx, 1, d, 5.0),
            sample_box(seed, idx, 2, d, 5.0)};
}

// Discrepancy of one triple; returns infinity when exactly one of the two
// routes reports an empty intersection.
double triple_discrepancy(const TripleCase& t) {
    std::optional<Vector> closed, brute;
    try {
        closed = haugazeau_project(t.x, t.y, t.z);
    } catch (const EmptyIntersectionError&) {
    }
    std::vector<HalfSpace> cuts;
    const ConvexSet first = halfspace_from_pair(t.x, t.y);
    if (const auto* h = std::get_if<HalfSpace>(&first)) cuts.push_back(*h);
    const ConvexSet second = halfspace_from_pair(t.y, t.z);
    if (const auto* h = std::get_if<HalfSpace>(&second)) cuts.push_back(*h);
    try {
        brute = qp_project_oracle(cuts, t.x);
    } catch (const EmptyIntersectionError&) {
    }
    if (closed.has_value() != brute.has_value()) {
        return std::numeric_limits<double>::infinity();
    }
    if (!closed) return 0.0;
    return dist(*closed, *brute);
}

}  // namespace

CrosscheckSummary crosscheck_haugazeau_vs_qp(std::int64_t cases, int dim_lo, int dim_hi,
                                             std::uint64_t seed, double tol,
                                             ExecPolicy policy) {
    CrosscheckSummary s;
    s.suite = "haugazeau-vs-qp";
    s.n_cases = cases;
    const IndexedValue worst = reduce_max_indexed(
        cases,
        [&](std::int64_t i) { return triple_discrepancy(make_triple(seed, i, dim_lo, dim_hi)); },
        policy);
    s.max_discrepancy = worst.value;
    s.failures = count_indexed(
        cases,
        [&](std::int64_t i) {
            return triple_discrepancy(make_triple(seed, i, dim_lo, dim_hi)) > tol;
        },
        policy);
    return s;
}

namespace {

// Random linear strict pseudocontraction: entries in [-1.5, 1.5], rescaled
// so the largest eigenvalue of the symmetric part stays below 0.9 (which
// keeps the sampled contraction ratio strictly under 1).
Matrix random_spc_matrix(std::uint64_t seed, std::int64_t i, int d) {
    Matrix m(d, d);
    const auto idx = static_cast<std::uint64_t>(i);
    const Vector entries = sample_box(seed, idx, 3, d * d, 1.5);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = entries[r * d + c];
    const Matrix sym = 0.5 * (m + m.transpose());
    const double lam = symmetric_max_eigenvalue(sym);
    if (lam > 0.9) m = (0.9 / lam) * m;
    return m;
}

struct StepCaseResult {
    double step_discrepancy = 0.0;
    std::int64_t disagreements = 0;
};

StepCaseResult run_step_case(std::uint64_t seed, std::int64_t i, std::int64_t probes,
                             int n_alphas) {
    const int d = 2 + static_cast<int>(i % 3);
    const Matrix m = random_spc_matrix(seed, i, d);
    const Mapping q = make_linear_spc(m);
    const double kappa = q.tag.param;
    const auto idx = static_cast<std::uint64_t>(i);
    const Vector x0 = sample_box(seed, idx, 4, d, 3.0);
    const Vector xn = sample_box(seed, idx, 5, d, 3.0);

    const Mapping t = t_from_q(q, kappa);
    const Vector txn = eval(t, xn);
    const Vector qxn = eval(q, xn);
    const Vector closed = haugazeau_project(x0, xn, txn);

    StepCaseResult out;
    for (int a = 0; a < n_alphas; ++a) {
        const double frac = (a + 1.0) / (n_alphas + 1.0);
        const double alpha = kappa + frac * (1.0 - kappa);
        const Vector explicit_step = cq_explicit_step(x0, xn, q, kappa, alpha);
        out.step_discrepancy = std::max(out.step_discrepancy, dist(explicit_step, closed));

        for (std::int64_t p = 0; p < probes; ++p) {
            const Vector z = sample_box(seed ^ 0xabcdef12ULL,
                                        idx * 100003 + static_cast<std::uint64_t>(p), a, d, 6.0);
            const double quad = cq_quadratic_margin(xn, qxn, kappa, alpha, z);
            const double half = inner(z - txn, xn - txn);
            // Disagreement only when both margins are decisive and opposed;
            // probes inside the 1e-9 band are boundary points, not evidence.
            const bool opposed = (quad < -1e-9 && half > 1e-9) || (quad > 1e-9 && half < -1e-9);
            if (opposed) ++out.disagreements;
        }
    }
    return out;
}

}  // namespace

CrosscheckSummary crosscheck_lemma1_membership(std::int64_t steps, std::int64_t probes,
                                               int n_alphas, std::uint64_t seed,
                                               ExecPolicy policy) {
    CrosscheckSummary s;
    s.suite = "lemma1-membership";
    s.n_cases = steps;
    const IndexedValue worst = reduce_max_indexed(
        steps,
        [&](std::int64_t i) { return run_step_case(seed, i, probes, n_alphas).step_discrepancy; },
        policy);
    s.max_discrepancy = worst.value;
    s.failures = count_indexed(
        steps,
        [&](std::int64_t i) {
            const StepCaseResult r = run_step_case(seed, i, probes, n_alphas);
            return r.disagreements > 0 || r.step_discrepancy > 1e-8;
        },
        policy);
    return s;
}

CrosscheckSummary crosscheck_vi_oracle(int resolution, ExecPolicy policy) {
    CrosscheckSummary s;
    s.suite = "vi-oracle";

    struct Case {
        Matrix m;
        Vector q;
        ConvexSet c;
        Vector expected;
    };
    const std::vector<Case> cases = {
        // shifted identity: solution pinned to the corner of the box
        {Matrix{{1.0, 0.0}, {0.0, 1.0}}, Vector{-2.0, -2.0},
         ConvexSet{Box(Vector{0.0, 0.0}, Vector{1.0, 1.0})}, Vector{1.0, 1.0}},
        // skew rotation field with an interior zero
        {Matrix{{0.0, 1.0}, {-1.0, 0.0}}, Vector{0.5, -0.5},
         ConvexSet{Box(Vector{-1.0, -1.0}, Vector{1.0, 1.0})}, Vector{-0.5, -0.5}},
        // same field shifted onto the horizontal axis
        {Matrix{{0.0, 1.0}, {-1.0, 0.0}}, Vector{0.0, -0.5},
         ConvexSet{Box(Vector{-1.0, -1.0}, Vector{1.0, 1.0})}, Vector{-0.5, 0.0}},
    };

    s.n_cases = static_cast<std::int64_t>(cases.size());
    for (const Case& cs : cases) {
        Mapping a;
        a.dim = 2;
        Matrix m = cs.m;
        Vector q = cs.q;
        a.f = [m, q](const Vector& x) { return m.apply(x) + q; };
        a.tag = tag_monotone_lipschitz(spectral_norm(m));
        const Vector got = vi_grid_oracle(cs.c, a, resolution, policy);
        const double cell = grid_cell_size(cs.c, resolution);
        double off = 0.0;
        for (int i = 0; i < 2; ++i) off = std::max(off, std::abs(got[i] - cs.expected[i]));
        s.max_discrepancy = std::max(s.max_discrepancy, off);
        if (off > 2.0 * cell) ++s.failures;
    }
    return s;
}

}  // namespace tproj
