#include "tproj/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tproj/rng.hpp"

namespace tproj {

namespace {

double quadratic_tol(const SamplePlan& plan) {
    return 1e-9 * (1.0 + plan.box_radius * plan.box_radius);
}

void check_plan(const SamplePlan& plan) {
    if (plan.n_samples < 1) throw std::invalid_argument("certify: n_samples must be >= 1");
    if (plan.dim < 1) throw std::invalid_argument("certify: dim must be >= 1");
    if (!(plan.box_radius > 0.0)) {
        throw std::invalid_argument("certify: box_radius must be positive");
    }
}

template <class MarginFn>
CertReport run_pair_check(const std::string& name, const SamplePlan& plan,
                          double tol, ExecPolicy policy, MarginFn&& margin) {
    const IndexedValue worst = reduce_max_indexed(
        plan.n_samples,
        [&](std::int64_t i) {
            const Vector x = sample_box(plan.seed, static_cast<std::uint64_t>(i), 0,
                                        plan.dim, plan.box_radius);
            const Vector y = sample_box(plan.seed, static_cast<std::uint64_t>(i), 1,
                                        plan.dim, plan.box_radius);
            return margin(x, y);
        },
        policy);
    CertReport rep;
    rep.check = name;
    rep.n_samples = plan.n_samples;
    rep.worst_margin = worst.value;
    rep.passed = worst.value <= tol;
    rep.seed = plan.seed;
    rep.witness_x = sample_box(plan.seed, static_cast<std::uint64_t>(worst.index), 0,
                               plan.dim, plan.box_radius);
    rep.witness_y = sample_box(plan.seed, static_cast<std::uint64_t>(worst.index), 1,
                               plan.dim, plan.box_radius);
    return rep;
}

}  // namespace

CertReport certify_strict_pseudocontraction(const Mapping& q, double kappa,
                                            const SamplePlan& plan,
                                            ExecPolicy policy) {
    check_plan(plan);
    if (!(kappa >= 0.0 && kappa <= 1.0)) {
        throw std::invalid_argument("certify_strict_pseudocontraction: kappa in [0,1]");
    }
    return run_pair_check(
        "strict_pseudocontraction", plan, quadratic_tol(plan), policy,
        [&](const Vector& x, const Vector& y) {
            const Vector qx = eval(q, x);
            const Vector qy = eval(q, y);
            const double lhs = inner(qx - qy, qx - qy);
            const Vector rxy = (x - qx) - (y - qy);
            const double rhs = inner(x - y, x - y) + kappa * inner(rxy, rxy);
            return lhs - rhs;
        });
}

CertReport certify_monotone_lipschitz(const Mapping& a, double k,
                                      const SamplePlan& plan, ExecPolicy policy) {
    check_plan(plan);
    if (!(k > 0.0)) throw std::invalid_argument("certify_monotone_lipschitz: k > 0");
    return run_pair_check(
        "monotone_lipschitz", plan, quadratic_tol(plan), policy,
        [&](const Vector& u, const Vector& v) {
            const Vector du = eval(a, u) - eval(a, v);
            const Vector dv = u - v;
            const double mono_violation = -inner(du, dv);
            const double lip_violation = norm(du) - k * norm(dv);
            return std::max(mono_violation, lip_violation);
        });
}

CertReport certify_f_quasi_nonexpansive(const Mapping& t,
                                        const std::vector<Vector>& f_points,
                                        const SamplePlan& plan, ExecPolicy policy) {
    check_plan(plan);
    if (f_points.empty()) {
        throw std::invalid_argument("certify_f_quasi_nonexpansive: empty F");
    }
    const IndexedValue worst = reduce_max_indexed(
        plan.n_samples,
        [&](std::int64_t i) {
            const Vector x = sample_box(plan.seed, static_cast<std::uint64_t>(i), 0,
                                        plan.dim, plan.box_radius);
            const Vector tx = eval(t, x);
            double m = -std::numeric_limits<double>::infinity();
            for (const Vector& y : f_points) {
                m = std::max(m, dist(tx, y) - dist(x, y));
            }
            return m;
        },
        policy);
    CertReport rep;
    rep.check = "f_quasi_nonexpansive";
    rep.n_samples = plan.n_samples;
    rep.worst_margin = worst.value;
    rep.passed = worst.value <= 1e-10;
    rep.seed = plan.seed;
    rep.witness_x = sample_box(plan.seed, static_cast<std::uint64_t>(worst.index), 0,
                               plan.dim, plan.box_radius);
    const Vector tx = eval(t, rep.witness_x);
    double m = -std::numeric_limits<double>::infinity();
    for (const Vector& y : f_points) {
        const double cand = dist(tx, y) - dist(rep.witness_x, y);
        if (cand > m) {
            m = cand;
            rep.witness_y = y;
        }
    }
    return rep;
}

CertReport certify_tclass(const Mapping& t, const std::vector<Vector>& fix_points,
                          const SamplePlan& plan, ExecPolicy policy) {
    check_plan(plan);
    if (fix_points.empty()) throw std::invalid_argument("certify_tclass: empty fix set");
    for (const Vector& p : fix_points) {
        if (dist(eval(t, p), p) > 1e-10) {
            throw std::invalid_argument("certify_tclass: listed point is not fixed");
        }
    }
    const IndexedValue worst = reduce_max_indexed(
        plan.n_samples,
        [&](std::int64_t i) {
            const Vector x = sample_box(plan.seed, static_cast<std::uint64_t>(i), 0,
                                        plan.dim, plan.box_radius);
            const Vector tx = eval(t, x);
            double m = -std::numeric_limits<double>::infinity();
            for (const Vector& p : fix_points) {
                m = std::max(m, inner(p - tx, x - tx));
            }
            return m;
        },
        policy);
    CertReport rep;
    rep.check = "tclass";
    rep.n_samples = plan.n_samples;
    rep.worst_margin = worst.value;
    rep.passed = worst.value <= 1e-9;
    rep.seed = plan.seed;
    rep.witness_x = sample_box(plan.seed, static_cast<std::uint64_t>(worst.index), 0,
                               plan.dim, plan.box_radius);
    const Vector tx = eval(t, rep.witness_x);
    double m = -std::numeric_limits<double>::infinity();
    for (const Vector& p : fix_points) {
        const double cand = inner(p - tx, rep.witness_x - tx);
        if (cand > m) {
            m = cand;
            rep.witness_y = p;
        }
    }
    return rep;
}

CertReport certify_vi_solution(const ConvexSet& c, const Mapping& a, const Vector& u,
                               const SamplePlan& plan, ExecPolicy policy) {
    check_plan(plan);
    const Vector au = eval(a, u);
    const IndexedValue worst = reduce_max_indexed(
        plan.n_samples,
        [&](std::int64_t i) {
            const Vector raw = sample_box(plan.seed, static_cast<std::uint64_t>(i), 0,
                                          plan.dim, plan.box_radius);
            const Vector v = project(c, raw);
            return -inner(au, v - u);  // violation of <Au, v-u> >= 0
        },
        policy);
    CertReport rep;
    rep.check = "vi_solution";
    rep.n_samples = plan.n_samples;
    rep.worst_margin = worst.value;
    rep.passed = worst.value <= quadratic_tol(plan);
    rep.seed = plan.seed;
    rep.witness_x = project(c, sample_box(plan.seed, static_cast<std::uint64_t>(worst.index),
                                          0, plan.dim, plan.box_radius));
    rep.witness_y = u;
    return rep;
}

}  // namespace tproj
