#include "tproj/iteration.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tproj {

Schedule Schedule::defaults(double kappa, double k, double a, double b, int n_ops) {
    Schedule s;
    const double alpha0 = 0.5 * (kappa + 1.0);
    s.alpha = [alpha0](long) { return alpha0; };
    s.epsilon = 0.5;
    const double lam0 = (k > 0.0) ? 0.5 * (a + b) / k : 0.0;
    s.lambda = [lam0](long) { return lam0; };
    const std::vector<double> w(static_cast<std::size_t>(n_ops > 0 ? n_ops : 1),
                                1.0 / (n_ops > 0 ? n_ops : 1));
    s.weights = [w](long) { return w; };
    return s;
}

void validate_alpha_schedule(const Schedule& s, double kappa, double delta, long horizon) {
    if (!s.alpha) throw std::invalid_argument("schedule: alpha not set");
    for (long n = 0; n < horizon; ++n) {
        const double a = s.alpha(n);
        if (!(a >= kappa + delta && a <= 1.0 - delta)) {
            throw std::invalid_argument("schedule: alpha_n outside [kappa+delta, 1-delta]");
        }
    }
}

void validate_lambda_schedule(const Schedule& s, double k, double a, double b, long horizon) {
    if (!s.lambda) throw std::invalid_argument("schedule: lambda not set");
    for (long n = 0; n < horizon; ++n) {
        const double lk = s.lambda(n) * k;
        if (!(lk >= a && lk <= b)) {
            throw std::invalid_argument("schedule: lambda_n * k outside [a,b]");
        }
    }
}

void validate_weights_schedule(const Schedule& s, double floor, long horizon) {
    if (!s.weights) throw std::invalid_argument("schedule: weights not set");
    for (long n = 0; n < horizon; ++n) {
        const std::vector<double> w = s.weights(n);
        double sum = 0.0;
        for (double wi : w) {
            if (!(wi >= floor)) {
                throw std::invalid_argument("schedule: weight below floor");
            }
            sum += wi;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::invalid_argument("schedule: weights do not sum to 1");
        }
    }
}

void StoppingRule::validate() const {
    if (!(tol_step > 0.0) || !(tol_residual > 0.0) || !(divergence_radius > 0.0)) {
        throw std::invalid_argument("stopping rule: tolerances must be positive");
    }
    if (max_iter < 1) throw std::invalid_argument("stopping rule: max_iter must be >= 1");
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::ConvergedStep: return "ConvergedStep";
        case Outcome::ConvergedResidual: return "ConvergedResidual";
        case Outcome::MaxIter: return "MaxIter";
        case Outcome::Diverged: return "Diverged";
        case Outcome::EmptyIntersection: return "EmptyIntersection";
    }
    return "Unknown";
}

OperatorSchedule constant_schedule(Mapping t) {
    return [t = std::move(t)](long) { return t; };
}

Vector haugazeau_step(const Vector& x0, const Vector& xn, const Mapping& tn) {
    return haugazeau_project(x0, xn, eval(tn, xn));
}

Vector cq_explicit_step(const Vector& x0, const Vector& xn, const Mapping& qn,
                        double kappa, double alpha_n) {
    if (!(alpha_n > kappa && alpha_n < 1.0)) {
        throw std::invalid_argument("cq_explicit_step: alpha_n must be in (kappa, 1)");
    }
    const Mapping tn = t_from_q(qn, kappa);
    std::vector<HalfSpace> cuts;
    const ConvexSet cn = halfspace_from_pair(xn, eval(tn, xn));
    if (const auto* h = std::get_if<HalfSpace>(&cn)) cuts.push_back(*h);
    const ConvexSet dn = halfspace_from_pair(x0, xn);
    if (const auto* h = std::get_if<HalfSpace>(&dn)) cuts.push_back(*h);
    return qp_project_oracle(cuts, x0);
}

double cq_quadratic_margin(const Vector& xn, const Vector& qn_xn, double kappa,
                           double alpha_n, const Vector& z) {
    const Vector yn = combine(alpha_n, xn, 1.0 - alpha_n, qn_xn);
    const Vector res = xn - qn_xn;
    const double gap = (1.0 - alpha_n) * (alpha_n - kappa) * inner(res, res);
    return inner(yn - z, yn - z) - inner(xn - z, xn - z) + gap;
}

Vector mann_step(const Vector& xn, const Mapping& tn, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("mann_step: epsilon must be in (0, 1]");
    }
    const Vector txn = eval(tn, xn);
    return xn + (2.0 - eps) * (txn - xn);
}

namespace {

std::optional<double> oracle_distance(const std::optional<OracleTarget>& oracle,
                                      const Vector& x) {
    if (!oracle) return std::nullopt;
    if (const auto* p = std::get_if<Vector>(&*oracle)) return dist(x, *p);
    const ConvexSet& s = std::get<ConvexSet>(*oracle);
    return dist(x, project(s, x));
}

}  // namespace

IterationTrace run(Driver driver, const Vector& x0, const OperatorSchedule& ops,
                   const Schedule& schedule, const StoppingRule& stop,
                   const std::optional<OracleTarget>& oracle) {
    stop.validate();
    if (driver == Driver::Mann && !(schedule.epsilon > 0.0 && schedule.epsilon <= 1.0)) {
        throw std::invalid_argument("run: epsilon must be in (0, 1]");
    }

    IterationTrace trace;
    Vector x = x0;
    Mapping tn = ops(0);
    Vector tx = eval(tn, x);
    double residual = dist(x, tx);
    trace.records.push_back({0, x, residual, 0.0, oracle_distance(oracle, x)});

    for (long n = 0; n < stop.max_iter; ++n) {
        Vector next;
        try {
            next = (driver == Driver::Haugazeau)
                       ? haugazeau_project(x0, x, tx)
                       : x + (2.0 - schedule.epsilon) * (tx - x);
        } catch (const EmptyIntersectionError&) {
            trace.outcome = Outcome::EmptyIntersection;
            return trace;
        }
        const double step = dist(next, x);
        if (norm(next) > stop.divergence_radius) {
            const Vector tn_next = eval(ops(n + 1), next);
            trace.records.push_back(
                {n + 1, next, dist(next, tn_next), step, oracle_distance(oracle, next)});
            trace.outcome = Outcome::Diverged;
            return trace;
        }
        if (step <= stop.tol_step) {
            trace.outcome = Outcome::ConvergedStep;
            return trace;
        }
        if (residual <= stop.tol_residual) {
            trace.outcome = Outcome::ConvergedResidual;
            return trace;
        }
        x = next;
        tn = ops(n + 1);
        tx = eval(tn, x);
        residual = dist(x, tx);
        trace.records.push_back({n + 1, x, residual, step, oracle_distance(oracle, x)});
    }
    trace.outcome = Outcome::MaxIter;
    return trace;
}

}  // namespace tproj
