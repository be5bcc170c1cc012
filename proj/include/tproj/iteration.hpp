// Iteration drivers: the anchor-projection method x_{n+1} = Q(x0, x_n, T_n x_n)
// and the relaxed Mann iteration x_{n+1} = x_n + (2-eps)(T_n x_n - x_n),
// with schedules, stopping rules and per-iteration trace recording.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "tproj/convex_set.hpp"
#include "tproj/mapping.hpp"
#include "tproj/vector.hpp"

namespace tproj {

struct Schedule {
    std::function<double(long)> alpha;                  // relaxation in (kappa, 1)
    double epsilon = 0.5;                               // Mann coefficient, in (0, 1]
    std::function<double(long)> lambda;                 // step sizes, lambda*k in [a,b]
    std::function<std::vector<double>(long)> weights;   // simplex weights, floor > 0

    static Schedule defaults(double kappa, double k, double a, double b, int n_ops);
};

// Configuration-time validation: scans n in [0, horizon).
void validate_alpha_schedule(const Schedule& s, double kappa, double delta, long horizon);
void validate_lambda_schedule(const Schedule& s, double k, double a, double b, long horizon);
void validate_weights_schedule(const Schedule& s, double floor, long horizon);

struct StoppingRule {
    double tol_step = 1e-9;        // on |x_{n+1} - x_n|
    double tol_residual = 1e-8;    // on |x_n - T_n x_n|
    long max_iter = 100000;
    double divergence_radius = 1e6;

    void validate() const;
};

enum class Outcome { ConvergedStep, ConvergedResidual, MaxIter, Diverged, EmptyIntersection };

const char* outcome_name(Outcome o);

struct TraceRecord {
    long n = 0;
    Vector x;
    double residual = 0.0;            // |x_n - T_n x_n|
    double step = 0.0;                // |x_n - x_{n-1}|, 0 at n = 0
    std::optional<double> dist_oracle;
};

struct IterationTrace {
    std::vector<TraceRecord> records;
    Outcome outcome = Outcome::MaxIter;

    const Vector& last() const { return records.back().x; }
    long iterations() const { return static_cast<long>(records.size()) - 1; }
};

using OperatorSchedule = std::function<Mapping(long)>;

OperatorSchedule constant_schedule(Mapping t);

// Target the trace measures distance against: a known point or a set
// (distance to the set is taken through its projection).
using OracleTarget = std::variant<Vector, ConvexSet>;

enum class Driver { Haugazeau, Mann };

// One anchor-projection step: projects the start point x0 onto
// H(x0, xn) n H(xn, Tn xn). Propagates EmptyIntersectionError.
Vector haugazeau_step(const Vector& x0, const Vector& xn, const Mapping& tn);

// The same step computed the long way round, as the projection of x0 onto
// the pair of half-spaces written with the explicit relaxation y_n =
// alpha_n x_n + (1-alpha_n) Q_n x_n, through the brute-force QP oracle.
// Exists to cross-validate haugazeau_step; the two agree for every
// admissible alpha_n because the relaxed cut equals H(x_n, T_n x_n).
Vector cq_explicit_step(const Vector& x0, const Vector& xn, const Mapping& qn,
                        double kappa, double alpha_n);

// Membership margin of z in the relaxed quadratic cut
// { z : |y_n - z|^2 <= |x_n - z|^2 - (1-alpha)(alpha-kappa)|x_n - Q_n x_n|^2 };
// <= 0 means member. Used by the set-identity audits.
double cq_quadratic_margin(const Vector& xn, const Vector& qn_xn, double kappa,
                           double alpha_n, const Vector& z);

// x_n + (2 - eps)(T_n x_n - x_n), eps in (0, 1].
Vector mann_step(const Vector& xn, const Mapping& tn, double eps);

// Runs the chosen driver until a stopping condition fires.
//
// Loop order per iteration: compute the candidate x_{n+1}; stop as Diverged
// if it leaves the divergence ball; stop as ConvergedStep if the step is
// within tol_step (the candidate duplicates x_n and is not recorded); stop
// as ConvergedResidual if the residual at x_n is within tol_residual;
// otherwise record and continue. An EmptyIntersectionError from the
// projection terminates with outcome EmptyIntersection.
IterationTrace run(Driver driver, const Vector& x0, const OperatorSchedule& ops,
                   const Schedule& schedule, const StoppingRule& stop,
                   const std::optional<OracleTarget>& oracle = std::nullopt);

}  // namespace tproj
