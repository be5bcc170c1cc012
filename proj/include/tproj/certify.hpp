// Sampling-based class certifiers. Class membership of a black-box
// evaluator is not decidable, so each certifier evaluates its defining
// inequality on seeded random pairs and reports the worst violation with a
// witness. Sample i is a pure function of (seed, i) and the reduction is an
// indexed max, so a report is identical for any thread count.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tproj/mapping.hpp"
#include "tproj/parallel.hpp"
#include "tproj/vector.hpp"

namespace tproj {

struct SamplePlan {
    int dim = 2;
    std::int64_t n_samples = 10000;
    double box_radius = 5.0;  // samples drawn uniformly from [-r, r]^dim
    std::uint64_t seed = 0;
};

struct CertReport {
    std::string check;
    bool passed = false;
    std::int64_t n_samples = 0;
    double worst_margin = 0.0;  // positive beyond tolerance means violation
    Vector witness_x, witness_y;
    std::uint64_t seed = 0;
};

// |Qx - Qy|^2 <= |x - y|^2 + kappa |(I-Q)x - (I-Q)y|^2 on sampled pairs.
// Violation tolerance 1e-9 * (1 + radius^2): the inequality is quadratic in
// the data. kappa in [0,1]; kappa = 1 audits the pseudocontractive class.
CertReport certify_strict_pseudocontraction(const Mapping& q, double kappa,
                                            const SamplePlan& plan,
                                            ExecPolicy policy = ExecPolicy::Parallel);

// <Au - Av, u - v> >= 0 and |Au - Av| <= k |u - v| on sampled pairs; the
// reported margin is the larger violation of the two.
CertReport certify_monotone_lipschitz(const Mapping& a, double k,
                                      const SamplePlan& plan,
                                      ExecPolicy policy = ExecPolicy::Parallel);

// |T(x) - y| <= |x - y| + 1e-10 for sampled x and every y in f_points.
CertReport certify_f_quasi_nonexpansive(const Mapping& t,
                                        const std::vector<Vector>& f_points,
                                        const SamplePlan& plan,
                                        ExecPolicy policy = ExecPolicy::Parallel);

// <p - Tx, x - Tx> <= 1e-9 for sampled x and every declared fixed point p,
// i.e. every p lies in H(x, Tx). Each p must actually be fixed by T
// (|T(p) - p| <= 1e-10), otherwise the input is rejected.
CertReport certify_tclass(const Mapping& t, const std::vector<Vector>& fix_points,
                          const SamplePlan& plan,
                          ExecPolicy policy = ExecPolicy::Parallel);

// <A(u), v - u> >= -tol for sampled v in C (samples are projected onto C).
// Audits a claimed solution of the variational inequality.
CertReport certify_vi_solution(const ConvexSet& c, const Mapping& a, const Vector& u,
                               const SamplePlan& plan,
                               ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace tproj
