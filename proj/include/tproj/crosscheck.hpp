// Batch cross-validation suites: closed-form projection against the
// brute-force QP oracle, the relaxed-cut set identity and step equivalence,
// and the analytic-versus-grid check for variational inequality solutions.
#pragma once

#include <cstdint>
#include <string>

#include "tproj/parallel.hpp"

namespace tproj {

struct CrosscheckSummary {
    std::string suite;
    std::int64_t n_cases = 0;
    double max_discrepancy = 0.0;
    std::int64_t failures = 0;
    bool passed() const { return failures == 0; }
};

// Random (x, y, z) triples across dimensions [dim_lo, dim_hi]:
// haugazeau_project must match qp_project_oracle to `tol` and both must
// flag the same empty-intersection cases.
CrosscheckSummary crosscheck_haugazeau_vs_qp(std::int64_t cases, int dim_lo, int dim_hi,
                                             std::uint64_t seed, double tol = 1e-9,
                                             ExecPolicy policy = ExecPolicy::Parallel);

// Random relaxed-projection steps with random certified linear strict
// pseudocontractions. Per step: `probes` membership probes comparing the
// quadratic cut with the half-space form (band tol 1e-9), and the explicit
// QP-backed step against the closed-form step (tol 1e-8) for `n_alphas`
// distinct relaxation values.
CrosscheckSummary crosscheck_lemma1_membership(std::int64_t steps, std::int64_t probes,
                                               int n_alphas, std::uint64_t seed,
                                               ExecPolicy policy = ExecPolicy::Parallel);

// Built-in affine variational-inequality instances with analytic solutions:
// the grid oracle must land within two cells of each.
CrosscheckSummary crosscheck_vi_oracle(int resolution,
                                       ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace tproj
