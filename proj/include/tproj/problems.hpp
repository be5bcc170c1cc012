// Problem generators with independently known solutions, plus the
// brute-force grid oracle for variational inequalities. This layer is the
// ground truth the convergence tests measure against.
#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "tproj/certify.hpp"
#include "tproj/iteration.hpp"
#include "tproj/linalg.hpp"
#include "tproj/mapping.hpp"
#include "tproj/parallel.hpp"

namespace tproj {

struct FixedPointFamilyKind {
    double kappa = 0.0;
    std::optional<FixedSetOracle> fix_set;
};

struct VIKind {
    Mapping a;
    double k = 0.0;
};

struct ComposedVIKind {
    Mapping a;
    double k = 0.0;
    Mapping s;  // nonexpansive factor composed after the two-stage step
};

using ProblemKind = std::variant<FixedPointFamilyKind, VIKind, ComposedVIKind>;

struct ProblemInstance {
    int dim = 0;
    ConvexSet c{WholeSpace(1)};
    std::function<Mapping(long)> family;
    ProblemKind kind;
    std::optional<OracleTarget> oracle_solution;
};

// Worst observed ratio (|Mw|^2 - |w|^2) / |(I-M)w|^2 over sampled
// directions: the smallest kappa the sampled data admits. Constant on rays,
// so direction sampling is exact for linear maps up to the sample density.
double estimate_kappa(const Matrix& m, std::int64_t n_samples = 2000,
                      std::uint64_t seed = 17);

// Q(x) = M x + shift, tagged StrictPseudocontraction with kappa set to the
// sampled estimate inflated by 5% (clamped below 1) as a certifier margin.
// The fixed set is the solution set of (M - I) x = -shift via an
// orthonormal kernel basis; omitted when that system is inconsistent.
// Rejects matrices whose sampled ratio reaches 1.
Mapping make_affine_spc(const Matrix& m, const Vector& shift);
Mapping make_linear_spc(const Matrix& m);

// Projection onto a set as a nonexpansive mapping (fixed set: the set).
Mapping projection_map(const ConvexSet& s);

// A(x) = M x + q on C. k is the spectral norm of M (power iteration);
// monotonicity is certified by sampling and failures are rejected. The
// oracle solution is the zero of A when it is strictly interior to C,
// otherwise the grid oracle's answer (bounded C, dim <= 3 only) at the
// given resolution.
ProblemInstance make_affine_vi(const Matrix& m, const Vector& q, const ConvexSet& c,
                               int oracle_resolution = 201);

// Convex combinations Q_n = sum_i w_i(n) S_i of strict pseudocontractions.
// Tagged with kappa = max_i kappa_i; the declared fixed set is the
// intersection of the factors' fixed sets.
std::function<Mapping(long)> make_family(
    const std::vector<Mapping>& maps,
    const std::function<std::vector<double>(long)>& weights, double weight_floor = 1e-6);

// Intersection of the declared fixed sets of a list of mappings, when all
// of them are representable (point lists, affine subspaces, hyperplanes,
// whole spaces). nullopt when any factor lacks an oracle or the
// intersection has no closed form here; an empty point list is a genuinely
// empty intersection.
std::optional<FixedSetOracle> intersect_fixed_sets(const std::vector<Mapping>& maps);

// Brute-force solution of the variational inequality on a bounded set:
// minimizes the defect phi(u) = max_{v in grid cap C} <A(u), u - v> over a
// resolution^d grid on C's bounding box intersected with C, then refines
// once on a +-1-cell window around the coarse argmin. Ties break to the
// first point in lexicographic scan order. Requires dim <= 3 and bounded C.
Vector vi_grid_oracle(const ConvexSet& c, const Mapping& a, int resolution,
                      ExecPolicy policy = ExecPolicy::Parallel);

// Edge length of one grid cell of the oracle at this resolution (largest
// over axes); the oracle's answer is accurate to a small multiple of this.
double grid_cell_size(const ConvexSet& c, int resolution);

// Bounding box of a bounded set; throws for unbounded variants.
Box bounding_box(const ConvexSet& c);

}  // namespace tproj
