// Operator algebra: evaluable mappings of R^d with class metadata, the
// half-averaging transform that carries a strict pseudocontraction into the
// projection framework, and the compositions used by the relaxed variants.
#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "tproj/convex_set.hpp"
#include "tproj/vector.hpp"

namespace tproj {

enum class MapClassKind {
    Untagged,
    StrictPseudocontraction,  // param = kappa in [0,1)
    Pseudocontractive,        // kappa = 1
    Nonexpansive,
    MonotoneLipschitz,        // param = Lipschitz constant k > 0
    QuasiNonexpansiveFor,     // relative to the mapping's fixed_set
};

struct ClassTag {
    MapClassKind kind = MapClassKind::Untagged;
    double param = 0.0;
};

ClassTag tag_spc(double kappa);
ClassTag tag_monotone_lipschitz(double k);

// Known fixed-point set, either in closed form or as a finite point list.
using FixedSetOracle = std::variant<ConvexSet, std::vector<Vector>>;

struct Mapping {
    std::function<Vector(const Vector&)> f;  // must be pure
    int dim = 0;
    ClassTag tag;
    std::optional<FixedSetOracle> fixed_set;
};

Vector eval(const Mapping& q, const Vector& x);

Mapping identity_map(int dim);

// T with 2T - I = kappa I + (1-kappa) Q, i.e.
// T(x) = ((1+kappa)/2) x + ((1-kappa)/2) Q(x). Fix(T) = Fix(Q).
// Requires Q tagged as a strict pseudocontraction and kappa in [0,1).
Mapping t_from_q(const Mapping& q, double kappa);

// The same transform written through R(x) = alpha x + (1-alpha) Q(x):
// T(x) = (x + R(x))/2 + ((kappa-alpha)/(1-alpha)) (x - R(x))/2.
// Pointwise equal to t_from_q for every alpha in (kappa, 1); kept as a
// separate route purely so that equality can be tested.
Mapping t_from_q_alpha_form(const Mapping& q, double kappa, double alpha);

// alpha x + (1-alpha) S(x) for nonexpansive S, alpha in [0,1).
Mapping averaged_map(const Mapping& s, double alpha);

// (T(x) + x) / 2
Mapping halve_shift(const Mapping& t);

// x -> R(T(x))
Mapping compose(const Mapping& r, const Mapping& t);

// Variational-inequality data: constraint set C, monotone k-Lipschitz
// operator A, and the admissible step window lambda*k in [a,b] in (0,1).
class VIInstance {
public:
    VIInstance(ConvexSet c, Mapping a, double lambda_lo, double lambda_hi);

    const ConvexSet& constraint() const { return c_; }
    const Mapping& op() const { return a_; }
    double lipschitz() const { return a_.tag.param; }
    double bound_lo() const { return lo_; }
    double bound_hi() const { return hi_; }

    // Throws std::invalid_argument unless lambda * k lies in [a, b].
    void require_admissible(double lambda) const;

private:
    ConvexSet c_;
    Mapping a_;
    double lo_, hi_;
};

// One-stage step P_C(x - lambda A(x)); its fixed points solve the
// variational inequality on C.
Vector extragradient_t1(const VIInstance& inst, double lambda, const Vector& x);

// Two-stage step P_C(x - lambda A(T1(x))).
Vector extragradient_t2(const VIInstance& inst, double lambda, const Vector& x);

Mapping extragradient_t1_map(const VIInstance& inst, double lambda);
Mapping extragradient_t2_map(const VIInstance& inst, double lambda);

}  // namespace tproj
