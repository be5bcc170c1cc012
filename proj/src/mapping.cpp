#include "tproj/mapping.hpp"

#include <stdexcept>
#include <utility>

namespace tproj {

ClassTag tag_spc(double kappa) {
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw std::invalid_argument("strict pseudocontraction: kappa must be in [0,1)");
    }
    return ClassTag{MapClassKind::StrictPseudocontraction, kappa};
}

ClassTag tag_monotone_lipschitz(double k) {
    if (!(k > 0.0)) {
        throw std::invalid_argument("monotone Lipschitz: k must be positive");
    }
    return ClassTag{MapClassKind::MonotoneLipschitz, k};
}

Vector eval(const Mapping& q, const Vector& x) {
    if (x.dim() != q.dim) throw std::invalid_argument("eval: dimension mismatch");
    Vector out = q.f(x);
    if (out.dim() != q.dim) {
        throw std::invalid_argument("eval: evaluator changed dimension");
    }
    return out;
}

Mapping identity_map(int dim) {
    Mapping m;
    m.f = [](const Vector& x) { return x; };
    m.dim = dim;
    m.tag = ClassTag{MapClassKind::Nonexpansive, 0.0};
    m.fixed_set = FixedSetOracle{ConvexSet{WholeSpace(dim)}};
    return m;
}

Mapping t_from_q(const Mapping& q, double kappa) {
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw std::invalid_argument("t_from_q: kappa must be in [0,1)");
    }
    Mapping t;
    t.dim = q.dim;
    t.f = [qf = q.f, kappa](const Vector& x) {
        return combine(0.5 * (1.0 + kappa), x, 0.5 * (1.0 - kappa), qf(x));
    };
    t.fixed_set = q.fixed_set;  // Fix(T) = Fix(Q)
    return t;
}

Mapping t_from_q_alpha_form(const Mapping& q, double kappa, double alpha) {
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw std::invalid_argument("t_from_q_alpha_form: kappa must be in [0,1)");
    }
    if (!(alpha > kappa && alpha < 1.0)) {
        throw std::invalid_argument("t_from_q_alpha_form: alpha must be in (kappa,1)");
    }
    Mapping t;
    t.dim = q.dim;
    t.f = [qf = q.f, kappa, alpha](const Vector& x) {
        const Vector r = combine(alpha, x, 1.0 - alpha, qf(x));
        const double c = (kappa - alpha) / (1.0 - alpha);
        return combine(0.5, x + r, 0.5 * c, x - r);
    };
    t.fixed_set = q.fixed_set;
    return t;
}

Mapping averaged_map(const Mapping& s, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("averaged_map: alpha must be in [0,1)");
    }
    Mapping m;
    m.dim = s.dim;
    m.f = [sf = s.f, alpha](const Vector& x) {
        return combine(alpha, x, 1.0 - alpha, sf(x));
    };
    m.tag = ClassTag{MapClassKind::Nonexpansive, 0.0};
    m.fixed_set = s.fixed_set;  // Fix unchanged for alpha < 1
    return m;
}

Mapping halve_shift(const Mapping& t) {
    Mapping m;
    m.dim = t.dim;
    m.f = [tf = t.f](const Vector& x) { return combine(0.5, tf(x), 0.5, x); };
    m.fixed_set = t.fixed_set;
    return m;
}

Mapping compose(const Mapping& r, const Mapping& t) {
    if (r.dim != t.dim) throw std::invalid_argument("compose: dimension mismatch");
    Mapping m;
    m.dim = t.dim;
    m.f = [rf = r.f, tf = t.f](const Vector& x) { return rf(tf(x)); };
    return m;
}

VIInstance::VIInstance(ConvexSet c, Mapping a, double lo, double hi)
    : c_(std::move(c)), a_(std::move(a)), lo_(lo), hi_(hi) {
    if (a_.tag.kind != MapClassKind::MonotoneLipschitz || !(a_.tag.param > 0.0)) {
        throw std::invalid_argument("VIInstance: operator must carry a MonotoneLipschitz tag");
    }
    if (set_dim(c_) != a_.dim) {
        throw std::invalid_argument("VIInstance: set/operator dimension mismatch");
    }
    if (!(0.0 < lo_ && lo_ <= hi_ && hi_ < 1.0)) {
        throw std::invalid_argument("VIInstance: require 0 < a <= b < 1");
    }
}

void VIInstance::require_admissible(double lambda) const {
    const double lk = lambda * lipschitz();
    if (!(lk >= lo_ && lk <= hi_)) {
        throw std::invalid_argument("step size: lambda*k outside [a,b]");
    }
}

Vector extragradient_t1(const VIInstance& inst, double lambda, const Vector& x) {
    inst.require_admissible(lambda);
    return project(inst.constraint(), x - lambda * eval(inst.op(), x));
}

Vector extragradient_t2(const VIInstance& inst, double lambda, const Vector& x) {
    inst.require_admissible(lambda);
    const Vector y = project(inst.constraint(), x - lambda * eval(inst.op(), x));
    return project(inst.constraint(), x - lambda * eval(inst.op(), y));
}

Mapping extragradient_t1_map(const VIInstance& inst, double lambda) {
    inst.require_admissible(lambda);
    Mapping m;
    m.dim = inst.op().dim;
    m.f = [inst, lambda](const Vector& x) { return extragradient_t1(inst, lambda, x); };
    return m;
}

Mapping extragradient_t2_map(const VIInstance& inst, double lambda) {
    inst.require_admissible(lambda);
    Mapping m;
    m.dim = inst.op().dim;
    m.f = [inst, lambda](const Vector& x) { return extragradient_t2(inst, lambda, x); };
    return m;
}

}  // namespace tproj
