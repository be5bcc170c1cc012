#include "tproj/convex_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace tproj {

namespace {

constexpr double kOrthonormalTol = 1e-10;
// Gram determinant guard for the Haugazeau case split.
constexpr double kGramGuard = 1e-14;

// Extended-precision scalar for the two projection kernels. The Gram
// determinant mu*nu - pi^2 cancels almost completely for nearly collinear
// data while the projection itself grows like 1/rho; products of doubles
// are exact in quad precision, which keeps both routes accurate to the
// final double rounding even on thin-wedge inputs.
#if defined(__SIZEOF_FLOAT128__)
using Quad = __float128;
#else
using Quad = long double;
#endif

Quad q_abs(Quad x) { return x < 0 ? -x : x; }

Quad dot_q(const Vector& u, const Vector& v) {
    Quad s = 0;
    for (int i = 0; i < u.dim(); ++i) {
        s += static_cast<Quad>(u[i]) * static_cast<Quad>(v[i]);
    }
    return s;
}

}  // namespace

WholeSpace::WholeSpace(int d) : dim(d) {
    if (d < 1) throw std::invalid_argument("WholeSpace: dimension must be >= 1");
}

Box::Box(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi)) {
    require_same_dim(lower, upper);
    for (int i = 0; i < lower.dim(); ++i) {
        if (lower[i] > upper[i]) {
            throw std::invalid_argument("Box: lower bound exceeds upper bound");
        }
    }
}

Ball::Ball(Vector c, double r) : center(std::move(c)), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("Ball: radius must be positive");
    }
}

HalfSpace::HalfSpace(Vector n, double o) : normal(std::move(n)), offset(o) {
    if (!(norm(normal) > 0.0)) {
        throw std::invalid_argument("HalfSpace: normal must be nonzero");
    }
    if (!std::isfinite(o)) throw std::invalid_argument("HalfSpace: offset not finite");
}

Hyperplane::Hyperplane(Vector n, double o) : normal(std::move(n)), offset(o) {
    if (!(norm(normal) > 0.0)) {
        throw std::invalid_argument("Hyperplane: normal must be nonzero");
    }
    if (!std::isfinite(o)) throw std::invalid_argument("Hyperplane: offset not finite");
}

AffineSubspace::AffineSubspace(Vector p, std::vector<Vector> dirs)
    : basepoint(std::move(p)), directions(std::move(dirs)) {
    for (std::size_t i = 0; i < directions.size(); ++i) {
        require_same_dim(basepoint, directions[i]);
        for (std::size_t j = 0; j <= i; ++j) {
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(inner(directions[i], directions[j]) - want) > kOrthonormalTol) {
                throw std::invalid_argument(
                    "AffineSubspace: directions not orthonormal");
            }
        }
    }
}

int set_dim(const ConvexSet& s) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, WholeSpace>) return v.dim;
            else if constexpr (std::is_same_v<T, Box>) return v.lower.dim();
            else if constexpr (std::is_same_v<T, Ball>) return v.center.dim();
            else if constexpr (std::is_same_v<T, AffineSubspace>) return v.basepoint.dim();
            else return v.normal.dim();
        },
        s);
}

Vector project(const ConvexSet& s, const Vector& x) {
    if (set_dim(s) != x.dim()) throw std::invalid_argument("project: dimension mismatch");
    return std::visit(
        [&x](const auto& v) -> Vector {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                return x;
            } else if constexpr (std::is_same_v<T, Box>) {
                std::vector<double> out(static_cast<std::size_t>(x.dim()));
                for (int i = 0; i < x.dim(); ++i) {
                    out[static_cast<std::size_t>(i)] =
                        std::min(std::max(x[i], v.lower[i]), v.upper[i]);
                }
                return Vector(std::move(out));
            } else if constexpr (std::is_same_v<T, Ball>) {
                const Vector r = x - v.center;
                const double d = norm(r);
                if (d <= v.radius) return x;
                return v.center + (v.radius / d) * r;
            } else if constexpr (std::is_same_v<T, HalfSpace>) {
                const double viol = inner(v.normal, x) - v.offset;
                if (viol <= 0.0) return x;
                return x - (viol / inner(v.normal, v.normal)) * v.normal;
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                const double gap = inner(v.normal, x) - v.offset;
                return x - (gap / inner(v.normal, v.normal)) * v.normal;
            } else {  // AffineSubspace
                Vector out = v.basepoint;
                const Vector r = x - v.basepoint;
                for (const Vector& e : v.directions) {
                    out = out + inner(r, e) * e;
                }
                return out;
            }
        },
        s);
}

bool contains(const ConvexSet& s, const Vector& x, double tol) {
    if (set_dim(s) != x.dim()) throw std::invalid_argument("contains: dimension mismatch");
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                return true;
            } else if constexpr (std::is_same_v<T, Box>) {
                for (int i = 0; i < x.dim(); ++i) {
                    if (v.lower[i] - x[i] > tol || x[i] - v.upper[i] > tol) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, Ball>) {
                return norm(x - v.center) - v.radius <= tol;
            } else if constexpr (std::is_same_v<T, HalfSpace>) {
                return inner(v.normal, x) - v.offset <= tol;
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                return std::abs(inner(v.normal, x) - v.offset) <= tol;
            } else {
                return norm(x - project(s, x)) <= tol;
            }
        },
        s);
}

ConvexSet halfspace_from_pair(const Vector& x, const Vector& y) {
    require_same_dim(x, y);
    const Vector n = x - y;
    if (norm(n) == 0.0) return WholeSpace(x.dim());
    return HalfSpace(n, inner(n, y));
}

Vector haugazeau_project(const Vector& x, const Vector& y, const Vector& z) {
    require_same_dim(x, y);
    require_same_dim(y, z);
    const Vector xy = x - y;
    const Vector zy = z - y;
    const Quad pi = -dot_q(xy, zy);  // <x-y, y-z>
    const Quad mu = dot_q(xy, xy);
    const Quad nu = dot_q(zy, zy);
    const Quad rho = mu * nu - pi * pi;
    if (rho <= static_cast<Quad>(kGramGuard) * mu * nu) {
        if (pi >= 0) return z;
        throw EmptyIntersectionError(
            "haugazeau_project: H(x,y) and H(y,z) do not intersect");
    }
    if (pi * nu >= rho) {
        const double c = static_cast<double>(1 + pi / nu);
        return x + c * zy;
    }
    const Quad s = nu / rho;
    std::vector<double> out(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<double>(
            static_cast<Quad>(y[i]) +
            s * (pi * static_cast<Quad>(xy[i]) + mu * static_cast<Quad>(zy[i])));
    }
    return Vector(std::move(out));
}

namespace {

using QVec = std::vector<Quad>;

Quad dot_qq(const QVec& u, const QVec& v) {
    Quad s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

// Orthogonalized form of the active equality system <n_i, z> = o_i: the
// same set rewritten as { z : <q_j, z> = b_j } with pairwise-orthogonal
// (not normalized, so no square roots in quad precision) q_j. Returns false
// when the subset is inconsistent (no such z exists).
bool orthogonalize_system(const std::vector<HalfSpace>& constraints,
                          const std::vector<int>& active, std::vector<QVec>* qs,
                          std::vector<Quad>* qnorm2, std::vector<Quad>* bs) {
    for (int idx : active) {
        const Vector& n = constraints[static_cast<std::size_t>(idx)].normal;
        const Quad o = static_cast<Quad>(constraints[static_cast<std::size_t>(idx)].offset);
        QVec r(n.coords().begin(), n.coords().end());
        const Quad n2 = dot_qq(r, r);
        Quad implied = 0;
        for (std::size_t j = 0; j < qs->size(); ++j) {
            const Quad c = dot_qq(r, (*qs)[j]) / (*qnorm2)[j];
            for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * (*qs)[j][i];
            implied += c * (*bs)[j];
        }
        const Quad r2 = dot_qq(r, r);
        if (r2 <= static_cast<Quad>(1e-24) * n2) {
            // Dependent row: feasible only if the processed rows imply it.
            if (q_abs(o - implied) > static_cast<Quad>(1e-9) * (1 + q_abs(o))) {
                return false;
            }
            continue;
        }
        qs->push_back(std::move(r));
        qnorm2->push_back(r2);
        bs->push_back(o - implied);
    }
    return true;
}

}  // namespace

Vector qp_project_oracle(const std::vector<HalfSpace>& constraints,
                         const Vector& x) {
    for (const HalfSpace& h : constraints) require_same_dim(h.normal, x);
    const int m = static_cast<int>(constraints.size());
    if (m > 16) throw std::invalid_argument("qp_project_oracle: too many constraints");

    double scale = 1.0;
    for (const HalfSpace& h : constraints) {
        scale = std::max(scale, std::abs(h.offset) / std::max(norm(h.normal), 1e-300));
    }
    scale = std::max(scale, norm(x));
    const double feas_tol = 1e-9 * (1.0 + scale);

    bool found = false;
    Vector best;
    double best_dist = std::numeric_limits<double>::infinity();

    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> active;
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i)) active.push_back(i);
        }
        std::vector<QVec> qs;
        std::vector<Quad> qnorm2, bs;
        if (!orthogonalize_system(constraints, active, &qs, &qnorm2, &bs)) continue;

        QVec acc(x.coords().begin(), x.coords().end());
        for (std::size_t j = 0; j < qs.size(); ++j) {
            Quad qx = 0;
            for (int i = 0; i < x.dim(); ++i) qx += qs[j][static_cast<std::size_t>(i)] * x[i];
            const Quad step = (bs[j] - qx) / qnorm2[j];
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += step * qs[j][i];
        }
        std::vector<double> zc(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) zc[i] = static_cast<double>(acc[i]);
        const Vector z{std::move(zc)};

        bool feasible = true;
        for (const HalfSpace& h : constraints) {
            if (inner(h.normal, z) - h.offset > feas_tol * std::max(1.0, norm(h.normal))) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        const double d = dist(x, z);
        if (d < best_dist) {
            best_dist = d;
            best = z;
            found = true;
        }
    }

    if (!found) {
        throw EmptyIntersectionError("qp_project_oracle: no feasible candidate");
    }
    return best;
}

}  // namespace tproj
