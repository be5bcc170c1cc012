#include "tproj/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "tproj/rng.hpp"

namespace tproj {

double estimate_kappa(const Matrix& m, std::int64_t n_samples, std::uint64_t seed) {
    if (m.rows() != m.cols()) throw std::invalid_argument("estimate_kappa: square matrix");
    const int d = m.rows();
    double worst = 0.0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const Vector w = sample_box(seed, static_cast<std::uint64_t>(i), 0, d, 1.0);
        const double wn2 = inner(w, w);
        if (wn2 == 0.0) continue;
        const Vector mw = m.apply(w);
        const Vector rw = w - mw;
        const double den = inner(rw, rw);
        if (den <= 1e-12 * wn2) continue;  // direction is (nearly) fixed
        const double num = inner(mw, mw) - wn2;
        worst = std::max(worst, num / den);
    }
    return worst;
}

namespace {

// 5% inflation guards the certifier margin; clamp keeps the tag below 1.
double inflate_kappa(double raw) {
    if (raw <= 0.0) return 0.0;
    return std::min(1.05 * raw, 0.5 * (1.0 + raw));
}

std::optional<FixedSetOracle> affine_fixed_set(const Matrix& m, const Vector& shift) {
    const int d = m.rows();
    const Matrix a = m - Matrix::identity(d);
    const std::optional<Vector> particular = min_norm_solution(a, -1.0 * shift);
    if (!particular) return std::nullopt;  // no fixed points
    std::vector<Vector> kernel = null_space_basis(a);
    return FixedSetOracle{ConvexSet{AffineSubspace(*particular, std::move(kernel))}};
}

}  // namespace

Mapping make_affine_spc(const Matrix& m, const Vector& shift) {
    if (m.rows() != m.cols()) throw std::invalid_argument("make_affine_spc: square matrix");
    if (shift.dim() != m.rows()) {
        throw std::invalid_argument("make_affine_spc: shift dimension mismatch");
    }
    const double raw = estimate_kappa(m);
    if (raw >= 1.0 - 1e-9) {
        throw std::invalid_argument("make_affine_spc: not a strict pseudocontraction");
    }
    Mapping q;
    q.dim = m.rows();
    q.f = [m, shift](const Vector& x) { return m.apply(x) + shift; };
    q.tag = tag_spc(inflate_kappa(raw));
    q.fixed_set = affine_fixed_set(m, shift);
    return q;
}

Mapping make_linear_spc(const Matrix& m) {
    return make_affine_spc(m, Vector::zeros(m.rows()));
}

Mapping projection_map(const ConvexSet& s) {
    Mapping p;
    p.dim = set_dim(s);
    p.f = [s](const Vector& x) { return project(s, x); };
    p.tag = ClassTag{MapClassKind::Nonexpansive, 0.0};
    p.fixed_set = FixedSetOracle{s};
    return p;
}

ProblemInstance make_affine_vi(const Matrix& m, const Vector& q, const ConvexSet& c,
                               int oracle_resolution) {
    if (m.rows() != m.cols() || q.dim() != m.rows() || set_dim(c) != m.rows()) {
        throw std::invalid_argument("make_affine_vi: dimension mismatch");
    }
    const int d = m.rows();
    const double k = spectral_norm(m);
    if (!(k > 0.0)) throw std::invalid_argument("make_affine_vi: zero operator");

    Mapping a;
    a.dim = d;
    a.f = [m, q](const Vector& x) { return m.apply(x) + q; };
    a.tag = tag_monotone_lipschitz(k);

    SamplePlan plan;
    plan.dim = d;
    plan.n_samples = 2000;
    plan.seed = 101;
    const CertReport mono = certify_monotone_lipschitz(a, k, plan);
    if (!mono.passed) {
        throw std::invalid_argument("make_affine_vi: operator failed monotonicity audit");
    }

    ProblemInstance inst;
    inst.dim = d;
    inst.c = c;
    inst.kind = VIKind{a, k};

    // Zero of A strictly inside C solves the inequality outright; otherwise
    // fall back to the grid oracle when the set is small enough to scan.
    std::optional<Vector> zero;
    if (auto u = solve(m, -1.0 * q); u && contains(c, *u, -1e-9)) zero = *u;
    if (zero) {
        inst.oracle_solution = OracleTarget{*zero};
    } else if (d <= 3) {
        try {
            inst.oracle_solution = OracleTarget{vi_grid_oracle(c, a, oracle_resolution)};
        } catch (const std::invalid_argument&) {
            inst.oracle_solution = std::nullopt;  // unbounded set
        }
    }

    if (inst.oracle_solution) {
        const Vector& u = std::get<Vector>(*inst.oracle_solution);
        SamplePlan audit = plan;
        audit.seed = 102;
        // Grid answers are accurate to the cell size; widen the audit
        // tolerance accordingly by shrinking nothing for exact zeros.
        const CertReport vi = certify_vi_solution(c, a, u, audit);
        const double slack =
            zero ? 0.0 : grid_cell_size(c, oracle_resolution) * 4.0 * (1.0 + norm(eval(a, u)));
        if (!vi.passed && vi.worst_margin > slack) {
            throw std::invalid_argument("make_affine_vi: oracle solution failed VI audit");
        }
    }

    // Default driver family: the half-averaged two-stage step at the
    // midpoint admissible step size.
    const double lo = 0.1, hi = 0.9;
    VIInstance vi_inst(c, a, lo, hi);
    const double lambda = 0.5 * (lo + hi) / k;
    inst.family = [vi_inst, lambda](long) {
        return halve_shift(extragradient_t2_map(vi_inst, lambda));
    };
    return inst;
}

namespace {

std::optional<AffineSubspace> as_affine(const ConvexSet& s) {
    if (const auto* w = std::get_if<WholeSpace>(&s)) {
        std::vector<Vector> dirs;
        for (int i = 0; i < w->dim; ++i) {
            std::vector<double> e(static_cast<std::size_t>(w->dim), 0.0);
            e[static_cast<std::size_t>(i)] = 1.0;
            dirs.emplace_back(std::move(e));
        }
        return AffineSubspace(Vector::zeros(w->dim), std::move(dirs));
    }
    if (const auto* a = std::get_if<AffineSubspace>(&s)) return *a;
    if (const auto* h = std::get_if<Hyperplane>(&s)) {
        const Vector base = (h->offset / inner(h->normal, h->normal)) * h->normal;
        return AffineSubspace(base, orthogonal_complement({h->normal}, h->normal.dim()));
    }
    return std::nullopt;
}

}  // namespace

std::optional<FixedSetOracle> intersect_fixed_sets(const std::vector<Mapping>& maps) {
    if (maps.empty()) return std::nullopt;
    const int d = maps.front().dim;

    // A finite candidate list wins: keep the points every factor fixes.
    for (const Mapping& m : maps) {
        if (!m.fixed_set) return std::nullopt;
        if (const auto* pts = std::get_if<std::vector<Vector>>(&*m.fixed_set)) {
            std::vector<Vector> common;
            for (const Vector& p : *pts) {
                bool fixed_by_all = true;
                for (const Mapping& other : maps) {
                    if (dist(eval(other, p), p) > 1e-9) {
                        fixed_by_all = false;
                        break;
                    }
                }
                if (fixed_by_all) common.push_back(p);
            }
            return FixedSetOracle{common};
        }
    }

    // All oracles are sets: intersect the affine ones by stacking the
    // orthogonal-complement constraints of each.
    std::vector<Vector> rows;
    std::vector<double> rhs;
    for (const Mapping& m : maps) {
        const auto aff = as_affine(std::get<ConvexSet>(*m.fixed_set));
        if (!aff) return std::nullopt;
        for (const Vector& c : orthogonal_complement(aff->directions, d)) {
            rows.push_back(c);
            rhs.push_back(inner(c, aff->basepoint));
        }
    }
    if (rows.empty()) return FixedSetOracle{ConvexSet{WholeSpace(d)}};

    Matrix a(static_cast<int>(rows.size()), d);
    std::vector<double> b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int c = 0; c < d; ++c) a.at(static_cast<int>(r), c) = rows[r][c];
        b[r] = rhs[r];
    }
    const std::optional<Vector> particular = min_norm_solution(a, Vector(std::move(b)));
    if (!particular) return FixedSetOracle{std::vector<Vector>{}};  // empty
    return FixedSetOracle{ConvexSet{AffineSubspace(*particular, null_space_basis(a))}};
}

std::function<Mapping(long)> make_family(
    const std::vector<Mapping>& maps,
    const std::function<std::vector<double>(long)>& weights, double weight_floor) {
    if (maps.empty()) throw std::invalid_argument("make_family: no maps");
    if (!(weight_floor > 0.0)) throw std::invalid_argument("make_family: floor must be > 0");
    const int d = maps.front().dim;
    double kappa = 0.0;
    for (const Mapping& s : maps) {
        if (s.dim != d) throw std::invalid_argument("make_family: dimension mismatch");
        switch (s.tag.kind) {
            case MapClassKind::StrictPseudocontraction:
                kappa = std::max(kappa, s.tag.param);
                break;
            case MapClassKind::Nonexpansive:
                break;  // kappa_i = 0
            default:
                throw std::invalid_argument(
                    "make_family: factors must carry a strict-pseudocontraction tag");
        }
    }

    // Intersection of the declared fixed sets, when every factor has one in
    // a form we can intersect (affine subspaces, whole spaces, point lists).
    std::optional<FixedSetOracle> fix = intersect_fixed_sets(maps);

    auto shared = std::make_shared<std::vector<Mapping>>(maps);
    auto family = [shared, weights, weight_floor, d, kappa, fix](long n) {
        const std::vector<double> w = weights(n);
        if (w.size() != shared->size()) {
            throw std::invalid_argument("make_family: weight count mismatch");
        }
        double sum = 0.0;
        for (double wi : w) {
            if (!(wi >= weight_floor)) {
                throw std::invalid_argument("make_family: weight below floor");
            }
            sum += wi;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::invalid_argument("make_family: weights do not sum to 1");
        }
        Mapping q;
        q.dim = d;
        q.tag = tag_spc(kappa);
        q.fixed_set = fix;
        q.f = [shared, w](const Vector& x) {
            Vector acc = Vector::zeros(x.dim());
            for (std::size_t i = 0; i < shared->size(); ++i) {
                acc = acc + w[i] * eval((*shared)[i], x);
            }
            return acc;
        };
        return q;
    };
    return family;
}

Box bounding_box(const ConvexSet& c) {
    if (const auto* b = std::get_if<Box>(&c)) return *b;
    if (const auto* b = std::get_if<Ball>(&c)) {
        std::vector<double> lo(static_cast<std::size_t>(b->center.dim()));
        std::vector<double> hi(static_cast<std::size_t>(b->center.dim()));
        for (int i = 0; i < b->center.dim(); ++i) {
            lo[static_cast<std::size_t>(i)] = b->center[i] - b->radius;
            hi[static_cast<std::size_t>(i)] = b->center[i] + b->radius;
        }
        return Box(Vector(std::move(lo)), Vector(std::move(hi)));
    }
    throw std::invalid_argument("bounding_box: set is not bounded");
}

double grid_cell_size(const ConvexSet& c, int resolution) {
    const Box bb = bounding_box(c);
    double cell = 0.0;
    for (int i = 0; i < bb.lower.dim(); ++i) {
        cell = std::max(cell, (bb.upper[i] - bb.lower[i]) / (resolution - 1));
    }
    return cell;
}

namespace {

struct GridSpec {
    Vector lo, hi;
    int dim;
    int res;
    std::int64_t total;

    Vector point(std::int64_t index) const {
        std::vector<double> out(static_cast<std::size_t>(dim));
        std::int64_t rest = index;
        // axis 0 is the slowest index, so linear order = lexicographic order
        for (int ax = dim - 1; ax >= 0; --ax) {
            const int i = static_cast<int>(rest % res);
            rest /= res;
            const double t = (res == 1) ? 0.0 : static_cast<double>(i) / (res - 1);
            out[static_cast<std::size_t>(ax)] = lo[ax] + t * (hi[ax] - lo[ax]);
        }
        return Vector(std::move(out));
    }
};

GridSpec make_grid(const Vector& lo, const Vector& hi, int res) {
    GridSpec g{lo, hi, lo.dim(), res, 1};
    for (int i = 0; i < g.dim; ++i) g.total *= res;
    return g;
}

std::vector<Vector> members_of(const GridSpec& g, const ConvexSet& c) {
    std::vector<Vector> pts;
    pts.reserve(static_cast<std::size_t>(g.total));
    for (std::int64_t i = 0; i < g.total; ++i) {
        Vector p = g.point(i);
        if (contains(c, p, 1e-9)) pts.push_back(std::move(p));
    }
    return pts;
}

// phi(u) = max_v <A(u), u - v> over the comparison points.
double grid_defect(const Mapping& a, const Vector& u, const std::vector<Vector>& vs) {
    const Vector g = eval(a, u);
    const double gu = inner(g, u);
    double min_gv = std::numeric_limits<double>::infinity();
    for (const Vector& v : vs) min_gv = std::min(min_gv, inner(g, v));
    return gu - min_gv;
}

}  // namespace

Vector vi_grid_oracle(const ConvexSet& c, const Mapping& a, int resolution,
                      ExecPolicy policy) {
    if (a.dim > 3) throw std::invalid_argument("vi_grid_oracle: dim must be <= 3");
    if (resolution < 2) throw std::invalid_argument("vi_grid_oracle: resolution >= 2");
    const Box bb = bounding_box(c);

    const GridSpec coarse = make_grid(bb.lower, bb.upper, resolution);
    const std::vector<Vector> candidates = members_of(coarse, c);
    if (candidates.empty()) throw std::invalid_argument("vi_grid_oracle: empty grid");

    const IndexedValue best = reduce_min_indexed(
        static_cast<std::int64_t>(candidates.size()),
        [&](std::int64_t i) {
            return grid_defect(a, candidates[static_cast<std::size_t>(i)], candidates);
        },
        policy);
    const Vector coarse_argmin = candidates[static_cast<std::size_t>(best.index)];

    // One local refinement around the coarse argmin; comparison points stay
    // on the coarse discretization of C.
    std::vector<double> lo(static_cast<std::size_t>(a.dim));
    std::vector<double> hi(static_cast<std::size_t>(a.dim));
    for (int i = 0; i < a.dim; ++i) {
        const double cell = (bb.upper[i] - bb.lower[i]) / (resolution - 1);
        lo[static_cast<std::size_t>(i)] = std::max(bb.lower[i], coarse_argmin[i] - cell);
        hi[static_cast<std::size_t>(i)] = std::min(bb.upper[i], coarse_argmin[i] + cell);
    }
    const GridSpec fine = make_grid(Vector(std::move(lo)), Vector(std::move(hi)), resolution);
    const std::vector<Vector> refined = members_of(fine, c);
    if (refined.empty()) return coarse_argmin;

    const IndexedValue fbest = reduce_min_indexed(
        static_cast<std::int64_t>(refined.size()),
        [&](std::int64_t i) {
            return grid_defect(a, refined[static_cast<std::size_t>(i)], candidates);
        },
        policy);
    return refined[static_cast<std::size_t>(fbest.index)];
}

}  // namespace tproj
