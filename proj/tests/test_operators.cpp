#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tproj/linalg.hpp"
#include "tproj/mapping.hpp"
#include "tproj/problems.hpp"
#include "tproj/rng.hpp"

using namespace tproj;

namespace {

void check_near(const Vector& got, const Vector& want, double tol = 1e-12) {
    REQUIRE(got.dim() == want.dim());
    for (int i = 0; i < got.dim(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

Mapping lambda_map(int dim, std::function<Vector(const Vector&)> f) {
    Mapping m;
    m.dim = dim;
    m.f = std::move(f);
    return m;
}

const Matrix kRot90{{0, -1}, {1, 0}};

}  // namespace

TEST_CASE("eval") {
    check_near(eval(identity_map(2), Vector{1, 2}), Vector{1, 2});
    const Mapping neg2 = lambda_map(2, [](const Vector& x) { return -2.0 * x; });
    check_near(eval(neg2, Vector{1, 1}), Vector{-2, -2});
    const Mapping rot = lambda_map(2, [](const Vector& x) { return kRot90.apply(x); });
    check_near(eval(rot, Vector{1, 0}), Vector{0, 1});
    CHECK_THROWS_AS(eval(neg2, Vector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("half-averaging transform") {
    // identity with kappa 0 stays the identity
    const Mapping t0 = t_from_q(identity_map(2), 0.0);
    check_near(eval(t0, Vector{3, -4}), Vector{3, -4});

    // Q = -2x at kappa 1/3 collapses to the zero map: (2/3)x + (1/3)(-2x)
    const Mapping q = lambda_map(2, [](const Vector& x) { return -2.0 * x; });
    const Mapping tz = t_from_q(q, 1.0 / 3.0);
    for (std::int64_t i = 0; i < 100; ++i) {
        const Vector x = sample_box(3, static_cast<std::uint64_t>(i), 0, 2, 5.0);
        CHECK(norm(eval(tz, x)) <= 1e-15 * (1.0 + norm(x)));
    }

    // Q = -x at kappa 0: (1/2)x + (1/2)(-x) = 0
    const Mapping qneg = lambda_map(2, [](const Vector& x) { return -1.0 * x; });
    check_near(eval(t_from_q(qneg, 0.0), Vector{5, -7}), Vector{0, 0});

    CHECK_THROWS_AS(t_from_q(q, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(t_from_q(q, -0.1), std::invalid_argument);
}

TEST_CASE("relaxation form of the transform") {
    const Mapping q = lambda_map(2, [](const Vector& x) { return -2.0 * x; });
    // hand evaluation: R(x) = -0.5 x, then the displayed combination
    check_near(eval(t_from_q_alpha_form(q, 1.0 / 3.0, 0.5), Vector{1, 0}), Vector{0, 0}, 1e-15);

    const Mapping qneg = lambda_map(2, [](const Vector& x) { return -1.0 * x; });
    check_near(eval(t_from_q_alpha_form(qneg, 0.0, 0.25), Vector{2, 0}),
               eval(t_from_q(qneg, 0.0), Vector{2, 0}), 1e-15);

    for (double alpha : {0.1, 0.5, 0.9}) {
        check_near(eval(t_from_q_alpha_form(identity_map(2), 0.0, alpha), Vector{1, 2}),
                   Vector{1, 2}, 1e-14);
    }
    CHECK_THROWS_AS(t_from_q_alpha_form(q, 1.0 / 3.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(t_from_q_alpha_form(q, 1.0 / 3.0, 1.0), std::invalid_argument);
}

TEST_CASE("relaxation parameter drops out of the transform") {
    for (std::int64_t i = 0; i < 200; ++i) {
        const int d = 2 + static_cast<int>(i % 3);
        const Vector entries =
            sample_box(7, static_cast<std::uint64_t>(i), 3, d * d, 1.5);
        Matrix m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m.at(r, c) = entries[r * d + c];
        const Matrix sym = 0.5 * (m + m.transpose());
        const double lam = symmetric_max_eigenvalue(sym);
        if (lam > 0.9) m = (0.9 / lam) * m;
        const Mapping q = make_linear_spc(m);
        const double kappa = q.tag.param;
        const Mapping t = t_from_q(q, kappa);
        for (double frac : {0.25, 0.5, 0.75}) {
            const double alpha = kappa + frac * (1.0 - kappa);
            const Mapping ta = t_from_q_alpha_form(q, kappa, alpha);
            const Vector x = sample_box(7, static_cast<std::uint64_t>(i), 0, d, 5.0);
            CHECK(dist(eval(ta, x), eval(t, x)) <= 1e-10 * (1.0 + norm(x)));
        }
    }
}

TEST_CASE("averaged map") {
    const Mapping s = lambda_map(2, [](const Vector& x) { return -1.0 * x; });
    check_near(eval(averaged_map(s, 0.0), Vector{1, 2}), Vector{-1, -2});
    check_near(eval(averaged_map(identity_map(2), 0.7), Vector{1, 2}), Vector{1, 2});
    check_near(eval(averaged_map(s, 0.5), Vector{3, -8}), Vector{0, 0});
    CHECK_THROWS_AS(averaged_map(s, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(averaged_map(s, -0.2), std::invalid_argument);
}

TEST_CASE("halve_shift and compose") {
    check_near(eval(halve_shift(identity_map(2)), Vector{1, 2}), Vector{1, 2});
    const Mapping zero = lambda_map(2, [](const Vector& x) { return Vector::zeros(x.dim()); });
    check_near(eval(halve_shift(zero), Vector{2, 4}), Vector{1, 2});
    const Mapping neg = lambda_map(2, [](const Vector& x) { return -1.0 * x; });
    check_near(eval(halve_shift(neg), Vector{5, 5}), Vector{0, 0});

    const Mapping half = lambda_map(2, [](const Vector& x) { return 0.5 * x; });
    check_near(eval(compose(identity_map(2), half), Vector{4, 0}), Vector{2, 0});
    check_near(eval(compose(half, half), Vector{4, 0}), Vector{1, 0});
    const Mapping pline = lambda_map(2, [](const Vector& x) { return Vector{x[0], 0.0}; });
    check_near(eval(compose(pline, neg), Vector{1, 1}), Vector{-1, 0});
}

TEST_CASE("extragradient steps") {
    // unconstrained with A = I: one stage scales by (1 - lambda)
    Mapping ident_op = identity_map(2);
    ident_op.tag = tag_monotone_lipschitz(1.0);
    const VIInstance free_inst(ConvexSet{WholeSpace(2)}, ident_op, 0.1, 0.9);
    check_near(extragradient_t1(free_inst, 0.5, Vector{2, 2}), Vector{1, 1});
    // two stages give (1 - lambda + lambda^2) x
    check_near(extragradient_t2(free_inst, 0.5, Vector{1, 0}), Vector{0.75, 0});

    // box-constrained instance with A(x) = x - (2,2)
    Mapping a = lambda_map(2, [](const Vector& x) { return x - Vector{2, 2}; });
    a.tag = tag_monotone_lipschitz(1.0);
    const VIInstance box_inst(ConvexSet{Box(Vector{0, 0}, Vector{1, 1})}, a, 0.1, 0.9);
    check_near(extragradient_t1(box_inst, 0.5, Vector{0, 0}), Vector{1, 1});
    check_near(extragradient_t2(box_inst, 0.5, Vector{0, 0}), Vector{0.5, 0.5});

    // points solving the inequality are fixed by both stages
    check_near(extragradient_t1(box_inst, 0.5, Vector{1, 1}), Vector{1, 1});
    check_near(extragradient_t2(box_inst, 0.5, Vector{1, 1}), Vector{1, 1});

    CHECK_THROWS_AS(extragradient_t1(box_inst, 1.5, Vector{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(extragradient_t1(box_inst, 0.05, Vector{0, 0}), std::invalid_argument);
}

TEST_CASE("reflected transform is nonexpansive for strict pseudocontractions") {
    for (std::int64_t trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(trial % 3);
        const Vector entries =
            sample_box(13, static_cast<std::uint64_t>(trial), 3, d * d, 1.5);
        Matrix m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m.at(r, c) = entries[r * d + c];
        const Matrix sym = 0.5 * (m + m.transpose());
        const double lam = symmetric_max_eigenvalue(sym);
        if (lam > 0.9) m = (0.9 / lam) * m;
        const Mapping q = make_linear_spc(m);
        const Mapping t = t_from_q(q, q.tag.param);
        for (std::int64_t i = 0; i < 100; ++i) {
            const Vector x = sample_box(17, static_cast<std::uint64_t>(i), 0, d, 5.0);
            const Vector y = sample_box(17, static_cast<std::uint64_t>(i), 1, d, 5.0);
            const Vector rx = combine(2.0, eval(t, x), -1.0, x);
            const Vector ry = combine(2.0, eval(t, y), -1.0, y);
            CHECK(dist(rx, ry) <= dist(x, y) + 1e-10);
        }
    }
}

TEST_CASE("two-stage step inequality against a known solution") {
    Mapping a = lambda_map(2, [](const Vector& x) {
        return Vector{x[1] + 0.5, -x[0] - 0.5};
    });
    a.tag = tag_monotone_lipschitz(1.0);
    const VIInstance inst(ConvexSet{Box(Vector{-1, -1}, Vector{1, 1})}, a, 0.1, 0.9);
    const Vector u{-0.5, -0.5};
    const double lambda = 0.5, k = 1.0;
    for (std::int64_t i = 0; i < 2000; ++i) {
        const Vector x = sample_box(19, static_cast<std::uint64_t>(i), 0, 2, 5.0);
        const Vector y1 = extragradient_t1(inst, lambda, x);
        const Vector y2 = extragradient_t2(inst, lambda, x);
        const double gap = (lambda * lambda * k * k - 1.0) *
                           std::max(inner(x - y1, x - y1), inner(y2 - y1, y2 - y1));
        CHECK(inner(y2 - u, y2 - u) <= inner(x - u, x - u) + gap + 1e-9);
    }
}

TEST_CASE("fixed points of Q solve the inequality for I - Q") {
    // pseudocontractive Q built from a monotone field: Q = I - A
    const Matrix skew{{0, 1}, {-1, 0}};
    const Vector q0{0.5, -0.5};
    Mapping q = lambda_map(2, [skew, q0](const Vector& x) {
        return x - (skew.apply(x) + q0);
    });
    Mapping a = lambda_map(2, [skew, q0](const Vector& x) { return skew.apply(x) + q0; });
    a.tag = tag_monotone_lipschitz(1.0);

    const Vector fix{-0.5, -0.5};  // solves (I - Q) x = 0
    CHECK(dist(eval(q, fix), fix) <= 1e-15);

    const ConvexSet c{Box(Vector{-1, -1}, Vector{1, 1})};
    SamplePlan plan;
    plan.dim = 2;
    plan.n_samples = 3000;
    plan.seed = 29;
    CHECK(certify_monotone_lipschitz(a, 1.0, plan).passed);
    CHECK(certify_vi_solution(c, a, fix, plan).passed);
}
