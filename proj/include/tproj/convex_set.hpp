// Canonical closed convex sets with exact metric projections, the
// half-space H(x,y) = { z : <z - y, x - y> <= 0 } built from a point pair,
// and the Haugazeau projection of x onto H(x,y) n H(y,z).
#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tproj/vector.hpp"

namespace tproj {

// Raised when a projection target is provably empty. This is a reportable
// run outcome, not a programming error: the projection iteration uses it to
// certify that the common fixed-point set is empty.
class EmptyIntersectionError : public std::runtime_error {
public:
    explicit EmptyIntersectionError(const std::string& what)
        : std::runtime_error(what) {}
};

struct WholeSpace {
    explicit WholeSpace(int dim);
    int dim;
};

struct Box {
    Box(Vector lower, Vector upper);  // requires lower_i <= upper_i
    Vector lower, upper;
};

struct Ball {
    Ball(Vector center, double radius);  // requires radius > 0
    Vector center;
    double radius;
};

// { z : <normal, z> <= offset }, normal nonzero
struct HalfSpace {
    HalfSpace(Vector normal, double offset);
    Vector normal;
    double offset;
};

// { z : <normal, z> = offset }, normal nonzero
struct Hyperplane {
    Hyperplane(Vector normal, double offset);
    Vector normal;
    double offset;
};

// basepoint + span(directions); directions pairwise orthonormal to 1e-10.
// An empty direction list denotes the single point {basepoint}.
struct AffineSubspace {
    AffineSubspace(Vector basepoint, std::vector<Vector> directions);
    Vector basepoint;
    std::vector<Vector> directions;
};

using ConvexSet =
    std::variant<WholeSpace, Box, Ball, HalfSpace, Hyperplane, AffineSubspace>;

int set_dim(const ConvexSet& s);

// Nearest point of s to x. Exact closed forms for every variant.
Vector project(const ConvexSet& s, const Vector& x);

// True iff x violates no defining inequality of s by more than tol.
bool contains(const ConvexSet& s, const Vector& x, double tol);

// H(x,y); degenerates to the whole space when x == y, so the half-space
// variant always carries a nonzero normal.
ConvexSet halfspace_from_pair(const Vector& x, const Vector& y);

/**
 * Projection of x onto H(x,y) n H(y,z) in closed form.
 *
 * With pi = <x-y, y-z>, mu = |x-y|^2, nu = |y-z|^2, rho = mu*nu - pi^2:
 *   rho = 0, pi >= 0          ->  z
 *   rho > 0, pi*nu >= rho     ->  x + (1 + pi/nu)(z - y)
 *   rho > 0, pi*nu <  rho     ->  y + (nu/rho)(pi (x-y) + mu (z-y))
 *   rho = 0, pi <  0          ->  EmptyIntersectionError
 *
 * rho is a Gram determinant and underflows quadratically, so it is treated
 * as zero whenever rho <= 1e-14 * mu * nu.
 */
Vector haugazeau_project(const Vector& x, const Vector& y, const Vector& z);

// Exact projection of x onto an intersection of half-spaces by exhaustive
// active-set enumeration: solve the equality-constrained least-squares
// problem for every constraint subset, keep the feasible candidates, return
// the nearest. Exponential in the constraint count; intended for <= 8
// constraints. Throws EmptyIntersectionError when no candidate is feasible.
Vector qp_project_oracle(const std::vector<HalfSpace>& constraints,
                         const Vector& x);

}  // namespace tproj
