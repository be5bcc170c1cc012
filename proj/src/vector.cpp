#include "tproj/vector.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tproj {

namespace {

void check_coords(const std::vector<double>& c) {
    if (c.empty()) {
        throw std::invalid_argument("Vector: dimension must be >= 1");
    }
    for (double x : c) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("Vector: non-finite coordinate");
        }
    }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : c_(std::move(coords)) {
    check_coords(c_);
}

Vector::Vector(std::initializer_list<double> coords) : c_(coords) {
    check_coords(c_);
}

Vector Vector::zeros(int dim) {
    if (dim < 1) throw std::invalid_argument("Vector: dimension must be >= 1");
    return Vector(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
}

void require_same_dim(const Vector& u, const Vector& v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
}

double inner(const Vector& u, const Vector& v) {
    require_same_dim(u, v);
    double s = 0.0;
    for (int i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

double norm(const Vector& u) { return std::sqrt(inner(u, u)); }

double dist(const Vector& u, const Vector& v) { return norm(u - v); }

Vector combine(double a, const Vector& u, double b, const Vector& v) {
    require_same_dim(u, v);
    std::vector<double> out(static_cast<std::size_t>(u.dim()));
    for (int i = 0; i < u.dim(); ++i) {
        out[static_cast<std::size_t>(i)] = a * u[i] + b * v[i];
    }
    return Vector(std::move(out));
}

Vector operator+(const Vector& u, const Vector& v) { return combine(1.0, u, 1.0, v); }
Vector operator-(const Vector& u, const Vector& v) { return combine(1.0, u, -1.0, v); }

Vector operator*(double a, const Vector& u) {
    std::vector<double> out(static_cast<std::size_t>(u.dim()));
    for (int i = 0; i < u.dim(); ++i) out[static_cast<std::size_t>(i)] = a * u[i];
    return Vector(std::move(out));
}

}  // namespace tproj
