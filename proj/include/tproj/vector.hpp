// Dense real vectors with exact value semantics. All algorithm state is
// built from these; construction rejects non-finite coordinates so NaNs
// cannot propagate silently through an iteration.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace tproj {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<double> coords);
    Vector(std::initializer_list<double> coords);

    static Vector zeros(int dim);

    int dim() const { return static_cast<int>(c_.size()); }
    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& coords() const { return c_; }

    bool operator==(const Vector& other) const { return c_ == other.c_; }

private:
    std::vector<double> c_;
};

double inner(const Vector& u, const Vector& v);
double norm(const Vector& u);
double dist(const Vector& u, const Vector& v);

// a*u + b*v
Vector combine(double a, const Vector& u, double b, const Vector& v);

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(double a, const Vector& u);

// Throws std::invalid_argument unless both operands share one dimension.
void require_same_dim(const Vector& u, const Vector& v);

}  // namespace tproj
