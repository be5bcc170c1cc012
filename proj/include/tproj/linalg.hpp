// Small dense helpers for the problem generators. Everything here targets
// desk-scale dimensions (d <= 8 or so); clarity over asymptotics.
#pragma once

#include <optional>
#include <vector>

#include "tproj/vector.hpp"

namespace tproj {

class Matrix {
public:
    Matrix(int rows, int cols);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& at(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    double at(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

    Vector apply(const Vector& x) const;
    Matrix transpose() const;

private:
    int rows_, cols_;
    std::vector<double> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);

// Gaussian elimination with partial pivoting; nullopt when singular.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Minimum-norm x with a x = b, handling rank deficiency; nullopt when the
// system is inconsistent.
std::optional<Vector> min_norm_solution(const Matrix& a, const Vector& b);

// Orthonormal basis of span(vs) via modified Gram-Schmidt.
std::vector<Vector> orthonormal_basis(const std::vector<Vector>& vs,
                                      double drop_tol = 1e-10);

// Orthonormal basis of { x : <v, x> = 0 for all v in vs }.
std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vs, int dim);

// Orthonormal basis of ker(m), i.e. the complement of m's row space.
std::vector<Vector> null_space_basis(const Matrix& m);

// Largest eigenvalue of a symmetric matrix by shifted power iteration.
double symmetric_max_eigenvalue(const Matrix& sym, int iters = 500);

// Spectral norm |m|_2 via power iteration on m^T m.
double spectral_norm(const Matrix& m, int iters = 500);

}  // namespace tproj
