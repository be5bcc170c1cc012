#include "tproj/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace tproj {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: bad shape");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : Matrix(static_cast<int>(rows.size()),
             rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer");
        }
        int c = 0;
        for (double v : row) at(r, c++) = v;
        ++r;
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    std::vector<double> out(static_cast<std::size_t>(rows_), 0.0);
    for (int r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (int c = 0; c < cols_; ++c) s += at(r, c) * x[c];
        out[static_cast<std::size_t>(r)] = s;
    }
    return Vector(std::move(out));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix+: shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix-: shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = s * a.at(r, c);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix*: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            double s = 0.0;
            for (int k = 0; k < a.cols(); ++k) s += a.at(r, k) * b.at(k, c);
            out.at(r, c) = s;
        }
    return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    const int n = a.rows();
    if (a.cols() != n || b.dim() != n) throw std::invalid_argument("solve: shape mismatch");
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n + 1)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = a.at(r, c);
        m[r][static_cast<std::size_t>(n)] = b[r];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        }
        if (std::abs(m[piv][col]) < 1e-12) return std::nullopt;
        std::swap(m[piv], m[static_cast<std::size_t>(col)]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[static_cast<std::size_t>(col)][col];
            for (int c = col; c <= n; ++c) {
                m[r][c] -= f * m[static_cast<std::size_t>(col)][c];
            }
        }
    }
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) x[static_cast<std::size_t>(r)] = m[r][static_cast<std::size_t>(n)] / m[r][static_cast<std::size_t>(r)];
    return Vector(std::move(x));
}

std::optional<Vector> min_norm_solution(const Matrix& a, const Vector& b) {
    if (b.dim() != a.rows()) throw std::invalid_argument("min_norm_solution: shape mismatch");
    // Orthonormalize the rows together with their right-hand sides; the
    // solution set becomes { x : <q_j, x> = beta_j } and the minimum-norm
    // point is sum_j beta_j q_j.
    std::vector<Vector> qs;
    std::vector<double> betas;
    for (int r = 0; r < a.rows(); ++r) {
        std::vector<double> row(static_cast<std::size_t>(a.cols()));
        for (int c = 0; c < a.cols(); ++c) row[static_cast<std::size_t>(c)] = a.at(r, c);
        Vector n{std::move(row)};
        const double rhs = b[r];
        Vector res = n;
        double implied = 0.0;
        for (std::size_t j = 0; j < qs.size(); ++j) {
            const double cj = inner(n, qs[j]);
            res = res - cj * qs[j];
            implied += cj * betas[j];
        }
        const double rn = norm(res);
        if (rn <= 1e-12 * std::max(1.0, norm(n))) {
            if (std::abs(rhs - implied) > 1e-9 * (1.0 + std::abs(rhs))) {
                return std::nullopt;  // inconsistent row
            }
            continue;
        }
        qs.push_back((1.0 / rn) * res);
        betas.push_back((rhs - implied) / rn);
    }
    Vector x = Vector::zeros(a.cols());
    for (std::size_t j = 0; j < qs.size(); ++j) x = x + betas[j] * qs[j];
    return x;
}

std::vector<Vector> orthonormal_basis(const std::vector<Vector>& vs, double drop_tol) {
    std::vector<Vector> basis;
    for (const Vector& v : vs) {
        Vector r = v;
        for (const Vector& q : basis) r = r - inner(r, q) * q;
        // second pass stabilizes nearly dependent inputs
        for (const Vector& q : basis) r = r - inner(r, q) * q;
        const double rn = norm(r);
        if (rn > drop_tol * std::max(1.0, norm(v))) {
            basis.push_back((1.0 / rn) * r);
        }
    }
    return basis;
}

std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vs, int dim) {
    std::vector<Vector> span = orthonormal_basis(vs);
    std::vector<Vector> complement;
    for (int i = 0; i < dim; ++i) {
        std::vector<double> e(static_cast<std::size_t>(dim), 0.0);
        e[static_cast<std::size_t>(i)] = 1.0;
        Vector r{std::vector<double>(e)};
        for (const Vector& q : span) r = r - inner(r, q) * q;
        for (const Vector& q : complement) r = r - inner(r, q) * q;
        for (const Vector& q : span) r = r - inner(r, q) * q;
        for (const Vector& q : complement) r = r - inner(r, q) * q;
        const double rn = norm(r);
        if (rn > 1e-10) complement.push_back((1.0 / rn) * r);
    }
    return complement;
}

std::vector<Vector> null_space_basis(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<double> row(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) row[static_cast<std::size_t>(c)] = m.at(r, c);
        rows.emplace_back(std::move(row));
    }
    return orthogonal_complement(rows, m.cols());
}

double symmetric_max_eigenvalue(const Matrix& sym, int iters) {
    const int n = sym.rows();
    // Shift by a Gershgorin bound so the target eigenvalue dominates in
    // magnitude even when negative eigenvalues are larger in absolute value.
    double shift = 0.0;
    for (int r = 0; r < n; ++r) {
        double row = 0.0;
        for (int c = 0; c < n; ++c) row += std::abs(sym.at(r, c));
        shift = std::max(shift, row);
    }
    Matrix shifted = sym + (shift * Matrix::identity(n));
    std::vector<double> v0(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v0[static_cast<std::size_t>(i)] = 1.0 + 1e-3 * i;
    Vector v{std::move(v0)};
    v = (1.0 / norm(v)) * v;
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        Vector w = shifted.apply(v);
        const double wn = norm(w);
        if (wn == 0.0) return -shift;  // shifted matrix annihilates v
        v = (1.0 / wn) * w;
        lambda = inner(v, shifted.apply(v));
    }
    return lambda - shift;
}

double spectral_norm(const Matrix& m, int iters) {
    const Matrix gram = m.transpose() * m;
    const double lam = symmetric_max_eigenvalue(gram, iters);
    return std::sqrt(std::max(lam, 0.0));
}

}  // namespace tproj
