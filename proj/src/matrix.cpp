#include "leibniz/matrix.hpp"

#include "leibniz/errors.hpp"

#include <string>
#include <utility>

#ifdef LEIBNIZ_HAVE_OPENMP
#include <omp.h>
#endif

namespace leibniz {

Vector zero_vector(int n) { return Vector(static_cast<std::size_t>(n)); }

Vector basis_vector(int n, int i)
{
    if (i < 1 || i > n)
        throw UsageError("basis index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    Vector v = zero_vector(n);
    v[i - 1] = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

Vector add(const Vector& x, const Vector& y)
{
    if (x.size() != y.size())
        throw UsageError("vector size mismatch");
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] + y[i];
    return r;
}

Vector sub(const Vector& x, const Vector& y)
{
    if (x.size() != y.size())
        throw UsageError("vector size mismatch");
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] - y[i];
    return r;
}

Vector scale(const Rational& c, const Vector& x)
{
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = c * x[i];
    return r;
}

void axpy(Vector& x, const Rational& c, const Vector& y)
{
    if (sgn(c) == 0)
        return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(y[i]) != 0)
            x[i] += c * y[i];
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols)
{
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns)
{
    const int c = static_cast<int>(columns.size());
    const int r = c == 0 ? 0 : static_cast<int>(columns[0].size());
    Matrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(columns[j].size()) != r)
            throw UsageError("ragged column list");
        for (int i = 0; i < r; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols)
{
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw UsageError("ragged row list");
        for (int j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::column(int c) const
{
    Vector v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

Vector Matrix::row(int r) const
{
    Vector v(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j)
        v[j] = (*this)(r, j);
    return v;
}

void Matrix::set_column(int c, const Vector& v)
{
    for (int i = 0; i < rows_; ++i)
        (*this)(i, c) = v[i];
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw UsageError("matrix product size mismatch");
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0)
                    r(i, j) += aik * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& x)
{
    if (a.cols() != static_cast<int>(x.size()))
        throw UsageError("matrix-vector size mismatch");
    Vector r(static_cast<std::size_t>(a.rows()));
    for (int j = 0; j < a.cols(); ++j) {
        if (sgn(x[j]) == 0)
            continue;
        for (int i = 0; i < a.rows(); ++i)
            if (sgn(a(i, j)) != 0)
                r[i] += a(i, j) * x[j];
    }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw UsageError("matrix sum size mismatch");
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw UsageError("matrix difference size mismatch");
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(const Rational& c, const Matrix& a)
{
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = c * a(i, j);
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& a, int k)
{
    if (!a.square())
        throw UsageError("power of a non-square matrix");
    Matrix r = Matrix::identity(a.rows());
    for (int i = 0; i < k; ++i)
        r = r * a;
    return r;
}

Rational trace(const Matrix& a)
{
    Rational t = 0;
    for (int i = 0; i < a.rows() && i < a.cols(); ++i)
        t += a(i, i);
    return t;
}

Matrix elementary(int n, int i, int j)
{
    Matrix m(n, n);
    m(i - 1, j - 1) = 1;
    return m;
}

namespace {

// One elimination step shared by both variants: returns false if the column
// has no pivot at or below row r.
bool choose_pivot(Matrix& m, int r, int c)
{
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
        if (sgn(m(i, c)) != 0) {
            p = i;
            break;
        }
    if (p < 0)
        return false;
    if (p != r)
        for (int j = 0; j < m.cols(); ++j)
            swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0)
            m(r, j) *= inv;
    return true;
}

void eliminate_row(Matrix& m, int i, int r, int c)
{
    if (i == r || sgn(m(i, c)) == 0)
        return;
    const Rational f = m(i, c);
    for (int j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0)
            m(i, j) -= f * m(r, j);
}

} // namespace

Rref rref_serial(Matrix m)
{
    Rref out;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        if (!choose_pivot(m, r, c))
            continue;
        for (int i = 0; i < m.rows(); ++i)
            eliminate_row(m, i, r, c);
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

Rref rref_parallel(Matrix m)
{
    Rref out;
    int r = 0;
    const int rows = m.rows();
    for (int c = 0; c < m.cols() && r < rows; ++c) {
        if (!choose_pivot(m, r, c))
            continue;
#ifdef LEIBNIZ_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (rows >= 128)
#endif
        for (int i = 0; i < rows; ++i)
            eliminate_row(m, i, r, c);
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

Rref rref(Matrix m)
{
    if (m.rows() >= 128)
        return rref_parallel(std::move(m));
    return rref_serial(std::move(m));
}

int rank(const Matrix& m) { return rref(m).rank(); }

namespace {

std::vector<Vector> nullspace_from(const Rref& red, int cols)
{
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : red.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            v[red.pivots[r]] = -red.reduced(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<Vector> nullspace(const Matrix& m) { return nullspace_from(rref(m), m.cols()); }

std::vector<Vector> nullspace_serial(const Matrix& m) { return nullspace_from(rref_serial(m), m.cols()); }

bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m)
{
    if (!m.square())
        throw SingularMapError("inverse of a non-square matrix");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref red = rref_serial(std::move(aug));
    if (red.rank() < n || red.pivots[n - 1] != n - 1)
        throw SingularMapError("map is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = red.reduced(i, n + j);
    return inv;
}

int hardware_threads()
{
#ifdef LEIBNIZ_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace leibniz
