#pragma once

#include "leibniz/rational.hpp"

#include <vector>

namespace leibniz {

// Coordinate column. Index 0 holds the coefficient of e_1.
using Vector = std::vector<Rational>;

Vector zero_vector(int n);
// Standard basis vector e_i, 1-based i as in the bracket tables.
Vector basis_vector(int n, int i);
bool is_zero(const Vector& v);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(const Rational& c, const Vector& x);
// x += c*y
void axpy(Vector& x, const Rational& c, const Vector& y);

// Dense row-major rational matrix. Square instances act on columns:
// column j is the image of e_{j+1}.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix zero(int n) { return Matrix(n, n); }
    static Matrix from_columns(const std::vector<Vector>& columns);
    static Matrix from_rows(const std::vector<Vector>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vector column(int c) const;
    Vector row(int r) const;
    void set_column(int c, const Vector& v);

    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// Linear maps on the algebra are square matrices in the column convention.
using LinearMap = Matrix;

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& a);
Matrix commutator(const Matrix& a, const Matrix& b); // ab - ba
Matrix power(const Matrix& a, int k);
Rational trace(const Matrix& a);

// Elementary matrix E_{i,j} (1-based) of size n.
Matrix elementary(int n, int i, int j);

struct Rref {
    Matrix reduced;
    std::vector<int> pivots; // pivot column of each nonzero row, increasing
    int rank() const { return static_cast<int>(pivots.size()); }
};

// Reduced row echelon form. The parallel version splits the row updates of
// each elimination step across threads; every row sees the same sequence of
// exact operations, so the result equals rref_serial bit for bit.
Rref rref_serial(Matrix m);
Rref rref_parallel(Matrix m);
Rref rref(Matrix m);

int rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column, in the usual
// "free variable = 1" normalisation.
std::vector<Vector> nullspace(const Matrix& m);
std::vector<Vector> nullspace_serial(const Matrix& m);

bool invertible(const Matrix& m);
// Throws SingularMapError when m is singular.
Matrix inverse(const Matrix& m);

// Number of OpenMP threads available (1 without OpenMP).
int hardware_threads();

} // namespace leibniz
