#pragma once

#include "leibniz/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

struct Term {
    int basis; // 1-based
    Rational coeff;
    bool operator==(const Term&) const = default;
};

// [e_i, e_j] = sum_k c^k_{ij} e_k. Only nonzero coefficients are stored, terms
// sorted by basis index; a missing (i, j) key is a zero bracket.
class StructureTensor {
public:
    using Key = std::pair<int, int>;
    using Table = std::map<Key, std::vector<Term>>;

    StructureTensor() = default;
    explicit StructureTensor(int dim);

    int dim() const { return dim_; }
    const Table& entries() const { return table_; }

    // Adds c*e_k to [e_i, e_j]. Coefficients that cancel to zero are dropped.
    void add(int i, int j, int k, const Rational& c);
    // Replaces [e_i, e_j] by the given coordinates.
    void set(int i, int j, const Vector& value);
    void clear(int i, int j);

    Rational coefficient(int i, int j, int k) const;
    Vector bracket_basis(int i, int j) const;
    const std::vector<Term>& terms(int i, int j) const;

    // Number of stored (i, j, k) coefficients.
    std::size_t nonzero_count() const;

    bool operator==(const StructureTensor& other) const = default;

private:
    void check_index(int i) const;

    int dim_ = 0;
    Table table_;
};

enum class Side { right, left };
std::string side_name(Side s);

struct IdentityViolation {
    int r, s, t;
    Vector lhs;
    Vector rhs;
};

Vector bracket(const StructureTensor& T, const Vector& x, const Vector& y);

// R_x(y) = [y, x] and L_x(y) = [x, y].
LinearMap right_mult(const StructureTensor& T, const Vector& x);
LinearMap left_mult(const StructureTensor& T, const Vector& x);
LinearMap right_mult_basis(const StructureTensor& T, int i);
LinearMap left_mult_basis(const StructureTensor& T, int i);

// Exhaustive, reported in lexicographic (r, s, t) order.
std::vector<IdentityViolation> check_right_leibniz(const StructureTensor& T);
std::vector<IdentityViolation> check_left_leibniz(const StructureTensor& T);
std::vector<IdentityViolation> check_leibniz(const StructureTensor& T, Side side);
// Same result as the serial check, with the outer index spread over threads.
std::vector<IdentityViolation> check_leibniz_parallel(const StructureTensor& T, Side side);
// Early exit variant.
bool satisfies_leibniz(const StructureTensor& T, Side side);

bool is_derivation(const StructureTensor& T, const LinearMap& D);
bool check_lie(const StructureTensor& T);

// Column j of P holds the new e'_j in old coordinates. Throws SingularMapError.
StructureTensor transform_basis(const StructureTensor& T, const LinearMap& P);

StructureTensor abelian(int dim);

// Brackets among e_1..e_m only, as an m-dimensional tensor. Terms landing
// outside 1..m are kept out; use is_closed_block to see whether any exist.
StructureTensor leading_block(const StructureTensor& T, int m);
bool is_closed_block(const StructureTensor& T, int m);

} // namespace leibniz
