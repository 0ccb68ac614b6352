#pragma once

#include "leibniz/poly.hpp"
#include "leibniz/tensor.hpp"

#include <vector>

namespace leibniz {

struct DerivationSpace {
    int algebra_dim = 0;
    std::vector<LinearMap> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

// Row-major n^2 coordinates of a square map, and back.
Vector flatten(const LinearMap& m);
LinearMap unflatten(const Vector& v, int n);

// Linear system in the n^2 entries of D (row-major) whose solutions are the
// derivations of T. Identically zero rows are dropped.
Matrix derivation_constraints(const StructureTensor& T);

DerivationSpace derivation_space(const StructureTensor& T);
// Same answer through the serial elimination only.
DerivationSpace derivation_space_serial(const StructureTensor& T);

// Basis of span{R_{e_i}} or span{L_{e_i}}. Throws PreconditionError when the
// Leibniz identity of that side fails.
DerivationSpace inner_derivations(const StructureTensor& T, Side side);

bool is_nilpotent_map(const LinearMap& D);

// p_k(t) = tr((tA + B)^k) for k = 1..n. As homogeneous forms,
// p_k(alpha, beta) = sum_i c_i alpha^i beta^(k-i) with c_i the coefficients of p_k(t).
std::vector<Poly> trace_pencil(const LinearMap& A, const LinearMap& B);

// No (alpha, beta) != (0, 0) over the reals makes alpha A + beta B nilpotent.
bool nil_independent_pair(const LinearMap& A, const LinearMap& B);

} // namespace leibniz
