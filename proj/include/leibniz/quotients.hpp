#pragma once

#include "leibniz/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibniz {

struct IdealWitness {
    int basis_index;   // generator of the whole algebra, 1-based
    bool from_left;    // true for [e_i, s], false for [s, e_i]
    Vector element;    // basis vector of S used
    Vector product;    // the bracket that leaves S
};

// First bracket [e_i, s] or [s, e_i] (s a basis row of S) outside S, if any.
std::optional<IdealWitness> ideal_violation(const StructureTensor& T, const Subspace& S);
bool is_two_sided_ideal(const StructureTensor& T, const Subspace& S);

// Smallest two-sided ideal containing S.
Subspace ideal_closure(const StructureTensor& T, const Subspace& S);
// Ideal generated by all squares [x, x], from the polarised brackets
// [e_i, e_j] + [e_j, e_i].
Subspace squares_ideal(const StructureTensor& T);

// Standard basis indices (1-based) at the non-pivot columns of I; these
// represent the quotient basis.
std::vector<int> quotient_representatives(const Subspace& I);
// Coordinates of v modulo I on the quotient basis.
Vector reduce_modulo(const Subspace& I, const Vector& v);
// Throws PreconditionError when I is not a two-sided ideal.
StructureTensor quotient_algebra(const StructureTensor& T, const Subspace& I);

struct IdealCertificate {
    bool is_ideal = false;
    bool is_nilpotent_subalgebra = false;
    bool complement_nonnilpotent = false;
    bool dim_bound = false; // 2 dim N >= dim L
    std::optional<IdealWitness> ideal_witness;
    std::vector<int> restricted_ls;           // internal series dims of N
    std::vector<int> nilpotent_extension;     // generator v for which N + <v> is nilpotent
    bool passes() const { return is_ideal && is_nilpotent_subalgebra && complement_nonnilpotent; }
};

// Maximality is only checked against one extra standard generator at a time,
// which is necessary but not sufficient.
IdealCertificate verify_nilradical_certificate(const StructureTensor& T, const Subspace& N);

} // namespace leibniz
