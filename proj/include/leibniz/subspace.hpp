#pragma once

#include "leibniz/tensor.hpp"

#include <optional>
#include <vector>

namespace leibniz {

// Linear subspace of Q^n stored as the rows of its reduced row echelon form.
// Two subspaces are equal exactly when their RREF matrices are.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient); // zero subspace

    static Subspace span(int ambient, const std::vector<Vector>& generators);
    static Subspace full(int ambient);
    static Subspace zero(int ambient) { return Subspace(ambient); }
    // span{e_i : i in indices}, 1-based
    static Subspace coordinate(int ambient, const std::vector<int>& indices);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    int ambient_ = 0;
    std::vector<Vector> rows_;
    std::vector<int> pivots_; // 0-based pivot columns
};

// span{[a, b] : a in basis(A), b in basis(B)}
Subspace product_space(const StructureTensor& T, const Subspace& A, const Subspace& B);

struct SeriesResult {
    std::vector<int> dims;
    bool stabilized = false;
    std::vector<Subspace> terms; // one per entry of dims

    bool operator==(const SeriesResult& o) const { return dims == o.dims && stabilized == o.stabilized; }
};

// Terms are listed from L^0 = L. The run stops at the zero subspace or at the
// first repeated term, which is appended once and flagged as stabilized.
SeriesResult lower_central_series(const StructureTensor& T);
SeriesResult derived_series(const StructureTensor& T);

// Series of the subalgebra S computed with brackets inside S only:
// S^0 = S, S^{k+1} = [S^k, S]. At most max_steps products are taken.
SeriesResult internal_lower_central_series(const StructureTensor& T, const Subspace& S, int max_steps);

Subspace center(const StructureTensor& T);

bool is_nilpotent(const StructureTensor& T);
bool is_solvable(const StructureTensor& T);
// Smallest m with L^m = 0 under L^0 = L; empty when not nilpotent.
std::optional<int> nil_index(const StructureTensor& T);
// L^{n-3} != 0 and L^{n-2} = 0. Throws UsageError when dim < 4.
bool is_quasi_filiform(const StructureTensor& T);

} // namespace leibniz
