#include "leibniz/subspace.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Subspace::Subspace(int ambient)
    : ambient_(ambient)
{
    if (ambient < 0)
        throw UsageError("negative ambient dimension");
}

Subspace Subspace::span(int ambient, const std::vector<Vector>& generators)
{
    Subspace s(ambient);
    std::vector<Vector> nonzero;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient)
            throw UsageError("generator length does not match ambient dimension");
        if (!is_zero(g))
            nonzero.push_back(g);
    }
    if (nonzero.empty())
        return s;
    Rref r = rref(Matrix::from_rows(nonzero, ambient));
    for (int i = 0; i < r.rank(); ++i)
        s.rows_.push_back(r.reduced.row(i));
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::full(int ambient)
{
    std::vector<Vector> g;
    for (int i = 1; i <= ambient; ++i)
        g.push_back(basis_vector(ambient, i));
    return span(ambient, g);
}

Subspace Subspace::coordinate(int ambient, const std::vector<int>& indices)
{
    std::vector<Vector> g;
    for (int i : indices)
        g.push_back(basis_vector(ambient, i));
    return span(ambient, g);
}

bool Subspace::contains(const Vector& v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw UsageError("vector length does not match ambient dimension");
    // Reduce v against the RREF rows; v is inside iff nothing remains.
    Vector r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = r[pivots_[i]];
        if (sgn(c) != 0)
            axpy(r, -c, rows_[i]);
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const
{
    for (const auto& row : other.rows_)
        if (!contains(row))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw UsageError("subspace ambient dimensions differ");
    std::vector<Vector> g = rows_;
    g.insert(g.end(), other.rows_.begin(), other.rows_.end());
    return span(ambient_, g);
}

Subspace product_space(const StructureTensor& T, const Subspace& A, const Subspace& B)
{
    if (A.ambient() != T.dim() || B.ambient() != T.dim())
        throw UsageError("product_space: ambient dimension does not match algebra");
    std::vector<Vector> g;
    for (const auto& a : A.rows())
        for (const auto& b : B.rows()) {
            Vector v = bracket(T, a, b);
            if (!is_zero(v))
                g.push_back(std::move(v));
        }
    return Subspace::span(T.dim(), g);
}

namespace {

template <class Step>
SeriesResult run_series(const Subspace& start, Step step, int max_steps)
{
    SeriesResult out;
    Subspace cur = start;
    out.dims.push_back(cur.dim());
    out.terms.push_back(cur);
    for (int k = 0; k < max_steps && cur.dim() > 0; ++k) {
        Subspace next = step(cur);
        out.dims.push_back(next.dim());
        out.terms.push_back(next);
        if (next == cur) {
            out.stabilized = true;
            break;
        }
        cur = std::move(next);
    }
    return out;
}

} // namespace

SeriesResult lower_central_series(const StructureTensor& T)
{
    const Subspace full = Subspace::full(T.dim());
    return run_series(full, [&](const Subspace& s) { return product_space(T, s, full); }, T.dim() + 1);
}

SeriesResult derived_series(const StructureTensor& T)
{
    return run_series(Subspace::full(T.dim()), [&](const Subspace& s) { return product_space(T, s, s); },
                      T.dim() + 1);
}

SeriesResult internal_lower_central_series(const StructureTensor& T, const Subspace& S, int max_steps)
{
    return run_series(S, [&](const Subspace& s) { return product_space(T, s, S); }, max_steps);
}

Subspace center(const StructureTensor& T)
{
    const int n = T.dim();
    // Rows: for each i, the n coordinates of [x, e_i] and of [e_i, x] as linear forms in x.
    Matrix system(2 * n * n, n);
    for (int i = 1; i <= n; ++i) {
        const LinearMap R = right_mult_basis(T, i); // x -> [x, e_i]
        const LinearMap L = left_mult_basis(T, i);  // x -> [e_i, x]
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                system((i - 1) * 2 * n + r, c) = R(r, c);
                system((i - 1) * 2 * n + n + r, c) = L(r, c);
            }
    }
    return Subspace::span(n, nullspace(system));
}

bool is_nilpotent(const StructureTensor& T)
{
    const auto s = lower_central_series(T);
    return s.dims.back() == 0;
}

bool is_solvable(const StructureTensor& T)
{
    const auto s = derived_series(T);
    return s.dims.back() == 0;
}

std::optional<int> nil_index(const StructureTensor& T)
{
    const auto s = lower_central_series(T);
    if (s.dims.back() != 0)
        return std::nullopt;
    return static_cast<int>(s.dims.size()) - 1;
}

bool is_quasi_filiform(const StructureTensor& T)
{
    const int n = T.dim();
    if (n < 4)
        throw UsageError("quasi-filiform test needs dimension at least 4");
    const auto s = lower_central_series(T);
    if (s.dims.back() != 0)
        return false;
    auto term_dim = [&](int k) { return k < static_cast<int>(s.dims.size()) ? s.dims[k] : 0; };
    return term_dim(n - 3) != 0 && term_dim(n - 2) == 0;
}

} // namespace leibniz
