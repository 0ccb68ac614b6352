#include "leibniz/derivations.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

Vector flatten(const LinearMap& m)
{
    Vector v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            v.push_back(m(r, c));
    return v;
}

LinearMap unflatten(const Vector& v, int n)
{
    if (static_cast<int>(v.size()) != n * n)
        throw UsageError("unflatten: length is not n^2");
    LinearMap m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = v[static_cast<std::size_t>(r) * n + c];
    return m;
}

Matrix derivation_constraints(const StructureTensor& T)
{
    const int n = T.dim();
    auto var = [n](int r, int c) { return (r - 1) * n + (c - 1); }; // d_{r,c}, 1-based
    std::vector<Vector> rows;
    Vector row(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                std::fill(row.begin(), row.end(), Rational(0));
                // D([e_i, e_j])_k
                for (const auto& t : T.terms(i, j))
                    row[var(k, t.basis)] += t.coeff;
                // [D e_i, e_j]_k = sum_m d_{m,i} c^k_{m,j}
                // [e_i, D e_j]_k = sum_m d_{m,j} c^k_{i,m}
                for (int m = 1; m <= n; ++m) {
                    const Rational c1 = T.coefficient(m, j, k);
                    if (sgn(c1) != 0)
                        row[var(m, i)] -= c1;
                    const Rational c2 = T.coefficient(i, m, k);
                    if (sgn(c2) != 0)
                        row[var(m, j)] -= c2;
                }
                if (!is_zero(row))
                    rows.push_back(row);
            }
    return Matrix::from_rows(rows, n * n);
}

namespace {

DerivationSpace from_nullspace(const std::vector<Vector>& null, int n)
{
    DerivationSpace out;
    out.algebra_dim = n;
    for (const auto& v : null)
        out.basis.push_back(unflatten(v, n));
    return out;
}

} // namespace

DerivationSpace derivation_space(const StructureTensor& T)
{
    const int n = T.dim();
    const Matrix sys = derivation_constraints(T);
    if (sys.rows() == 0) {
        std::vector<Vector> all;
        for (int i = 1; i <= n * n; ++i)
            all.push_back(basis_vector(n * n, i));
        return from_nullspace(all, n);
    }
    return from_nullspace(nullspace(sys), n);
}

DerivationSpace derivation_space_serial(const StructureTensor& T)
{
    const int n = T.dim();
    const Matrix sys = derivation_constraints(T);
    if (sys.rows() == 0) {
        std::vector<Vector> all;
        for (int i = 1; i <= n * n; ++i)
            all.push_back(basis_vector(n * n, i));
        return from_nullspace(all, n);
    }
    return from_nullspace(nullspace_serial(sys), n);
}

DerivationSpace inner_derivations(const StructureTensor& T, Side side)
{
    if (!satisfies_leibniz(T, side))
        throw PreconditionError("inner derivations need the " + side_name(side) + " Leibniz identity");
    const int n = T.dim();
    std::vector<Vector> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back(flatten(side == Side::right ? right_mult_basis(T, i) : left_mult_basis(T, i)));
    const Subspace s = Subspace::span(n * n, gens);
    DerivationSpace out;
    out.algebra_dim = n;
    for (const auto& r : s.rows())
        out.basis.push_back(unflatten(r, n));
    return out;
}

bool is_nilpotent_map(const LinearMap& D)
{
    if (!D.square())
        throw UsageError("is_nilpotent_map: map is not square");
    return power(D, D.rows()).is_zero();
}

std::vector<Poly> trace_pencil(const LinearMap& A, const LinearMap& B)
{
    if (!A.square() || !B.square() || A.rows() != B.rows())
        throw UsageError("trace_pencil: maps must be square of equal size");
    const int n = A.rows();
    // M(t) = tA + B with polynomial entries; P holds M(t)^k.
    std::vector<Poly> M(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            M[r * n + c] = Poly({B(r, c), A(r, c)});
    std::vector<Poly> P = M;
    std::vector<Poly> out;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<Poly> next(static_cast<std::size_t>(n) * n);
            for (int r = 0; r < n; ++r)
                for (int m = 0; m < n; ++m) {
                    const Poly& x = P[r * n + m];
                    if (x.is_zero())
                        continue;
                    for (int c = 0; c < n; ++c)
                        if (!M[m * n + c].is_zero())
                            next[r * n + c] += x * M[m * n + c];
                }
            P = std::move(next);
        }
        Poly tr;
        for (int i = 0; i < n; ++i)
            tr += P[i * n + i];
        out.push_back(std::move(tr));
    }
    return out;
}

bool nil_independent_pair(const LinearMap& A, const LinearMap& B)
{
    const auto pencil = trace_pencil(A, B);
    bool all_zero = true;
    for (const auto& p : pencil)
        all_zero = all_zero && p.is_zero();
    if (all_zero)
        return false;
    // beta = 0 and alpha = 0 axes
    if (is_nilpotent_map(A) || is_nilpotent_map(B))
        return false;
    // beta != 0: scale to beta = 1 and look for a common real root t = alpha.
    Poly g;
    for (const auto& p : pencil)
        if (!p.is_zero())
            g = gcd(g, p);
    if (g.degree() <= 0)
        return true;
    return real_root_count(g) == 0;
}

} // namespace leibniz
