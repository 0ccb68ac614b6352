#include "leibniz/quotients.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>

namespace leibniz {

std::optional<IdealWitness> ideal_violation(const StructureTensor& T, const Subspace& S)
{
    if (S.ambient() != T.dim())
        throw UsageError("subspace ambient dimension does not match the algebra");
    const int n = T.dim();
    for (const auto& s : S.rows())
        for (int i = 1; i <= n; ++i) {
            const Vector e = basis_vector(n, i);
            Vector left = bracket(T, e, s);
            if (!S.contains(left))
                return IdealWitness{i, true, s, std::move(left)};
            Vector right = bracket(T, s, e);
            if (!S.contains(right))
                return IdealWitness{i, false, s, std::move(right)};
        }
    return std::nullopt;
}

bool is_two_sided_ideal(const StructureTensor& T, const Subspace& S) { return !ideal_violation(T, S); }

Subspace ideal_closure(const StructureTensor& T, const Subspace& S)
{
    if (S.ambient() != T.dim())
        throw UsageError("subspace ambient dimension does not match the algebra");
    const Subspace full = Subspace::full(T.dim());
    Subspace current = S;
    while (true) {
        Subspace next = current.sum(product_space(T, current, full)).sum(product_space(T, full, current));
        if (next.dim() == current.dim())
            return current;
        current = std::move(next);
    }
}

Subspace squares_ideal(const StructureTensor& T)
{
    const int n = T.dim();
    std::vector<Vector> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Vector v = add(T.bracket_basis(i, j), T.bracket_basis(j, i));
            if (!is_zero(v))
                gens.push_back(std::move(v));
        }
    return ideal_closure(T, Subspace::span(n, gens));
}

std::vector<int> quotient_representatives(const Subspace& I)
{
    std::vector<int> reps;
    const auto& piv = I.pivots();
    for (int c = 0; c < I.ambient(); ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
            reps.push_back(c + 1);
    return reps;
}

Vector reduce_modulo(const Subspace& I, const Vector& v)
{
    Vector r = v;
    const auto& rows = I.rows();
    const auto& piv = I.pivots();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Rational c = r[piv[k]];
        if (sgn(c) != 0)
            axpy(r, -c, rows[k]);
    }
    const auto reps = quotient_representatives(I);
    Vector out;
    out.reserve(reps.size());
    for (int idx : reps)
        out.push_back(r[idx - 1]);
    return out;
}

StructureTensor quotient_algebra(const StructureTensor& T, const Subspace& I)
{
    if (auto w = ideal_violation(T, I))
        throw PreconditionError("quotient by a subspace that is not a two-sided ideal");
    const auto reps = quotient_representatives(I);
    const int m = static_cast<int>(reps.size());
    StructureTensor Q(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const Vector v = reduce_modulo(I, T.bracket_basis(reps[a], reps[b]));
            for (int k = 0; k < m; ++k)
                if (sgn(v[k]) != 0)
                    Q.add(a + 1, b + 1, k + 1, v[k]);
        }
    return Q;
}

IdealCertificate verify_nilradical_certificate(const StructureTensor& T, const Subspace& N)
{
    IdealCertificate cert;
    const int n = T.dim();
    cert.ideal_witness = ideal_violation(T, N);
    cert.is_ideal = !cert.ideal_witness;
    cert.dim_bound = 2 * N.dim() >= n;

    const auto ls = internal_lower_central_series(T, N, N.dim() + 1);
    cert.restricted_ls = ls.dims;
    cert.is_nilpotent_subalgebra = !ls.dims.empty() && ls.dims.back() == 0;

    cert.complement_nonnilpotent = true;
    for (int idx : quotient_representatives(N)) {
        const Subspace ext = N.sum(Subspace::coordinate(n, {idx}));
        const auto s = internal_lower_central_series(T, ext, ext.dim() + 1);
        if (!s.dims.empty() && s.dims.back() == 0) {
            cert.complement_nonnilpotent = false;
            cert.nilpotent_extension.push_back(idx);
        }
    }
    return cert;
}

} // namespace leibniz
