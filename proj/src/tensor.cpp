#include "leibniz/tensor.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>

#ifdef LEIBNIZ_HAVE_OPENMP
#include <omp.h>
#endif

namespace leibniz {

StructureTensor::StructureTensor(int dim)
    : dim_(dim)
{
    if (dim < 0)
        throw UsageError("negative dimension");
}

void StructureTensor::check_index(int i) const
{
    if (i < 1 || i > dim_)
        throw UsageError("basis index " + std::to_string(i) + " outside 1.." + std::to_string(dim_));
}

void StructureTensor::add(int i, int j, int k, const Rational& c)
{
    check_index(i);
    check_index(j);
    check_index(k);
    if (sgn(c) == 0)
        return;
    auto& terms = table_[{i, j}];
    auto it = std::lower_bound(terms.begin(), terms.end(), k,
                               [](const Term& t, int key) { return t.basis < key; });
    if (it != terms.end() && it->basis == k) {
        it->coeff += c;
        if (sgn(it->coeff) == 0)
            terms.erase(it);
    } else {
        terms.insert(it, Term{k, c});
    }
    if (terms.empty())
        table_.erase({i, j});
}

void StructureTensor::set(int i, int j, const Vector& value)
{
    check_index(i);
    check_index(j);
    if (static_cast<int>(value.size()) != dim_)
        throw UsageError("bracket value has wrong length");
    std::vector<Term> terms;
    for (int k = 0; k < dim_; ++k)
        if (sgn(value[k]) != 0)
            terms.push_back(Term{k + 1, value[k]});
    if (terms.empty())
        table_.erase({i, j});
    else
        table_[{i, j}] = std::move(terms);
}

void StructureTensor::clear(int i, int j) { table_.erase({i, j}); }

Rational StructureTensor::coefficient(int i, int j, int k) const
{
    auto it = table_.find({i, j});
    if (it == table_.end())
        return 0;
    for (const auto& t : it->second)
        if (t.basis == k)
            return t.coeff;
    return 0;
}

const std::vector<Term>& StructureTensor::terms(int i, int j) const
{
    static const std::vector<Term> none;
    auto it = table_.find({i, j});
    return it == table_.end() ? none : it->second;
}

Vector StructureTensor::bracket_basis(int i, int j) const
{
    Vector v = zero_vector(dim_);
    for (const auto& t : terms(i, j))
        v[t.basis - 1] = t.coeff;
    return v;
}

std::size_t StructureTensor::nonzero_count() const
{
    std::size_t n = 0;
    for (const auto& [key, terms] : table_)
        n += terms.size();
    return n;
}

std::string side_name(Side s) { return s == Side::right ? "right" : "left"; }

Vector bracket(const StructureTensor& T, const Vector& x, const Vector& y)
{
    const int n = T.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw UsageError("bracket: vector length does not match algebra dimension");
    Vector r = zero_vector(n);
    for (const auto& [key, terms] : T.entries()) {
        const Rational& xi = x[key.first - 1];
        const Rational& yj = y[key.second - 1];
        if (sgn(xi) == 0 || sgn(yj) == 0)
            continue;
        const Rational w = xi * yj;
        for (const auto& t : terms)
            r[t.basis - 1] += w * t.coeff;
    }
    return r;
}

LinearMap right_mult(const StructureTensor& T, const Vector& x)
{
    const int n = T.dim();
    if (static_cast<int>(x.size()) != n)
        throw UsageError("right_mult: vector length does not match algebra dimension");
    LinearMap m(n, n);
    for (const auto& [key, terms] : T.entries()) {
        const Rational& xj = x[key.second - 1];
        if (sgn(xj) == 0)
            continue;
        for (const auto& t : terms)
            m(t.basis - 1, key.first - 1) += xj * t.coeff;
    }
    return m;
}

LinearMap left_mult(const StructureTensor& T, const Vector& x)
{
    const int n = T.dim();
    if (static_cast<int>(x.size()) != n)
        throw UsageError("left_mult: vector length does not match algebra dimension");
    LinearMap m(n, n);
    for (const auto& [key, terms] : T.entries()) {
        const Rational& xi = x[key.first - 1];
        if (sgn(xi) == 0)
            continue;
        for (const auto& t : terms)
            m(t.basis - 1, key.second - 1) += xi * t.coeff;
    }
    return m;
}

LinearMap right_mult_basis(const StructureTensor& T, int i) { return right_mult(T, basis_vector(T.dim(), i)); }

LinearMap left_mult_basis(const StructureTensor& T, int i) { return left_mult(T, basis_vector(T.dim(), i)); }

namespace {

// Dense lookup of basis brackets for the identity loops.
struct BasisTable {
    int n;
    std::vector<const std::vector<Term>*> cells;

    explicit BasisTable(const StructureTensor& T)
        : n(T.dim()), cells(static_cast<std::size_t>(n) * n, nullptr)
    {
        for (const auto& [key, terms] : T.entries())
            cells[static_cast<std::size_t>(key.first - 1) * n + (key.second - 1)] = &terms;
    }

    const std::vector<Term>* at(int i, int j) const { return cells[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }

    // acc += c * [v, e_t] for sparse v
    void right_apply(Vector& acc, const Rational& c, const std::vector<Term>* v, int t) const
    {
        if (!v)
            return;
        for (const auto& a : *v)
            if (const auto* b = at(a.basis, t))
                for (const auto& term : *b)
                    acc[term.basis - 1] += c * a.coeff * term.coeff;
    }

    // acc += c * [e_r, v]
    void left_apply(Vector& acc, const Rational& c, int r, const std::vector<Term>* v) const
    {
        if (!v)
            return;
        for (const auto& a : *v)
            if (const auto* b = at(r, a.basis))
                for (const auto& term : *b)
                    acc[term.basis - 1] += c * a.coeff * term.coeff;
    }
};

// Fills lhs/rhs for triple (r, s, t) on the requested side.
void identity_sides(const BasisTable& tab, Side side, int r, int s, int t, Vector& lhs, Vector& rhs)
{
    const int n = tab.n;
    lhs.assign(static_cast<std::size_t>(n), Rational(0));
    rhs.assign(static_cast<std::size_t>(n), Rational(0));
    // [[e_r, e_s], e_t]
    tab.right_apply(lhs, 1, tab.at(r, s), t);
    if (side == Side::right) {
        // [[e_r, e_t], e_s] + [e_r, [e_s, e_t]]
        tab.right_apply(rhs, 1, tab.at(r, t), s);
        tab.left_apply(rhs, 1, r, tab.at(s, t));
    } else {
        // [e_r, [e_s, e_t]] - [e_s, [e_r, e_t]]
        tab.left_apply(rhs, 1, r, tab.at(s, t));
        tab.left_apply(rhs, -1, s, tab.at(r, t));
    }
}

void violations_for_r(const BasisTable& tab, Side side, int r, std::vector<IdentityViolation>& out)
{
    Vector lhs, rhs;
    for (int s = 1; s <= tab.n; ++s)
        for (int t = 1; t <= tab.n; ++t) {
            identity_sides(tab, side, r, s, t, lhs, rhs);
            if (lhs != rhs)
                out.push_back(IdentityViolation{r, s, t, lhs, rhs});
        }
}

} // namespace

std::vector<IdentityViolation> check_leibniz(const StructureTensor& T, Side side)
{
    const BasisTable tab(T);
    std::vector<IdentityViolation> out;
    for (int r = 1; r <= T.dim(); ++r)
        violations_for_r(tab, side, r, out);
    return out;
}

std::vector<IdentityViolation> check_leibniz_parallel(const StructureTensor& T, Side side)
{
    const BasisTable tab(T);
    const int n = T.dim();
    std::vector<std::vector<IdentityViolation>> per_r(static_cast<std::size_t>(n));
#ifdef LEIBNIZ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int r = 1; r <= n; ++r)
        violations_for_r(tab, side, r, per_r[r - 1]);
    std::vector<IdentityViolation> out;
    for (auto& part : per_r)
        for (auto& v : part)
            out.push_back(std::move(v));
    return out;
}

std::vector<IdentityViolation> check_right_leibniz(const StructureTensor& T) { return check_leibniz(T, Side::right); }

std::vector<IdentityViolation> check_left_leibniz(const StructureTensor& T) { return check_leibniz(T, Side::left); }

bool satisfies_leibniz(const StructureTensor& T, Side side)
{
    const BasisTable tab(T);
    Vector lhs, rhs;
    for (int r = 1; r <= T.dim(); ++r)
        for (int s = 1; s <= T.dim(); ++s)
            for (int t = 1; t <= T.dim(); ++t) {
                identity_sides(tab, side, r, s, t, lhs, rhs);
                if (lhs != rhs)
                    return false;
            }
    return true;
}

bool is_derivation(const StructureTensor& T, const LinearMap& D)
{
    const int n = T.dim();
    if (D.rows() != n || D.cols() != n)
        throw UsageError("is_derivation: map size does not match algebra dimension");
    std::vector<Vector> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images[i] = D.column(i);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Vector lhs = D * T.bracket_basis(i, j);
            Vector rhs = bracket(T, images[i - 1], basis_vector(n, j));
            axpy(rhs, 1, bracket(T, basis_vector(n, i), images[j - 1]));
            if (lhs != rhs)
                return false;
        }
    return true;
}

bool check_lie(const StructureTensor& T)
{
    for (const auto& [key, terms] : T.entries()) {
        const auto [i, j] = key;
        if (i == j)
            return false;
        const auto& mirror = T.terms(j, i);
        if (mirror.size() != terms.size())
            return false;
        for (std::size_t a = 0; a < terms.size(); ++a)
            if (mirror[a].basis != terms[a].basis || mirror[a].coeff != -terms[a].coeff)
                return false;
    }
    return satisfies_leibniz(T, Side::right);
}

StructureTensor transform_basis(const StructureTensor& T, const LinearMap& P)
{
    const int n = T.dim();
    if (P.rows() != n || P.cols() != n)
        throw UsageError("transform_basis: map size does not match algebra dimension");
    const Matrix Pinv = inverse(P);
    std::vector<Vector> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        cols[i] = P.column(i);
    StructureTensor out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Vector b = bracket(T, cols[i - 1], cols[j - 1]);
            if (is_zero(b))
                continue;
            out.set(i, j, Pinv * b);
        }
    return out;
}

StructureTensor abelian(int dim) { return StructureTensor(dim); }

StructureTensor leading_block(const StructureTensor& T, int m)
{
    StructureTensor out(m);
    for (const auto& [key, terms] : T.entries()) {
        if (key.first > m || key.second > m)
            continue;
        for (const auto& t : terms)
            if (t.basis <= m)
                out.add(key.first, key.second, t.basis, t.coeff);
    }
    return out;
}

bool is_closed_block(const StructureTensor& T, int m)
{
    for (const auto& [key, terms] : T.entries()) {
        if (key.first > m || key.second > m)
            continue;
        for (const auto& t : terms)
            if (t.basis > m)
                return false;
    }
    return true;
}

} // namespace leibniz
