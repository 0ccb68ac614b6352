#include "doctest.h"

#include "leibniz/derivations.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/families.hpp"

using namespace leibniz;

namespace {

StructureTensor l2(int n) { return build({Family::L2, n, {}}); }

LinearMap diag(std::initializer_list<long> d)
{
    LinearMap m = LinearMap::zero(static_cast<int>(d.size()));
    int i = 0;
    for (long v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

bool in_span(const DerivationSpace& space, const LinearMap& m)
{
    std::vector<Vector> rows;
    for (const auto& b : space.basis)
        rows.push_back(flatten(b));
    const int before = rank(Matrix::from_rows(rows, static_cast<int>(flatten(m).size())));
    rows.push_back(flatten(m));
    return rank(Matrix::from_rows(rows, static_cast<int>(flatten(m).size()))) == before;
}

} // namespace

TEST_CASE("derivation algebra dimensions of L2 (frozen from the dense oracle)")
{
    CHECK(derivation_space(l2(4)).dim() == 6);
    CHECK(derivation_space(l2(5)).dim() == 8);
    CHECK(derivation_space(l2(6)).dim() == 10);
    CHECK(derivation_space(l2(7)).dim() == 12);
    CHECK(derivation_space(abelian(3)).dim() == 9);
}

TEST_CASE("every basis derivation satisfies the derivation law")
{
    for (int n = 4; n <= 6; ++n) {
        const auto T = l2(n);
        for (const auto& D : derivation_space(T).basis)
            CHECK(is_derivation(T, D));
    }
    const auto G = build(sample_params(Family::Gc2, 5, 1));
    for (const auto& D : derivation_space(G).basis)
        CHECK(is_derivation(G, D));
}

TEST_CASE("listed inner derivations of L2 lie in the derivation algebra")
{
    const int n = 6;
    const auto T = l2(n);
    const auto der = derivation_space(T);
    CHECK(in_span(der, right_mult_basis(T, 1)));
    CHECK(in_span(der, elementary(n, 2, 1) - elementary(n, 4, 1)));
    for (int i = 4; i <= n - 1; ++i)
        CHECK(in_span(der, Rational(-1) * elementary(n, i + 1, 1)));
    CHECK_FALSE(in_span(der, LinearMap::identity(n)));
}

TEST_CASE("inner derivations")
{
    for (int n = 4; n <= 7; ++n) {
        const auto T = l2(n);
        const auto right = inner_derivations(T, Side::right);
        const auto left = inner_derivations(T, Side::left);
        CHECK(right.dim() == n - 2);
        CHECK(left.dim() == n - 2);
        const auto der = derivation_space(T);
        for (const auto& m : right.basis)
            CHECK(in_span(der, m));
        for (const auto& m : left.basis)
            CHECK(in_span(der, m));
        CHECK(in_span(left, elementary(n, 4, 1)));
        for (int i = 1; i <= n; ++i) {
            CHECK(right_mult_basis(T, i) == expected_inner_right(n, i));
            CHECK(left_mult_basis(T, i) == expected_inner_left(n, i));
            CHECK(is_nilpotent_map(right_mult_basis(T, i)));
        }
    }
    CHECK(inner_derivations(abelian(3), Side::right).dim() == 0);
    CHECK_THROWS_AS(inner_derivations(build({Family::G1, 5, {{"a", 2}}}), Side::left), PreconditionError);
}

TEST_CASE("nilpotent maps")
{
    CHECK(is_nilpotent_map(right_mult_basis(l2(5), 1)));
    CHECK_FALSE(is_nilpotent_map(LinearMap::identity(3)));
    const auto g = build({Family::G1, 4, {{"a", 1}}});
    LinearMap R = right_mult_basis(g, 5);
    LinearMap block(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            block(r, c) = R(r, c);
    CHECK_FALSE(is_nilpotent_map(block));
}

TEST_CASE("trace pencil coefficients")
{
    const auto p = trace_pencil(diag({1, 0}), diag({0, 1}));
    REQUIRE(p.size() == 2);
    CHECK(p[0] == Poly({1, 1}));    // alpha + beta
    CHECK(p[1] == Poly({1, 0, 1})); // alpha^2 + beta^2
}

TEST_CASE("nil-independence of pairs")
{
    CHECK(nil_independent_pair(diag({1, 0}), diag({0, 1})));
    LinearMap N = LinearMap::zero(3);
    N(0, 1) = 1;
    N(1, 2) = 1;
    CHECK_FALSE(nil_independent_pair(N, N));
    CHECK_FALSE(nil_independent_pair(diag({1, 2}), Rational(3) * diag({1, 2})));
    // alpha + beta = 0 kills diag(1,1) - diag(1,1) only; diag(1,-1) and diag(1,1)
    // combine to diag(2,0) and diag(0,2), never nilpotent
    CHECK(nil_independent_pair(diag({1, -1}), diag({1, 1})));
    // alpha A + beta B = diag(alpha + beta, alpha + beta) is nilpotent on alpha = -beta
    CHECK_FALSE(nil_independent_pair(diag({1, 1}), diag({-1, -1})));
    CHECK_THROWS_AS(nil_independent_pair(diag({1}), diag({1, 1})), UsageError);
    const auto A = diag({2, -1, 3}), B = diag({1, 1, 0});
    CHECK(nil_independent_pair(A, B) == nil_independent_pair(B, A));
}

TEST_CASE("outer derivation pairs of L2")
{
    for (int n = 5; n <= 8; ++n) {
        const auto T = l2(n);
        std::map<int, Rational> band;
        for (int m = 5; m <= n; ++m)
            band[m] = Rational(m, 3);
        for (const auto& [c, a23] : {std::pair<Rational, Rational>{0, 0}, {Rational(1, 2), -2}}) {
            for (const auto& pair : {outer_right_pair(n, c, a23, band), outer_left_pair(n, c, a23, band)}) {
                CHECK(is_derivation(T, pair.first));
                CHECK(is_derivation(T, pair.second));
                CHECK_FALSE(is_nilpotent_map(pair.first));
                CHECK_FALSE(is_nilpotent_map(pair.second));
                CHECK(nil_independent_pair(pair.first, pair.second));
            }
        }
    }
    const auto zero = outer_right_pair(5, 0, 0, {});
    CHECK(nil_independent_pair(zero.first, zero.second));
}

TEST_CASE("outer pair matches the codimension-two extensions")
{
    for (int n = 4; n <= 7; ++n) {
        const auto g = build({Family::Gc2, n, {}});
        const auto l = build({Family::Lc2, n, {}});
        const auto r = outer_right_pair(n, 0, 0, {});
        const auto lp = outer_left_pair(n, 0, 0, {});
        for (int row = 0; row < n; ++row)
            for (int col = 0; col < n; ++col) {
                CHECK(right_mult_basis(g, n + 1)(row, col) == r.first(row, col));
                CHECK(right_mult_basis(g, n + 2)(row, col) == r.second(row, col));
                CHECK(left_mult_basis(l, n + 1)(row, col) == lp.first(row, col));
                CHECK(left_mult_basis(l, n + 2)(row, col) == lp.second(row, col));
            }
    }
}

TEST_CASE("flatten is row major")
{
    LinearMap m(2, 2);
    m(0, 1) = 5;
    CHECK(flatten(m) == Vector{0, 5, 0, 0});
    CHECK(unflatten(flatten(m), 2) == m);
}
