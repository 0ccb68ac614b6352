#include "doctest.h"

#include "leibniz/errors.hpp"
#include "leibniz/families.hpp"
#include "leibniz/subspace.hpp"

using namespace leibniz;

namespace {

StructureTensor l2(int n) { return build({Family::L2, n, {}}); }

} // namespace

TEST_CASE("subspace arithmetic")
{
    Vector a{1, 2, 0}, b{2, 4, 0}, c{0, 0, 3};
    const auto S = Subspace::span(3, {a, b});
    CHECK(S.dim() == 1);
    CHECK(S.contains(Vector{Rational(1, 2), 1, 0}));
    CHECK_FALSE(S.contains(c));
    const auto U = S.sum(Subspace::span(3, {c}));
    CHECK(U.dim() == 2);
    CHECK(U.contains(S));
    CHECK(U == Subspace::span(3, {c, a}));
    CHECK(Subspace::full(3).dim() == 3);
    CHECK(Subspace::zero(3).dim() == 0);
    CHECK(Subspace::coordinate(4, {2, 4}).pivots() == std::vector<int>{1, 3});
}

TEST_CASE("series of L2")
{
    for (int n = 4; n <= 10; ++n) {
        const auto T = l2(n);
        const auto ds = derived_series(T);
        CHECK(ds.dims == std::vector<int>{n, n - 2, 0});
        const auto ls = lower_central_series(T);
        std::vector<int> expect{n, n - 2};
        for (int k = n - 4; k >= 0; --k)
            expect.push_back(k);
        CHECK(ls.dims == expect);
        CHECK_FALSE(ls.stabilized);
        CHECK(nil_index(T) == n - 2);
        CHECK(is_quasi_filiform(T));
        CHECK(is_nilpotent(T));
        CHECK(is_solvable(T));
    }
    CHECK(lower_central_series(l2(6)).dims == std::vector<int>{6, 4, 2, 1, 0});
    CHECK(lower_central_series(l2(4)).dims == std::vector<int>{4, 2, 0});
}

TEST_CASE("center of L2 is spanned by e_2 and e_n")
{
    for (int n = 4; n <= 8; ++n)
        CHECK(center(l2(n)) == Subspace::coordinate(n, {2, n}));
    CHECK(center(abelian(3)).dim() == 3);
}

TEST_CASE("quasi-filiform needs dimension four")
{
    CHECK_THROWS_AS(is_quasi_filiform(abelian(3)), UsageError);
    CHECK_FALSE(is_quasi_filiform(abelian(5)));
}

TEST_CASE("series of solvable extensions stabilise")
{
    const auto g4 = build({Family::G4, 6, {{"epsilon", 1}, {"b_1", 2}}});
    const auto ls = lower_central_series(g4);
    CHECK(ls.dims == std::vector<int>{7, 5, 5});
    CHECK(ls.stabilized);
    CHECK(derived_series(g4).dims == std::vector<int>{7, 5, 0});
    CHECK_FALSE(is_nilpotent(g4));
    CHECK(is_solvable(g4));
    CHECK_FALSE(nil_index(g4).has_value());

    const auto lc2 = build({Family::Lc2, 5, {}});
    CHECK(derived_series(lc2).dims == std::vector<int>{7, 5, 3, 0});
    CHECK(lower_central_series(lc2).dims == std::vector<int>{7, 5, 5});
}

TEST_CASE("g_{n+1,1} at a = 1 has a smaller derived algebra")
{
    // [e_3, e_{n+1}] = (a - 1) e_3 and [e_{n+1}, e_3] = (1 - a) e_3 both vanish,
    // so e_3 only enters L^1 through [e_1, e_{n+1}] = e_1 - e_3.
    for (int n = 4; n <= 7; ++n) {
        for (Family f : {Family::G1, Family::L1}) {
            const auto T = build({f, n, {{"a", 1}}});
            const auto ls = lower_central_series(T);
            CHECK(ls.dims == std::vector<int>{n + 1, n - 1, n - 1});
            CHECK(ls.stabilized);
            const auto generic = build({f, n, {{"a", 3}}});
            CHECK(lower_central_series(generic).dims == std::vector<int>{n + 1, n, n});
        }
    }
}

TEST_CASE("internal series of a subalgebra")
{
    const auto T = build({Family::G1, 5, {{"a", 2}}});
    const auto N = Subspace::coordinate(6, {1, 2, 3, 4, 5});
    const auto s = internal_lower_central_series(T, N, 10);
    CHECK(s.dims == std::vector<int>{5, 3, 1, 0});
    const auto all = internal_lower_central_series(T, Subspace::full(6), 10);
    CHECK(all.dims == lower_central_series(T).dims);
}
