#include "doctest.h"

#include "leibniz/errors.hpp"
#include "leibniz/families.hpp"
#include "leibniz/quotients.hpp"

using namespace leibniz;

namespace {

StructureTensor l2(int n) { return build({Family::L2, n, {}}); }

} // namespace

TEST_CASE("ideal closure")
{
    const auto T = l2(5);
    CHECK(ideal_closure(T, Subspace::coordinate(5, {2})) == Subspace::coordinate(5, {2}));
    CHECK(ideal_closure(T, Subspace::full(5)) == Subspace::full(5));
    CHECK(ideal_closure(T, Subspace::coordinate(5, {3})) == Subspace::coordinate(5, {2, 3, 4, 5}));
    const auto once = ideal_closure(T, Subspace::coordinate(5, {4}));
    CHECK(ideal_closure(T, once) == once);
    CHECK(ideal_closure(T, Subspace::coordinate(5, {3, 4})).contains(once));
}

TEST_CASE("squares ideal")
{
    for (int n = 4; n <= 7; ++n)
        CHECK(squares_ideal(l2(n)) == Subspace::coordinate(n, {2}));
    CHECK(squares_ideal(abelian(3)).dim() == 0);
    CHECK(squares_ideal(build({Family::G1, 4, {{"a", 3}}})) == Subspace::coordinate(5, {2}));
}

TEST_CASE("quotients")
{
    const auto T = l2(5);
    const auto Q = quotient_algebra(T, Subspace::coordinate(5, {2}));
    StructureTensor expect(4); // basis e_1, e_3, e_4, e_5
    expect.add(2, 1, 3, 1);
    expect.add(3, 1, 4, 1);
    expect.add(1, 2, 3, -1);
    expect.add(1, 3, 4, -1);
    CHECK(Q == expect);
    CHECK(check_lie(Q));

    CHECK(quotient_algebra(T, Subspace::zero(5)) == T);
    CHECK(quotient_algebra(T, Subspace::full(5)).dim() == 0);
    CHECK_THROWS_AS(quotient_algebra(T, Subspace::coordinate(5, {3})), PreconditionError);
}

TEST_CASE("quotient by the squares ideal is Lie and has smaller series")
{
    for (const auto& info : family_registry())
        for (int n = info.min_n; n <= 6; ++n) {
            const auto d = info.family == Family::L2 ? AlgebraDescriptor{Family::L2, n, {}} : sample_params(info.family, n, 3);
            const auto T = build(d);
            const auto Q = quotient_algebra(T, squares_ideal(T));
            CHECK(check_lie(Q));
            const auto qs = lower_central_series(Q).dims, ts = lower_central_series(T).dims;
            for (std::size_t i = 0; i < std::min(qs.size(), ts.size()); ++i)
                CHECK(qs[i] <= ts[i]);
            const auto qd = derived_series(Q).dims, td = derived_series(T).dims;
            for (std::size_t i = 0; i < std::min(qd.size(), td.size()); ++i)
                CHECK(qd[i] <= td[i]);
        }
}

TEST_CASE("nilradical certificates")
{
    const auto g = build({Family::G1, 4, {{"a", 1}}});
    const auto good = verify_nilradical_certificate(g, Subspace::coordinate(5, {1, 2, 3, 4}));
    CHECK(good.passes());
    CHECK(good.dim_bound);

    CHECK(verify_nilradical_certificate(l2(5), Subspace::full(5)).passes());

    const auto bad = verify_nilradical_certificate(g, Subspace::coordinate(5, {1, 2, 3}));
    CHECK_FALSE(bad.is_ideal);
    CHECK_FALSE(bad.passes());
    REQUIRE(bad.ideal_witness.has_value());
    CHECK(bad.ideal_witness->product == basis_vector(5, 4));

    // a nilpotent ideal that is too small: N + <e_1> is still nilpotent
    const auto small = verify_nilradical_certificate(l2(5), Subspace::coordinate(5, {2, 3, 4, 5}));
    CHECK(small.is_ideal);
    CHECK(small.is_nilpotent_subalgebra);
    CHECK_FALSE(small.complement_nonnilpotent);
    CHECK(small.nilpotent_extension == std::vector<int>{1});
}

TEST_CASE("every catalog extension certifies its nilradical")
{
    for (const auto& info : family_registry()) {
        if (info.family == Family::L2)
            continue;
        for (int n = info.min_n; n <= 6; ++n) {
            const auto T = build(sample_params(info.family, n, 8));
            std::vector<int> idx;
            for (int i = 1; i <= n; ++i)
                idx.push_back(i);
            const auto cert = verify_nilradical_certificate(T, Subspace::coordinate(T.dim(), idx));
            CHECK(cert.passes());
            CHECK(cert.dim_bound);
        }
    }
}
