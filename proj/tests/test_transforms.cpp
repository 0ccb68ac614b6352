#include "doctest.h"

#include "leibniz/errors.hpp"
#include "leibniz/subspace.hpp"
#include "leibniz/transforms.hpp"

using namespace leibniz;

TEST_CASE("absorption steps")
{
    const auto s = absorption_step(StepKind::shift, 6, 6, {{1, -2}});
    LinearMap expect = LinearMap::identity(6);
    expect(0, 5) = -2;
    CHECK(s.map == expect);

    CHECK(absorption_step(StepKind::shift, 6, 6, {}).map == LinearMap::identity(6));

    const auto sc = absorption_step(StepKind::scale, 6, 0, {{6, Rational(1, 3)}});
    LinearMap e2 = LinearMap::identity(6);
    e2(5, 5) = Rational(1, 3);
    CHECK(sc.map == e2);

    CHECK_THROWS_AS(absorption_step(StepKind::shift, 6, 7, {{1, 1}}), UsageError);
    CHECK_THROWS_AS(absorption_step(StepKind::shift, 6, 6, {{6, 1}}), UsageError);
    CHECK_THROWS_AS(absorption_step(StepKind::scale, 6, 0, {{2, 0}}), SingularMapError);
}

TEST_CASE("patterns")
{
    const auto T = build({Family::G1, 4, {{"a", 3}}});
    const auto p = pattern_from_tensor(T);
    CHECK(p.fixed_set.size() == T.nonzero_count());
    CHECK(p.zero_set.size() + p.fixed_set.size() == 125);
    CHECK(matches(T, p));
    StructureTensor U = T;
    U.add(5, 5, 2, 1);
    CHECK_FALSE(matches(U, p));
    CHECK(first_mismatch(U, p) == Position{5, 5, 2});
    CHECK(matches(U, pattern_from_tensor(T, {{5, 5, 2}})));
    CHECK_THROWS_AS(matches(abelian(3), p), UsageError);
}

TEST_CASE("empty chain against the start's own shape")
{
    const auto d = sample_params(Family::RThm1Case4, 5, 2);
    CHECK(verify_chain(d, {}, pattern_from_tensor(build(d))));
}

TEST_CASE("absorption chains reach the reduced forms")
{
    for (int n : {5, 6, 7})
        for (std::uint64_t s = 0; s < 4; ++s) {
            for (const auto& c : {right_case1_absorption(sample_params(Family::RThm1Case1, n, s)),
                                  right_case3_absorption(sample_params(Family::RThm1Case3, n, s)),
                                  left_case1_absorption(sample_params(Family::LThm1Case1, n, s)),
                                  right_case3_to_epsilon_family(sample_square_case3(n, s))}) {
                const auto r = run_chain(build(c.start), n, c.steps, c.pattern);
                CHECK_MESSAGE(r.ok, c.name << ": " << r.reason);
                CHECK(verify_chain(c.start, c.steps, c.pattern));
                // Leibniz-ness survives the chain
                const Side side = family_info(c.start.family).side == FamilySide::left ? Side::left : Side::right;
                CHECK(satisfies_leibniz(r.result, side));
            }
        }
}

TEST_CASE("the first absorption only moves the square of the new generator")
{
    const auto c = right_case1_absorption(sample_params(Family::RThm1Case1, 6, 3));
    const auto r = run_chain(build(c.start), 6, c.steps, c.pattern);
    REQUIRE(r.ok);
    // everything else is pinned, the e_2 part of [e_7, e_7] is free
    CHECK(pattern_from_tensor(r.result, {{7, 7, 2}}).fixed_set == c.pattern.fixed_set);
}

TEST_CASE("chains compose into one step")
{
    const auto c = right_case3_absorption(sample_params(Family::RThm1Case3, 6, 1));
    const LinearMap total = compose(c.steps, 7);
    const std::vector<TransformStep> single{{"composite", total}};
    CHECK(verify_chain(c.start, single, c.pattern));
    StructureTensor stepwise = build(c.start);
    for (const auto& s : c.steps)
        stepwise = transform_basis(stepwise, s.map);
    CHECK(transform_basis(build(c.start), total) == stepwise);
}

TEST_CASE("a step that disturbs the nilradical is rejected")
{
    const auto d = sample_params(Family::RThm1Case1, 5, 1);
    const std::vector<TransformStep> steps{absorption_step(StepKind::scale, 6, 0, {{3, 2}}, "e'_3 = 2 e_3")};
    const auto r = run_chain(build(d), 5, steps, pattern_from_tensor(build(d)));
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 0);
}

TEST_CASE("epsilon normalisation picks the sign of a_5_3 / b")
{
    int seen_minus = 0, seen_zero = 0, seen_plus = 0;
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto d = sample_square_case3(5, s);
        const Rational ratio = d.params.at("a_5_3") / d.params.at("b");
        const auto c = right_case3_to_epsilon_family(d);
        CHECK(c.target.params.at("epsilon") == sgn(ratio));
        seen_minus += sgn(ratio) < 0;
        seen_zero += sgn(ratio) == 0;
        seen_plus += sgn(ratio) > 0;
    }
    CHECK(seen_minus > 0);
    CHECK(seen_zero > 0);
    CHECK(seen_plus > 0);
    auto d = sample_square_case3(5, 0);
    d.params["a_5_3"] = d.params.at("b") * 2;
    CHECK_THROWS_AS(right_case3_to_epsilon_family(d), UsageError);
}

TEST_CASE("isomorphism witnesses")
{
    const auto l = build({Family::L2, 5, {}});
    CHECK(iso_witness_check(l, l, LinearMap::identity(5)));
    const auto g = build({Family::G2, 5, {{"delta", 1}}});
    CHECK(iso_witness_check(g, g, LinearMap::identity(6)));
    const auto l4 = build({Family::L2, 4, {}});
    CHECK_FALSE(iso_witness_check(l4, abelian(4), LinearMap::identity(4)));
    LinearMap P = LinearMap::identity(4);
    P(1, 3) = 5;
    CHECK_FALSE(iso_witness_check(l4, abelian(4), P));
    CHECK_THROWS_AS(iso_witness_check(l4, l, LinearMap::identity(4)), UsageError);
    CHECK_THROWS_AS(iso_witness_check(l4, l4, LinearMap::zero(4)), SingularMapError);

    // a witness forces equal invariants
    const auto c = right_case1_absorption(sample_params(Family::RThm1Case1, 5, 2));
    const auto A = build(c.start);
    const LinearMap W = compose(c.steps, 6);
    const auto B = transform_basis(A, W);
    CHECK(iso_witness_check(A, B, W));
    CHECK(lower_central_series(A).dims == lower_central_series(B).dims);
    CHECK(derived_series(A).dims == derived_series(B).dims);
    CHECK(center(A).dim() == center(B).dim());
}
