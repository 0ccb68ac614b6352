#include "doctest.h"

#include "leibniz/errors.hpp"
#include "leibniz/families.hpp"
#include "leibniz/subspace.hpp"

using namespace leibniz;

TEST_CASE("registry covers every family once")
{
    const auto& reg = family_registry();
    CHECK(reg.size() == 27);
    for (const auto& info : reg) {
        CHECK(parse_family(info.name) == info.family);
        CHECK(family_name(info.family) == info.name);
    }
    CHECK_THROWS_AS(parse_family("G9"), UsageError);
}

TEST_CASE("bracket examples")
{
    const auto g = build({Family::G1, 4, {{"a", 2}}});
    CHECK(g.bracket_basis(1, 5) == Vector{1, 0, 0, 0, 0});
    CHECK(g.bracket_basis(5, 4) == Vector{0, 1, 0, -2, 0});

    const auto gc = build({Family::Gc2, 4, {}});
    CHECK(gc.bracket_basis(6, 4) == Vector{0, 1, 0, -1, 0, 0});

    const auto ll = build({Family::Ll4, 5, {{"epsilon", 0}}});
    CHECK(ll.bracket_basis(4, 6) == Vector{0, -1, 0, 1, 0, 0});

    const auto l = build({Family::L2, 5, {}});
    CHECK(l.dim() == 5);
    CHECK(l.nonzero_count() == 6);
    CHECK(l.entries().size() == 5);
}

TEST_CASE("dimensions")
{
    CHECK(build({Family::G3, 6, {{"delta", -1}}}).dim() == 7);
    CHECK(build({Family::Lc2, 6, {}}).dim() == 8);
    CHECK(build(sample_params(Family::LThm2Case2, 7, 1)).dim() == 8);
}

TEST_CASE("descriptor validation")
{
    CHECK_THROWS_WITH_AS(build({Family::G2, 4, {{"delta", 1}}}), "G2 requires n ≥ 5", DescriptorError);
    CHECK_THROWS_AS(build({Family::G2, 5, {{"delta", 2}}}), DescriptorError);
    CHECK_THROWS_AS(build({Family::G1, 5, {}}), DescriptorError);
    CHECK_THROWS_AS(build({Family::G1, 5, {{"a", 1}, {"b", 1}}}), DescriptorError);
    CHECK_THROWS_AS(build({Family::Ll4, 4, {{"epsilon", 1}}}), DescriptorError);
    CHECK_NOTHROW(build({Family::G4, 4, {{"epsilon", 1}}}));
    CHECK_NOTHROW(build({Family::G1, 4, {{"a", 0}}}));

    auto d = sample_params(Family::RThm1Case1, 5, 1);
    d.params["a"] = 0;
    CHECK_THROWS_AS(validate(d), DescriptorError);
    d = sample_params(Family::RThm1Case1, 5, 1);
    d.params["b"] = 2 * d.params["a"];
    CHECK_THROWS_AS(validate(d), DescriptorError);
    d = sample_params(Family::RThm1Case1, 5, 1);
    d.params["b"] = -d.params["a"];
    CHECK_THROWS_AS(validate(d), DescriptorError);
    d = sample_params(Family::LThm1Case1, 6, 1);
    d.params["b"] = d.params["a"];
    CHECK_THROWS_AS(validate(d), DescriptorError);
}

TEST_CASE("right-side epsilon family at n = 4")
{
    // with no e_5 or e_6 in the nilradical the epsilon terms have nowhere to land
    const auto one = build({Family::G4, 4, {{"epsilon", 1}}});
    const auto zero = build({Family::G4, 4, {{"epsilon", 0}}});
    CHECK(one == zero);
    CHECK(check_right_leibniz(one).empty());
}

TEST_CASE("sampling")
{
    const auto d = sample_params(Family::RThm1Case1, 5, 1);
    CHECK(d.params.at("a") != 0);
    CHECK(d.params.at("b") != 2 * d.params.at("a"));
    CHECK(d.params.at("b") != -d.params.at("a"));
    CHECK_THROWS_AS(sample_params(Family::G2, 4, 0), DescriptorError);

    const auto g = sample_params(Family::G4, 7, 3);
    const Rational eps = g.params.at("epsilon");
    CHECK((eps == 0 || eps == 1 || eps == -1));
    CHECK(g.params.count("b_1") == 1);
    CHECK(g.params.count("b_2") == 1);
    CHECK(g.params.count("b_3") == 0);

    CHECK(sample_params(Family::LThm1Case2, 6, 11).params == sample_params(Family::LThm1Case2, 6, 11).params);
    for (std::uint64_t s = 0; s < 200; ++s) {
        CHECK(sample_params(Family::G1, 5, s).params.at("a") != 1);
        CHECK(sample_params(Family::Ll4, 4, s).params.at("epsilon") == 0);
    }
}

TEST_CASE("parameter names")
{
    CHECK(param_names(Family::L2, 6).empty());
    CHECK(param_names(Family::G4, 5) == std::vector<std::string>{"epsilon"});
    CHECK(param_names(Family::RThm2Case3, 6) == std::vector<std::string>{"b", "a_2_1", "a_5_3", "a_6_3", "b_2_1"});
    const auto names = param_names(Family::RThm1Case2, 5);
    CHECK(std::find(names.begin(), names.end(), "a_n_n1") != names.end());
    CHECK(std::find(names.begin(), names.end(), "a_2_n1") != names.end());
}

TEST_CASE("expected invariants")
{
    const auto l = *expected_invariants({Family::L2, 6, {}});
    CHECK(l.ds_dims == std::vector<int>{6, 4, 0});
    CHECK(l.ls_dims == std::vector<int>{6, 4, 2, 1, 0});
    CHECK(l.side == FamilySide::both);
    CHECK(l.center_dim == 2);

    const auto g = *expected_invariants({Family::G4, 6, {{"epsilon", 0}, {"b_1", 0}}});
    CHECK(g.ds_dims == std::vector<int>{7, 5, 0});
    CHECK(g.ls_dims == std::vector<int>{7, 5, 5});
    CHECK(g.ls_stabilized);
    CHECK(g.side == FamilySide::right);

    const auto lc = *expected_invariants({Family::Lc2, 5, {}});
    CHECK(lc.ds_dims == std::vector<int>{7, 5, 3, 0});
    CHECK(lc.ls_dims == std::vector<int>{7, 5, 5});
    CHECK(lc.side == FamilySide::left);

    CHECK_FALSE(expected_invariants(sample_params(Family::RThm1Case1, 5, 0)).has_value());
}

TEST_CASE("every family satisfies its own identity and keeps the nilradical")
{
    for (const auto& info : family_registry())
        for (int n = info.min_n; n <= 7; ++n)
            for (std::uint64_t s = 0; s < 3; ++s) {
                const auto d = info.family == Family::L2 ? AlgebraDescriptor{Family::L2, n, {}} : sample_params(info.family, n, s);
                const auto T = build(d);
                if (info.side != FamilySide::left)
                    CHECK(check_right_leibniz(T).empty());
                if (info.side != FamilySide::right)
                    CHECK(check_left_leibniz(T).empty());
                CHECK(is_closed_block(T, n));
                CHECK(leading_block(T, n) == build({Family::L2, n, {}}));
            }
}

TEST_CASE("derived coefficients appear in the brackets")
{
    const auto d = sample_params(Family::RThm1Case1, 6, 4);
    const auto c = derived_coefficients(d);
    const Rational a = d.params.at("a"), b = d.params.at("b");
    const Rational common = ((a - b) * d.params.at("b_2_1") + a * (d.params.at("a_2_1") + d.params.at("a_4_1"))) / (2 * a - b);
    CHECK(c.at("A_4_3") == -(b / a) * d.params.at("a_2_3") + common);
    CHECK(c.at("B_2_3") == -d.params.at("a_2_3") + common);
    const auto T = build(d);
    CHECK(T.coefficient(3, 7, 4) == c.at("A_4_3"));
    CHECK(T.coefficient(7, 3, 2) == c.at("B_2_3"));
    CHECK(T.coefficient(7, 4, 5) == -c.at("A_4_3"));

    const auto l = sample_params(Family::LThm1Case3, 5, 2);
    CHECK(derived_coefficients(l).at("A_4_1") == -l.params.at("a_2_1") + l.params.at("a_4_3") + l.params.at("a_2_3"));
}

TEST_CASE("single coefficient re-solve recovers a corrupted entry")
{
    // the erratum protocol: damage one coefficient and solve for it from the identity alone
    const auto d = sample_params(Family::RThm1Case1, 5, 6);
    const auto T = build(d);
    const Rational truth = T.coefficient(6, 3, 2);
    StructureTensor bad = T;
    bad.add(6, 3, 2, Rational(7, 5));
    CHECK_FALSE(check_right_leibniz(bad).empty());
    const auto roots = resolve_coefficient(bad, Side::right, 6, 3, 2);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == truth);

    const auto L = build(sample_params(Family::LThm1Case2, 6, 1));
    const auto left_roots = resolve_coefficient(L, Side::left, 4, 7, 2);
    REQUIRE(left_roots.size() == 1);
    CHECK(left_roots[0] == L.coefficient(4, 7, 2));
}

TEST_CASE("strict transcription matches the default build while no patch is recorded")
{
    CHECK(patches().empty());
    for (const auto& info : family_registry()) {
        const auto d = info.family == Family::L2 ? AlgebraDescriptor{Family::L2, 6, {}} : sample_params(info.family, 6, 5);
        CHECK(build(d, true) == build(d, false));
    }
}
