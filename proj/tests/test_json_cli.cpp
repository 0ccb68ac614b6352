#include "doctest.h"

#include "leibniz/cli.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/suite.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace leibniz;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "leibniz");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("leibniz_test_" + name)).string();
}

void write(const std::string& path, const std::string& text)
{
    std::ofstream(path) << text;
}

} // namespace

TEST_CASE("algebra JSON round trip")
{
    for (const auto& info : family_registry()) {
        const auto d = info.family == Family::L2 ? AlgebraDescriptor{Family::L2, 6, {}} : sample_params(info.family, 6, 2);
        const auto T = build(d);
        const auto text = algebra_to_json(T).dump();
        CHECK(algebra_from_json(Json::parse(text)) == T);
        CHECK(algebra_to_json(algebra_from_json(Json::parse(text))).dump() == text);
    }
}

TEST_CASE("algebra JSON format")
{
    const auto j = algebra_to_json(build({Family::L2, 4, {}}));
    CHECK(j.at("dim") == 4);
    CHECK(j.at("brackets")[0] == Json::parse(R"({"left":1,"right":1,"result":[{"basis":2,"coeff":"1"}]})"));
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim":2,"brackets":[{"left":1,"right":3,"result":[]}]})")), UsageError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"brackets":[]})")), UsageError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim":2,"brackets":[{"left":1,"right":1,"result":[{"basis":1,"coeff":"x"}]}]})")),
                    UsageError);
    const auto T = algebra_from_json(Json::parse(R"({"dim":2,"brackets":[{"left":1,"right":1,"result":[{"basis":2,"coeff":3}]}]})"));
    CHECK(T.coefficient(1, 1, 2) == 3);
}

TEST_CASE("map, descriptor, pattern and chain JSON")
{
    LinearMap m = LinearMap::identity(3);
    m(0, 2) = Rational(-1, 2);
    CHECK(map_from_json(map_to_json(m)) == m);
    CHECK(map_to_json(m).at("columns")[2][0] == "-1/2");

    const auto d = sample_params(Family::G4, 7, 3);
    const auto back = descriptor_from_json(descriptor_to_json(d));
    CHECK(back.family == d.family);
    CHECK(back.n == d.n);
    CHECK(back.params == d.params);
    const auto parsed = descriptor_from_json(Json::parse(R"({"family":"G1","n":6,"params":{"a":"3/2"}})"));
    CHECK(parsed.params.at("a") == Rational(3, 2));

    const auto c = right_case1_absorption(sample_params(Family::RThm1Case1, 5, 1));
    const auto p = pattern_from_json(pattern_to_json(c.pattern));
    CHECK(p.zero_set == c.pattern.zero_set);
    CHECK(p.fixed_set == c.pattern.fixed_set);
    const auto steps = chain_from_json(chain_to_json(c.steps));
    REQUIRE(steps.size() == c.steps.size());
    CHECK(verify_chain(c.start, steps, p));
}

TEST_CASE("cli build")
{
    auto r = cli({"build", "--family", "L2", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(algebra_from_json(Json::parse(r.out)) == build({Family::L2, 5, {}}));

    r = cli({"build", "--family", "G2", "--n", "4", "--param", "delta=1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("G2 requires n ≥ 5") != std::string::npos);

    CHECK(cli({"build", "--family", "G1", "--n", "4", "--param", "a=0"}).code == 0);
    CHECK(cli({"build", "--family", "G1", "--n", "4", "--param", "a"}).code == 2);
    CHECK(cli({"build", "--family", "Nope", "--n", "4"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"--help"}).code == 0);

    // build -> parse -> build is the identity
    const auto first = cli({"build", "--family", "Ll3", "--n", "6", "--param", "delta=-1"}).out;
    const auto path = temp_path("ll3.json");
    write(path, first);
    const auto again = cli({"check", "series", "--json", path});
    CHECK(again.code == 0);
    CHECK(algebra_to_json(algebra_from_json(Json::parse(first))).dump(2) + "\n" == first);
    std::remove(path.c_str());
}

TEST_CASE("cli checks")
{
    const auto g1 = temp_path("g1.json");
    write(g1, cli({"build", "--family", "G1", "--n", "5", "--param", "a=1/2"}).out);
    CHECK(cli({"check", "leibniz", "--side", "right", g1}).code == 0);
    const auto left = cli({"check", "leibniz", "--side", "left", "--json", g1});
    CHECK(left.code == 1);
    CHECK(!Json::parse(left.out).at("violations").empty());

    const auto l2 = temp_path("l2.json");
    write(l2, cli({"build", "--family", "L2", "--n", "6"}).out);
    const auto series = cli({"check", "series", "--json", l2});
    CHECK(series.code == 0);
    const auto sj = Json::parse(series.out);
    CHECK(sj.at("derived_series").at("dims") == Json::parse("[6,4,0]"));
    CHECK(sj.at("lower_central_series").at("dims") == Json::parse("[6,4,2,1,0]"));

    const auto center = Json::parse(cli({"check", "center", "--json", l2}).out);
    CHECK(center.at("center").at("dim") == 2);

    const auto der = Json::parse(cli({"check", "derivations", "--json", l2}).out);
    CHECK(der.at("derivation_dim") == 10);
    CHECK(der.at("right_inner_dim") == 4);

    const auto desc = temp_path("g41.json");
    write(desc, R"({"family":"G1","n":4,"params":{"a":"1"}})");
    CHECK(cli({"check", "nilradical", desc}).code == 0);
    CHECK(cli({"check", "nilradical", "--basis", "1,2,3", desc}).code == 1);
    CHECK(cli({"check", "nilradical", "--basis", "1,x", desc}).code == 2);
    CHECK(cli({"check", "nilradical", l2}).code == 2);

    const auto id = temp_path("id.json");
    write(id, map_to_json(LinearMap::identity(6)).dump());
    CHECK(cli({"check", "iso", l2, l2, "--map", id}).code == 0);
    const auto report = temp_path("report.json");
    CHECK(cli({"check", "iso", g1, l2, "--map", id, "-o", report}).code == 1);
    CHECK(Json::parse(std::ifstream(report)).at("passed") == false);
    CHECK(cli({"check", "series", temp_path("missing.json")}).code == 2);
    for (const auto& p : {g1, l2, desc, id, report})
        std::remove(p.c_str());
}

TEST_CASE("cli suite")
{
    CHECK(cli({"suite", "--n-min", "3", "--n-max", "5"}).code == 2);
    CHECK(cli({"suite", "--n-min", "6", "--n-max", "5"}).code == 2);
    CHECK(cli({"suite", "--samples", "0"}).code == 2);
    const auto serial = cli({"suite", "--n-min", "4", "--n-max", "5", "--samples", "2", "--seed", "7"});
    const auto parallel = cli({"suite", "--n-min", "4", "--n-max", "5", "--samples", "2", "--seed", "7", "--parallel"});
    CHECK(serial.code == 0);
    CHECK(parallel.code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(serial.out.find("10/10 criteria passed") != std::string::npos);
    const auto strict = cli({"suite", "--n-min", "5", "--n-max", "5", "--samples", "1", "--strict-transcription", "--json"});
    CHECK(strict.code == 0);
    CHECK(Json::parse(strict.out).at("config").at("strict_transcription") == true);
}

TEST_CASE("suite report does not depend on the thread count")
{
    SuiteConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 6;
    cfg.samples = 3;
    cfg.seed = 99;
    const auto a = report_to_json(run_suite(cfg)).dump();
    cfg.parallel = true;
    const auto b = report_to_json(run_suite(cfg)).dump();
    CHECK(a == b);
    CHECK_THROWS_AS(run_criterion(11, cfg), UsageError);
}
