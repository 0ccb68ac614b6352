#include "leibniz/suite.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/log.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace leibniz {

namespace {

struct Task {
    std::string label; // family (or topic) the check belongs to
    std::function<std::vector<std::string>()> run;
};

Side side_of(Family f) { return family_info(f).side == FamilySide::left ? Side::left : Side::right; }

std::string dims_str(const std::vector<int>& d)
{
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

std::string describe(const AlgebraDescriptor& d)
{
    std::string s = family_name(d.family) + "(n=" + std::to_string(d.n);
    for (const auto& [k, v] : d.params)
        s += ", " + k + "=" + to_string(v);
    return s + ")";
}

// Locus of the family as listed in the registry, cited in failure messages.
std::string locus(const AlgebraDescriptor& d) { return describe(d) + " [" + family_info(d.family).note + "]"; }

const std::vector<Family> right_canonical = {Family::G1, Family::G2, Family::G3, Family::G4, Family::Gc2};
const std::vector<Family> left_canonical = {Family::L1, Family::Ll2, Family::Ll3, Family::Ll4, Family::Lc2};

std::vector<Family> extension_cases()
{
    return {Family::RThm1Case1, Family::RThm1Case2, Family::RThm1Case3, Family::RThm1Case4,
            Family::LThm1Case1, Family::LThm1Case2, Family::LThm1Case3, Family::LThm1Case4,
            Family::RThm2Case1, Family::RThm2Case2, Family::RThm2Case3, Family::RThm2Case4,
            Family::LThm2Case1, Family::LThm2Case2, Family::LThm2Case3, Family::LThm2Case4};
}

// Calls fn for every (descriptor) of the family in range, skipping n below its minimum.
void for_samples(const SuiteConfig& cfg, Family f, int samples, int n_lo, int n_hi,
                 const std::function<void(int n, int s)>& fn)
{
    const int lo = std::max(n_lo, family_info(f).min_n);
    for (int n = lo; n <= n_hi; ++n)
        for (int s = 0; s < samples; ++s)
            fn(n, s);
    (void)cfg;
}

AlgebraDescriptor sample(const SuiteConfig& cfg, Family f, int n, int s)
{
    if (f == Family::L2)
        return {Family::L2, n, {}};
    return sample_params(f, n, cfg.seed + static_cast<std::uint64_t>(s));
}

// ---- criterion 1: nilradical invariants ----

std::vector<Task> tasks_nilradical(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        tasks.push_back({"L2", [n] {
                             std::vector<std::string> f;
                             const std::string tag = "L2(n=" + std::to_string(n) + ")";
                             const auto T = build({Family::L2, n, {}});
                             if (!check_right_leibniz(T).empty())
                                 f.push_back(tag + ": right identity violated");
                             if (!check_left_leibniz(T).empty())
                                 f.push_back(tag + ": left identity violated");
                             const auto ds = derived_series(T);
                             const auto ls = lower_central_series(T);
                             const auto exp = *expected_invariants({Family::L2, n, {}});
                             if (ds.dims != exp.ds_dims)
                                 f.push_back(tag + ": DS " + dims_str(ds.dims) + " != " + dims_str(exp.ds_dims));
                             if (ls.dims != exp.ls_dims || ls.stabilized)
                                 f.push_back(tag + ": LS " + dims_str(ls.dims) + " != " + dims_str(exp.ls_dims));
                             if (center(T) != Subspace::coordinate(n, {2, n}))
                                 f.push_back(tag + ": center is not span{e_2, e_n}");
                             if (!is_quasi_filiform(T))
                                 f.push_back(tag + ": not quasi-filiform");
                             const auto idx = nil_index(T);
                             if (!idx || *idx != static_cast<int>(ls.dims.size()) - 1 || *idx != n - 2)
                                 f.push_back(tag + ": nil-index does not match the LS length");
                             return f;
                         }});
    return tasks;
}

// ---- criteria 2 and 3: one-sidedness of the canonical families ----

std::vector<Task> tasks_one_sided(const SuiteConfig& cfg, const std::vector<Family>& families)
{
    std::vector<Task> tasks;
    for (Family fam : families)
        for_samples(cfg, fam, cfg.samples, cfg.n_min, cfg.n_max, [&](int n, int s) {
            tasks.push_back({family_name(fam), [cfg, fam, n, s] {
                                 std::vector<std::string> f;
                                 const auto d = sample(cfg, fam, n, s);
                                 const auto T = build(d, cfg.strict_transcription);
                                 const Side own = side_of(fam);
                                 const Side other = own == Side::right ? Side::left : Side::right;
                                 const auto v = check_leibniz(T, own);
                                 if (!v.empty())
                                     f.push_back(locus(d) + ": " + std::to_string(v.size()) + " " + side_name(own) +
                                                 "-identity violations, first at (" + std::to_string(v[0].r) + "," +
                                                 std::to_string(v[0].s) + "," + std::to_string(v[0].t) + ")");
                                 if (satisfies_leibniz(T, other))
                                     f.push_back(locus(d) + ": also satisfies the " + side_name(other) + " identity");
                                 return f;
                             }});
        });
    return tasks;
}

// ---- criterion 4: catalog series ----

std::vector<Task> tasks_series(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    std::vector<Family> fams = right_canonical;
    fams.insert(fams.end(), left_canonical.begin(), left_canonical.end());
    for (Family fam : fams)
        for_samples(cfg, fam, cfg.samples, cfg.n_min, cfg.n_max, [&](int n, int s) {
            tasks.push_back({family_name(fam), [cfg, fam, n, s] {
                                 std::vector<std::string> f;
                                 const auto d = sample(cfg, fam, n, s);
                                 const auto T = build(d, cfg.strict_transcription);
                                 const auto exp = *expected_invariants(d);
                                 const auto ds = derived_series(T);
                                 const auto ls = lower_central_series(T);
                                 if (ds.dims != exp.ds_dims)
                                     f.push_back(locus(d) + ": DS " + dims_str(ds.dims) + " != " + dims_str(exp.ds_dims));
                                 if (ls.dims != exp.ls_dims || ls.stabilized != exp.ls_stabilized)
                                     f.push_back(locus(d) + ": LS " + dims_str(ls.dims) + (ls.stabilized ? " stabilized" : "") +
                                                 " != " + dims_str(exp.ls_dims));
                                 return f;
                             }});
        });
    return tasks;
}

// ---- criterion 5: extension cases satisfy their identity ----

std::vector<Task> tasks_extensions(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    for (Family fam : extension_cases())
        for_samples(cfg, fam, cfg.samples, cfg.n_min, cfg.n_max, [&](int n, int s) {
            tasks.push_back({family_name(fam), [cfg, fam, n, s] {
                                 std::vector<std::string> f;
                                 const auto d = sample(cfg, fam, n, s);
                                 const auto T = build(d, cfg.strict_transcription);
                                 const Side side = side_of(fam);
                                 const auto v = check_leibniz(T, side);
                                 if (!v.empty())
                                     f.push_back(locus(d) + ": " + std::to_string(v.size()) + " " + side_name(side) +
                                                 "-identity violations, first at (" + std::to_string(v[0].r) + "," +
                                                 std::to_string(v[0].s) + "," + std::to_string(v[0].t) + ")");
                                 const int x = n + 1;
                                 const auto derived = derived_coefficients(d);
                                 if (is_pre_absorption(fam)) {
                                     auto it = derived.find("A_4_3");
                                     if (it != derived.end() && T.coefficient(3, x, 4) != it->second)
                                         f.push_back(locus(d) + ": [e_3,e_{n+1}] does not carry A_4_3 e_4");
                                     it = derived.find("A_4_1");
                                     if (it != derived.end() && T.coefficient(1, x, 4) != it->second)
                                         f.push_back(locus(d) + ": [e_1,e_{n+1}] does not carry A_4_1 e_4");
                                 }
                                 return f;
                             }});
        });
    return tasks;
}

// ---- criterion 6: derivation matrices ----

std::vector<Task> tasks_derivation_matrices(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    for (Family fam : extension_cases())
        for_samples(cfg, fam, cfg.samples, cfg.n_min, cfg.n_max, [&](int n, int s) {
            tasks.push_back({family_name(fam), [cfg, fam, n, s] {
                                 std::vector<std::string> f;
                                 const auto d = sample(cfg, fam, n, s);
                                 const auto T = build(d, cfg.strict_transcription);
                                 const LinearMap full = side_of(fam) == Side::right ? right_mult_basis(T, n + 1)
                                                                                    : left_mult_basis(T, n + 1);
                                 LinearMap D(n, n);
                                 for (int r = 0; r < n; ++r)
                                     for (int c = 0; c < n; ++c)
                                         D(r, c) = full(r, c);
                                 for (int r = n; r < full.rows(); ++r)
                                     for (int c = 0; c < n; ++c)
                                         if (sgn(full(r, c)) != 0)
                                             f.push_back(locus(d) + ": multiplication by e_{n+1} leaves the nilradical");
                                 if (!is_derivation(build({Family::L2, n, {}}), D))
                                     f.push_back(locus(d) + ": restricted " + std::string(side_of(fam) == Side::right ? "R" : "L") +
                                                 "_{e_{n+1}} is not a derivation of L2");
                                 return f;
                             }});
        });
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        tasks.push_back({"L2 inner", [n] {
                             std::vector<std::string> f;
                             const auto T = build({Family::L2, n, {}});
                             for (int i = 1; i <= n; ++i) {
                                 if (right_mult_basis(T, i) != expected_inner_right(n, i))
                                     f.push_back("L2(n=" + std::to_string(n) + "): R_{e_" + std::to_string(i) + "} differs from the listed matrix");
                                 if (left_mult_basis(T, i) != expected_inner_left(n, i))
                                     f.push_back("L2(n=" + std::to_string(n) + "): L_{e_" + std::to_string(i) + "} differs from the listed matrix");
                             }
                             return f;
                         }});
    return tasks;
}

// ---- criterion 7: nil-independence ----

Rational draw(std::mt19937_64& rng)
{
    Rational r(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1);
    r.canonicalize();
    return r;
}

std::vector<Task> tasks_nil_independence(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    for (int n = std::max(5, cfg.n_min); n <= cfg.n_max; ++n)
        for (int s = 0; s < cfg.samples; ++s)
            tasks.push_back({"outer pair", [cfg, n, s] {
                                 std::vector<std::string> f;
                                 std::mt19937_64 rng(cfg.seed * 7919 + static_cast<std::uint64_t>(n) * 131 + s);
                                 // the first sample keeps every free entry at zero
                                 Rational c = 0, a23 = 0;
                                 std::map<int, Rational> band;
                                 if (s > 0) {
                                     c = draw(rng);
                                     a23 = draw(rng);
                                     for (int m = 5; m <= n; ++m)
                                         band[m] = draw(rng);
                                 }
                                 const std::string tag = "n=" + std::to_string(n) + " sample " + std::to_string(s);
                                 const auto T = build({Family::L2, n, {}});
                                 for (const auto& [name, pair] :
                                      {std::pair{std::string("right"), outer_right_pair(n, c, a23, band)},
                                       std::pair{std::string("left"), outer_left_pair(n, c, a23, band)}}) {
                                     if (!is_derivation(T, pair.first) || !is_derivation(T, pair.second))
                                         f.push_back(tag + ": " + name + " outer map is not a derivation");
                                     if (is_nilpotent_map(pair.first) || is_nilpotent_map(pair.second))
                                         f.push_back(tag + ": " + name + " outer map is nilpotent");
                                     if (!nil_independent_pair(pair.first, pair.second))
                                         f.push_back(tag + ": " + name + " outer pair is nil-dependent");
                                 }
                                 if (s == 0)
                                     for (int i = 1; i <= n; ++i)
                                         if (!is_nilpotent_map(right_mult_basis(T, i)) || !is_nilpotent_map(left_mult_basis(T, i)))
                                             f.push_back(tag + ": inner derivation by e_" + std::to_string(i) + " is not nilpotent");
                                 return f;
                             }});
    return tasks;
}

// ---- criterion 8: structural laws on the corpus ----

std::vector<std::string> structural_laws(const AlgebraDescriptor& d, const StructureTensor& T)
{
    std::vector<std::string> f;
    const int dim = T.dim();
    const FamilySide fs = family_info(d.family).side;
    const bool right = fs != FamilySide::left, left = fs != FamilySide::right;
    std::vector<LinearMap> R, L;
    for (int i = 1; i <= dim; ++i) {
        if (right)
            R.push_back(right_mult_basis(T, i));
        if (left)
            L.push_back(left_mult_basis(T, i));
    }
    for (int x = 1; x <= dim; ++x)
        for (int y = 1; y <= dim; ++y) {
            if (right && commutator(R[x - 1], R[y - 1]) != right_mult(T, T.bracket_basis(y, x))) {
                f.push_back(locus(d) + ": [R_x,R_y] != R_[y,x] at x=e_" + std::to_string(x) + ", y=e_" + std::to_string(y));
                return f;
            }
            if (left && commutator(L[x - 1], L[y - 1]) != left_mult(T, T.bracket_basis(x, y))) {
                f.push_back(locus(d) + ": [L_x,L_y] != L_[x,y] at x=e_" + std::to_string(x) + ", y=e_" + std::to_string(y));
                return f;
            }
        }
    const auto Q = quotient_algebra(T, squares_ideal(T));
    if (!check_lie(Q))
        f.push_back(locus(d) + ": quotient by the squares ideal is not Lie");
    std::vector<int> nil;
    for (int i = 1; i <= d.n; ++i)
        nil.push_back(i);
    const auto cert = verify_nilradical_certificate(T, Subspace::coordinate(dim, nil));
    if (!cert.passes())
        f.push_back(locus(d) + ": nilradical certificate for span{e_1..e_n} fails");
    if (!cert.dim_bound)
        f.push_back(locus(d) + ": dim N < dim L / 2");
    return f;
}

std::vector<Task> tasks_structural(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    std::vector<Family> fams{Family::L2};
    for (const auto& info : family_registry())
        if (info.family != Family::L2)
            fams.push_back(info.family);
    for (Family fam : fams) {
        const int samples = fam == Family::L2 ? 1 : cfg.samples;
        for_samples(cfg, fam, samples, cfg.n_min, cfg.n_max, [&](int n, int s) {
            tasks.push_back({family_name(fam), [cfg, fam, n, s] {
                                 const auto d = sample(cfg, fam, n, s);
                                 return structural_laws(d, build(d, cfg.strict_transcription));
                             }});
        });
    }
    return tasks;
}

// ---- criterion 9: transformation replay ----

std::vector<Task> tasks_chains(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    const int samples = std::min(cfg.samples, 5);
    using Maker = std::function<Chain(int, std::uint64_t)>;
    const std::vector<std::pair<std::string, Maker>> makers = {
        {"RThm1Case1->RThm2Case1",
         [](int n, std::uint64_t seed) { return right_case1_absorption(sample_params(Family::RThm1Case1, n, seed)); }},
        {"RThm1Case3->RThm2Case3",
         [](int n, std::uint64_t seed) { return right_case3_absorption(sample_params(Family::RThm1Case3, n, seed)); }},
        {"LThm1Case1->LThm2Case1",
         [](int n, std::uint64_t seed) { return left_case1_absorption(sample_params(Family::LThm1Case1, n, seed)); }},
        {"RThm2Case3->G4",
         [](int n, std::uint64_t seed) { return right_case3_to_epsilon_family(sample_square_case3(n, seed)); }},
    };
    for (const auto& [label, make] : makers)
        for (int n = std::max(5, cfg.n_min); n <= std::min(6, cfg.n_max); ++n)
            for (int s = 0; s < samples; ++s)
                tasks.push_back({label, [cfg, label, make, n, s] {
                                     std::vector<std::string> f;
                                     const Chain c = make(n, cfg.seed + static_cast<std::uint64_t>(s));
                                     const auto start = build(c.start, cfg.strict_transcription);
                                     const auto r = run_chain(start, n, c.steps, c.pattern);
                                     if (!r.ok)
                                         f.push_back(label + " " + describe(c.start) + ": " + r.reason);
                                     else if (!satisfies_leibniz(r.result, side_of(c.start.family)))
                                         f.push_back(label + " " + describe(c.start) + ": result lost the identity");
                                     return f;
                                 }});
    return tasks;
}

// ---- criterion 10: oracle cross-checks ----

Poly random_planted(std::mt19937_64& rng, std::set<Rational>& roots, int& irrational_real)
{
    const int count = static_cast<int>(rng() % 4) + 1;
    std::vector<Rational> rs;
    for (int i = 0; i < count; ++i) {
        Rational r(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1);
        r.canonicalize();
        rs.push_back(r);
        roots.insert(r);
    }
    Poly p = Poly::from_roots(rs);
    // t^2 + c with c > 0 has no real root
    p = p * Poly({Rational(static_cast<long>(rng() % 5) + 1), 0, 1});
    irrational_real = 0;
    if (rng() % 2) {
        static const long primes[] = {2, 3, 5, 7};
        p = p * Poly({Rational(-primes[rng() % 4]), 0, 1});
        irrational_real = 2;
    }
    const Rational lead(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1);
    return lead * p;
}

LinearMap random_invertible(std::mt19937_64& rng, int n)
{
    LinearMap Lo = LinearMap::identity(n), Up = LinearMap::identity(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r > c)
                Lo(r, c) = draw(rng);
            else if (r < c)
                Up(r, c) = draw(rng);
            else {
                Rational d = draw(rng);
                Up(r, c) = sgn(d) == 0 ? Rational(1) : d;
            }
        }
    return Lo * Up;
}

std::vector<Task> tasks_oracles(const SuiteConfig& cfg)
{
    std::vector<Task> tasks;
    tasks.push_back({"derivations", [] {
                         std::vector<std::string> f;
                         const auto T = build({Family::L2, 4, {}});
                         const int fast = derivation_space(T).dim();
                         const int oracle = derivation_dim_oracle(T);
                         if (fast != oracle)
                             f.push_back("dim Der(L2(4)) = " + std::to_string(fast) + ", oracle " + std::to_string(oracle));
                         return f;
                     }});
    tasks.push_back({"sturm", [cfg] {
                         std::vector<std::string> f;
                         std::mt19937_64 rng(cfg.seed * 31 + 17);
                         for (int i = 0; i < 50; ++i) {
                             std::set<Rational> planted;
                             int extra = 0;
                             const Poly p = random_planted(rng, planted, extra);
                             const auto found = rational_roots(p);
                             const std::set<Rational> got(found.begin(), found.end());
                             const int count = real_root_count(p);
                             if (got != planted || count != static_cast<int>(planted.size()) + extra)
                                 f.push_back("polynomial " + p.str() + ": Sturm count " + std::to_string(count) +
                                             ", planted " + std::to_string(planted.size()) + " rational + " +
                                             std::to_string(extra) + " irrational");
                         }
                         return f;
                     }});
    for (int block = 0; block < 4; ++block)
        tasks.push_back({"round trip", [cfg, block] {
                             std::vector<std::string> f;
                             std::mt19937_64 rng(cfg.seed * 101 + static_cast<std::uint64_t>(block));
                             const auto& reg = family_registry();
                             for (int i = 0; i < 25; ++i) {
                                 const auto& info = reg[rng() % reg.size()];
                                 const int n = std::max(info.min_n, 4 + static_cast<int>(rng() % 3));
                                 const auto d = sample_params(info.family, n, rng());
                                 const auto T = build(d);
                                 const LinearMap P = random_invertible(rng, T.dim());
                                 if (transform_basis(transform_basis(T, P), inverse(P)) != T)
                                     f.push_back(describe(d) + ": basis change round trip differs");
                             }
                             return f;
                         }});
    return tasks;
}

std::vector<Task> tasks_for(int id, const SuiteConfig& cfg)
{
    switch (id) {
    case 1: return tasks_nilradical(cfg);
    case 2: return tasks_one_sided(cfg, right_canonical);
    case 3: return tasks_one_sided(cfg, left_canonical);
    case 4: return tasks_series(cfg);
    case 5: return tasks_extensions(cfg);
    case 6: return tasks_derivation_matrices(cfg);
    case 7: return tasks_nil_independence(cfg);
    case 8: return tasks_structural(cfg);
    case 9: return tasks_chains(cfg);
    case 10: return tasks_oracles(cfg);
    default: throw UsageError("no criterion " + std::to_string(id));
    }
}

std::vector<std::vector<std::string>> execute(const std::vector<Task>& tasks, bool parallel)
{
    std::vector<std::vector<std::string>> out(tasks.size());
    const long count = static_cast<long>(tasks.size());
    auto one = [&](long i) {
        try {
            out[i] = tasks[i].run();
        } catch (const std::exception& e) {
            out[i] = {tasks[i].label + ": exception: " + e.what()};
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i)
            one(i);
    } else {
        for (long i = 0; i < count; ++i)
            one(i);
    }
    return out;
}

} // namespace

void validate_config(const SuiteConfig& config)
{
    if (config.n_min < 4)
        throw UsageError("n-min must be at least 4");
    if (config.n_max < config.n_min)
        throw UsageError("n-max must be at least n-min");
    if (config.samples < 1)
        throw UsageError("samples must be at least 1");
}

std::string criterion_title(int id)
{
    static const char* titles[] = {
        "nilradical invariants",
        "right catalog identity",
        "left catalog identity",
        "catalog series",
        "extension cases satisfy their identity",
        "derivation matrices",
        "nil-independence of the outer pairs",
        "structural laws on the corpus",
        "transformation replay",
        "oracle cross-checks",
    };
    if (id < 1 || id > criterion_count)
        throw UsageError("no criterion " + std::to_string(id));
    return titles[id - 1];
}

CriterionResult run_criterion(int id, const SuiteConfig& config)
{
    validate_config(config);
    CriterionResult res;
    res.id = id;
    res.title = criterion_title(id);
    const auto tasks = tasks_for(id, config);
    const auto outcomes = execute(tasks, config.parallel);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        ++res.checks;
        ++res.per_family[tasks[i].label];
        for (const auto& msg : outcomes[i])
            res.failures.push_back(msg);
    }
    log::info("criterion " + std::to_string(id) + ": " + std::to_string(res.checks) + " checks, " +
              std::to_string(res.failures.size()) + " failures");
    return res;
}

bool SuiteReport::passed() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed(); });
}

SuiteReport run_suite(const SuiteConfig& config)
{
    validate_config(config);
    SuiteReport report;
    report.config = config;
    for (int id = 1; id <= criterion_count; ++id)
        report.criteria.push_back(run_criterion(id, config));
    if (config.strict_transcription)
        for (const auto& p : patches())
            report.patches_exercised.push_back(family_name(p.family) + " " + p.bracket + ": " + p.transcribed + " -> " +
                                               p.corrected);
    return report;
}

std::string format_report(const SuiteReport& report)
{
    std::ostringstream out;
    const auto& c = report.config;
    out << "suite n=" << c.n_min << ".." << c.n_max << " samples=" << c.samples << " seed=" << c.seed
        << (c.strict_transcription ? " strict-transcription" : "") << "\n";
    int passed = 0;
    for (const auto& r : report.criteria) {
        passed += r.passed();
        out << (r.passed() ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << "  (" << r.checks << " checks)\n";
        for (const auto& [fam, k] : r.per_family)
            out << "        " << fam << ": " << k << "\n";
        const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
        for (std::size_t i = 0; i < shown; ++i)
            out << "    ! " << r.failures[i] << "\n";
        if (r.failures.size() > shown)
            out << "    ! ... " << r.failures.size() - shown << " more\n";
    }
    if (c.strict_transcription) {
        out << "patches in effect when not strict: " << patches().size() << "\n";
        for (const auto& p : report.patches_exercised)
            out << "    " << p << "\n";
    }
    out << passed << "/" << report.criteria.size() << " criteria passed\n";
    return out.str();
}

Json report_to_json(const SuiteReport& report)
{
    Json crit = Json::array();
    for (const auto& r : report.criteria)
        crit.push_back({{"id", r.id},
                        {"title", r.title},
                        {"checks", r.checks},
                        {"passed", r.passed()},
                        {"per_family", r.per_family},
                        {"failures", r.failures}});
    const auto& c = report.config;
    return {{"config",
             {{"n_min", c.n_min},
              {"n_max", c.n_max},
              {"samples", c.samples},
              {"seed", c.seed},
              {"strict_transcription", c.strict_transcription}}},
            {"criteria", crit},
            {"patches_exercised", report.patches_exercised},
            {"passed", report.passed()}};
}

int derivation_dim_oracle(const StructureTensor& T)
{
    const int n = T.dim();
    const int unknowns = n * n;
    // Column (r, c) is the residual D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] of D = E_{r,c}.
    std::vector<std::vector<Rational>> cols;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            const LinearMap D = elementary(n, r, c);
            std::vector<Rational> col;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    const Vector lhs = D * T.bracket_basis(i, j);
                    const Vector rhs = add(bracket(T, D.column(i - 1), basis_vector(n, j)),
                                           bracket(T, basis_vector(n, i), D.column(j - 1)));
                    for (int k = 0; k < n; ++k)
                        col.push_back(lhs[k] - rhs[k]);
                }
            cols.push_back(std::move(col));
        }
    // Integer rows: clear denominators row by row, then Bareiss elimination.
    const std::size_t rows = cols[0].size();
    std::vector<std::vector<mpz_class>> m;
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        bool nonzero = false;
        for (int j = 0; j < unknowns; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cols[j][i].get_den_mpz_t());
            nonzero = nonzero || sgn(cols[j][i]) != 0;
        }
        if (!nonzero)
            continue;
        std::vector<mpz_class> row(unknowns);
        for (int j = 0; j < unknowns; ++j) {
            mpq_class v = cols[j][i] * mpq_class(l);
            row[j] = v.get_num();
        }
        m.push_back(std::move(row));
    }
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < unknowns && rank < static_cast<int>(m.size()); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            for (int c = col + 1; c < unknowns; ++c) {
                mpz_class v = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = v;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return unknowns - rank;
}

} // namespace leibniz
