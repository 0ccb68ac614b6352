#include "leibniz/transforms.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/log.hpp"

#include <random>

namespace leibniz {

ShapePattern pattern_from_tensor(const StructureTensor& T, const std::set<Position>& free_positions)
{
    ShapePattern p;
    p.dim = T.dim();
    for (int i = 1; i <= T.dim(); ++i)
        for (int j = 1; j <= T.dim(); ++j)
            for (int k = 1; k <= T.dim(); ++k) {
                const Position pos{i, j, k};
                if (free_positions.count(pos))
                    continue;
                const Rational c = T.coefficient(i, j, k);
                if (sgn(c) == 0)
                    p.zero_set.insert(pos);
                else
                    p.fixed_set.emplace(pos, c);
            }
    return p;
}

std::optional<Position> first_mismatch(const StructureTensor& T, const ShapePattern& pattern)
{
    if (T.dim() != pattern.dim)
        throw UsageError("pattern dimension " + std::to_string(pattern.dim) + " does not match tensor dimension " +
                         std::to_string(T.dim()));
    for (const auto& pos : pattern.zero_set) {
        const auto [i, j, k] = pos;
        if (sgn(T.coefficient(i, j, k)) != 0)
            return pos;
    }
    for (const auto& [pos, value] : pattern.fixed_set) {
        const auto [i, j, k] = pos;
        if (T.coefficient(i, j, k) != value)
            return pos;
    }
    return std::nullopt;
}

bool matches(const StructureTensor& T, const ShapePattern& pattern) { return !first_mismatch(T, pattern); }

TransformStep absorption_step(StepKind kind, int dim, int target, const std::vector<std::pair<int, Rational>>& coeffs,
                              std::string description)
{
    auto check = [dim](int k) {
        if (k < 1 || k > dim)
            throw UsageError("basis index " + std::to_string(k) + " out of range 1.." + std::to_string(dim));
    };
    LinearMap P = LinearMap::identity(dim);
    if (kind == StepKind::shift) {
        check(target);
        for (const auto& [k, c] : coeffs) {
            check(k);
            if (k == target)
                throw UsageError("a shift of e_" + std::to_string(target) + " cannot use e_" + std::to_string(k));
            P(k - 1, target - 1) += c;
        }
    } else {
        for (const auto& [k, c] : coeffs) {
            check(k);
            if (sgn(c) == 0)
                throw SingularMapError("zero scale factor for e_" + std::to_string(k));
            P(k - 1, k - 1) = c;
        }
    }
    return {std::move(description), std::move(P)};
}

LinearMap compose(const std::vector<TransformStep>& steps, int dim)
{
    LinearMap total = LinearMap::identity(dim);
    for (const auto& s : steps)
        total = total * s.map;
    return total;
}

ChainReport run_chain(const StructureTensor& start, int n, const std::vector<TransformStep>& steps,
                      const ShapePattern& target)
{
    ChainReport report;
    if (target.dim != start.dim())
        throw UsageError("pattern dimension does not match the start algebra");
    const StructureTensor nil = build({Family::L2, n, {}});
    StructureTensor T = start;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        if (steps[s].map.rows() != T.dim() || !steps[s].map.square())
            throw UsageError("step " + std::to_string(s) + " has the wrong size");
        T = transform_basis(T, steps[s].map);
        log::debug("step " + std::to_string(s) + ": " + steps[s].description);
        if (!is_closed_block(T, n) || leading_block(T, n) != nil) {
            report.failed_step = static_cast<int>(s);
            report.reason = "nilradical changed by step " + std::to_string(s) + " (" + steps[s].description + ")";
            report.result = T;
            return report;
        }
    }
    if (auto pos = first_mismatch(T, target)) {
        const auto [i, j, k] = *pos;
        report.reason = "coefficient of e_" + std::to_string(k) + " in [e_" + std::to_string(i) + ",e_" +
                        std::to_string(j) + "] is " + to_string(T.coefficient(i, j, k)) + ", pattern wants " +
                        (target.fixed_set.count(*pos) ? to_string(target.fixed_set.at(*pos)) : std::string("0"));
        report.result = T;
        return report;
    }
    report.ok = true;
    report.result = std::move(T);
    return report;
}

bool verify_chain(const AlgebraDescriptor& start, const std::vector<TransformStep>& steps, const ShapePattern& target)
{
    return run_chain(build(start), start.n, steps, target).ok;
}

namespace {

Rational param(const AlgebraDescriptor& d, const std::string& name)
{
    auto it = d.params.find(name);
    if (it == d.params.end())
        throw DescriptorError("missing parameter " + name);
    return it->second;
}

std::string ak(int k, int j) { return "a_" + std::to_string(k) + "_" + std::to_string(j); }

void require_family(const AlgebraDescriptor& d, Family f)
{
    if (d.family != f)
        throw UsageError("chain expects " + family_name(f) + ", got " + family_name(d.family));
}

// Rational square root, when it exists.
std::optional<Rational> rational_sqrt(const Rational& v)
{
    if (sgn(v) < 0)
        return std::nullopt;
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

} // namespace

Chain right_case1_absorption(const AlgebraDescriptor& start)
{
    require_family(start, Family::RThm1Case1);
    validate(start);
    const int n = start.n, x = n + 1;
    Chain c;
    c.name = "right a!=0, b!=2a absorption";
    c.start = start;
    c.target = {Family::RThm2Case1, n, {}};
    for (const auto& name : param_names(Family::RThm2Case1, n))
        c.target.params[name] = param(start, name);
    const Rational A43 = derived_coefficients(start).at("A_4_3");
    c.steps.push_back(absorption_step(StepKind::shift, x, x, {{1, -A43}}, "e'_{n+1} = e_{n+1} - A_4_3 e_1"));
    std::vector<std::pair<int, Rational>> shift;
    for (int k = 3; k <= n - 1; ++k)
        shift.emplace_back(k, param(start, ak(k + 1, 1)));
    c.steps.push_back(absorption_step(StepKind::shift, x, x, shift, "e'_{n+1} = e_{n+1} + sum_k a_{k+1,1} e_k"));
    c.pattern = pattern_from_tensor(build(c.target), {{x, x, 2}});
    return c;
}

Chain right_case3_absorption(const AlgebraDescriptor& start)
{
    require_family(start, Family::RThm1Case3);
    validate(start);
    const int n = start.n, x = n + 1;
    Chain c;
    c.name = "right a=0 absorption";
    c.start = start;
    const Rational a43 = param(start, "a_4_3");
    c.target = {Family::RThm2Case3, n, {}};
    c.target.params["b"] = param(start, "b");
    c.target.params["a_2_1"] = param(start, "a_2_1") + param(start, "a_4_1") - a43;
    c.target.params["b_2_1"] = param(start, "b_2_1") - a43;
    for (int k = 5; k <= n; ++k)
        c.target.params[ak(k, 3)] = param(start, ak(k, 3));

    c.steps.push_back(absorption_step(StepKind::shift, x, x, {{1, -a43}}, "e'_{n+1} = e_{n+1} - a_4_3 e_1"));
    std::vector<std::pair<int, Rational>> shift;
    for (int k = 3; k <= n - 1; ++k)
        shift.emplace_back(k, param(start, ak(k + 1, 1)));
    c.steps.push_back(absorption_step(StepKind::shift, x, x, shift, "e'_{n+1} = e_{n+1} + sum_k a_{k+1,1} e_k"));
    // the e_2 part of [e_{n+1}, e_{n+1}] as it stands after the first two steps
    StructureTensor T = build(start);
    for (const auto& s : c.steps)
        T = transform_basis(T, s.map);
    const Rational square = T.coefficient(x, x, 2);
    c.steps.push_back(absorption_step(StepKind::shift, x, x, {{2, -square / param(start, "b")}},
                                      "e'_{n+1} = e_{n+1} - (c/b) e_2, c the e_2 part of [e_{n+1},e_{n+1}]"));
    c.pattern = pattern_from_tensor(build(c.target));
    return c;
}

Chain left_case1_absorption(const AlgebraDescriptor& start)
{
    require_family(start, Family::LThm1Case1);
    validate(start);
    const int n = start.n, x = n + 1;
    Chain c;
    c.name = "left a!=0, b!=a absorption";
    c.start = start;
    c.target = {Family::LThm2Case1, n, {}};
    for (const auto& name : param_names(Family::LThm2Case1, n))
        c.target.params[name] = param(start, name);
    const auto derived = derived_coefficients(start);
    c.steps.push_back(
        absorption_step(StepKind::shift, x, x, {{1, -derived.at("A_4_3")}}, "e'_{n+1} = e_{n+1} - A_4_3 e_1"));
    std::vector<std::pair<int, Rational>> shift{{3, derived.at("A_4_1")}};
    for (int k = 4; k <= n - 1; ++k)
        shift.emplace_back(k, param(start, ak(k + 1, 1)));
    c.steps.push_back(
        absorption_step(StepKind::shift, x, x, shift, "e'_{n+1} = e_{n+1} + A_4_1 e_3 + sum_k a_{k+1,1} e_k"));
    c.pattern = pattern_from_tensor(build(c.target), {{x, x, 2}});
    return c;
}

Chain right_case3_to_epsilon_family(const AlgebraDescriptor& start)
{
    require_family(start, Family::RThm2Case3);
    validate(start);
    const int n = start.n, x = n + 1;
    const Rational b = param(start, "b"), a21 = param(start, "a_2_1"), b21 = param(start, "b_2_1");
    Chain c;
    c.name = "right a=0 normalisation to the epsilon family";
    c.start = start;
    c.steps.push_back(absorption_step(StepKind::shift, x, 1, {{2, -(a21 + b21) / b}},
                                      "e'_1 = e_1 - ((a_2_1 + b_2_1)/b) e_2"));
    c.steps.push_back(absorption_step(StepKind::shift, x, 3, {{2, -b21 / b}}, "e'_3 = e_3 - (b_2_1/b) e_2"));
    c.steps.push_back(absorption_step(StepKind::scale, x, 0, {{x, 1 / b}}, "e'_{n+1} = e_{n+1}/b"));

    Rational eps = 0;
    Rational q = 1;
    if (n >= 5) {
        const Rational a53 = param(start, "a_5_3") / b;
        if (sgn(a53) != 0) {
            auto root = rational_sqrt(abs(a53));
            if (!root)
                throw UsageError("|a_5_3/b| = " + to_string(abs(a53)) + " is not a rational square");
            q = *root;
            eps = sgn(a53);
            // e'_k = q^{k-2} e_k for k >= 3, e'_2 = q^2 e_2
            std::vector<std::pair<int, Rational>> scale{{1, q}};
            scale.emplace_back(2, q * q);
            Rational p = q;
            for (int k = 3; k <= n; ++k) {
                scale.emplace_back(k, p);
                p *= q;
            }
            c.steps.push_back(absorption_step(StepKind::scale, x, 0, scale,
                                              "e'_1 = q e_1, e'_2 = q^2 e_2, e'_k = q^{k-2} e_k with q^2 = |a_5_3/b|"));
        }
    }
    c.target = {Family::G4, n, {{"epsilon", eps}}};
    for (int i = 1; i <= n - 5; ++i)
        c.target.params["b_" + std::to_string(i)] = 0;
    std::set<Position> free;
    for (int i = 3; i <= n; ++i)
        for (int k = i + 3; k <= n; ++k) {
            free.insert({i, x, k});
            free.insert({x, i, k});
        }
    c.pattern = pattern_from_tensor(build(c.target), free);
    return c;
}

AlgebraDescriptor sample_square_case3(int n, std::uint64_t seed)
{
    AlgebraDescriptor d = sample_params(Family::RThm2Case3, n, seed);
    if (n >= 5) {
        std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
        const long choice = static_cast<long>(rng() % 3) - 1; // -1, 0, 1
        const Rational q(static_cast<long>(rng() % 3) + 1, static_cast<long>(rng() % 3) + 1);
        d.params["a_5_3"] = d.params.at("b") * choice * q * q;
    }
    return d;
}

bool iso_witness_check(const StructureTensor& A, const StructureTensor& B, const LinearMap& P)
{
    if (A.dim() != B.dim() || P.rows() != A.dim() || !P.square())
        throw UsageError("iso witness: dimensions do not agree");
    return transform_basis(A, P) == B;
}

} // namespace leibniz
