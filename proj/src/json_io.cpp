#include "leibniz/json_io.hpp"

#include "leibniz/errors.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace leibniz {

namespace {

int get_int(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw UsageError(std::string("expected integer field '") + key + "'");
    return j.at(key).get<int>();
}

const Json& get_array(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw UsageError(std::string("expected array field '") + key + "'");
    return j.at(key);
}

Json terms_to_json(const std::vector<Term>& terms)
{
    Json out = Json::array();
    for (const auto& t : terms)
        out.push_back({{"basis", t.basis}, {"coeff", rational_to_json(t.coeff)}});
    return out;
}

void read_entries(const Json& list, int dim, const std::function<void(int, int, int, const Rational&)>& sink)
{
    for (const auto& entry : list) {
        const int i = get_int(entry, "left"), jj = get_int(entry, "right");
        if (i < 1 || i > dim || jj < 1 || jj > dim)
            throw UsageError("bracket index out of range 1.." + std::to_string(dim));
        for (const auto& term : get_array(entry, "result")) {
            const int k = get_int(term, "basis");
            if (!term.contains("coeff"))
                throw UsageError("bracket term without 'coeff'");
            if (k < 1 || k > dim)
                throw UsageError("bracket index out of range 1.." + std::to_string(dim));
            sink(i, jj, k, rational_from_json(term.at("coeff")));
        }
    }
}

} // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw UsageError("coefficient must be a string \"p/q\" or an integer");
}

Json algebra_to_json(const StructureTensor& T)
{
    Json brackets = Json::array();
    for (const auto& [key, terms] : T.entries())
        brackets.push_back({{"left", key.first}, {"right", key.second}, {"result", terms_to_json(terms)}});
    return {{"dim", T.dim()}, {"brackets", brackets}};
}

StructureTensor algebra_from_json(const Json& j)
{
    const int dim = get_int(j, "dim");
    if (dim < 0)
        throw UsageError("negative dimension");
    StructureTensor T(dim);
    read_entries(get_array(j, "brackets"), dim, [&](int i, int jj, int k, const Rational& c) { T.add(i, jj, k, c); });
    return T;
}

Json map_to_json(const LinearMap& m)
{
    Json cols = Json::array();
    for (int c = 0; c < m.cols(); ++c) {
        Json col = Json::array();
        for (int r = 0; r < m.rows(); ++r)
            col.push_back(rational_to_json(m(r, c)));
        cols.push_back(col);
    }
    return {{"dim", m.rows()}, {"columns", cols}};
}

LinearMap map_from_json(const Json& j)
{
    const int dim = get_int(j, "dim");
    const Json& cols = get_array(j, "columns");
    if (static_cast<int>(cols.size()) != dim)
        throw UsageError("map needs " + std::to_string(dim) + " columns");
    LinearMap m(dim, dim);
    for (int c = 0; c < dim; ++c) {
        if (!cols[c].is_array() || static_cast<int>(cols[c].size()) != dim)
            throw UsageError("map column " + std::to_string(c + 1) + " has the wrong length");
        for (int r = 0; r < dim; ++r)
            m(r, c) = rational_from_json(cols[c][r]);
    }
    return m;
}

Json descriptor_to_json(const AlgebraDescriptor& d)
{
    Json params = Json::object();
    for (const auto& [k, v] : d.params)
        params[k] = rational_to_json(v);
    return {{"family", family_name(d.family)}, {"n", d.n}, {"params", params}};
}

AlgebraDescriptor descriptor_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
        throw UsageError("descriptor needs a string field 'family'");
    AlgebraDescriptor d;
    d.family = parse_family(j.at("family").get<std::string>());
    d.n = get_int(j, "n");
    if (j.contains("params")) {
        if (!j.at("params").is_object())
            throw UsageError("'params' must be an object");
        for (const auto& [k, v] : j.at("params").items())
            d.params[k] = rational_from_json(v);
    }
    return d;
}

Json vector_to_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& c : v)
        out.push_back(rational_to_json(c));
    return out;
}

Json subspace_to_json(const Subspace& s)
{
    Json basis = Json::array();
    for (const auto& r : s.rows())
        basis.push_back(vector_to_json(r));
    return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

Json series_to_json(const SeriesResult& s) { return {{"dims", s.dims}, {"stabilized", s.stabilized}}; }

Json violation_to_json(const IdentityViolation& v)
{
    return {{"triple", {v.r, v.s, v.t}}, {"lhs", vector_to_json(v.lhs)}, {"rhs", vector_to_json(v.rhs)}};
}

Json certificate_to_json(const IdealCertificate& c)
{
    Json out = {{"is_ideal", c.is_ideal},
                {"is_nilpotent_subalgebra", c.is_nilpotent_subalgebra},
                {"complement_nonnilpotent", c.complement_nonnilpotent},
                {"dim_bound", c.dim_bound},
                {"passes", c.passes()},
                {"restricted_ls", c.restricted_ls},
                {"maximality_check", "one extra standard generator at a time (necessary, not sufficient)"}};
    if (c.ideal_witness) {
        const auto& w = *c.ideal_witness;
        out["ideal_witness"] = {{"generator", w.basis_index},
                                {"side", w.from_left ? "left" : "right"},
                                {"element", vector_to_json(w.element)},
                                {"product", vector_to_json(w.product)}};
    }
    if (!c.nilpotent_extension.empty())
        out["nilpotent_extension"] = c.nilpotent_extension;
    return out;
}

Json pattern_to_json(const ShapePattern& p)
{
    StructureTensor fixed(p.dim);
    for (const auto& [pos, v] : p.fixed_set) {
        const auto [i, j, k] = pos;
        fixed.add(i, j, k, v);
    }
    Json zero = Json::array();
    for (const auto& [i, j, k] : p.zero_set)
        zero.push_back({i, j, k});
    return {{"dim", p.dim}, {"fixed", algebra_to_json(fixed).at("brackets")}, {"zero", zero}};
}

ShapePattern pattern_from_json(const Json& j)
{
    ShapePattern p;
    p.dim = get_int(j, "dim");
    read_entries(get_array(j, "fixed"), p.dim,
                 [&](int i, int jj, int k, const Rational& c) { p.fixed_set[{i, jj, k}] = c; });
    for (const auto& z : get_array(j, "zero")) {
        if (!z.is_array() || z.size() != 3)
            throw UsageError("zero markers are [i, j, k] triples");
        const Position pos{z[0].get<int>(), z[1].get<int>(), z[2].get<int>()};
        if (p.fixed_set.count(pos))
            throw UsageError("pattern position is both fixed and zero");
        p.zero_set.insert(pos);
    }
    return p;
}

Json chain_to_json(const std::vector<TransformStep>& steps)
{
    Json list = Json::array();
    for (const auto& s : steps)
        list.push_back({{"description", s.description}, {"map", map_to_json(s.map)}});
    return {{"steps", list}};
}

std::vector<TransformStep> chain_from_json(const Json& j)
{
    std::vector<TransformStep> steps;
    for (const auto& s : get_array(j, "steps")) {
        if (!s.contains("map"))
            throw UsageError("chain step without 'map'");
        steps.push_back({s.value("description", std::string()), map_from_json(s.at("map"))});
    }
    return steps;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

} // namespace leibniz
