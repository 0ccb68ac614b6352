#include "leibniz/cli.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/suite.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace leibniz {

namespace {

struct LoadedAlgebra {
    StructureTensor tensor;
    std::optional<AlgebraDescriptor> descriptor;
};

// Accepts either Algebra JSON or a descriptor, which is built on the spot.
LoadedAlgebra load_algebra(const std::string& path, bool strict)
{
    const Json j = read_json_file(path);
    if (j.is_object() && j.contains("family")) {
        auto d = descriptor_from_json(j);
        return {build(d, strict), d};
    }
    return {algebra_from_json(j), std::nullopt};
}

Side parse_side(const std::string& s)
{
    if (s == "right")
        return Side::right;
    if (s == "left")
        return Side::left;
    throw UsageError("--side must be left or right");
}

std::string dims_str(const std::vector<int>& d)
{
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

std::string vec_str(const Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::vector<int> parse_indices(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("bad basis index list '" + text + "'");
        }
    }
    return out;
}

// Human text on out; the JSON report goes to -o FILE, or replaces the text with --json.
void emit(std::ostream& out, const std::string& text, const Json& report, bool as_json, const std::string& file)
{
    if (as_json)
        out << report.dump(2) << "\n";
    else
        out << text;
    if (!file.empty())
        write_text(file, report.dump(2) + "\n");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Leibniz algebra construction and verification"};
    app.require_subcommand(1);

    bool strict = false;
    bool as_json = false;
    std::string output;

    // build
    auto* build_cmd = app.add_subcommand("build", "write a catalog algebra as Algebra JSON");
    std::string family, descriptor_file;
    int n = 0;
    std::vector<std::string> params;
    build_cmd->add_option("--family", family, "family tag, e.g. L2, G1, RThm1Case1");
    build_cmd->add_option("--n", n, "nilradical dimension");
    build_cmd->add_option("--param", params, "name=value, repeatable")->take_all();
    build_cmd->add_option("--descriptor", descriptor_file, "descriptor JSON instead of inline flags");
    build_cmd->add_flag("--strict-transcription", strict, "ignore coefficient patches");
    build_cmd->add_option("-o", output, "output file");

    // check
    auto* check_cmd = app.add_subcommand("check", "run one check on an algebra file");
    check_cmd->require_subcommand(1);
    std::string side = "right", file_a, file_b, map_file, basis;
    bool dump = false;
    auto common = [&](CLI::App* c) {
        c->add_flag("--json", as_json, "print the JSON report instead of text");
        c->add_option("-o", output, "also write the JSON report to this file");
        c->add_flag("--strict-transcription", strict, "ignore coefficient patches for descriptor inputs");
    };
    auto* c_leibniz = check_cmd->add_subcommand("leibniz", "Leibniz identity on basis triples");
    c_leibniz->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    c_leibniz->add_option("file", file_a)->required();
    common(c_leibniz);
    auto* c_series = check_cmd->add_subcommand("series", "derived and lower central series");
    c_series->add_option("file", file_a)->required();
    common(c_series);
    auto* c_center = check_cmd->add_subcommand("center", "two-sided center");
    c_center->add_option("file", file_a)->required();
    common(c_center);
    auto* c_der = check_cmd->add_subcommand("derivations", "derivation algebra and inner derivations");
    c_der->add_option("file", file_a)->required();
    c_der->add_flag("--dump", dump, "include the basis matrices in the JSON report");
    common(c_der);
    auto* c_nil = check_cmd->add_subcommand("nilradical", "certificate for a candidate nilradical");
    c_nil->add_option("file", file_a)->required();
    c_nil->add_option("--basis", basis, "comma separated basis indices spanning N (default e_1..e_n for descriptors)");
    common(c_nil);
    auto* c_iso = check_cmd->add_subcommand("iso", "isomorphism witness: transform_basis(A, P) == B");
    c_iso->add_option("a", file_a)->required();
    c_iso->add_option("b", file_b)->required();
    c_iso->add_option("--map", map_file, "LinearMap JSON, columns are new basis vectors")->required();
    common(c_iso);

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run every acceptance criterion");
    SuiteConfig cfg;
    suite_cmd->add_option("--n-min", cfg.n_min);
    suite_cmd->add_option("--n-max", cfg.n_max);
    suite_cmd->add_option("--samples", cfg.samples);
    suite_cmd->add_option("--seed", cfg.seed);
    suite_cmd->add_flag("--strict-transcription", cfg.strict_transcription);
    suite_cmd->add_flag("--parallel", cfg.parallel);
    suite_cmd->add_flag("--json", as_json, "print the JSON report instead of text");
    suite_cmd->add_option("-o", output, "also write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build_cmd->parsed()) {
            AlgebraDescriptor d;
            if (!descriptor_file.empty()) {
                d = descriptor_from_json(read_json_file(descriptor_file));
            } else {
                if (family.empty() || n == 0)
                    throw UsageError("build needs --family and --n, or --descriptor");
                d.family = parse_family(family);
                d.n = n;
                for (const auto& p : params) {
                    const auto eq = p.find('=');
                    if (eq == std::string::npos || eq == 0)
                        throw UsageError("--param expects name=value, got '" + p + "'");
                    d.params[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
                }
            }
            const auto text = algebra_to_json(build(d, strict)).dump(2) + "\n";
            if (output.empty() || output == "-")
                out << text;
            else
                write_text(output, text);
            return 0;
        }

        if (suite_cmd->parsed()) {
            validate_config(cfg);
            const auto report = run_suite(cfg);
            emit(out, format_report(report), report_to_json(report), as_json, output);
            return report.passed() ? 0 : 1;
        }

        if (c_leibniz->parsed()) {
            const auto A = load_algebra(file_a, strict);
            const Side s = parse_side(side);
            const auto v = check_leibniz(A.tensor, s);
            std::ostringstream text;
            text << side_name(s) << " Leibniz identity: " << v.size() << " violation(s)\n";
            Json list = Json::array();
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i < 20)
                    text << "  (" << v[i].r << "," << v[i].s << "," << v[i].t << "): lhs " << vec_str(v[i].lhs) << " rhs "
                         << vec_str(v[i].rhs) << "\n";
                list.push_back(violation_to_json(v[i]));
            }
            if (v.size() > 20)
                text << "  ... " << v.size() - 20 << " more\n";
            emit(out, text.str(), {{"side", side_name(s)}, {"violations", list}, {"passed", v.empty()}}, as_json, output);
            return v.empty() ? 0 : 1;
        }

        if (c_series->parsed()) {
            const auto A = load_algebra(file_a, strict);
            const auto ds = derived_series(A.tensor);
            const auto ls = lower_central_series(A.tensor);
            std::ostringstream text;
            text << "DS " << dims_str(ds.dims) << (ds.stabilized ? " stabilized" : "") << "\n";
            text << "LS " << dims_str(ls.dims) << (ls.stabilized ? " stabilized" : "") << "\n";
            Json report = {{"derived_series", series_to_json(ds)}, {"lower_central_series", series_to_json(ls)}};
            bool ok = true;
            if (A.descriptor)
                if (auto exp = expected_invariants(*A.descriptor)) {
                    const bool match = ds.dims == exp->ds_dims && ls.dims == exp->ls_dims && ls.stabilized == exp->ls_stabilized;
                    text << "expected: DS " << dims_str(exp->ds_dims) << ", LS " << dims_str(exp->ls_dims)
                         << (exp->ls_stabilized ? " stabilized" : "") << (match ? "  match\n" : "  MISMATCH\n");
                    report["matches_expected"] = match;
                    ok = match;
                }
            if (auto idx = nil_index(A.tensor)) {
                text << "nil-index " << *idx << "\n";
                report["nil_index"] = *idx;
            }
            report["passed"] = ok;
            emit(out, text.str(), report, as_json, output);
            return ok ? 0 : 1;
        }

        if (c_center->parsed()) {
            const auto A = load_algebra(file_a, strict);
            const auto z = center(A.tensor);
            std::ostringstream text;
            text << "center dimension " << z.dim() << "\n";
            for (const auto& r : z.rows())
                text << "  " << vec_str(r) << "\n";
            emit(out, text.str(), {{"center", subspace_to_json(z)}, {"passed", true}}, as_json, output);
            return 0;
        }

        if (c_der->parsed()) {
            const auto A = load_algebra(file_a, strict);
            const auto der = derivation_space(A.tensor);
            std::ostringstream text;
            text << "derivation algebra dimension " << der.dim() << "\n";
            Json report = {{"derivation_dim", der.dim()}, {"passed", true}};
            for (Side s : {Side::right, Side::left}) {
                if (!satisfies_leibniz(A.tensor, s))
                    continue;
                const auto inner = inner_derivations(A.tensor, s);
                text << side_name(s) << " inner derivations dimension " << inner.dim() << "\n";
                report[side_name(s) + "_inner_dim"] = inner.dim();
                if (dump) {
                    Json maps = Json::array();
                    for (const auto& m : inner.basis)
                        maps.push_back(map_to_json(m));
                    report[side_name(s) + "_inner_basis"] = maps;
                }
            }
            if (dump) {
                Json maps = Json::array();
                for (const auto& m : der.basis)
                    maps.push_back(map_to_json(m));
                report["derivation_basis"] = maps;
            }
            emit(out, text.str(), report, as_json, output);
            return 0;
        }

        if (c_nil->parsed()) {
            const auto A = load_algebra(file_a, strict);
            std::vector<int> idx;
            if (!basis.empty())
                idx = parse_indices(basis);
            else if (A.descriptor)
                for (int i = 1; i <= A.descriptor->n; ++i)
                    idx.push_back(i);
            else
                throw UsageError("--basis is required for Algebra JSON input");
            for (int i : idx)
                if (i < 1 || i > A.tensor.dim())
                    throw UsageError("basis index " + std::to_string(i) + " out of range");
            const auto cert = verify_nilradical_certificate(A.tensor, Subspace::coordinate(A.tensor.dim(), idx));
            std::ostringstream text;
            text << "two-sided ideal: " << (cert.is_ideal ? "yes" : "no") << "\n";
            if (cert.ideal_witness)
                text << "  bracket leaving N: " << (cert.ideal_witness->from_left ? "[e_i, s]" : "[s, e_i]")
                     << " with i=" << cert.ideal_witness->basis_index << " gives " << vec_str(cert.ideal_witness->product)
                     << "\n";
            text << "nilpotent: " << (cert.is_nilpotent_subalgebra ? "yes" : "no") << " (series " << dims_str(cert.restricted_ls)
                 << ")\n";
            text << "no nilpotent one-generator extension: " << (cert.complement_nonnilpotent ? "yes" : "no") << "\n";
            text << "dim N >= dim L / 2: " << (cert.dim_bound ? "yes" : "no") << "\n";
            text << "certificate: " << (cert.passes() ? "pass" : "fail")
                 << " (maximality checked one generator at a time only)\n";
            emit(out, text.str(), certificate_to_json(cert), as_json, output);
            return cert.passes() ? 0 : 1;
        }

        if (c_iso->parsed()) {
            const auto A = load_algebra(file_a, strict);
            const auto B = load_algebra(file_b, strict);
            const LinearMap P = map_from_json(read_json_file(map_file));
            const bool ok = iso_witness_check(A.tensor, B.tensor, P);
            emit(out, std::string("isomorphism witness: ") + (ok ? "valid" : "invalid") + "\n", {{"passed", ok}}, as_json,
                 output);
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace leibniz
