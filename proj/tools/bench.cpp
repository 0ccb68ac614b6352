#include "leibniz/suite.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>

using namespace leibniz;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"serial vs parallel timings"};
    int n = 10;
    int samples = 5;
    app.add_option("--n", n, "nilradical dimension for the kernel timings");
    app.add_option("--samples", samples, "samples per family for the suite timing");
    CLI11_PARSE(app, argc, argv);

    std::cout << "threads " << hardware_threads() << "\n";
    const auto T = build({Family::Gc2, n, {}});

    const Matrix system = derivation_constraints(T);
    Rref a, b;
    const double rs = seconds([&] { a = rref_serial(system); });
    const double rp = seconds([&] { b = rref_parallel(system); });
    std::cout << "rref " << system.rows() << "x" << system.cols() << "  serial " << rs << "s  parallel " << rp
              << "s  equal " << (a.reduced == b.reduced) << "\n";

    std::vector<IdentityViolation> v1, v2;
    const double ls = seconds([&] { v1 = check_leibniz(T, Side::left); });
    const double lp = seconds([&] { v2 = check_leibniz_parallel(T, Side::left); });
    bool same = v1.size() == v2.size();
    for (std::size_t i = 0; same && i < v1.size(); ++i)
        same = v1[i].r == v2[i].r && v1[i].s == v2[i].s && v1[i].t == v2[i].t;
    std::cout << "left identity on dim " << T.dim() << "  serial " << ls << "s  parallel " << lp << "s  same "
              << same << " (" << v1.size() << " violations)\n";

    SuiteConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 8;
    cfg.samples = samples;
    SuiteReport r1, r2;
    const double ss = seconds([&] { r1 = run_suite(cfg); });
    cfg.parallel = true;
    const double sp = seconds([&] { r2 = run_suite(cfg); });
    r2.config.parallel = false;
    std::cout << "suite n=4..8 samples=" << samples << "  serial " << ss << "s  parallel " << sp
              << "s  identical report " << (format_report(r1) == format_report(r2)) << "\n";
    return 0;
}
