// One line per acceptance criterion, exact arithmetic throughout.
#include "leibniz/suite.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace leibniz;

int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    int failed = 0;
    for (int id = 1; id <= criterion_count; ++id) {
        SuiteConfig cfg;
        cfg.n_min = 4;
        cfg.n_max = id == 1 ? 10 : 8;
        cfg.samples = 20;
        cfg.seed = 42;
        cfg.parallel = true;
        const auto r = run_criterion(id, cfg);
        std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << id << ": " << r.title << " (" << r.checks
                  << " checks, n=" << cfg.n_min << ".." << cfg.n_max << ")\n";
        for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
            std::cout << "    " << r.failures[i] << "\n";
        failed += !r.passed();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/%d criteria passed in %.1fs\n", criterion_count - failed, criterion_count, secs);
    return failed == 0 ? 0 : 1;
}
