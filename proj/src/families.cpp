#include "leibniz/families.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/poly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace leibniz {

namespace {

const std::vector<FamilyInfo> registry = {
    {Family::L2, "L2", FamilySide::both, 0, 4, "quasi-filiform nilradical"},
    {Family::G1, "G1", FamilySide::right, 1, 4, "g_{n+1,1}(a)"},
    {Family::G2, "G2", FamilySide::right, 1, 5, "g_{n+1,2}(delta), delta = +-1"},
    {Family::G3, "G3", FamilySide::right, 1, 5, "g_{n+1,3}(delta), delta = +-1"},
    {Family::G4, "G4", FamilySide::right, 1, 4, "g_{n+1,4}(epsilon, b_1..b_{n-5})"},
    {Family::Gc2, "Gc2", FamilySide::right, 2, 4, "g_{n+2,1}"},
    {Family::L1, "L1", FamilySide::left, 1, 4, "l_{n+1,1}(a)"},
    {Family::Ll2, "Ll2", FamilySide::left, 1, 5, "l_{n+1,2}(delta), delta = +-1"},
    {Family::Ll3, "Ll3", FamilySide::left, 1, 5, "l_{n+1,3}(delta), delta = +-1"},
    {Family::Ll4, "Ll4", FamilySide::left, 1, 4, "l_{n+1,4}(epsilon, b_1..b_{n-5})"},
    {Family::Lc2, "Lc2", FamilySide::left, 2, 4, "l_{n+2,1}"},
    {Family::RThm1Case1, "RThm1Case1", FamilySide::right, 1, 4, "right, a != 0, b != 2a, b != (4-n)a"},
    {Family::RThm1Case2, "RThm1Case2", FamilySide::right, 1, 5, "right, b = (4-n)a, a != 0"},
    {Family::RThm1Case3, "RThm1Case3", FamilySide::right, 1, 4, "right, a = 0, b != 0"},
    {Family::RThm1Case4, "RThm1Case4", FamilySide::right, 1, 4, "right, b = 2a, a != 0"},
    {Family::LThm1Case1, "LThm1Case1", FamilySide::left, 1, 4, "left, a != 0, b != a, b != (4-n)a"},
    {Family::LThm1Case2, "LThm1Case2", FamilySide::left, 1, 5, "left, b = (4-n)a, a != 0"},
    {Family::LThm1Case3, "LThm1Case3", FamilySide::left, 1, 4, "left, a = 0, b != 0"},
    {Family::LThm1Case4, "LThm1Case4", FamilySide::left, 1, 4, "left, b = a, a != 0"},
    {Family::RThm2Case1, "RThm2Case1", FamilySide::right, 1, 4, "right absorbed, a != 0, b != 2a, b != (4-n)a"},
    {Family::RThm2Case2, "RThm2Case2", FamilySide::right, 1, 5, "right absorbed, b = (4-n)a, a != 0"},
    {Family::RThm2Case3, "RThm2Case3", FamilySide::right, 1, 4, "right absorbed, a = 0, b != 0"},
    {Family::RThm2Case4, "RThm2Case4", FamilySide::right, 1, 4, "right absorbed, b = 2a, a != 0"},
    {Family::LThm2Case1, "LThm2Case1", FamilySide::left, 1, 4, "left absorbed, a != 0, b != a, b != (4-n)a"},
    {Family::LThm2Case2, "LThm2Case2", FamilySide::left, 1, 5, "left absorbed, b = (4-n)a, a != 0"},
    {Family::LThm2Case3, "LThm2Case3", FamilySide::left, 1, 4, "left absorbed, a = 0, b != 0"},
    {Family::LThm2Case4, "LThm2Case4", FamilySide::left, 1, 4, "left absorbed, b = a, a != 0"},
};

std::string ak(int k, int j) { return "a_" + std::to_string(k) + "_" + std::to_string(j); }

void push_range(std::vector<std::string>& out, int from, int to, int j)
{
    for (int k = from; k <= to; ++k)
        out.push_back(ak(k, j));
}

Rational get(const Params& p, const std::string& name)
{
    auto it = p.find(name);
    if (it == p.end())
        throw DescriptorError("missing parameter " + name);
    return it->second;
}

// The nilradical brackets plus helpers for the extension brackets.
struct Builder {
    int n;
    StructureTensor T;

    Builder(int n_, int codim)
        : n(n_), T(n_ + codim)
    {
        T.add(1, 1, 2, 1);
        for (int i = 3; i <= n - 1; ++i)
            T.add(i, 1, i + 1, 1);
        T.add(1, 3, 2, 1);
        T.add(1, 3, 4, -1);
        for (int j = 4; j <= n - 1; ++j)
            T.add(1, j, j + 1, -1);
    }

    // Nilradical-valued term c e_k of [e_i, e_j]. A term e_k with k > n would lie
    // outside the nilradical; such terms only arise at the top of an index range
    // and are left out.
    void put(int i, int j, int k, const Rational& c)
    {
        if (k > n)
            return;
        T.add(i, j, k, c);
    }

    // sum_{k=i+1}^{n} sign * band(k - i + 3) e_k added to [e_row, e_col]
    void tail(int row, int col, int i, const Rational& sign, const std::function<Rational(int)>& band)
    {
        for (int k = i + 1; k <= n; ++k) {
            const Rational c = band(k - i + 3);
            if (sgn(c) != 0)
                put(row, col, k, sign * c);
        }
    }
};

// band(m) = a_{m,3} for m >= 5, with the (4,3) slot supplied separately.
std::function<Rational(int)> band_with(const Params& p, Rational a43)
{
    return [&p, a43](int m) -> Rational {
        if (m == 4)
            return a43;
        return get(p, ak(m, 3));
    };
}

struct RightCoeffs {
    Rational A43, B23;
};

RightCoeffs right_case1(const Params& p)
{
    const Rational a = get(p, "a"), b = get(p, "b");
    const Rational common =
        ((a - b) * get(p, "b_2_1") + a * (get(p, "a_2_1") + get(p, "a_4_1"))) / (2 * a - b);
    return {-(b / a) * get(p, "a_2_3") + common, -get(p, "a_2_3") + common};
}

RightCoeffs right_case2(const Params& p, int n)
{
    const Rational common = ((n - 3) * get(p, "b_2_1") + get(p, "a_2_1") + get(p, "a_4_1")) / Rational(n - 2);
    return {(n - 4) * get(p, "a_2_3") + common, -get(p, "a_2_3") + common};
}

struct LeftCoeffs {
    Rational A41, A43;
};

LeftCoeffs left_case1(const Params& p)
{
    const Rational a = get(p, "a"), b = get(p, "b");
    const Rational a23 = get(p, "a_2_3"), b23 = get(p, "b_2_3");
    return {-get(p, "a_2_1") + ((2 * a - b) * (a23 + b23) - a * get(p, "b_2_1")) / (a - b), b23 + a * a23 / (a - b)};
}

LeftCoeffs left_case2(const Params& p, int n)
{
    const Rational a23 = get(p, "a_2_3"), b23 = get(p, "b_2_3");
    return {-get(p, "a_2_1") + ((n - 2) * (a23 + b23) - get(p, "b_2_1")) / Rational(n - 3), b23 + a23 / Rational(n - 3)};
}

// ---- right extensions before and after absorption ----

StructureTensor build_right(const AlgebraDescriptor& d)
{
    const Params& p = d.params;
    const int n = d.n;
    Builder B(n, 1);
    const int x = n + 1;
    const Rational one = 1, minus = -1;

    switch (d.family) {
    case Family::RThm1Case1:
    case Family::RThm2Case1: {
        const bool absorbed = d.family == Family::RThm2Case1;
        const Rational a = get(p, "a"), b = get(p, "b");
        const auto [A43, B23] = right_case1(p);
        const auto band = band_with(p, absorbed ? Rational(0) : A43);
        B.put(1, x, 1, a);
        B.put(1, x, 3, -(2 * a - b));
        B.put(x, 1, 1, -a);
        B.put(x, 1, 3, 2 * a - b);
        if (absorbed) {
            B.put(1, x, 2, get(p, "a_2_1") + get(p, "a_4_1") - A43);
            B.put(x, 1, 2, get(p, "b_2_1") - A43);
        } else {
            B.put(1, x, 2, get(p, "a_2_1"));
            B.put(x, 1, 2, get(p, "b_2_1"));
            for (int k = 4; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
        }
        B.put(2, x, 2, b);
        B.put(3, x, 2, get(p, "a_2_3"));
        B.put(3, x, 3, -(a - b));
        B.tail(3, x, 3, one, band);
        for (int i = 4; i <= n; ++i) {
            B.put(i, x, i, (i - 4) * a + b);
            B.tail(i, x, i, one, band);
        }
        B.put(x, x, 2, get(p, "a_2_n1"));
        B.put(x, 3, 2, absorbed ? (b - a) * get(p, "a_2_3") / a : B23);
        B.put(x, 3, 3, a - b);
        B.tail(x, 3, 3, minus, band);
        B.put(x, 4, 2, a);
        B.put(x, 4, 4, -b);
        B.tail(x, 4, 4, minus, band);
        for (int j = 5; j <= n; ++j) {
            B.put(x, j, j, (4 - j) * a - b);
            B.tail(x, j, j, minus, band);
        }
        break;
    }
    case Family::RThm1Case2:
    case Family::RThm2Case2: {
        const bool absorbed = d.family == Family::RThm2Case2;
        const Rational a = get(p, "a");
        const auto [A43, B23] = right_case2(p, n);
        const auto band = band_with(p, absorbed ? Rational(0) : A43);
        B.put(1, x, 1, a);
        B.put(1, x, 3, (2 - n) * a);
        B.put(x, 1, 1, -a);
        B.put(x, 1, 3, (n - 2) * a);
        if (absorbed) {
            B.put(1, x, 2, get(p, "a_2_1") + get(p, "a_4_1") - A43);
            B.put(x, 1, 2, get(p, "b_2_1") - A43);
            B.put(x, x, n, get(p, "a_n_n1"));
        } else {
            B.put(1, x, 2, get(p, "a_2_1"));
            B.put(x, 1, 2, get(p, "b_2_1"));
            for (int k = 4; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
            B.put(x, x, 2, get(p, "a_2_n1"));
            B.put(x, x, n, get(p, "a_n_n1"));
        }
        B.put(2, x, 2, (4 - n) * a);
        B.put(3, x, 2, get(p, "a_2_3"));
        B.put(3, x, 3, (3 - n) * a);
        B.tail(3, x, 3, one, band);
        for (int i = 4; i <= n - 1; ++i) {
            B.put(i, x, i, (i - n) * a);
            B.tail(i, x, i, one, band);
        }
        B.put(x, 3, 2, absorbed ? (3 - n) * get(p, "a_2_3") : B23);
        B.put(x, 3, 3, (n - 3) * a);
        B.tail(x, 3, 3, minus, band);
        B.put(x, 4, 2, a);
        B.put(x, 4, 4, (n - 4) * a);
        B.tail(x, 4, 4, minus, band);
        for (int j = 5; j <= n - 1; ++j) {
            B.put(x, j, j, (n - j) * a);
            B.tail(x, j, j, minus, band);
        }
        break;
    }
    case Family::RThm1Case3:
    case Family::RThm2Case3: {
        const bool absorbed = d.family == Family::RThm2Case3;
        const Rational b = get(p, "b");
        const auto band = band_with(p, absorbed ? Rational(0) : get(p, "a_4_3"));
        B.put(1, x, 2, get(p, "a_2_1"));
        B.put(1, x, 3, b);
        B.put(x, 1, 2, get(p, "b_2_1"));
        B.put(x, 1, 3, -b);
        if (!absorbed) {
            for (int k = 4; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
            B.put(x, x, 2, get(p, "a_2_n1"));
        }
        B.put(2, x, 2, b);
        for (int i = 3; i <= n; ++i) {
            B.put(i, x, i, b);
            B.tail(i, x, i, one, band);
        }
        B.put(x, 3, 2, get(p, "b_2_1"));
        for (int j = 3; j <= n; ++j) {
            B.put(x, j, j, -b);
            B.tail(x, j, j, minus, band);
        }
        break;
    }
    case Family::RThm1Case4:
    case Family::RThm2Case4: {
        const bool absorbed = d.family == Family::RThm2Case4;
        const Rational a = get(p, "a");
        const Rational A43 = absorbed ? Rational(0) : get(p, "b_2_3") - get(p, "a_2_3");
        const auto band = band_with(p, A43);
        B.put(1, x, 1, a);
        B.put(1, x, 2, get(p, "a_2_1"));
        B.put(x, 1, 1, -a);
        if (absorbed) {
            B.put(x, 1, 2, get(p, "a_2_1"));
            B.put(x, 3, 2, get(p, "a_2_3"));
        } else {
            B.put(x, 1, 2, get(p, "a_2_1") + get(p, "a_4_1"));
            for (int k = 4; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
            B.put(x, x, 2, get(p, "a_2_n1"));
            B.put(x, 3, 2, get(p, "b_2_3"));
        }
        B.put(2, x, 2, 2 * a);
        B.put(3, x, 2, get(p, "a_2_3"));
        B.put(3, x, 3, a);
        B.tail(3, x, 3, one, band);
        for (int i = 4; i <= n; ++i) {
            B.put(i, x, i, (i - 2) * a);
            B.tail(i, x, i, one, band);
        }
        B.put(x, 3, 3, -a);
        B.tail(x, 3, 3, minus, band);
        B.put(x, 4, 2, a);
        B.put(x, 4, 4, -2 * a);
        B.tail(x, 4, 4, minus, band);
        for (int j = 5; j <= n; ++j) {
            B.put(x, j, j, (2 - j) * a);
            B.tail(x, j, j, minus, band);
        }
        break;
    }
    default:
        throw UsageError("build_right: not a right extension case");
    }
    return std::move(B.T);
}

// ---- left extensions before and after absorption ----

StructureTensor build_left(const AlgebraDescriptor& d, bool strict)
{
    const Params& p = d.params;
    const int n = d.n;
    Builder B(n, 1);
    const int x = n + 1;
    const Rational one = 1, minus = -1;

    switch (d.family) {
    case Family::LThm1Case1:
    case Family::LThm2Case1: {
        const bool absorbed = d.family == Family::LThm2Case1;
        const Rational a = get(p, "a"), b = get(p, "b");
        const auto [A41, A43] = left_case1(p);
        const auto band = band_with(p, absorbed ? Rational(0) : A43);
        B.put(1, x, 1, a);
        B.put(1, x, 3, -(2 * a - b));
        B.put(x, 1, 1, -a);
        B.put(x, 1, 3, 2 * a - b);
        if (absorbed) {
            B.put(1, x, 2, get(p, "a_2_1") + A41 - A43);
            B.put(x, 1, 2, get(p, "b_2_1") - A43);
            B.put(x, 3, 2, a * get(p, "a_2_3") / (b - a));
        } else {
            B.put(1, x, 2, get(p, "a_2_1"));
            B.put(1, x, 4, A41);
            B.put(x, 1, 2, get(p, "b_2_1"));
            B.put(x, 1, 4, -A41);
            for (int k = 5; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
            B.put(x, 3, 2, get(p, "b_2_3"));
        }
        B.put(3, x, 2, get(p, "a_2_3"));
        B.put(3, x, 3, -(a - b));
        B.tail(3, x, 3, one, band);
        B.put(4, x, 2, a - b);
        for (int j = 4; j <= n; ++j) {
            B.put(j, x, j, (j - 4) * a + b);
            B.tail(j, x, j, one, band);
        }
        B.put(x, x, 2, get(p, "a_2_n1"));
        B.put(x, 2, 2, -b);
        B.put(x, 3, 3, a - b);
        B.tail(x, 3, 3, minus, band);
        for (int i = 4; i <= n; ++i) {
            B.put(x, i, i, (4 - i) * a - b);
            B.tail(x, i, i, minus, band);
        }
        break;
    }
    case Family::LThm1Case2:
    case Family::LThm2Case2: {
        const bool absorbed = d.family == Family::LThm2Case2;
        const Rational a = get(p, "a");
        const auto [A41, A43] = left_case2(p, n);
        const auto band = band_with(p, absorbed ? Rational(0) : A43);
        B.put(1, x, 1, a);
        B.put(1, x, 3, (2 - n) * a);
        B.put(x, 1, 1, -a);
        B.put(x, 1, 3, (n - 2) * a);
        if (absorbed) {
            B.put(1, x, 2, get(p, "a_2_1") + A41 - A43);
            B.put(x, 1, 2, get(p, "b_2_1") - A43);
            B.put(x, 3, 2, get(p, "a_2_3") / Rational(3 - n));
        } else {
            B.put(1, x, 2, get(p, "a_2_1"));
            B.put(1, x, 4, A41);
            B.put(x, 1, 2, get(p, "b_2_1"));
            B.put(x, 1, 4, -A41);
            for (int k = 5; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
            B.put(x, x, 2, get(p, "a_2_n1"));
            B.put(x, 3, 2, get(p, "b_2_3"));
        }
        B.put(x, x, n, get(p, "a_n_n1"));
        B.put(3, x, 2, get(p, "a_2_3"));
        B.put(3, x, 3, (3 - n) * a);
        B.tail(3, x, 3, one, band);
        B.put(4, x, 2, (n - 3) * a);
        for (int j = 4; j <= n; ++j) {
            B.put(j, x, j, (j - n) * a);
            B.tail(j, x, j, one, band);
        }
        B.put(x, 2, 2, (n - 4) * a);
        B.put(x, 3, 3, (n - 3) * a);
        B.tail(x, 3, 3, minus, band);
        for (int i = 4; i <= n; ++i) {
            B.put(x, i, i, (n - i) * a);
            B.tail(x, i, i, minus, band);
        }
        break;
    }
    case Family::LThm1Case3:
    case Family::LThm2Case3: {
        const bool absorbed = d.family == Family::LThm2Case3;
        const Rational b = get(p, "b");
        const auto band = band_with(p, absorbed ? Rational(0) : get(p, "a_4_3"));
        B.put(1, x, 3, b);
        B.put(x, 1, 2, get(p, "b_2_1"));
        B.put(x, 1, 3, -b);
        if (absorbed) {
            B.put(1, x, 2, get(p, "a_2_3"));
        } else {
            const Rational A41 = -get(p, "a_2_1") + get(p, "a_4_3") + get(p, "a_2_3");
            B.put(1, x, 2, get(p, "a_2_1"));
            B.put(1, x, 4, A41);
            B.put(x, 1, 4, -A41);
            for (int k = 5; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
            B.put(x, x, 2, get(p, "a_2_n1"));
            B.put(x, 3, 2, get(p, "a_4_3"));
        }
        B.put(3, x, 2, get(p, "a_2_3"));
        B.put(4, x, 2, -b);
        for (int j = 3; j <= n; ++j) {
            B.put(j, x, j, b);
            B.tail(j, x, j, one, band);
        }
        B.put(x, 2, 2, -b);
        for (int i = 3; i <= n; ++i) {
            B.put(x, i, i, -b);
            B.tail(x, i, i, minus, band);
        }
        (void)strict;
        break;
    }
    case Family::LThm1Case4:
    case Family::LThm2Case4: {
        const bool absorbed = d.family == Family::LThm2Case4;
        const Rational a = get(p, "a");
        const auto band = band_with(p, absorbed ? Rational(0) : get(p, "a_4_3"));
        B.put(1, x, 1, a);
        B.put(1, x, 2, get(p, "a_2_1"));
        B.put(1, x, 3, -a);
        B.put(x, 1, 1, -a);
        B.put(x, 1, 2, get(p, "b_2_3"));
        B.put(x, 1, 3, a);
        if (!absorbed) {
            for (int k = 4; k <= n; ++k) {
                B.put(1, x, k, get(p, ak(k, 1)));
                B.put(x, 1, k, -get(p, ak(k, 1)));
            }
            B.put(x, x, 2, get(p, "a_2_n1"));
        }
        for (int i = 3; i <= n; ++i) {
            B.put(i, x, i, (i - 3) * a);
            B.tail(i, x, i, one, band);
        }
        B.put(x, 2, 2, -a);
        B.put(x, 3, 2, get(p, "b_2_3"));
        B.tail(x, 3, 3, minus, band);
        for (int j = 4; j <= n; ++j) {
            B.put(x, j, j, (3 - j) * a);
            B.tail(x, j, j, minus, band);
        }
        break;
    }
    default:
        throw UsageError("build_left: not a left extension case");
    }
    return std::move(B.T);
}

// ---- canonical forms ----

StructureTensor build_canonical(const AlgebraDescriptor& d)
{
    const Params& p = d.params;
    const int n = d.n;
    const int x = n + 1, y = n + 2;
    switch (d.family) {
    case Family::L2:
        return std::move(Builder(n, 0).T);
    case Family::G1: {
        Builder B(n, 1);
        const Rational a = get(p, "a");
        B.put(1, x, 1, 1);
        B.put(1, x, 3, a - 2);
        B.put(2, x, 2, a);
        for (int i = 3; i <= n; ++i)
            B.put(i, x, i, a + i - 4);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, -(a - 2));
        B.put(x, 3, 3, 1 - a);
        B.put(x, 4, 2, 1);
        B.put(x, 4, 4, -a);
        for (int j = 5; j <= n; ++j)
            B.put(x, j, j, 4 - j - a);
        return std::move(B.T);
    }
    case Family::G2: {
        Builder B(n, 1);
        const Rational delta = get(p, "delta");
        B.put(1, x, 1, 1);
        B.put(1, x, 3, -2);
        B.put(1, x, 5, delta);
        for (int i = 3; i <= n; ++i)
            B.put(i, x, i, i - 4);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, 2);
        B.put(x, 1, 5, -delta);
        B.put(x, 3, 3, 1);
        B.put(x, 4, 2, 1);
        for (int j = 5; j <= n; ++j)
            B.put(x, j, j, 4 - j);
        return std::move(B.T);
    }
    case Family::G3: {
        Builder B(n, 1);
        const Rational delta = get(p, "delta");
        B.put(1, x, 1, 1);
        B.put(1, x, 3, 2 - n);
        B.put(2, x, 2, 4 - n);
        for (int i = 3; i <= n - 1; ++i)
            B.put(i, x, i, i - n);
        B.put(x, x, n, delta);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, n - 2);
        B.put(x, 3, 3, n - 3);
        B.put(x, 4, 2, 1);
        B.put(x, 4, 4, n - 4);
        for (int j = 5; j <= n - 1; ++j)
            B.put(x, j, j, n - j);
        return std::move(B.T);
    }
    case Family::G4:
    case Family::Ll4: {
        const bool left = d.family == Family::Ll4;
        Builder B(n, 1);
        const Rational eps = get(p, "epsilon");
        auto tail = [&](int row, int col, int i, const Rational& sign) {
            B.put(row, col, i, sign);
            B.put(row, col, i + 2, sign * eps);
            for (int k = i + 3; k <= n; ++k)
                B.put(row, col, k, sign * get(p, "b_" + std::to_string(k - i - 2)));
        };
        B.put(1, x, 3, 1);
        B.put(x, 1, 3, -1);
        if (left) {
            B.put(x, 2, 2, -1);
            B.put(4, x, 2, -1);
        } else {
            B.put(2, x, 2, 1);
        }
        for (int i = 3; i <= n; ++i) {
            tail(i, x, i, 1);
            tail(x, i, i, -1);
        }
        return std::move(B.T);
    }
    case Family::Gc2: {
        Builder B(n, 2);
        B.put(1, x, 1, 1);
        B.put(1, x, 3, -2);
        for (int i = 3; i <= n; ++i)
            B.put(i, x, i, i - 4);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, 2);
        B.put(x, 3, 3, 1);
        B.put(x, 4, 2, 1);
        for (int j = 5; j <= n; ++j)
            B.put(x, j, j, 4 - j);
        B.put(1, y, 1, 1);
        B.put(1, y, 3, -1);
        B.put(2, y, 2, 1);
        for (int i = 3; i <= n; ++i)
            B.put(i, y, i, i - 3);
        B.put(y, 1, 1, -1);
        B.put(y, 1, 3, 1);
        B.put(y, 4, 2, 1);
        B.put(y, 4, 4, -1);
        for (int j = 5; j <= n; ++j)
            B.put(y, j, j, 3 - j);
        return std::move(B.T);
    }
    case Family::L1: {
        Builder B(n, 1);
        const Rational a = get(p, "a");
        B.put(1, x, 1, 1);
        B.put(1, x, 3, a - 2);
        B.put(3, x, 3, a - 1);
        B.put(4, x, 2, 1 - a);
        B.put(4, x, 4, a);
        for (int j = 5; j <= n; ++j)
            B.put(j, x, j, a + j - 4);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, 2 - a);
        B.put(x, 2, 2, -a);
        for (int i = 3; i <= n; ++i)
            B.put(x, i, i, 4 - i - a);
        return std::move(B.T);
    }
    case Family::Ll2: {
        Builder B(n, 1);
        const Rational delta = get(p, "delta");
        B.put(1, x, 1, 1);
        B.put(1, x, 3, -2);
        B.put(1, x, 5, delta);
        B.put(3, x, 3, -1);
        B.put(4, x, 2, 1);
        for (int j = 5; j <= n; ++j)
            B.put(j, x, j, j - 4);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, 2);
        B.put(x, 1, 5, -delta);
        for (int i = 3; i <= n; ++i)
            B.put(x, i, i, 4 - i);
        return std::move(B.T);
    }
    case Family::Ll3: {
        Builder B(n, 1);
        const Rational delta = get(p, "delta");
        B.put(1, x, 1, 1);
        B.put(1, x, 3, 2 - n);
        B.put(3, x, 3, 3 - n);
        B.put(4, x, 2, n - 3);
        B.put(4, x, 4, 4 - n);
        for (int j = 5; j <= n - 1; ++j)
            B.put(j, x, j, j - n);
        B.put(x, x, n, delta);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, n - 2);
        B.put(x, 2, 2, n - 4);
        for (int i = 3; i <= n - 1; ++i)
            B.put(x, i, i, n - i);
        return std::move(B.T);
    }
    case Family::Lc2: {
        Builder B(n, 2);
        B.put(1, x, 1, 1);
        B.put(1, x, 3, -2);
        B.put(3, x, 3, -1);
        B.put(4, x, 2, 1);
        for (int i = 5; i <= n; ++i)
            B.put(i, x, i, i - 4);
        B.put(x, 1, 1, -1);
        B.put(x, 1, 3, 2);
        for (int j = 3; j <= n; ++j)
            B.put(x, j, j, 4 - j);
        B.put(1, y, 1, 1);
        B.put(3, y, 3, 1);
        B.put(4, y, 2, -1);
        B.put(4, y, 4, 2);
        for (int i = 5; i <= n; ++i)
            B.put(i, y, i, i - 2);
        B.put(y, 1, 1, -1);
        B.put(y, 2, 2, -2);
        for (int j = 3; j <= n; ++j)
            B.put(y, j, j, 2 - j);
        return std::move(B.T);
    }
    default:
        throw UsageError("build_canonical: not a canonical family");
    }
}

} // namespace

const std::vector<FamilyInfo>& family_registry() { return registry; }

const FamilyInfo& family_info(Family f)
{
    for (const auto& info : registry)
        if (info.family == f)
            return info;
    throw UsageError("unregistered family");
}

std::string family_name(Family f) { return family_info(f).name; }

Family parse_family(const std::string& name)
{
    for (const auto& info : registry)
        if (info.name == name)
            return info.family;
    throw UsageError("unknown family '" + name + "'");
}

bool is_canonical(Family f)
{
    switch (f) {
    case Family::G1: case Family::G2: case Family::G3: case Family::G4: case Family::Gc2:
    case Family::L1: case Family::Ll2: case Family::Ll3: case Family::Ll4: case Family::Lc2:
        return true;
    default:
        return false;
    }
}

bool is_pre_absorption(Family f)
{
    switch (f) {
    case Family::RThm1Case1: case Family::RThm1Case2: case Family::RThm1Case3: case Family::RThm1Case4:
    case Family::LThm1Case1: case Family::LThm1Case2: case Family::LThm1Case3: case Family::LThm1Case4:
        return true;
    default:
        return false;
    }
}

bool is_post_absorption(Family f)
{
    switch (f) {
    case Family::RThm2Case1: case Family::RThm2Case2: case Family::RThm2Case3: case Family::RThm2Case4:
    case Family::LThm2Case1: case Family::LThm2Case2: case Family::LThm2Case3: case Family::LThm2Case4:
        return true;
    default:
        return false;
    }
}

std::vector<std::string> param_names(Family f, int n)
{
    std::vector<std::string> out;
    switch (f) {
    case Family::L2: case Family::Gc2: case Family::Lc2:
        break;
    case Family::G1: case Family::L1:
        out = {"a"};
        break;
    case Family::G2: case Family::G3: case Family::Ll2: case Family::Ll3:
        out = {"delta"};
        break;
    case Family::G4: case Family::Ll4:
        out = {"epsilon"};
        for (int i = 1; i <= n - 5; ++i)
            out.push_back("b_" + std::to_string(i));
        break;
    case Family::RThm1Case1:
        out = {"a", "b", "a_2_1"};
        push_range(out, 4, n, 1);
        out.push_back("a_2_3");
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "a_2_n1"});
        break;
    case Family::RThm1Case2:
        out = {"a", "a_2_1"};
        push_range(out, 4, n, 1);
        out.push_back("a_2_3");
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "a_2_n1", "a_n_n1"});
        break;
    case Family::RThm1Case3:
        out = {"b", "a_2_1"};
        push_range(out, 4, n, 1);
        push_range(out, 4, n, 3);
        out.insert(out.end(), {"b_2_1", "a_2_n1"});
        break;
    case Family::RThm1Case4:
        out = {"a", "a_2_1"};
        push_range(out, 4, n, 1);
        out.push_back("a_2_3");
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_3", "a_2_n1"});
        break;
    case Family::RThm2Case1:
        out = {"a", "b", "a_2_1", "a_4_1", "a_2_3"};
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "a_2_n1"});
        break;
    case Family::RThm2Case2:
        out = {"a", "a_2_1", "a_4_1", "a_2_3"};
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "a_n_n1"});
        break;
    case Family::RThm2Case3:
        out = {"b", "a_2_1"};
        push_range(out, 5, n, 3);
        out.push_back("b_2_1");
        break;
    case Family::RThm2Case4:
        out = {"a", "a_2_1", "a_2_3"};
        push_range(out, 5, n, 3);
        break;
    case Family::LThm1Case1:
        out = {"a", "b", "a_2_1"};
        push_range(out, 5, n, 1);
        out.push_back("a_2_3");
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "b_2_3", "a_2_n1"});
        break;
    case Family::LThm1Case2:
        out = {"a", "a_2_1"};
        push_range(out, 5, n, 1);
        out.push_back("a_2_3");
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "b_2_3", "a_2_n1", "a_n_n1"});
        break;
    case Family::LThm1Case3:
        out = {"b", "a_2_1"};
        push_range(out, 5, n, 1);
        out.push_back("a_2_3");
        push_range(out, 4, n, 3);
        out.insert(out.end(), {"b_2_1", "a_2_n1"});
        break;
    case Family::LThm1Case4:
        out = {"a", "a_2_1"};
        push_range(out, 4, n, 1);
        push_range(out, 4, n, 3);
        out.insert(out.end(), {"b_2_3", "a_2_n1"});
        break;
    case Family::LThm2Case1:
        out = {"a", "b", "a_2_1", "a_2_3"};
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "b_2_3", "a_2_n1"});
        break;
    case Family::LThm2Case2:
        out = {"a", "a_2_1", "a_2_3"};
        push_range(out, 5, n, 3);
        out.insert(out.end(), {"b_2_1", "b_2_3", "a_n_n1"});
        break;
    case Family::LThm2Case3:
        out = {"b", "a_2_3"};
        push_range(out, 5, n, 3);
        out.push_back("b_2_1");
        break;
    case Family::LThm2Case4:
        out = {"a", "a_2_1"};
        push_range(out, 5, n, 3);
        out.push_back("b_2_3");
        break;
    }
    return out;
}

void validate(const AlgebraDescriptor& d)
{
    const FamilyInfo& info = family_info(d.family);
    const int n = d.n;
    if (n < info.min_n)
        throw DescriptorError(info.name + " requires n ≥ " + std::to_string(info.min_n));
    const auto names = param_names(d.family, n);
    const std::set<std::string> allowed(names.begin(), names.end());
    for (const auto& [k, v] : d.params)
        if (!allowed.count(k))
            throw DescriptorError(info.name + ": unknown parameter '" + k + "'");
    for (const auto& k : names)
        if (!d.params.count(k))
            throw DescriptorError(info.name + ": missing parameter '" + k + "'");
    auto p = [&](const char* k) { return d.params.at(k); };
    auto require = [&](bool ok, const std::string& what) {
        if (!ok)
            throw DescriptorError(info.name + " requires " + what);
    };
    switch (d.family) {
    case Family::G2: case Family::G3: case Family::Ll2: case Family::Ll3:
        require(p("delta") == 1 || p("delta") == -1, "delta = 1 or -1");
        break;
    case Family::G4:
        require(p("epsilon") == 0 || p("epsilon") == 1 || p("epsilon") == -1, "epsilon in {0, 1, -1}");
        break;
    case Family::Ll4:
        require(p("epsilon") == 0 || p("epsilon") == 1 || p("epsilon") == -1, "epsilon in {0, 1, -1}");
        require(n > 4 || p("epsilon") == 0, "epsilon = 0 when n = 4");
        break;
    case Family::RThm1Case1: case Family::RThm2Case1:
        require(sgn(p("a")) != 0, "a != 0");
        require(p("b") != 2 * p("a"), "b != 2a");
        require(n == 4 || p("b") != (4 - n) * p("a"), "b != (4-n)a");
        break;
    case Family::LThm1Case1: case Family::LThm2Case1:
        require(sgn(p("a")) != 0, "a != 0");
        require(p("b") != p("a"), "b != a");
        require(n == 4 || p("b") != (4 - n) * p("a"), "b != (4-n)a");
        break;
    case Family::RThm1Case2: case Family::RThm2Case2: case Family::RThm1Case4: case Family::RThm2Case4:
    case Family::LThm1Case2: case Family::LThm2Case2: case Family::LThm1Case4: case Family::LThm2Case4:
        require(sgn(p("a")) != 0, "a != 0");
        break;
    case Family::RThm1Case3: case Family::RThm2Case3: case Family::LThm1Case3: case Family::LThm2Case3:
        require(sgn(p("b")) != 0, "b != 0");
        break;
    default:
        break;
    }
}

StructureTensor build(const AlgebraDescriptor& d, bool strict)
{
    validate(d);
    const FamilyInfo& info = family_info(d.family);
    if (d.family == Family::L2 || is_canonical(d.family))
        return build_canonical(d);
    if (info.side == FamilySide::right)
        return build_right(d);
    return build_left(d, strict);
}

namespace {

Rational draw_rational(std::mt19937_64& rng)
{
    const long num = static_cast<long>(rng() % 13) - 6;
    const long den = static_cast<long>(rng() % 4) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

AlgebraDescriptor sample_params(Family f, int n, std::uint64_t seed)
{
    const FamilyInfo& info = family_info(f);
    if (n < info.min_n)
        throw DescriptorError(info.name + " requires n ≥ " + std::to_string(info.min_n));
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(f) * 1000 + static_cast<std::uint64_t>(n));
    const auto names = param_names(f, n);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        AlgebraDescriptor d{f, n, {}};
        for (const auto& k : names) {
            if (k == "delta")
                d.params[k] = rng() % 2 ? 1 : -1;
            else if (k == "epsilon")
                d.params[k] = (f == Family::Ll4 || f == Family::G4) && n == 4 ? 0 : static_cast<long>(rng() % 3) - 1;
            else
                d.params[k] = draw_rational(rng);
        }
        // a = 1 collapses e_3 out of the derived algebra of G1 and L1
        if ((f == Family::G1 || f == Family::L1) && d.params.at("a") == 1)
            continue;
        try {
            validate(d);
            return d;
        } catch (const DescriptorError&) {
        }
    }
    throw DescriptorError(info.name + ": no valid parameters after 1000 draws");
}

std::optional<ExpectedInvariants> expected_invariants(const AlgebraDescriptor& d)
{
    const int n = d.n;
    ExpectedInvariants e;
    e.side = family_info(d.family).side;
    switch (d.family) {
    case Family::L2:
        e.ds_dims = {n, n - 2, 0};
        e.ls_dims = {n, n - 2};
        for (int k = n - 4; k >= 0; --k)
            e.ls_dims.push_back(k);
        e.center_dim = 2;
        return e;
    case Family::G1: case Family::G2: case Family::G3:
    case Family::L1: case Family::Ll2: case Family::Ll3:
        e.ds_dims = {n + 1, n, n - 2, 0};
        e.ls_dims = {n + 1, n, n};
        e.ls_stabilized = true;
        return e;
    case Family::G4: case Family::Ll4:
        e.ds_dims = {n + 1, n - 1, 0};
        e.ls_dims = {n + 1, n - 1, n - 1};
        e.ls_stabilized = true;
        return e;
    case Family::Gc2: case Family::Lc2:
        e.ds_dims = {n + 2, n, n - 2, 0};
        e.ls_dims = {n + 2, n, n};
        e.ls_stabilized = true;
        return e;
    default:
        return std::nullopt;
    }
}

const std::vector<Patch>& patches()
{
    static const std::vector<Patch> list = {};
    return list;
}

std::map<std::string, Rational> derived_coefficients(const AlgebraDescriptor& d)
{
    validate(d);
    const Params& p = d.params;
    std::map<std::string, Rational> out;
    switch (d.family) {
    case Family::RThm1Case1: case Family::RThm2Case1: {
        const auto c = right_case1(p);
        out["A_4_3"] = c.A43;
        if (d.family == Family::RThm1Case1)
            out["B_2_3"] = c.B23;
        break;
    }
    case Family::RThm1Case2: case Family::RThm2Case2: {
        const auto c = right_case2(p, d.n);
        out["A_4_3"] = c.A43;
        if (d.family == Family::RThm1Case2)
            out["B_2_3"] = c.B23;
        break;
    }
    case Family::RThm1Case4:
        out["A_4_3"] = get(p, "b_2_3") - get(p, "a_2_3");
        break;
    case Family::LThm1Case1: case Family::LThm2Case1: {
        const auto c = left_case1(p);
        out["A_4_1"] = c.A41;
        out["A_4_3"] = c.A43;
        break;
    }
    case Family::LThm1Case2: case Family::LThm2Case2: {
        const auto c = left_case2(p, d.n);
        out["A_4_1"] = c.A41;
        out["A_4_3"] = c.A43;
        break;
    }
    case Family::LThm1Case3:
        out["A_4_1"] = -get(p, "a_2_1") + get(p, "a_4_3") + get(p, "a_2_3");
        break;
    default:
        break;
    }
    return out;
}

} // namespace leibniz

namespace leibniz {

namespace {

// All coordinates of the identity residual lhs - rhs over basis triples.
std::vector<Rational> identity_residual(const StructureTensor& T, Side side)
{
    const int n = T.dim();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) * n * n * n);
    std::vector<Vector> e;
    for (int i = 1; i <= n; ++i)
        e.push_back(basis_vector(n, i));
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                const Vector xy = T.bracket_basis(r + 1, s + 1);
                const Vector lhs = bracket(T, xy, e[t]);
                Vector rhs;
                if (side == Side::right)
                    rhs = add(bracket(T, T.bracket_basis(r + 1, t + 1), e[s]), bracket(T, e[r], T.bracket_basis(s + 1, t + 1)));
                else
                    rhs = sub(bracket(T, e[r], T.bracket_basis(s + 1, t + 1)), bracket(T, e[s], T.bracket_basis(r + 1, t + 1)));
                for (int k = 0; k < n; ++k)
                    out.push_back(lhs[k] - rhs[k]);
            }
    return out;
}

} // namespace

std::vector<Rational> resolve_coefficient(const StructureTensor& T, Side side, int i, int j, int k)
{
    // The identity is quadratic in the structure constants, so each residual
    // coordinate is a polynomial of degree <= 2 in the unknown; three samples fix it.
    std::vector<std::vector<Rational>> samples;
    for (int c = 0; c <= 2; ++c) {
        StructureTensor U = T;
        U.add(i, j, k, Rational(c) - T.coefficient(i, j, k));
        samples.push_back(identity_residual(U, side));
    }
    Poly g;
    for (std::size_t idx = 0; idx < samples[0].size(); ++idx) {
        const Rational r0 = samples[0][idx], r1 = samples[1][idx], r2 = samples[2][idx];
        const Rational c2 = (r0 - 2 * r1 + r2) / 2;
        const Rational c1 = r1 - r0 - c2;
        const Poly q({r0, c1, c2});
        if (!q.is_zero())
            g = gcd(g, q);
    }
    if (g.is_zero())
        throw PreconditionError("the identity does not constrain this coefficient");
    if (g.degree() == 0)
        return {};
    auto roots = rational_roots(g);
    std::sort(roots.begin(), roots.end());
    return roots;
}

LinearMap expected_inner_right(int n, int i)
{
    LinearMap m = LinearMap::zero(n);
    if (i == 1) {
        m(1, 0) = 1;
        for (int r = 3; r <= n - 1; ++r)
            m(r, r - 1) = 1;
    } else if (i == 3) {
        m = elementary(n, 2, 1) - elementary(n, 4, 1);
    } else if (i >= 4 && i <= n - 1) {
        m = Rational(-1) * elementary(n, i + 1, 1);
    }
    return m;
}

LinearMap expected_inner_left(int n, int i)
{
    LinearMap m = LinearMap::zero(n);
    if (i == 1) {
        m(1, 0) = 1;
        m(1, 2) = 1;
        for (int r = 3; r <= n - 1; ++r)
            m(r, r - 1) = -1;
    } else if (i >= 3 && i <= n - 1) {
        m = elementary(n, i + 1, 1);
    }
    return m;
}

namespace {

void put_band(LinearMap& m, int n, const Rational& sign, const std::map<int, Rational>& band)
{
    for (int j = 3; j <= n; ++j)
        for (int i = j + 2; i <= n; ++i) {
            auto it = band.find(i - j + 3);
            if (it != band.end())
                m(i - 1, j - 1) = sign * it->second;
        }
}

} // namespace

OuterPair outer_right_pair(int n, const Rational& c, const Rational& a23, const std::map<int, Rational>& band)
{
    OuterPair p{LinearMap::zero(n), LinearMap::zero(n)};
    LinearMap& R1 = p.first;
    LinearMap& R2 = p.second;
    R1(0, 0) = 1;
    R1(2, 2) = -1;
    for (int i = 4; i <= n; ++i)
        R1(i - 1, i - 1) = i - 4;
    R1(1, 0) = c;
    R1(1, 2) = a23;
    R1(2, 0) = -2;
    put_band(R1, n, 1, band);

    R2(0, 0) = 1;
    R2(1, 1) = 1;
    for (int i = 4; i <= n; ++i)
        R2(i - 1, i - 1) = i - 3;
    R2(1, 0) = a23;
    R2(1, 2) = a23;
    R2(2, 0) = -1;
    put_band(R2, n, 1, band);
    return p;
}

OuterPair outer_left_pair(int n, const Rational& c, const Rational& a23, const std::map<int, Rational>& band)
{
    OuterPair p{LinearMap::zero(n), LinearMap::zero(n)};
    LinearMap& L1 = p.first;
    LinearMap& L2 = p.second;
    L1(0, 0) = -1;
    L1(2, 2) = 1;
    for (int i = 4; i <= n; ++i)
        L1(i - 1, i - 1) = 4 - i;
    L1(1, 0) = c;
    L1(1, 2) = -a23;
    L1(2, 0) = 2;
    put_band(L1, n, -1, band);

    L2(0, 0) = -1;
    L2(1, 1) = -2;
    L2(2, 2) = -1;
    for (int i = 4; i <= n; ++i)
        L2(i - 1, i - 1) = 2 - i;
    L2(1, 0) = -c - 2 * a23;
    L2(1, 2) = -a23;
    put_band(L2, n, -1, band);
    return p;
}

} // namespace leibniz
