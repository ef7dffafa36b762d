#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hypdim/kneading.hpp"
#include "hypdim/mp_interval.hpp"

using namespace hypdim;
using BF = boost::multiprecision::cpp_bin_float_100;

namespace {

// Signs of p_c^i(0), i = 1..n, at a point parameter in 100-digit arithmetic.
std::vector<int> orbit_signs(const BF& c, int n)
{
    std::vector<int> out;
    BF x = 0;
    for (int i = 0; i < n; ++i) {
        x = x * x + c;
        out.push_back(x > 0 ? 1 : (x < 0 ? -1 : 0));
    }
    return out;
}

// Real roots of p_c^n(0) in (lo, hi) by a sign-change scan at the given step.
std::vector<double> scan_roots(int n, double lo, double hi, double step)
{
    std::vector<double> out;
    auto f = [n](long double c) {
        long double x = 0;
        for (int i = 0; i < n; ++i) x = x * x + c;
        return x;
    };
    long double prev = f(lo);
    for (long double c = lo + step; c < hi; c += step) {
        const long double v = f(c);
        if ((v > 0) != (prev > 0)) out.push_back(static_cast<double>(c - step / 2));
        prev = v;
    }
    return out;
}

bool has_period_below(double c, int n)
{
    for (int d = 1; d < n; ++d)
        if (n % d == 0) {
            long double x = 0;
            for (int i = 0; i < d; ++i) x = x * x + c;
            if (std::fabs(x) < 1e-4L) return true;
        }
    return false;
}

} // namespace

TEST_CASE("multi-precision intervals")
{
    const MpInterval a(1.0, 2.0, 128), b(-3.0, -1.0, 128);
    CHECK((a + b).lo_down() == -2.0);
    CHECK((a + b).hi_up() == 1.0);
    CHECK((a * b).lo_down() == -6.0);
    CHECK((a * b).hi_up() == -1.0);
    CHECK(sqr(b).lo_down() == 1.0);
    CHECK(sqr(MpInterval(-1.0, 2.0, 64)).lo_down() == 0.0);
    CHECK(ldexp(a, 3).hi_up() == 16.0);
    CHECK(a.sign() == 1);
    CHECK(b.sign() == -1);
    CHECK(MpInterval(0.0, 64).sign() == 0);
    CHECK(MpInterval(-1.0, 1.0, 64).sign() == 2);
    CHECK(MpInterval(0.0, 1.0, 64).sign() == 2);
    CHECK(b.less(a));
    CHECK(!a.overlaps(b));
    const MpInterval third = MpInterval(1.0, 64) * MpInterval(1.0 / 3.0, 64);
    CHECK(third.width_up() == 0.0);
}

TEST_CASE("kneading symbols")
{
    CHECK(kneading_symbols({-1, 0}, 2) == std::vector<int>{-1, 0});
    CHECK(kneading_symbols({-2, 0}, 3) == std::vector<int>{-1, 1, 1});
    CHECK(kneading_symbols({-1.401155189, 1e-10}, 4) == orbit_signs(BF("-1.401155189"), 4));

    try {
        kneading_symbols({-1, 1e-3}, 3);
        FAIL("expected an undecidable symbol");
    } catch (const KneadingError& e) {
        CHECK(e.index == 2);
        CHECK(std::string(e.what()).find("refine parameter/precision") != std::string::npos);
    }
    CHECK_THROWS_AS(kneading_symbols({-1, 0}, 0), std::invalid_argument);
}

TEST_CASE("stationary extension rules")
{
    const StationaryKneading two{{-1, 1}};
    CHECK(stationary_symbol(two, 1) == -1);
    CHECK(stationary_symbol(two, 2) == 1);
    CHECK(stationary_symbol(two, 4) == -1);

    for (const auto& sk : {StationaryKneading{{-1, 1, 1}}, StationaryKneading{{-1, -1, 1, -1}},
                           StationaryKneading{{-1, 1, -1, 1, 1}}}) {
        const int n = sk.n();
        for (std::uint64_t s = 1; s < 200; ++s)
            if (s % n != 0) CHECK(stationary_symbol(sk, s + n) == stationary_symbol(sk, s));
        // k_{n^l m} = (-k_n)^l k_m.
        for (std::uint64_t m = 1; m < 20; ++m) {
            if (m % n == 0) continue;
            std::uint64_t i = m;
            int f = 1;
            for (int l = 0; l < 4; ++l, i *= n, f *= -sk.prefix[n - 1])
                CHECK(stationary_symbol(sk, i) == f * stationary_symbol(sk, m));
        }
    }
}

TEST_CASE("superattracting roots")
{
    auto r2 = superattracting_roots(2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].interval().contains(-1.0));

    // c^3 + 2c^2 + c + 1 = 0.
    long double lo = -2, hi = -1.5;
    for (int i = 0; i < 80; ++i) {
        const long double m = (lo + hi) / 2;
        ((m * m * m + 2 * m * m + m + 1) < 0 ? lo : hi) = m;
    }
    auto r3 = superattracting_roots(3);
    REQUIRE(r3.size() == 1);
    CHECK(std::fabs(r3[0].center - lo) < 1e-12L);
    CHECK(r3[0].center == doctest::Approx(-1.7548776662).epsilon(1e-10));

    auto r4 = superattracting_roots(4);
    REQUIRE(r4.size() == 2);
    CHECK(r4[0].center == doctest::Approx(-1.9407998).epsilon(1e-7));

    for (int n = 2; n <= 8; ++n) {
        const auto roots = superattracting_roots(n);
        std::vector<double> ref;
        for (double c : scan_roots(n, -2.0, -0.5, n <= 6 ? 1e-6 : 1e-7))
            if (!has_period_below(c, n)) ref.push_back(c);
        static const std::size_t expected[] = {0, 0, 1, 1, 2, 3, 5, 9, 16};
        CHECK(roots.size() == expected[n]);
        if (n <= 7) {
            REQUIRE(ref.size() == roots.size());
            for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::fabs(roots[i].center - ref[i]) < 1e-6);
        }
        for (const auto& r : roots) CHECK(2 * r.radius <= 1.01e-12);
    }
}

TEST_CASE("orbit permutations and last symbols")
{
    const auto r2 = superattracting_roots(2)[0];
    CHECK(orbit_permutation(r2, 2) == UnimodalPermutation{1, 0});
    CHECK(feig_last_symbol(r2, 2) == 1);

    const auto r3 = superattracting_roots(3)[0];
    CHECK(orbit_permutation(r3, 3) == UnimodalPermutation{1, 0, 2});
    const int k3 = feig_last_symbol(r3, 3);
    CHECK(k3 == orbit_signs(BF(r3.center) - BF("1e-6"), 3)[2]);

    const std::vector<UnimodalPermutation> table5 = {{1, 0, 4, 3, 2}, {2, 0, 4, 3, 1}, {3, 0, 4, 2, 1}};
    for (const auto& r : superattracting_roots(5)) {
        const auto p = orbit_permutation(r, 5);
        CHECK(std::find(table5.begin(), table5.end(), p) != table5.end());
    }

    for (int n = 2; n <= 7; ++n)
        for (const auto& r : superattracting_roots(n)) {
            const int k = feig_last_symbol(r, n);
            CHECK((k == 1 || k == -1));
            CHECK(k == orbit_signs(BF(r.center) - BF("1e-9"), n)[n - 1]);
        }
}

TEST_CASE("comparison order")
{
    // Against the period-doubling point, and two table parameters, on a grid.
    const std::pair<UnimodalPermutation, double> targets[] = {
        {{1, 0}, -1.4011551890}, {{1, 0, 2}, -1.7864402555}, {{2, 0, 4, 3, 1}, -1.8622240226}};
    for (const auto& [perm, c] : targets) {
        const auto roots = superattracting_roots(static_cast<int>(perm.size()));
        const auto sk = [&] {
            for (const auto& r : roots)
                if (orbit_permutation(r, static_cast<int>(perm.size())) == perm)
                    return feig_kneading(r, static_cast<int>(perm.size()));
            FAIL("no root");
            return StationaryKneading{};
        }();
        for (int i = 0; i < 100; ++i) {
            const double b = -1.999 + 1.998 * (i + 0.5) / 100;
            if (std::fabs(b - c) < 1e-6) continue;
            int used = 0;
            long prec = 0;
            const int cmp = compare_parameter(b, sk, &used, &prec);
            CHECK(cmp == (b < c ? -1 : 1));
        }
    }
}

TEST_CASE("locate Feigenbaum parameters")
{
    const std::pair<UnimodalPermutation, double> rows[] = {
        {{1, 0, 2}, -1.7864402555}, {{1, 0}, -1.4011551890}, {{4, 0, 5, 2, 3, 1}, -1.4831818301}};
    for (const auto& [perm, c] : rows) {
        const auto r = locate_feig_param(perm, 1e-10);
        CHECK(2 * r.param.radius <= 1.01e-10);
        CHECK(std::fabs(r.param.center - c) <= 1e-9);
        if (r.perturbations == 0) CHECK(r.steps == 35);

        // The kneading of the enclosure agrees with the stationary rules
        // wherever signs are decidable.
        const int n = r.kneading.n();
        const Interval ci = r.param.interval();
        const MpInterval cc(ci.lo(), ci.hi(), 256);
        MpInterval x(256);
        int decided = 0;
        for (int i = 1; i <= 3 * n * n; ++i) {
            x = sqr(x) + cc;
            const int s = x.sign();
            if (s != 1 && s != -1) break;
            CHECK(s == stationary_symbol(r.kneading, static_cast<std::uint64_t>(i)));
            ++decided;
        }
        CHECK(decided >= std::min(3 * n * n, 12));
    }
    CHECK_THROWS_AS(locate_feig_param({0, 1}, 1e-10), std::runtime_error);
    CHECK_THROWS_AS(locate_feig_param({1, 1}, 1e-10), std::invalid_argument);
}

TEST_CASE("period-3 stationary symbols match the orbit")
{
    const auto r = locate_feig_param({1, 0, 2}, 1e-12);
    const auto signs = orbit_signs(BF(r.param.center), 27);
    for (int i = 1; i <= 27; ++i) CHECK(signs[i - 1] == stationary_symbol(r.kneading, static_cast<std::uint64_t>(i)));
}
