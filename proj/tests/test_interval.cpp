#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hypdim/interval.hpp"

using namespace hypdim;
using BF = boost::multiprecision::cpp_bin_float_50;

namespace {

bool encloses(const Interval& r, const BF& x) { return BF(r.lo()) <= x && x <= BF(r.hi()); }

// Random finite doubles across several magnitudes, including awkward ones.
double random_double(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> ex(-60, 60), kind(0, 9);
    switch (kind(rng)) {
    case 0: return 0.0;
    case 1: return std::ldexp(1.0, ex(rng));
    case 2: return 1.0 / 3.0 * std::ldexp(1.0, ex(rng) / 4);
    default: return std::ldexp(mant(rng), ex(rng) / 3);
    }
}

Interval random_interval(std::mt19937_64& rng)
{
    double a = random_double(rng), b = random_double(rng);
    if (rng() % 4 == 0) b = a + std::ldexp(std::fabs(a), -40);
    if (a > b) std::swap(a, b);
    return {a, b};
}

double sample(const Interval& x, std::mt19937_64& rng)
{
    switch (rng() % 4) {
    case 0: return x.lo();
    case 1: return x.hi();
    default: {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        return std::clamp(x.lo() + u(rng) * (x.hi() - x.lo()), x.lo(), x.hi());
    }
    }
}

} // namespace

TEST_CASE("examples")
{
    CHECK(((Interval(1, 2) + Interval(3, 4)).contains(Interval(4, 6))));
    CHECK(((Interval(-1, 1) * Interval(-1, 1)).contains(Interval(-1, 1))));
    CHECK(((Interval(1, 2) / Interval(4, 4)).contains(Interval(0.25, 0.5))));
    CHECK(sqrt(Interval(4, 9)).contains(Interval(2, 3)));
    CHECK(sqrt(Interval(0, 0)) == Interval(0, 0));

    const Interval r2 = sqrt(Interval(2, 2));
    CHECK(encloses(r2, boost::multiprecision::sqrt(BF(2))));
    CHECK(r2.hi() <= rounding::up(r2.lo(), 2));

    CHECK(pow(Interval(1, 1), 0.37) == Interval(1, 1));
    CHECK(pow(Interval(1, 1), 5.0) == Interval(1, 1));
    CHECK(pow(Interval(0.25, 0.25), 0.5).contains(0.5));

    const Interval p = pow(Interval(0.3, 0.4), 1.337);
    CHECK(encloses(p, boost::multiprecision::pow(BF(0.3), BF(1.337))));
    CHECK(encloses(p, boost::multiprecision::pow(BF(0.4), BF(1.337))));
    CHECK(p.width() < 1e-12 + (0.4 - 0.3));
}

TEST_CASE("errors")
{
    CHECK_THROWS_WITH_AS(Interval(1, 2) / Interval(-1, 1), "divisor straddles zero", std::domain_error);
    CHECK_THROWS_AS(sqrt(Interval(-1, 1)), std::domain_error);
    CHECK_THROWS_AS(pow(Interval(0, 1), 2.0), std::domain_error);
    CHECK_THROWS_AS(pow(Interval(-2, -1), 2.0), std::domain_error);
    CHECK_THROWS_AS(Interval(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0, INFINITY), std::invalid_argument);
}

TEST_CASE("containment fuzz")
{
    std::mt19937_64 rng(20240517);
    int checked = 0;
    for (int n = 0; checked < 100000; ++n) {
        const Interval a = random_interval(rng), b = random_interval(rng);
        const double x = sample(a, rng), y = sample(b, rng);
        const BF X(x), Y(y);
        switch (n % 7) {
        case 0: REQUIRE(encloses(a + b, X + Y)); break;
        case 1: REQUIRE(encloses(a - b, X - Y)); break;
        case 2: REQUIRE(encloses(a * b, X * Y)); break;
        case 3:
            if (b.contains_zero()) continue;
            REQUIRE(encloses(a / b, X / Y));
            break;
        case 4: REQUIRE(encloses(sqr(a), X * X)); break;
        case 5: {
            const Interval aa(std::fabs(a.lo()) < std::fabs(a.hi()) ? std::fabs(a.lo()) : std::fabs(a.hi()),
                              std::max(std::fabs(a.lo()), std::fabs(a.hi())));
            const double xx = sample(aa, rng);
            REQUIRE(encloses(sqrt(aa), boost::multiprecision::sqrt(BF(xx))));
            break;
        }
        case 6: {
            const Interval base(std::ldexp(1.0, -8) + std::fabs(a.lo()) * 0.01,
                                std::ldexp(1.0, -8) + std::fabs(a.lo()) * 0.01 + std::fabs(b.hi()) * 0.01);
            const double xx = sample(base, rng);
            std::uniform_real_distribution<double> tu(0.05, 3.0);
            const double t = tu(rng);
            REQUIRE(encloses(pow(base, t), boost::multiprecision::pow(BF(xx), BF(t))));
            break;
        }
        }
        ++checked;
    }
    CHECK(checked == 100000);
}

TEST_CASE("inclusion isotonicity")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 20000; ++n) {
        const Interval a = random_interval(rng), b = random_interval(rng);
        const Interval A(a.lo() - u(rng), a.hi() + u(rng)), B(b.lo() - u(rng), b.hi() + u(rng));
        REQUIRE((A + B).contains(a + b));
        REQUIRE((A - B).contains(a - b));
        REQUIRE((A * B).contains(a * b));
        REQUIRE(sqr(A).contains(sqr(a)));
        if (!B.contains_zero()) REQUIRE((A / B).contains(a / b));
        const Interval pa(0.1 + std::fabs(a.lo()), 0.1 + std::fabs(a.lo()) + b.width());
        const Interval PA(pa.lo() * 0.5, pa.hi() * 2);
        REQUIRE(pow(PA, 1.3).contains(pow(pa, 1.3)));
        REQUIRE(sqrt(PA).contains(sqrt(pa)));
    }
}

TEST_CASE("pow consistency")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.01, 100.0);
    for (int n = 0; n < 10000; ++n) {
        double x = u(rng), y = u(rng);
        if (x > y) std::swap(x, y);
        const Interval a(x, y);
        REQUIRE(pow(a, 1.0).contains(a));
        const Interval h = pow(a, 0.5), s = sqrt(a);
        REQUIRE(h.lo() >= rounding::down(s.lo(), 2));
        REQUIRE(h.hi() <= rounding::up(s.hi(), 2));
        REQUIRE(h.contains(s));
        // Monotone in the base.
        REQUIRE(pow(Interval(x), 1.7).hi() <= rounding::up(pow(Interval(y), 1.7).hi(), 8));
    }
}

TEST_CASE("directed rounding primitives")
{
    const double third = 1.0 / 3.0;
    CHECK(rounding::mul_down(third, 3.0) < 1.0);
    CHECK(rounding::mul_up(third, 3.0) >= 1.0);
    CHECK(rounding::add_down(1.0, 1e-30) == 1.0);
    CHECK(rounding::add_up(1.0, 1e-30) > 1.0);
    CHECK(rounding::div_down(1.0, 3.0) <= third);
    CHECK(rounding::div_up(1.0, 3.0) > third);
    CHECK(rounding::sqrt_down(4.0) == 2.0);
    CHECK(rounding::sqrt_up(4.0) == 2.0);
    CHECK(rounding::hypot_down(3.0, 4.0) <= 5.0);
    CHECK(rounding::hypot_up(3.0, 4.0) >= 5.0);
}
