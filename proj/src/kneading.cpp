#include "hypdim/kneading.hpp"

#include <algorithm>
#include <cmath>

#include "hypdim/mp_interval.hpp"

namespace hypdim {

namespace {

constexpr long kStartPrec = 53;
constexpr long kMaxPrec = 4096;
constexpr int kMaxSymbols = 1 << 20;
constexpr int kUndecided = 2;

// p_c^n(0) and its c-derivative.
struct OrbitValue {
    MpInterval x;
    MpInterval d;
};

OrbitValue orbit_value(double c_lo, double c_hi, int n, long prec)
{
    const MpInterval c(c_lo, c_hi, prec);
    const MpInterval one(1.0, prec);
    MpInterval x(prec);
    MpInterval d(prec);
    for (int i = 0; i < n; ++i) {
        d = ldexp(x * d, 1) + one;
        x = sqr(x) + c;
    }
    return {std::move(x), std::move(d)};
}

// Sign of p_x^n(0) at a point, raising the precision as needed.
int point_sign(double x, int n)
{
    for (long prec = kStartPrec;; prec *= 2) {
        const int s = orbit_value(x, x, n, prec).x.sign();
        if (s != kUndecided) return s;
        if (prec >= kMaxPrec) throw KneadingError("sign of p^n(0) undecidable at a point", static_cast<std::uint64_t>(n));
    }
}

ParamEnclosure enclosure_of(double lo, double hi)
{
    const double m = lo + 0.5 * (hi - lo);
    return {m, std::max({rounding::sub_up(hi, m), rounding::sub_up(m, lo), 0.0})};
}

} // namespace

std::vector<KneadingSymbol> kneading_symbols(const ParamEnclosure& c, int n)
{
    if (n < 1) throw std::invalid_argument("kneading_symbols needs n >= 1");
    const Interval ci = c.interval();
    for (long prec = kStartPrec;; prec *= 2) {
        const MpInterval cc(ci.lo(), ci.hi(), prec);
        MpInterval x(prec);
        std::vector<KneadingSymbol> out;
        int failed = 0;
        for (int i = 1; i <= n; ++i) {
            x = sqr(x) + cc;
            const int s = x.sign();
            if (s == kUndecided) {
                failed = i;
                break;
            }
            out.push_back(s);
        }
        if (!failed) return out;
        if (prec >= kMaxPrec)
            throw KneadingError("refine parameter/precision: symbol " + std::to_string(failed) + " undecidable",
                                static_cast<std::uint64_t>(failed));
    }
}

KneadingSymbol stationary_symbol(const StationaryKneading& sk, std::uint64_t i)
{
    const auto n = static_cast<std::uint64_t>(sk.n());
    if (n < 2) throw std::invalid_argument("stationary kneading needs period >= 2");
    if (i < 1) throw std::invalid_argument("kneading symbols are indexed from 1");
    int l = 0;
    while (i % n == 0) {
        i /= n;
        ++l;
    }
    const KneadingSymbol km = sk.prefix[(i % n) - 1];
    const KneadingSymbol flip = -sk.prefix[n - 1];
    return (l % 2 == 0 || flip == 1) ? km : -km;
}

std::vector<ParamEnclosure> superattracting_roots(int n)
{
    if (n < 1 || n > 12) throw std::invalid_argument("superattracting_roots supports 1 <= n <= 12");
    if (n == 1) return {ParamEnclosure(0.0, 0.0)};

    // Superattracting parameters of period >= 2 lie left of -3/4, where the
    // attracting fixed point is lost; scanning [-2, -1/2] finds them all.
    constexpr double kScanLo = -2.0;
    constexpr double kScanHi = -0.5;
    constexpr double kRootWidth = 1e-12;
    constexpr long kScanPrec = 128;

    std::vector<ParamEnclosure> roots;

    auto isolate = [&](double a, double b, int sa) {
        while (b - a > kRootWidth) {
            const double m = a + 0.5 * (b - a);
            if (m <= a || m >= b) break;
            const int s = point_sign(m, n);
            if (s == 0) {
                roots.emplace_back(m, 0.0);
                return;
            }
            (s == sa ? a : b) = m;
        }
        roots.push_back(enclosure_of(a, b));
    };

    // Half-open [a, b): a root exactly at b is left to the next piece.
    auto scan = [&](auto&& self, double a, double b) -> void {
        const auto v = orbit_value(a, b, n, kScanPrec);
        if (!v.x.contains_zero()) return;
        const int ds = v.d.sign();
        if (ds == 1 || ds == -1) {
            const int sa = point_sign(a, n);
            if (sa == 0) {
                roots.emplace_back(a, 0.0);
                return;
            }
            const int sb = point_sign(b, n);
            if (sb != 0 && sb != sa) isolate(a, b, sa);
            return;
        }
        const double m = a + 0.5 * (b - a);
        if (b - a < 1e-15 || m <= a || m >= b)
            throw KneadingError("root isolation failed near " + std::to_string(a), static_cast<std::uint64_t>(n));
        self(self, a, m);
        self(self, m, b);
    };
    scan(scan, kScanLo, kScanHi);

    // Drop roots of lower period d | n.
    std::vector<ParamEnclosure> exact;
    for (const auto& r : roots) {
        const Interval ci = r.interval();
        bool lower = false;
        for (int d = 1; d < n && !lower; ++d)
            if (n % d == 0) lower = orbit_value(ci.lo(), ci.hi(), d, kScanPrec).x.contains_zero();
        if (!lower) exact.push_back(r);
    }
    return exact;
}

UnimodalPermutation orbit_permutation(const ParamEnclosure& a, int n)
{
    if (n < 1) throw std::invalid_argument("orbit_permutation needs n >= 1");
    const Interval ci = a.interval();
    constexpr long prec = 256;
    const MpInterval c(ci.lo(), ci.hi(), prec);
    std::vector<MpInterval> xs;
    xs.emplace_back(prec);
    for (int j = 1; j < n; ++j) xs.push_back(sqr(xs.back()) + c);

    UnimodalPermutation s(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            if (xs[j].overlaps(xs[k])) throw KneadingError("refine: orbit points overlap", static_cast<std::uint64_t>(j));
            if (xs[k].less(xs[j])) ++s[j];
        }
    return s;
}

KneadingSymbol feig_last_symbol(const ParamEnclosure& a, int n)
{
    if (n < 1) throw std::invalid_argument("feig_last_symbol needs n >= 1");
    const Interval ci = a.interval();
    for (long prec = kStartPrec;; prec *= 2) {
        const int s = orbit_value(ci.lo(), ci.hi(), n, prec).d.sign();
        if (s == 1 || s == -1) return -s;
        if (prec >= kMaxPrec) throw KneadingError("refine: derivative sign undecidable", static_cast<std::uint64_t>(n));
    }
}

StationaryKneading feig_kneading(const ParamEnclosure& a, int n)
{
    if (n < 2) throw std::invalid_argument("feig_kneading needs n >= 2");
    StationaryKneading sk;
    sk.prefix = kneading_symbols(a, n - 1);
    for (int s : sk.prefix)
        if (s == 0) throw KneadingError("refine: orbit hits 0 before the period", 0);
    sk.prefix.push_back(feig_last_symbol(a, n));
    return sk;
}

namespace {

enum class Scan { Less, Greater, Tie, Undecided, Exhausted };

// At the first index i where the symbols differ, p_b^{i-1} maps a
// neighbourhood of b onto one of x_i(b) with orientation theta = prod_{j<i}
// k_j(b) (the sign of (p_b^{i-1})'(b)); b lies below c exactly when x_i(b)
// sits on the side opposite to theta.
Scan scan_against(double b, const StationaryKneading& target, int budget, long prec, std::uint64_t& where)
{
    const MpInterval c(b, prec);
    MpInterval x(prec);
    int theta = 1;
    for (int i = 1; i <= budget; ++i) {
        x = sqr(x) + c;
        where = static_cast<std::uint64_t>(i);
        const int s = x.sign();
        if (s == kUndecided) return Scan::Undecided;
        if (s == 0) return Scan::Tie;
        if (s != stationary_symbol(target, static_cast<std::uint64_t>(i))) return s != theta ? Scan::Less : Scan::Greater;
        theta *= s;
    }
    return Scan::Exhausted;
}

} // namespace

int compare_parameter(double b, const StationaryKneading& target, int* symbols_used, long* precision)
{
    int budget = 4 * target.n();
    long prec = kStartPrec;
    for (;;) {
        std::uint64_t where = 0;
        const Scan r = scan_against(b, target, budget, prec, where);
        if (symbols_used) *symbols_used = budget;
        if (precision) *precision = prec;
        switch (r) {
        case Scan::Less:
            return -1;
        case Scan::Greater:
            return 1;
        case Scan::Tie:
            return 0;
        case Scan::Undecided:
            if (prec >= kMaxPrec) throw KneadingError("increase precision: comparison stalled", where);
            prec *= 2;
            break;
        case Scan::Exhausted:
            if (budget >= kMaxSymbols) throw KneadingError("symbol budget exhausted", where);
            budget = std::min(2 * budget, kMaxSymbols);
            break;
        }
    }
}

FeigResult locate_feig_param(const UnimodalPermutation& perm, double tol)
{
    const int n = static_cast<int>(perm.size());
    if (n < 2) throw std::invalid_argument("permutation must have length >= 2");
    {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i) throw std::invalid_argument("not a permutation of 0..n-1");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    FeigResult res;
    int matches = 0;
    for (const auto& root : superattracting_roots(n)) {
        if (orbit_permutation(root, n) != perm) continue;
        ++matches;
        res.root = root;
    }
    if (matches == 0) throw std::runtime_error("no superattracting parameter of period " + std::to_string(n) + " realizes the permutation");
    if (matches > 1) throw std::runtime_error("permutation is realized by several superattracting parameters");
    res.kneading = feig_kneading(res.root, n);

    double lo = -2.0;
    double hi = 0.0;
    while (hi - lo > tol) {
        double b = lo + 0.5 * (hi - lo);
        int symbols = 0;
        long prec = 0;
        int cmp = compare_parameter(b, res.kneading, &symbols, &prec);
        // b is superattracting and indistinguishable from c by kneading alone:
        // nudge it inside the current segment and compare again.
        for (int tries = 0; cmp == 0; ++tries) {
            if (tries == 8) throw KneadingError("increase precision: midpoint stalls at " + std::to_string(b), 0);
            ++res.perturbations;
            b += std::ldexp(hi - lo, -10 - tries);
            cmp = compare_parameter(b, res.kneading, &symbols, &prec);
        }
        res.max_symbols = std::max(res.max_symbols, symbols);
        res.max_precision = std::max(res.max_precision, prec);
        (cmp < 0 ? lo : hi) = b;
        ++res.steps;
    }
    res.param = enclosure_of(lo, hi);
    return res;
}

} // namespace hypdim
