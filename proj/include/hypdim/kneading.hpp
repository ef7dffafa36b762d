#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypdim/cdisc.hpp"

namespace hypdim {

// Kneading symbols are -1, 0 or +1: the sign of p_c^i(0).
using KneadingSymbol = int;

// s[j] is the rank of p^j(0) among 0, p(0), ..., p^{n-1}(0).
using UnimodalPermutation = std::vector<int>;

// Stationary kneading sequence of period n: prefix holds k_1..k_n.
struct StationaryKneading {
    std::vector<KneadingSymbol> prefix;
    int n() const { return static_cast<int>(prefix.size()); }
};

// A sign could not be decided. `index` is the orbit index (0 for failures
// that are not tied to an index).
class KneadingError : public std::runtime_error {
public:
    KneadingError(const std::string& what, std::uint64_t index) : std::runtime_error(what), index(index) {}
    std::uint64_t index;
};

// k_1..k_n, valid for every parameter in c. Precision is doubled from 53 bits
// until all signs are decided; throws KneadingError("refine parameter/precision")
// when even 4096 bits do not suffice.
std::vector<KneadingSymbol> kneading_symbols(const ParamEnclosure& c, int n);

// k_i for i >= 1 from k_{n^l m} = (-k_n)^l k_m and k_{s+n} = k_s (n does not divide s).
KneadingSymbol stationary_symbol(const StationaryKneading& sk, std::uint64_t i);

// Real c in (-2, 0] with p_c^n(0) = 0 and exact period n, each enclosed to
// width <= 1e-12, in increasing order.
std::vector<ParamEnclosure> superattracting_roots(int n);

// Orbit order at a superattracting parameter. Throws KneadingError("refine")
// when orbit points cannot be separated.
UnimodalPermutation orbit_permutation(const ParamEnclosure& a, int n);

// k_n of the Feigenbaum parameter attached to the period-n root a:
// -sign(d/dx p_x^n(0)) at x = a.
KneadingSymbol feig_last_symbol(const ParamEnclosure& a, int n);

// The stationary kneading of the Feigenbaum parameter attached to root a.
StationaryKneading feig_kneading(const ParamEnclosure& a, int n);

// Position of the point b relative to the parameter with kneading `target`:
// -1 if b < c, +1 if b > c, 0 if b is superattracting and ties with c on
// every symbol up to its period. `symbols_used` and `precision` report the
// final budget. Throws KneadingError when the budget cap (2^20 symbols) is
// reached or signs stay undecidable.
int compare_parameter(double b, const StationaryKneading& target, int* symbols_used = nullptr,
                      long* precision = nullptr);

struct FeigResult {
    ParamEnclosure param;
    ParamEnclosure root; // matching superattracting parameter
    StationaryKneading kneading;
    int steps = 0;
    int perturbations = 0;
    int max_symbols = 0;
    long max_precision = 0;
};

// Halving from [-2, 0] until the enclosure has width <= tol.
FeigResult locate_feig_param(const UnimodalPermutation& perm, double tol);

} // namespace hypdim
