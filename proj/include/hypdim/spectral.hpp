#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypdim/interval.hpp"
#include "hypdim/mcmullen.hpp"

namespace hypdim {

// out = A v for a non-negative matrix A.
using MatVec = std::function<void(std::span<const double>, std::span<double>)>;
// Outward-rounded enclosure of A v.
using IntervalMatVec = std::function<void(std::span<const double>, std::span<Interval>)>;

struct SpectralEnclosure {
    double lo = 0.0;
    double hi = 0.0;
    int iterations = 0;
};

struct CollatzStop {
    int max_iters = 10000;
    double width_tol = 1e-12; // relative to hi
    // When set, also stop as soon as the enclosure excludes this value.
    bool use_threshold = false;
    double threshold = 1.0;
};

// Power iteration with the Collatz-Wielandt ratio bounds. `v` holds the
// positive start vector on entry and the last iterate (sup-norm 1) on exit.
// The reported lo/hi are running extrema, hence monotone. Not rigorous:
// products are computed in round-to-nearest. Throws std::domain_error on a
// non-positive iterate component.
SpectralEnclosure collatz_enclose(const MatVec& apply, std::vector<double>& v, const CollatzStop& stop = {});

// Rigorous Collatz-Wielandt bounds from a single outward-rounded product with a
// positive test vector v: min_i lo((Av)_i)/v_i <= rho(A) <= max_i hi((Av)_i)/v_i.
double certify_lower(const IntervalMatVec& apply, std::span<const double> v);
double certify_upper(const IntervalMatVec& apply, std::span<const double> v);

class BracketError : public std::runtime_error {
public:
    BracketError(double t_lo, double rho_lo, double t_hi, double rho_hi);
    double t_lo, rho_lo, t_hi, rho_hi;
};

struct BisectOptions {
    double eps = 1e-10;
    double t_lo = 0.1;
    double t_hi = 2.0;
    CollatzStop stop{};
    int threads = 1;
};

struct BisectResult {
    double delta_star = 0.0; // left end of the final interval
    double width = 0.0;      // b - a at exit
    int steps = 0;
    std::vector<double> vector; // iterate last used at delta_star
};

// Bisection for the root of t -> rho(lo(M)^t) - 1. The left end only moves
// to points where the estimate is above 1, so delta_star is the candidate for
// certification.
BisectResult bisect_delta(const McMullenMatrix& m, const BisectOptions& opt = {});

struct BoundResult {
    double delta_star = 0.0;
    double epsilon_achieved = 0.0;
    bool certified = false;
    double certified_lower = 0.0;       // rigorous lower bound on rho(lo(M(delta_star)))
    SpectralEnclosure rho_at_delta{};   // non-rigorous estimate
    std::string test_vector;            // provenance of the test vector
};

// Certify rho(lo(M(delta_star))) > 1. `hint` is an optional warm start for
// the test-vector iteration.
BoundResult validate(const McMullenMatrix& m, double delta_star, const std::vector<double>* hint = nullptr,
                     const BisectOptions& opt = {});

// Rigorous bounds on the spectral radius of the lower / upper endpoint matrix
// of M(t), each tested with a converged iterate.
double certified_rho_lower(const McMullenMatrix& m, double t, const BisectOptions& opt = {});
double certified_rho_upper(const McMullenMatrix& m, double t, const BisectOptions& opt = {});

} // namespace hypdim
