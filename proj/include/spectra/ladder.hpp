#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

// A generalized Cantor ladder: m affine contractions S_k(t) = a_k + (b_k-a_k) t
// of [0,1] onto disjoint steps [a_k, b_k], with positive weights rho_k summing
// to one and the products rho_k (b_k - a_k) sharing a common value tau.
struct ladder_spec {
    int m = 0;
    std::vector<rat> a, b, rho;  // step endpoints and weights, exact
    bool exact = true;           // all inputs were supplied exactly
    rat tau;                     // common value rho_k (b_k - a_k)
    double nu = 0.0;             // period, -ln tau
    double D = 0.0;              // spectral exponent, ln m / nu

    rat step_length(int k) const { return b[k] - a[k]; }
    rat gap_length(int k) const { return a[k + 1] - b[k]; }  // k = 0 .. m-2
    double tau_d() const { return to_double(tau); }

    // S_k(t), exact.
    rat map(int k, const rat& t) const { return a[k] + (b[k] - a[k]) * t; }
};

// Validates a raw ladder description and derives tau, nu, D.
// Exact inputs are checked exactly; float inputs with 1e-12 tolerances.
ladder_spec validate_ladder(const std::vector<std::pair<scalar, scalar>>& intervals,
                            const std::vector<scalar>& weights);

// m equal steps of the given length, equal gaps, weights all 1/m.
ladder_spec even_ladder(int m, const rat& step_length);

// Continuous piecewise-linear function on [0,1], stored as exact breakpoints.
struct piecewise_linear {
    std::vector<rat> x, y;

    rat at(const rat& t) const;
    double operator()(double t) const { return to_double(at(rat_from_double(t))); }
};

// The identity function t -> t.
piecewise_linear pl_identity();

// One application of the ladder operator: on step k the rescaled copy of f
// weighted by rho_k plus the cumulative offset, constant on the gaps.
piecewise_linear apply_S(const piecewise_linear& f, const ladder_spec& spec);

// g-th iterate of apply_S starting from the identity.
piecewise_linear iterate_S(const ladder_spec& spec, int g);

// Value of the g-th iterate at t; within (max rho)^g / (1 - max rho) * ||id - S(id)||
// of the ladder function itself.  Throws DOMAIN for t outside [0,1].
double evaluate_C(const ladder_spec& spec, double t, int g);

// JSON ladder file: {"intervals": [[a,b],...], "weights": [...]}, entries
// numbers or "p/q" strings.
ladder_spec ladder_from_json_text(const std::string& text);
ladder_spec load_ladder(const std::string& path);

}  // namespace spectra
