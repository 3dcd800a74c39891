#pragma once

#include <optional>
#include <vector>

#include "spectra/renorm.hpp"

namespace spectra {

// Generations of headroom required between the window index k and the
// discretization generation g, so the counted indices stay well inside the
// faithful part of the finite spectrum.
inline constexpr int kTrustMargin = 2;

// Inclusive counting function N(lambda) = #{ n : lambda_n <= lambda },
// right-continuous (evaluated just above lambda).  N(lambda_n) = n + 1.
long long counting(const string_system& sys, double lambda);

// One period window of the renormalized counting function:
// sigma_k(t) = m^{-k} N(e^{k nu + t}) sampled on a uniform grid over [0, nu].
struct sigma_profile {
    int k = 0;
    double nu = 0.0;
    std::vector<double> grid;       // t samples, 0 .. nu inclusive
    std::vector<long long> counts;  // N(e^{k nu + t})
    std::vector<double> sigma;      // m^{-k} * counts
    std::vector<double> s;          // e^{-D t} * sigma
    long long disc_count = 0;       // jumps of N in (e^{k nu}, e^{(k+1) nu}]
    int generation = 0;
    int trust_margin = kTrustMargin;
};

sigma_profile sigma_profile_for(const ladder_spec& spec, int g, int k,
                                int grid_size = 512, int threads = 1,
                                std::size_t capacity = kDefaultCapacity);

// Same, reusing an assembled generation-g Neumann system.
sigma_profile sigma_profile_for(const ladder_spec& spec, const string_system& sys,
                                int k, int grid_size, int threads);

// Whether lambda lies strictly inside a spectral gap
// (lambda_{m(n+1)-1}, lambda_{m(n+1)}) for some n >= 0; returns that n.
// At such points sigma_{k+1} and sigma_k provably coincide.
std::optional<long long> periodic_window_index(const string_system& sys, int m,
                                               double lambda);

struct convergence_report {
    int g = 0, k_max = 0, grid_size = 0;
    double nu = 0.0, D = 0.0;
    std::vector<sigma_profile> profiles;    // k = 0 .. k_max
    std::vector<double> l2_diff;            // ||sigma_{k+1} - sigma_k||_L2[0,nu]
    std::vector<double> diff_measure;       // grid measure of {sigma_{k+1} != sigma_k}
    std::vector<double> scaled_l2_diff;     // m^k * l2_diff[k]
    std::vector<double> singularity_product;  // (disc_count_k + 2) ||sigma_{k_max} - sigma_k||
    std::vector<double> amplitude;          // max - min of s_k over the grid
};

convergence_report make_convergence_report(const ladder_spec& spec, int g, int k_max,
                                           int grid_size = 512, int threads = 1,
                                           std::size_t capacity = kDefaultCapacity);

struct disc_bound {
    long long count = 0;  // jumps of N in (e^{k nu}, e^{(k+1) nu}]
    long long bound = 0;  // m^{k+c} + 1
    int c = 0;            // smallest admissible integer, clamped to >= 1
    bool clamped = false;
};

disc_bound disc_count_bound(const ladder_spec& spec, int g, int k,
                            std::size_t capacity = kDefaultCapacity);

}  // namespace spectra
