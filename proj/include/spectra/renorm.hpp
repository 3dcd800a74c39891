#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectra/stieltjes.hpp"

namespace spectra {

struct renorm_offender {
    int index;
    double error;  // relative identity error or inequality margin
};

struct renorm_report {
    std::string theorem;  // "periodicity" | "quasiperiodicity"
    int generation = 0;   // comparison is generation g vs g+1
    int n_max = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<renorm_offender> offenders;  // worst indices, up to 10
};

inline constexpr double kRenormTol = 1e-9;

// Robin parameters prescribed by the quasiperiodicity theorem:
// gamma1 = max_k 2/|gap_k|, gamma2 = gamma1 * min(|I_1|, |I_m|).
std::pair<double, double> robin_gammas(const ladder_spec& spec);

// Checks tau * lambda^{(g+1)}_{m n} = lambda^{(g)}_n for 0 <= n <= n_max on
// Neumann spectra (n = 0 compared absolutely, both values must vanish).
renorm_report verify_periodicity(const ladder_spec& spec, int g, int n_max,
                                 double tol = kRenormTol, int threads = 1,
                                 std::size_t capacity = kDefaultCapacity);

// Checks tau * mu_{m(n+1)-1} <= lambda_n where lambda comes from the gamma1
// problem at generation g and mu from the gamma2 problem at generation g+1.
renorm_report verify_quasiperiodicity(const ladder_spec& spec, int g, int n_max,
                                      double tol = kRenormTol, int threads = 1,
                                      std::size_t capacity = kDefaultCapacity);

// Max absolute difference of Sturm counts between two systems over the grid;
// rank-two form perturbation bounds it by 2.  MISMATCH if the atoms differ.
int bc_counting_shift(const string_system& a, const string_system& b,
                      const std::vector<double>& lambda_grid);

// Partial sums S_K = sum_{n=1..K} |ln mu_n - ln lambda_n| between the Neumann
// spectrum and the (gamma0, gamma1) Robin spectrum at generation g.
std::vector<double> log_distance_partial_sums(const ladder_spec& spec, int g,
                                              double gamma0, double gamma1,
                                              std::size_t K, int threads = 1,
                                              std::size_t capacity = kDefaultCapacity);

}  // namespace spectra
