#include "spectra/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectra/parallel.hpp"

namespace spectra {

long long counting(const string_system& sys, double lambda) {
    if (lambda < 0.0) throw error(errc::domain, "lambda must be >= 0");
    double up = std::nextafter(lambda * (1.0 + 1e-12),
                               std::numeric_limits<double>::infinity());
    return sturm_count(sys, up);
}

namespace {

void check_margin(int k, int g) {
    if (k < 0) throw error(errc::domain, "negative window index");
    if (k + kTrustMargin > g)
        throw error(errc::margin, "window k = " + std::to_string(k) +
                                      " needs generation >= " +
                                      std::to_string(k + kTrustMargin));
}

}  // namespace

sigma_profile sigma_profile_for(const ladder_spec& spec, const string_system& sys,
                                int k, int grid_size, int threads) {
    check_margin(k, sys.generation);
    if (grid_size < 1) throw error(errc::domain, "grid_size must be >= 1");

    sigma_profile prof;
    prof.k = k;
    prof.nu = spec.nu;
    prof.generation = sys.generation;
    const double mk = std::pow(static_cast<double>(spec.m), -k);

    prof.grid.resize(grid_size + 1);
    prof.counts.resize(grid_size + 1);
    prof.sigma.resize(grid_size + 1);
    prof.s.resize(grid_size + 1);
    parallel_for(static_cast<std::size_t>(grid_size) + 1, threads, [&](std::size_t j) {
        double t = spec.nu * static_cast<double>(j) / grid_size;
        prof.grid[j] = t;
        prof.counts[j] = counting(sys, std::exp(k * spec.nu + t));
        prof.sigma[j] = mk * static_cast<double>(prof.counts[j]);
        prof.s[j] = std::exp(-spec.D * t) * prof.sigma[j];
    });
    prof.disc_count = counting(sys, std::exp((k + 1) * spec.nu)) -
                      counting(sys, std::exp(k * spec.nu));
    return prof;
}

sigma_profile sigma_profile_for(const ladder_spec& spec, int g, int k, int grid_size,
                                int threads, std::size_t capacity) {
    check_margin(k, g);
    string_system sys = assemble(discretize(spec, g, capacity), 0.0, 0.0);
    return sigma_profile_for(spec, sys, k, grid_size, threads);
}

std::optional<long long> periodic_window_index(const string_system& sys, int m,
                                               double lambda) {
    // Strictly inside a gap of the spectrum when the count is flat across a
    // small relative neighborhood of lambda.
    long long lo = sturm_count(sys, lambda * (1.0 - 1e-10));
    long long hi = sturm_count(sys, lambda * (1.0 + 1e-10));
    if (lo != hi) return std::nullopt;
    if (lo < m || lo % m != 0) return std::nullopt;
    return lo / m - 1;
}

namespace {

// L2 norm over [0, nu] of the difference of two grid-sampled step functions,
// by the trapezoid rule.
double l2_grid_diff(const sigma_profile& a, const sigma_profile& b) {
    double acc = 0.0;
    const std::size_t n = a.grid.size();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        double da = a.sigma[j] - b.sigma[j];
        double db = a.sigma[j + 1] - b.sigma[j + 1];
        acc += 0.5 * (da * da + db * db) * (a.grid[j + 1] - a.grid[j]);
    }
    return std::sqrt(acc);
}

}  // namespace

convergence_report make_convergence_report(const ladder_spec& spec, int g, int k_max,
                                           int grid_size, int threads,
                                           std::size_t capacity) {
    check_margin(k_max, g);
    convergence_report rep;
    rep.g = g;
    rep.k_max = k_max;
    rep.grid_size = grid_size;
    rep.nu = spec.nu;
    rep.D = spec.D;

    string_system sys = assemble(discretize(spec, g, capacity), 0.0, 0.0);
    for (int k = 0; k <= k_max; ++k)
        rep.profiles.push_back(sigma_profile_for(spec, sys, k, grid_size, threads));

    for (int k = 0; k < k_max; ++k) {
        const sigma_profile& cur = rep.profiles[k];
        const sigma_profile& next = rep.profiles[k + 1];
        double l2 = l2_grid_diff(next, cur);
        rep.l2_diff.push_back(l2);
        std::size_t ndiff = 0;
        for (std::size_t j = 0; j < cur.counts.size(); ++j)
            if (next.counts[j] != spec.m * cur.counts[j]) ++ndiff;
        rep.diff_measure.push_back(spec.nu * static_cast<double>(ndiff) /
                                   static_cast<double>(cur.counts.size()));
        rep.scaled_l2_diff.push_back(std::pow(static_cast<double>(spec.m), k) * l2);
        rep.singularity_product.push_back(
            static_cast<double>(cur.disc_count + 2) *
            l2_grid_diff(rep.profiles[k_max], cur));
    }
    for (int k = 0; k <= k_max; ++k) {
        auto [lo, hi] = std::minmax_element(rep.profiles[k].s.begin(),
                                            rep.profiles[k].s.end());
        rep.amplitude.push_back(*hi - *lo);
    }
    return rep;
}

disc_bound disc_count_bound(const ladder_spec& spec, int g, int k,
                            std::size_t capacity) {
    check_margin(k, g);
    string_system sys = assemble(discretize(spec, g, capacity), 0.0, 0.0);
    double lambda1 = eigenvalue(sys, 1);
    if (!(lambda1 > 0.0)) throw error(errc::domain, "lambda_1 must be positive");

    disc_bound out;
    double c0 = (1.0 - std::log(lambda1)) / spec.nu;
    int c = static_cast<int>(std::floor(c0)) + 1;
    out.clamped = c < 1;
    out.c = std::max(c, 1);
    double bound = std::pow(static_cast<double>(spec.m), k + out.c) + 1.0;
    if (bound > 9.0e18) throw error(errc::capacity, "discontinuity bound overflows");
    out.bound = static_cast<long long>(bound);
    out.count = counting(sys, std::exp((k + 1) * spec.nu)) -
                counting(sys, std::exp(k * spec.nu));
    return out;
}

}  // namespace spectra
