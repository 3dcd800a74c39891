#include "spectra/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectra {

namespace {

void keep_worst(renorm_report& rep) {
    std::sort(rep.offenders.begin(), rep.offenders.end(),
              [](const renorm_offender& a, const renorm_offender& b) {
                  return a.error > b.error;
              });
    if (rep.offenders.size() > 10) rep.offenders.resize(10);
}

std::size_t pow_check(int m, int g) {
    std::size_t n = 1;
    for (int i = 0; i < g; ++i) n *= static_cast<std::size_t>(m);
    return n;
}

}  // namespace

std::pair<double, double> robin_gammas(const ladder_spec& spec) {
    double g1 = 0.0;
    for (int k = 0; k + 1 < spec.m; ++k)
        g1 = std::max(g1, 2.0 / to_double(spec.gap_length(k)));
    double edge = std::min(to_double(spec.step_length(0)),
                           to_double(spec.step_length(spec.m - 1)));
    return {g1, g1 * edge};
}

renorm_report verify_periodicity(const ladder_spec& spec, int g, int n_max,
                                 double tol, int threads, std::size_t capacity) {
    if (n_max < 0 || static_cast<std::size_t>(n_max) >= pow_check(spec.m, g))
        throw error(errc::index, "n_max must be below m^g");

    string_system coarse = assemble(discretize(spec, g, capacity), 0.0, 0.0);
    string_system fine = assemble(discretize(spec, g + 1, capacity), 0.0, 0.0);
    spectrum_result lam_g = spectrum(coarse, static_cast<std::size_t>(n_max), threads);
    spectrum_result lam_g1 =
        spectrum(fine, static_cast<std::size_t>(spec.m) * n_max, threads);

    renorm_report rep;
    rep.theorem = "periodicity";
    rep.generation = g;
    rep.n_max = n_max;
    rep.tolerance = tol;
    const double tau = spec.tau_d();

    // n = 0: both ground eigenvalues are 0 under Neumann conditions.
    double e0 = std::max(std::fabs(tau * lam_g1.values[0]), std::fabs(lam_g.values[0]));
    bool zero_ok = e0 <= 1e-12;
    if (!zero_ok) rep.offenders.push_back({0, e0});

    for (int n = 1; n <= n_max; ++n) {
        double lhs = tau * lam_g1.values[static_cast<std::size_t>(spec.m) * n];
        double rhs = lam_g.values[n];
        double err = std::fabs(lhs / rhs - 1.0);
        rep.max_error = std::max(rep.max_error, err);
        if (err > tol) rep.offenders.push_back({n, err});
    }
    rep.pass = zero_ok && rep.max_error <= tol;
    keep_worst(rep);
    return rep;
}

renorm_report verify_quasiperiodicity(const ladder_spec& spec, int g, int n_max,
                                      double tol, int threads, std::size_t capacity) {
    if (n_max < 0 || static_cast<std::size_t>(n_max) >= pow_check(spec.m, g))
        throw error(errc::index, "n_max must be below m^g");
    std::size_t mu_top = static_cast<std::size_t>(spec.m) * (n_max + 1) - 1;
    if (mu_top >= pow_check(spec.m, g + 1))
        throw error(errc::index, "m(n_max+1)-1 must be below m^{g+1}");

    auto [g1, g2] = robin_gammas(spec);
    string_system coarse = assemble(discretize(spec, g, capacity), g1, g1);
    string_system fine = assemble(discretize(spec, g + 1, capacity), g2, g2);
    spectrum_result lam = spectrum(coarse, static_cast<std::size_t>(n_max), threads);
    spectrum_result mu = spectrum(fine, mu_top, threads);

    renorm_report rep;
    rep.theorem = "quasiperiodicity";
    rep.generation = g;
    rep.n_max = n_max;
    rep.tolerance = tol;
    const double tau = spec.tau_d();
    rep.max_error = -std::numeric_limits<double>::infinity();

    for (int n = 0; n <= n_max; ++n) {
        std::size_t j = static_cast<std::size_t>(spec.m) * (n + 1) - 1;
        double margin = tau * mu.values[j] / lam.values[n] - 1.0;
        rep.max_error = std::max(rep.max_error, margin);
        if (margin > tol) rep.offenders.push_back({n, margin});
    }
    rep.pass = rep.max_error <= tol;
    keep_worst(rep);
    return rep;
}

int bc_counting_shift(const string_system& a, const string_system& b,
                      const std::vector<double>& lambda_grid) {
    if (a.position != b.position || a.mass != b.mass)
        throw error(errc::mismatch, "systems must share the same atoms");
    int worst = 0;
    for (double lam : lambda_grid)
        worst = std::max(worst, std::abs(sturm_count(a, lam) - sturm_count(b, lam)));
    return worst;
}

std::vector<double> log_distance_partial_sums(const ladder_spec& spec, int g,
                                              double gamma0, double gamma1,
                                              std::size_t K, int threads,
                                              std::size_t capacity) {
    if (K >= pow_check(spec.m, g))
        throw error(errc::index, "K must be below m^g");
    if (K == 0) return {};
    atomic_measure mu = discretize(spec, g, capacity);
    string_system neumann = assemble(mu, 0.0, 0.0);
    string_system robin = assemble(mu, gamma0, gamma1);
    spectrum_result lam = spectrum(neumann, K, threads);
    spectrum_result rob = spectrum(robin, K, threads);

    std::vector<double> sums;
    sums.reserve(K);
    double acc = 0.0;
    for (std::size_t n = 1; n <= K; ++n) {
        acc += std::fabs(std::log(rob.values[n]) - std::log(lam.values[n]));
        sums.push_back(acc);
    }
    return sums;
}

}  // namespace spectra
