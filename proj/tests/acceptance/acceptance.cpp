// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spectra/asymptotics.hpp"
#include "spectra/io.hpp"
#include "../oracle.hpp"
#include "../random_ladder.hpp"

using namespace spectra;

namespace {

int g_failures = 0;
bool g_current_ok = true;
std::chrono::steady_clock::time_point g_started;

void begin(const char*) {
    g_current_ok = true;
    g_started = std::chrono::steady_clock::now();
}

void check(bool ok, const std::string& detail) {
    if (!ok) {
        g_current_ok = false;
        std::printf("    violation: %s\n", detail.c_str());
    }
}

void finish(int id, const char* name, double time_limit_s = 0.0) {
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              g_started)
                    .count();
    if (time_limit_s > 0.0 && dt > time_limit_s) {
        g_current_ok = false;
        std::printf("    violation: runtime %.1fs exceeds %.0fs\n", dt, time_limit_s);
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", g_current_ok ? "PASS" : "FAIL", id,
                name, dt);
    if (!g_current_ok) ++g_failures;
}

ladder_spec cantor() { return even_ladder(2, rat(1, 3)); }
ladder_spec even3() { return even_ladder(3, rat(1, 5)); }

std::size_t ipow(int m, int g) {
    std::size_t n = 1;
    for (int i = 0; i < g; ++i) n *= static_cast<std::size_t>(m);
    return n;
}

// Reference oscillation amplitude of s_k for the classical Cantor ladder,
// from a pre-build dense-spectrum oracle run at generation 8 (grid 512);
// the k = 4 and k = 5 windows agree to all printed digits.
constexpr double kCantorAmplitudeRef = 0.3295541473829699;

void criterion1() {
    begin("exact spectral periodicity");
    for (const ladder_spec& spec : {cantor(), even3()})
        for (int g = 1; g <= 4; ++g) {
            renorm_report rep =
                verify_periodicity(spec, g, static_cast<int>(ipow(spec.m, g)) - 1,
                                   1e-9, 0);
            check(rep.pass, "m=" + std::to_string(spec.m) + " g=" + std::to_string(g) +
                                " max_error=" + fmt17(rep.max_error));
        }
    finish(1, "tau*lambda_{mn} = lambda_n for Cantor and even 3-step ladders", 10.0);
}

void criterion2() {
    begin("randomized periodicity and oscillation");
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        ladder_spec spec = test::random_ladder(rng);
        // Keep N = m^g at 32 or below: high eigenvectors localize, and past
        // N = 32 their genuine far-end entries can drop under the relative
        // floor that sign_changes ignores.
        int g = 1 + static_cast<int>(rng() % 3);
        while (ipow(spec.m, g) > 32) --g;
        std::size_t n = ipow(spec.m, g);

        renorm_report rep =
            verify_periodicity(spec, g, static_cast<int>(n) - 1, 1e-9, 0);
        check(rep.pass, "trial " + std::to_string(trial) + " m=" +
                            std::to_string(spec.m) + " g=" + std::to_string(g) +
                            " max_error=" + fmt17(rep.max_error));

        string_system sys = assemble(discretize(spec, g), 0.0, 0.0);
        spectrum_result sp = spectrum(sys, n - 1, 0);
        for (std::size_t idx = 0; idx < n; ++idx) {
            int changes = sign_changes(eigenvector(sys, sp.values[idx]));
            check(changes == static_cast<int>(idx),
                  "trial " + std::to_string(trial) + " eigenvector " +
                      std::to_string(idx) + " has " + std::to_string(changes) +
                      " sign changes");
        }
    }
    finish(2, "50 random common-product ladders: periodicity + oscillation", 60.0);
}

void criterion3() {
    begin("spectral quasiperiodicity");
    auto [g1, g2] = robin_gammas(cantor());
    check(std::fabs(g1 - 6.0) <= 1e-14 && std::fabs(g2 - 2.0) <= 1e-14,
          "theorem parameters for the Cantor ladder should be 6 and 2");
    for (int g = 2; g <= 4; ++g) {
        renorm_report rep =
            verify_quasiperiodicity(cantor(), g, static_cast<int>(ipow(2, g)) - 1,
                                    1e-9, 0);
        check(rep.pass, "g=" + std::to_string(g) + " max margin=" +
                            fmt17(rep.max_error));
    }
    finish(3, "tau*mu_{m(n+1)-1} <= lambda_n with gamma = 6 and 2", 10.0);
}

void criterion4() {
    begin("solver vs dense oracle");
    std::vector<string_system> systems;
    for (int g = 1; g <= 5; ++g) systems.push_back(assemble(discretize(cantor(), g), 0, 0));
    for (int g = 1; g <= 3; ++g) systems.push_back(assemble(discretize(even3(), g), 0, 0));
    auto [c1, c2] = robin_gammas(cantor());
    for (int g = 2; g <= 4; ++g)
        systems.push_back(assemble(discretize(cantor(), g), c1, c1));
    for (int g = 3; g <= 5; ++g)
        systems.push_back(assemble(discretize(cantor(), g), c2, c2));
    std::mt19937 lrng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        ladder_spec spec = test::random_ladder(lrng);
        int g = 1 + static_cast<int>(lrng() % 3);
        if (ipow(spec.m, g) <= 32)
            systems.push_back(assemble(discretize(spec, g), 0, 0));
    }

    std::mt19937 rng(7);
    int sys_id = 0;
    for (const string_system& sys : systems) {
        ++sys_id;
        if (sys.size() > 32) continue;
        auto oracle = test::oracle_eigenvalues(sys);
        spectrum_result sp = spectrum(sys, sys.size() - 1, 0);
        for (std::size_t n = 0; n < sys.size(); ++n) {
            double err = std::fabs(sp.values[n] - oracle[n]);
            double tol = 1e-10 * std::max(std::fabs(oracle[n]), std::fabs(sp.values[n])) +
                         1e-10;
            check(err <= tol, "system " + std::to_string(sys_id) + " index " +
                                  std::to_string(n) + " err=" + fmt17(err));
        }

        double top = gershgorin_bound(sys);
        std::uniform_real_distribution<double> u(std::log(top * 1e-6), std::log(top));
        for (int i = 0; i < 100; ++i) {
            double lambda = std::exp(u(rng));
            bool near_ev = false;
            for (double v : oracle)
                if (std::fabs(lambda - v) <= 1e-8 * std::max(std::fabs(v), 1.0))
                    near_ev = true;
            if (near_ev) {
                --i;
                continue;
            }
            check(sturm_count(sys, lambda) == test::oracle_count_below(oracle, lambda),
                  "system " + std::to_string(sys_id) + " exclusive count at lambda=" +
                      fmt17(lambda));
            check(counting(sys, lambda) == test::oracle_count_upto(oracle, lambda),
                  "system " + std::to_string(sys_id) + " inclusive count at lambda=" +
                      fmt17(lambda));
        }
    }
    finish(4, "bisection matches char-poly root bracketing on all N<=32 systems");
}

void criterion5() {
    begin("known constants");
    ladder_spec c = cantor();
    check(std::fabs(c.nu - std::log(6.0)) <= 1e-12, "nu != ln 6");
    check(std::fabs(c.D - std::log(2.0) / std::log(6.0)) <= 1e-12, "D != ln2/ln6");
    string_system sys = assemble(discretize(c, 1), 0.0, 0.0);
    spectrum_result sp = spectrum(sys, 1);
    check(std::fabs(sp.values[0]) <= 1e-12, "lambda_0 != 0");
    check(std::fabs(sp.values[1] - 6.0) <= 1e-12 * 6.0, "lambda_1 != 6");
    finish(5, "validate(Cantor) constants and the hand-derived 2x2 spectrum");
}

void criterion6() {
    begin("counting convention");
    auto [c1, c2] = robin_gammas(cantor());
    for (const ladder_spec& spec : {cantor(), even3()})
        for (int g = 1; g <= 3; ++g)
            for (double gamma : {0.0, c2, c1}) {
                string_system sys = assemble(discretize(spec, g), gamma, gamma);
                spectrum_result sp = spectrum(sys, sys.size() - 1, 0);
                for (std::size_t n = 0; n < sp.values.size(); ++n)
                    check(counting(sys, sp.values[n]) == static_cast<long long>(n) + 1,
                          "m=" + std::to_string(spec.m) + " g=" + std::to_string(g) +
                              " gamma=" + fmt17(gamma) + " n=" + std::to_string(n));
            }
    finish(6, "N(lambda_n) = n+1 on every g<=3 system");
}

void criterion7() {
    begin("boundary-condition counting stability");
    atomic_measure mu = discretize(cantor(), 3);
    auto [c1, c2] = robin_gammas(cantor());
    string_system neumann = assemble(mu, 0.0, 0.0);
    double top = gershgorin_bound(neumann) * (1.0 + 1e-9);
    std::vector<double> grid;
    for (int i = 1; i <= 100; ++i) grid.push_back(std::exp(std::log(top) * i / 100.0));
    for (double gamma : {c1, c2}) {
        int shift = bc_counting_shift(neumann, assemble(mu, gamma, gamma), grid);
        check(shift <= 2, "gamma=" + fmt17(gamma) + " shift=" + std::to_string(shift));
    }
    finish(7, "counting functions differ by at most 2 across boundary conditions");
}

void criterion8() {
    begin("sigma profile diagnostics");
    ladder_spec c = cantor();
    const int g = 10, k_max = 5, grid = 512;
    string_system sys = assemble(discretize(c, g), 0.0, 0.0);

    std::vector<sigma_profile> prof;
    for (int k = 0; k <= k_max; ++k)
        prof.push_back(sigma_profile_for(c, sys, k, grid, 0));

    // (a) monotone sigma_k
    for (const sigma_profile& p : prof)
        for (std::size_t j = 0; j + 1 < p.sigma.size(); ++j)
            check(p.sigma[j] <= p.sigma[j + 1],
                  "sigma_" + std::to_string(p.k) + " decreases at grid " +
                      std::to_string(j));

    // (b) window periodicity at every bracketed grid point
    for (int k = 0; k < k_max; ++k)
        for (std::size_t j = 0; j < prof[k].grid.size(); ++j) {
            double lambda = std::exp((k + 1) * c.nu + prof[k].grid[j]);
            if (periodic_window_index(sys, c.m, lambda))
                check(prof[k + 1].counts[j] == c.m * prof[k].counts[j],
                      "sigma_{k+1} != sigma_k at bracketed t, k=" + std::to_string(k) +
                          " j=" + std::to_string(j));
        }

    // (c) scaled L2 differences non-increasing beyond k = 1 (10% slack)
    convergence_report rep = make_convergence_report(c, g, k_max, grid, 0);
    for (int k = 1; k + 1 < k_max; ++k)
        check(rep.scaled_l2_diff[k + 1] <= rep.scaled_l2_diff[k] * 1.10,
              "scaled diff grows at k=" + std::to_string(k + 1) + ": " +
                  fmt17(rep.scaled_l2_diff[k + 1]) + " vs " +
                  fmt17(rep.scaled_l2_diff[k]));

    // (d) amplitude of s_k: positive, stable between k=4 and 5, and matching
    // the pre-build oracle reference
    double a4 = rep.amplitude[4], a5 = rep.amplitude[5];
    check(a4 > 0.0 && a5 > 0.0, "amplitude not positive");
    check(std::fabs(a5 / a4 - 1.0) < 0.20, "amplitude varies by >=20% between k=4,5");
    check(std::fabs(a4 / kCantorAmplitudeRef - 1.0) < 0.20,
          "k=4 amplitude " + fmt17(a4) + " far from reference");
    check(std::fabs(a5 / kCantorAmplitudeRef - 1.0) < 0.20,
          "k=5 amplitude " + fmt17(a5) + " far from reference");
    finish(8, "sigma_k monotone, window-periodic, contracting; s_k oscillates", 300.0);
}

void criterion9() {
    begin("log-distance summability trend");
    auto [c1, c2] = robin_gammas(cantor());
    (void)c2;
    auto sums = log_distance_partial_sums(cantor(), 6, c1, c1, 50, 0);
    std::vector<double> terms{sums[0]};
    for (std::size_t i = 1; i < sums.size(); ++i) terms.push_back(sums[i] - sums[i - 1]);
    for (std::size_t i = 0; i < terms.size(); ++i)
        check(terms[i] > 0.0, "term " + std::to_string(i + 1) + " not positive");
    double first = 0.0, last = 0.0;
    for (int i = 0; i < 5; ++i) first += terms[i];
    for (int i = 45; i < 50; ++i) last += terms[i];
    check(last < first, "last decile mean " + fmt17(last / 5) +
                            " not below first decile mean " + fmt17(first / 5));
    finish(9, "|ln mu_n - ln lambda_n| positive with a decaying tail");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
