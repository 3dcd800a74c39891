#include <cmath>

#include <doctest.h>

#include "spectra/asymptotics.hpp"

using namespace spectra;

namespace {

ladder_spec cantor() { return even_ladder(2, rat(1, 3)); }

string_system cantor_sys(int g) { return assemble(discretize(cantor(), g), 0.0, 0.0); }

}  // namespace

TEST_CASE("inclusive counting convention") {
    string_system g1 = cantor_sys(1);
    CHECK(counting(g1, 6.0) == 2);
    CHECK(counting(g1, 0.0) == 1);
    CHECK(counting(g1, 5.999999) == 1);
    CHECK_THROWS_WITH_AS((void)counting(g1, -1.0), doctest::Contains("DOMAIN"), error);

    // N(lambda_n) = n + 1 at every converged eigenvalue, g <= 4.
    for (int g = 1; g <= 4; ++g) {
        string_system sys = cantor_sys(g);
        spectrum_result sp = spectrum(sys, sys.size() - 1);
        for (std::size_t n = 0; n < sp.values.size(); ++n)
            CHECK(counting(sys, sp.values[n]) == static_cast<long long>(n) + 1);
    }
}

TEST_CASE("sigma profile basics") {
    CHECK_THROWS_WITH_AS((void)sigma_profile_for(cantor(), 3, 2),
                         doctest::Contains("MARGIN"), error);

    ladder_spec c = cantor();
    sigma_profile p0 = sigma_profile_for(c, 6, 0, 128);
    string_system sys = cantor_sys(6);
    double lambda1 = eigenvalue(sys, 1);
    for (std::size_t j = 0; j < p0.grid.size(); ++j) {
        if (std::exp(p0.grid[j]) < lambda1 * 0.999) CHECK(p0.sigma[j] == 1.0);
        if (j > 0) CHECK(p0.sigma[j] >= p0.sigma[j - 1]);
        CHECK(p0.s[j] ==
              doctest::Approx(std::exp(-c.D * p0.grid[j]) * p0.sigma[j]).epsilon(1e-15));
    }

    // m * sigma_{k+1}(0) = sigma_k(nu): the same count read two ways.
    sigma_profile p1 = sigma_profile_for(c, 6, 1, 128);
    CHECK(2.0 * p1.sigma.front() == p0.sigma.back());
    CHECK(p1.counts.front() == p0.counts.back());

    CHECK(p0.disc_count == p0.counts.back() - p0.counts.front());
}

TEST_CASE("window periodicity at bracketed grid points") {
    ladder_spec c = cantor();
    string_system sys = cantor_sys(8);
    sigma_profile p2 = sigma_profile_for(c, sys, 2, 256, 0);
    sigma_profile p3 = sigma_profile_for(c, sys, 3, 256, 0);
    int checked = 0;
    for (std::size_t j = 0; j < p2.grid.size(); ++j) {
        double lambda = std::exp(3 * c.nu + p2.grid[j]);
        if (periodic_window_index(sys, c.m, lambda)) {
            CHECK(p3.counts[j] == 2 * p2.counts[j]);
            ++checked;
        }
    }
    CHECK(checked > 50);  // most of the period is covered by the gap windows
}

TEST_CASE("convergence report trends") {
    convergence_report rep = make_convergence_report(cantor(), 8, 4, 256);
    REQUIRE(rep.profiles.size() == 5);
    REQUIRE(rep.l2_diff.size() == 4);

    for (int k = 1; k + 1 <= 3; ++k)
        CHECK(rep.scaled_l2_diff[k + 1] <= rep.scaled_l2_diff[k] * 1.10);
    for (double a : rep.amplitude) CHECK(a > 0.0);
    for (std::size_t k = 0; k + 1 < rep.singularity_product.size(); ++k)
        CHECK(rep.singularity_product[k + 1] <= rep.singularity_product[k]);

    convergence_report empty = make_convergence_report(cantor(), 4, 0, 64);
    CHECK(empty.l2_diff.empty());
    CHECK(empty.amplitude.size() == 1);
}

TEST_CASE("quadrature stability under grid refinement") {
    convergence_report coarse = make_convergence_report(cantor(), 8, 3, 128);
    convergence_report fine = make_convergence_report(cantor(), 8, 3, 256);
    for (std::size_t k = 0; k < coarse.l2_diff.size(); ++k) {
        // Piecewise-constant integrand: refining the grid moves the L2 norm
        // by at most the jump resolution of the coarser grid.
        long long max_jump = 0;
        const auto& counts = coarse.profiles[k + 1].counts;
        for (std::size_t j = 0; j + 1 < counts.size(); ++j)
            max_jump = std::max(max_jump, counts[j + 1] - counts[j]);
        double jump = static_cast<double>(max_jump) / std::pow(2.0, k + 1);
        double bound = 2.0 * coarse.nu / 128.0 * std::max(jump, 1.0);
        CHECK(std::fabs(fine.l2_diff[k] - coarse.l2_diff[k]) <= bound);
    }
}

TEST_CASE("discontinuity count bound") {
    disc_bound b2 = disc_count_bound(cantor(), 8, 2);
    CHECK(b2.count <= b2.bound);
    CHECK(b2.c >= 1);

    string_system sys = cantor_sys(8);
    disc_bound b0 = disc_count_bound(cantor(), 8, 0);
    CHECK(b0.count == counting(sys, std::exp(cantor().nu)) - counting(sys, 1.0));

    CHECK_THROWS_WITH_AS((void)disc_count_bound(cantor(), 2, 2),
                         doctest::Contains("MARGIN"), error);
}
