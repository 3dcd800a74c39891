#include "spectra/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "spectra/parallel.hpp"

namespace spectra {

string_system assemble(const atomic_measure& mu, double gamma0, double gamma1) {
    const std::size_t n = mu.size();
    if (n < 1) throw error(errc::domain, "measure has no atoms");
    if (gamma0 < 0.0 || gamma1 < 0.0)
        throw error(errc::domain, "Robin parameters must be >= 0");

    string_system sys;
    sys.position = mu.position_d;
    sys.mass = mu.mass_d;
    sys.gamma0 = gamma0;
    sys.gamma1 = gamma1;
    sys.generation = mu.generation;
    sys.diag.assign(n, 0.0);
    sys.off.assign(n > 0 ? n - 1 : 0, 0.0);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        double l = sys.position[i + 1] - sys.position[i];
        if (!(l > 0.0)) throw error(errc::domain, "positions not ascending");
        double k = 1.0 / l;
        sys.off[i] = -k;
        sys.diag[i] += k;
        sys.diag[i + 1] += k;
    }
    // Robin ends: minimizing the form over the linear extension to the
    // boundary gives gamma/(1 + gamma * distance-to-boundary).
    if (gamma0 > 0.0) sys.diag.front() += gamma0 / (1.0 + gamma0 * sys.position.front());
    if (gamma1 > 0.0)
        sys.diag.back() += gamma1 / (1.0 + gamma1 * (1.0 - sys.position.back()));
    return sys;
}

double gershgorin_bound(const string_system& sys) {
    const std::size_t n = sys.size();
    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::fabs(sys.diag[i]);
        if (i > 0) row += std::fabs(sys.off[i - 1]);
        if (i + 1 < n) row += std::fabs(sys.off[i]);
        bound = std::max(bound, row / sys.mass[i]);
    }
    return bound;
}

int sturm_count(const string_system& sys, double lambda) {
    const std::size_t n = sys.size();
    int count = 0;
    double prev = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double shifted = sys.diag[i] - lambda * sys.mass[i];
        double d = shifted;
        if (i > 0) d -= sys.off[i - 1] * sys.off[i - 1] / prev;
        double scale = std::fabs(shifted);
        if (i > 0) scale += std::fabs(sys.off[i - 1]);
        if (i + 1 < n) scale += std::fabs(sys.off[i]);
        double eps = std::max(1e-14 * scale, 1e-300);
        if (std::fabs(d) < eps) d = -eps;
        if (d < 0.0) ++count;
        prev = d;
    }
    return count;
}

double eigenvalue(const string_system& sys, std::size_t n, double rel_tol) {
    const std::size_t size = sys.size();
    if (n >= size)
        throw error(errc::index, "eigenvalue index " + std::to_string(n) +
                                     " out of range for N = " + std::to_string(size));
    if (size == 1 && sys.gamma0 == 0.0 && sys.gamma1 == 0.0) return 0.0;

    double u = gershgorin_bound(sys);
    double hi = u * (1.0 + 1e-9) + 1e-300;
    while (sturm_count(sys, hi) < static_cast<int>(n) + 1) hi *= 2.0;
    double lo = -u * 1e-8 - 1e-300;

    // lambda_n = inf { lambda : count(lambda) >= n+1 }.
    for (int iter = 0; iter < 2200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (sturm_count(sys, mid) >= static_cast<int>(n) + 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= rel_tol * std::max(std::fabs(lo), std::fabs(hi))) break;
    }
    // The stiffness form is positive semidefinite, so a negative midpoint is
    // bracket noise from the padded lower endpoint.
    return std::max(0.5 * (lo + hi), 0.0);
}

spectrum_result spectrum(const string_system& sys, std::size_t n_max, int threads,
                         double rel_tol) {
    if (n_max >= sys.size())
        throw error(errc::index, "n_max " + std::to_string(n_max) +
                                     " out of range for N = " + std::to_string(sys.size()));
    spectrum_result out;
    out.values.assign(n_max + 1, 0.0);
    out.gamma0 = sys.gamma0;
    out.gamma1 = sys.gamma1;
    out.generation = sys.generation;
    out.rel_tol = rel_tol;
    parallel_for(n_max + 1, threads,
                 [&](std::size_t i) { out.values[i] = eigenvalue(sys, i, rel_tol); });
    for (std::size_t i = 0; i + 1 < out.values.size(); ++i) {
        double gap = out.values[i + 1] - out.values[i];
        double tol = 2.0 * rel_tol * std::max(std::fabs(out.values[i]),
                                              std::fabs(out.values[i + 1]));
        if (gap <= tol) out.cluster_warnings.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

// Tridiagonal LU with partial pivoting (one extra superdiagonal of fill-in).
struct tridiag_lu {
    std::vector<double> d, e, f;  // U diagonal and two superdiagonals
    std::vector<double> l;        // multipliers
    std::vector<bool> swapped;

    explicit tridiag_lu(const string_system& sys, double lambda) {
        const std::size_t n = sys.size();
        d.resize(n);
        e.assign(n, 0.0);
        f.assign(n, 0.0);
        l.assign(n, 0.0);
        swapped.assign(n, false);
        std::vector<double> sub(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = sys.diag[i] - lambda * sys.mass[i];
            if (i + 1 < n) {
                e[i] = sys.off[i];
                sub[i + 1] = sys.off[i];
            }
        }
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            scale = std::max(scale, std::fabs(d[i]) + (i + 1 < n ? std::fabs(e[i]) : 0.0));
        const double tiny = std::max(scale, 1.0) * 1e-280;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::fabs(sub[i + 1]) > std::fabs(d[i])) {
                swapped[i] = true;
                std::swap(d[i], sub[i + 1]);
                std::swap(e[i], d[i + 1]);
                if (i + 2 < n) {
                    f[i] = e[i + 1];
                    e[i + 1] = 0.0;
                }
            }
            if (d[i] == 0.0) d[i] = tiny;
            double m = sub[i + 1] / d[i];
            l[i] = m;
            d[i + 1] -= m * e[i];
            if (i + 2 < n) e[i + 1] -= m * f[i];
        }
        if (d[n - 1] == 0.0) d[n - 1] = tiny;
    }

    void solve(std::vector<double>& x) const {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(x[i], x[i + 1]);
            x[i + 1] -= l[i] * x[i];
        }
        for (std::size_t i = n; i-- > 0;) {
            double v = x[i];
            if (i + 1 < n) v -= e[i] * x[i + 1];
            if (i + 2 < n) v -= f[i] * x[i + 2];
            x[i] = v / d[i];
        }
    }
};

}  // namespace

std::vector<double> eigenvector(const string_system& sys, double lambda) {
    const std::size_t n = sys.size();
    if (n == 1) return {1.0};

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::fabs(sys.diag[i]) + std::fabs(lambda) * sys.mass[i];
        if (i > 0) row += std::fabs(sys.off[i - 1]);
        if (i + 1 < n) row += std::fabs(sys.off[i]);
        scale = std::max(scale, row);
    }
    // The shift error is about 1e-12 * scale, so this residual level is
    // reachable and keeps contamination from neighboring modes small enough
    // for a reliable sign-change count.
    const double res_tol = 1e-11 * scale;

    // A slight shift offset keeps the factorization usable when lambda hits an
    // eigenvalue exactly (the Neumann zero mode in particular).
    tridiag_lu lu(sys, lambda + 1e-12 * scale);
    // Fixed pseudo-random start so no eigenvector is accidentally orthogonal
    // to it; deterministic across runs and thread counts.
    std::vector<double> x(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < n; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        x[i] = 0.5 + static_cast<double>(state % 1000003u) / 1000003.0;
    }

    for (int iter = 0; iter < 50; ++iter) {
        lu.solve(x);
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw error(errc::noconverge, "inverse iteration broke down");
        for (double& v : x) v /= norm;

        // Residual ||(K - lambda M) x||_2.
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = (sys.diag[i] - lambda * sys.mass[i]) * x[i];
            if (i > 0) r += sys.off[i - 1] * x[i - 1];
            if (i + 1 < n) r += sys.off[i] * x[i + 1];
            res += r * r;
        }
        if (std::sqrt(res) <= res_tol) {
            double peak = 0.0;
            for (double v : x) peak = std::max(peak, std::fabs(v));
            for (std::size_t i = 0; i < n; ++i) {
                if (std::fabs(x[i]) > 1e-10 * peak) {
                    if (x[i] < 0.0)
                        for (double& v : x) v = -v;
                    break;
                }
            }
            return x;
        }
    }
    throw error(errc::noconverge, "inverse iteration did not converge");
}

int sign_changes(std::span<const double> u) {
    double peak = 0.0;
    for (double v : u) peak = std::max(peak, std::fabs(v));
    const double thresh = 1e-10 * peak;
    int changes = 0, prev = 0;
    bool any = false;
    for (double v : u) {
        if (std::fabs(v) <= thresh) continue;
        any = true;
        int s = v > 0.0 ? 1 : -1;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    if (!any) throw error(errc::zerovec, "all entries below threshold");
    return changes;
}

}  // namespace spectra
