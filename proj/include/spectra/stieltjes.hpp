#pragma once

#include <span>
#include <vector>

#include "spectra/discretize.hpp"

namespace spectra {

// Finite Stieltjes string: the restriction of the quadratic form
//   int y'^2 + gamma0 y(0)^2 + gamma1 y(1)^2  =  lambda int y^2 rho(dx)
// to piecewise-linear functions with kinks only at the atoms.  This yields a
// symmetric tridiagonal stiffness matrix against a diagonal mass matrix.
struct string_system {
    std::vector<double> position;  // atom positions, ascending in (0,1)
    std::vector<double> mass;      // atom masses
    double gamma0 = 0.0, gamma1 = 0.0;
    std::vector<double> diag;      // stiffness diagonal, size N
    std::vector<double> off;       // stiffness off-diagonal (-1/l_i), size N-1
    int generation = -1;

    std::size_t size() const { return diag.size(); }
};

struct spectrum_result {
    std::vector<double> values;  // ascending eigenvalues, indices 0..n_max
    double gamma0 = 0.0, gamma1 = 0.0;
    int generation = -1;
    double rel_tol = 0.0;
    // Indices n where lambda_{n+1} - lambda_n fell below the combined
    // bisection tolerance (pencil eigenvalues should all be simple).
    std::vector<int> cluster_warnings;
};

string_system assemble(const atomic_measure& mu, double gamma0, double gamma1);

// Gershgorin bound on the mass-normalized matrix: every pencil eigenvalue
// lies below it.
double gershgorin_bound(const string_system& sys);

// Number of pencil eigenvalues strictly below lambda: negative pivots of the
// LDL^T factorization of (K - lambda M), with a relative pivot safeguard.
// A tied eigenvalue exactly at lambda may count as below (one-sided).
int sturm_count(const string_system& sys, double lambda);

inline constexpr double kEigRelTol = 1e-13;

// n-th pencil eigenvalue by bisection on sturm_count.
double eigenvalue(const string_system& sys, std::size_t n, double rel_tol = kEigRelTol);

// Eigenvalues 0..n_max.  Deterministic for any thread count: every index runs
// the same bisection schedule from the same initial bracket.
spectrum_result spectrum(const string_system& sys, std::size_t n_max,
                         int threads = 1, double rel_tol = kEigRelTol);

// Unit-norm eigenvector at a converged eigenvalue, by inverse iteration.
// Sign convention: first significant entry positive.
std::vector<double> eigenvector(const string_system& sys, double lambda);

// Strict sign alternations, ignoring entries below 1e-10 * max|u|.
int sign_changes(std::span<const double> u);

}  // namespace spectra
