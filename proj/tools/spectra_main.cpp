#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectra/io.hpp"

namespace {

using namespace spectra;

std::size_t capacity_from_env() {
    if (const char* env = std::getenv("SPECTRA_CAPACITY")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw error(errc::nonnumeric, "bad SPECTRA_CAPACITY value");
    }
    return kDefaultCapacity;
}

struct bc_options {
    std::string mode = "neumann";
    double gamma0 = 0.0, gamma1 = 0.0;

    std::pair<double, double> resolve(const ladder_spec& spec) const {
        if (mode == "neumann") return {0.0, 0.0};
        if (mode == "robin") return {gamma0, gamma1};
        auto [g1, g2] = robin_gammas(spec);
        if (mode == "auto-gamma1") return {g1, g1};
        if (mode == "auto-gamma2") return {g2, g2};
        throw error(errc::nonnumeric, "unknown bc mode '" + mode + "'");
    }
};

void add_bc_flags(CLI::App* cmd, bc_options& bc) {
    cmd->add_option("--bc", bc.mode, "neumann|robin|auto-gamma1|auto-gamma2")
        ->check(CLI::IsMember({"neumann", "robin", "auto-gamma1", "auto-gamma2"}));
    cmd->add_option("--gamma0", bc.gamma0, "left Robin parameter (with --bc robin)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--gamma1", bc.gamma1, "right Robin parameter (with --bc robin)")
        ->check(CLI::NonNegativeNumber);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        atomic_write(out_path, content);
}

std::pair<int, int> parse_k_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(text);
            return {k, k};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw error(errc::nonnumeric, "bad --k value '" + text + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Self-similar Cantor-type string spectra"};
    app.require_subcommand(1);

    std::string ladder_path, out_path, bc_k = "0";
    int gen = 1, grid = 512, max_index = 0, n_max = 0, threads = 0;
    double lambda = 0.0, tol = kRenormTol, eig_tol = kEigRelTol;
    bc_options bc;

    auto add_common = [&](CLI::App* cmd, bool needs_gen = true) {
        cmd->add_option("ladder", ladder_path, "ladder JSON file")->required();
        if (needs_gen)
            cmd->add_option("--gen", gen, "discretization generation")
                ->check(CLI::NonNegativeNumber);
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--threads", threads, "thread cap (0 = hardware)");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a ladder, print tau, nu, D");
    validate->add_option("ladder", ladder_path)->required();

    CLI::App* evalc = app.add_subcommand("eval-c", "sample the ladder function iterate");
    add_common(evalc);
    evalc->add_option("--grid", grid, "number of sample intervals");

    CLI::App* disc = app.add_subcommand("discretize", "emit generation-g atoms CSV");
    add_common(disc);

    CLI::App* spec_cmd = app.add_subcommand("spectrum", "emit eigenvalues CSV");
    add_common(spec_cmd);
    add_bc_flags(spec_cmd, bc);
    spec_cmd->add_option("--max-index", max_index, "largest eigenvalue index")->required();
    spec_cmd->add_option("--tol", eig_tol, "relative bisection tolerance");

    CLI::App* count_cmd = app.add_subcommand("count", "print N(lambda)");
    add_common(count_cmd);
    add_bc_flags(count_cmd, bc);
    count_cmd->add_option("--lambda", lambda, "counting threshold")->required();

    CLI::App* sigma_cmd = app.add_subcommand("sigma", "emit sigma_k profiles CSV");
    add_common(sigma_cmd);
    sigma_cmd->add_option("--k", bc_k, "window index or range a..b");
    sigma_cmd->add_option("--grid", grid, "samples per period");

    CLI::App* verify = app.add_subcommand("verify", "check a renormalization theorem");
    std::string theorem;
    verify->add_option("theorem", theorem, "periodicity|quasi")
        ->required()
        ->check(CLI::IsMember({"periodicity", "quasi"}));
    add_common(verify);
    verify->add_option("--n-max", n_max, "largest index checked")->required();
    verify->add_option("--tol", tol, "identity/inequality tolerance");

    CLI::App* compare = app.add_subcommand("compare-bc",
                                           "max counting shift vs the Neumann problem");
    add_common(compare);
    add_bc_flags(compare, bc);
    compare->add_option("--grid", grid, "number of log-spaced sample points");

    CLI::App* report = app.add_subcommand("report", "aggregated convergence diagnostics");
    add_common(report);
    report->add_option("--k", bc_k, "largest window index k_max");
    report->add_option("--grid", grid, "samples per period");

    CLI11_PARSE(app, argc, argv);
    const std::size_t capacity = capacity_from_env();

    if (validate->parsed()) {
        ladder_spec spec = load_ladder(ladder_path);
        std::cout << "m=" << spec.m << '\n';
        if (spec.exact)
            std::cout << "tau=" << rat_string(spec.tau) << " (" << fmt17(spec.tau_d())
                      << ")\n";
        else
            std::cout << "tau=" << fmt17(spec.tau_d()) << '\n';
        std::cout << "nu=" << fmt17(spec.nu) << '\n';
        char dbuf[32];
        std::snprintf(dbuf, sizeof(dbuf), "%.6f", spec.D);
        std::cout << "D=" << dbuf << " (" << fmt17(spec.D) << ")\n";
        return 0;
    }

    ladder_spec spec = load_ladder(ladder_path);
    std::ostringstream os;

    if (evalc->parsed()) {
        write_c_samples_csv(os, spec, gen, grid);
        emit(out_path, os.str());
    } else if (disc->parsed()) {
        write_atoms_csv(os, discretize(spec, gen, capacity));
        emit(out_path, os.str());
    } else if (spec_cmd->parsed()) {
        auto [g0, g1] = bc.resolve(spec);
        string_system sys = assemble(discretize(spec, gen, capacity), g0, g1);
        spectrum_result sp =
            spectrum(sys, static_cast<std::size_t>(max_index), threads, eig_tol);
        for (int idx : sp.cluster_warnings)
            std::cerr << "warning: eigenvalues " << idx << " and " << idx + 1
                      << " closer than the bisection tolerance\n";
        write_spectrum_csv(os, sp);
        emit(out_path, os.str());
    } else if (count_cmd->parsed()) {
        auto [g0, g1] = bc.resolve(spec);
        string_system sys = assemble(discretize(spec, gen, capacity), g0, g1);
        std::cout << counting(sys, lambda) << '\n';
    } else if (sigma_cmd->parsed()) {
        auto [k_lo, k_hi] = parse_k_range(bc_k);
        string_system sys = assemble(discretize(spec, gen, capacity), 0.0, 0.0);
        std::vector<sigma_profile> profiles;
        for (int k = k_lo; k <= k_hi; ++k)
            profiles.push_back(sigma_profile_for(spec, sys, k, grid, threads));
        write_sigma_csv(os, profiles);
        emit(out_path, os.str());
    } else if (verify->parsed()) {
        renorm_report rep =
            theorem == "periodicity"
                ? verify_periodicity(spec, gen, n_max, tol, threads, capacity)
                : verify_quasiperiodicity(spec, gen, n_max, tol, threads, capacity);
        emit(out_path, to_json(rep).dump(2) + "\n");
        if (!rep.pass) {
            std::cerr << rep.theorem << " check failed, max_error=" << rep.max_error
                      << '\n';
            return 2;
        }
    } else if (compare->parsed()) {
        auto [g0, g1] = bc.resolve(spec);
        atomic_measure mu = discretize(spec, gen, capacity);
        string_system neumann = assemble(mu, 0.0, 0.0);
        string_system other = assemble(mu, g0, g1);
        double top = gershgorin_bound(neumann) * (1.0 + 1e-9);
        std::vector<double> grid_pts;
        for (int i = 0; i < grid; ++i)
            grid_pts.push_back(std::exp(std::log(top) * (i + 1) / grid));
        int shift = bc_counting_shift(neumann, other, grid_pts);
        std::cout << "max_counting_shift=" << shift << '\n';
        if (shift > 2) {
            std::cerr << "counting functions differ by more than 2\n";
            return 2;
        }
    } else if (report->parsed()) {
        auto [k_lo, k_hi] = parse_k_range(bc_k);
        (void)k_lo;
        convergence_report rep =
            make_convergence_report(spec, gen, k_hi, grid, threads, capacity);
        emit(out_path, to_json(rep).dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const spectra::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
            case spectra::errc::noconverge:
            case spectra::errc::capacity:
                return 3;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
