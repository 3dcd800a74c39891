#include "spectra/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace spectra {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_atoms_csv(std::ostream& os, const atomic_measure& mu) {
    os << "x,mass\n";
    for (std::size_t i = 0; i < mu.size(); ++i)
        os << fmt17(mu.position_d[i]) << ',' << fmt17(mu.mass_d[i]) << '\n';
}

atomic_measure read_atoms_csv(std::istream& is) {
    atomic_measure mu;
    mu.generation = -1;  // unknown provenance
    std::string line;
    if (!std::getline(is, line) || line.rfind("x,mass", 0) != 0)
        throw error(errc::nonnumeric, "atoms CSV must start with 'x,mass' header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw error(errc::nonnumeric, "bad atoms CSV row: " + line);
        double x = 0.0, m = 0.0;
        try {
            x = std::stod(line.substr(0, comma));
            m = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw error(errc::nonnumeric, "bad atoms CSV row: " + line);
        }
        mu.position.push_back(rat_from_double(x));
        mu.mass.push_back(rat_from_double(m));
    }
    refresh_doubles(mu);
    return mu;
}

void write_spectrum_csv(std::ostream& os, const spectrum_result& sp) {
    os << "index,lambda\n";
    for (std::size_t i = 0; i < sp.values.size(); ++i)
        os << i << ',' << fmt17(sp.values[i]) << '\n';
}

void write_sigma_csv(std::ostream& os, const std::vector<sigma_profile>& profiles) {
    os << "k,t,sigma,s\n";
    for (const sigma_profile& p : profiles)
        for (std::size_t j = 0; j < p.grid.size(); ++j)
            os << p.k << ',' << fmt17(p.grid[j]) << ',' << fmt17(p.sigma[j]) << ','
               << fmt17(p.s[j]) << '\n';
}

void write_c_samples_csv(std::ostream& os, const ladder_spec& spec, int g,
                         int grid_size) {
    piecewise_linear f = iterate_S(spec, g);
    os << "t,C\n";
    for (int j = 0; j <= grid_size; ++j) {
        rat t = rat(j, grid_size);
        os << fmt17(to_double(t)) << ',' << fmt17(to_double(f.at(t))) << '\n';
    }
}

nlohmann::json to_json(const renorm_report& rep) {
    nlohmann::json offenders = nlohmann::json::array();
    for (const renorm_offender& o : rep.offenders)
        offenders.push_back({{"index", o.index}, {"error", o.error}});
    return {{"theorem", rep.theorem}, {"g", rep.generation},
            {"n_max", rep.n_max},     {"max_error", rep.max_error},
            {"tolerance", rep.tolerance}, {"pass", rep.pass},
            {"offenders", offenders}};
}

nlohmann::json to_json(const convergence_report& rep) {
    nlohmann::json j{{"g", rep.g},
                     {"k_max", rep.k_max},
                     {"grid_size", rep.grid_size},
                     {"nu", rep.nu},
                     {"D", rep.D},
                     {"l2_diff", rep.l2_diff},
                     {"diff_measure", rep.diff_measure},
                     {"scaled_l2_diff", rep.scaled_l2_diff},
                     {"singularity_product", rep.singularity_product},
                     {"amplitude", rep.amplitude}};
    nlohmann::json discs = nlohmann::json::array();
    for (const sigma_profile& p : rep.profiles) discs.push_back(p.disc_count);
    j["disc_counts"] = discs;
    return j;
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw error(errc::nonnumeric, "cannot write " + tmp.string());
        os << content;
        if (!os.good()) {
            os.close();
            fs::remove(tmp);
            throw error(errc::nonnumeric, "write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

}  // namespace spectra
