#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "spectra/asymptotics.hpp"

namespace spectra {

// 17 significant digits: doubles round-trip exactly through this form.
std::string fmt17(double x);

void write_atoms_csv(std::ostream& os, const atomic_measure& mu);
atomic_measure read_atoms_csv(std::istream& is);

void write_spectrum_csv(std::ostream& os, const spectrum_result& sp);
void write_sigma_csv(std::ostream& os, const std::vector<sigma_profile>& profiles);
void write_c_samples_csv(std::ostream& os, const ladder_spec& spec, int g,
                         int grid_size);

nlohmann::json to_json(const renorm_report& rep);
nlohmann::json to_json(const convergence_report& rep);

// Writes via a temporary file and atomic rename, so failures leave no
// partial output behind.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace spectra
