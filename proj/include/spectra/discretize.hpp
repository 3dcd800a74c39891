#pragma once

#include <cstddef>
#include <vector>

#include "spectra/ladder.hpp"

namespace spectra {

inline constexpr std::size_t kDefaultCapacity = std::size_t(1) << 24;

struct cylinder {
    rat lo, hi, mass;
};

// The m^g generation-g cylinder intervals in left-to-right order with their
// Hutchinson masses.  Throws CAPACITY when m^g exceeds the limit.
std::vector<cylinder> cylinders(const ladder_spec& spec, int g,
                                std::size_t capacity = kDefaultCapacity);

// Atomic approximation of the self-similar measure: one atom per cylinder at
// the cylinder midpoint.  Midpoints commute with the affine maps S_k, so the
// family is exactly self-similar across generations.
struct atomic_measure {
    std::vector<rat> position, mass;
    std::vector<double> position_d, mass_d;  // float mirrors of the exact data
    int generation = 0;

    std::size_t size() const { return position.size(); }
};

atomic_measure discretize(const ladder_spec& spec, int g,
                          std::size_t capacity = kDefaultCapacity);

// Rebuilds the float mirrors (used after constructing a measure by hand).
void refresh_doubles(atomic_measure& mu);

}  // namespace spectra
