#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

enum class errc {
    nonnumeric,
    weight_sum,
    geometry,
    tau_mismatch,
    domain,
    capacity,
    index,
    noconverge,
    zerovec,
    mismatch,
    margin,
};

inline const char* to_string(errc c) {
    switch (c) {
        case errc::nonnumeric:   return "NONNUMERIC";
        case errc::weight_sum:   return "WEIGHT_SUM";
        case errc::geometry:     return "GEOMETRY";
        case errc::tau_mismatch: return "TAU_MISMATCH";
        case errc::domain:       return "DOMAIN";
        case errc::capacity:     return "CAPACITY";
        case errc::index:        return "INDEX";
        case errc::noconverge:   return "NOCONVERGE";
        case errc::zerovec:      return "ZEROVEC";
        case errc::mismatch:     return "MISMATCH";
        case errc::margin:       return "MARGIN";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace spectra
