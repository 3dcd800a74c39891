#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "spectra/errors.hpp"

namespace spectra {

// Exact rational scalar used for all ladder geometry.  Doubles convert
// exactly (every finite double is a rational), so a single exact code path
// serves both rational and float inputs; only the validation tolerances
// differ between the two modes.
using rat = boost::multiprecision::cpp_rational;

// A parsed input value.  `exact` records whether the user supplied it in an
// exact form ("p/q" string, decimal string, or integer) as opposed to a
// floating-point literal.
struct scalar {
    rat value;
    bool exact = true;
};

inline double to_double(const rat& r) { return r.template convert_to<double>(); }

inline rat rat_from_double(double x) { return rat(x); }

// Parses "p/q", "p", or a plain decimal string ("0.25") into an exact rational.
// Throws NONNUMERIC on anything else.
scalar parse_scalar(const std::string& text);

// Short display form: "p/q" (or "p" for integers).
std::string rat_string(const rat& r);

}  // namespace spectra
