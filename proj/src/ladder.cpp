#include "spectra/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace spectra {

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

rat parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_integer_text(head) || tail.empty() || !is_integer_text(tail))
        throw error(errc::nonnumeric, "bad decimal '" + s + "'");
    rat denom = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) denom *= 10;
    rat frac = rat(boost::multiprecision::cpp_int(tail)) / denom;
    rat whole{boost::multiprecision::cpp_int(head)};
    bool neg = head[0] == '-';
    return neg ? rat(whole - frac) : rat(whole + frac);
}

}  // namespace

scalar parse_scalar(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw error(errc::nonnumeric, "empty value");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (!is_integer_text(num) || !is_integer_text(den))
                throw error(errc::nonnumeric, "bad rational '" + text + "'");
            rat r{boost::multiprecision::cpp_int(num),
                  boost::multiprecision::cpp_int(den)};
            return {r, true};
        }
        if (is_integer_text(s)) return {rat(boost::multiprecision::cpp_int(s)), true};
        if (s.find('.') != std::string::npos) return {parse_decimal(s), true};
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        throw error(errc::nonnumeric, "unparseable value '" + text + "'");
    }
    throw error(errc::nonnumeric, "unparseable value '" + text + "'");
}

std::string rat_string(const rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

ladder_spec validate_ladder(const std::vector<std::pair<scalar, scalar>>& intervals,
                            const std::vector<scalar>& weights) {
    const std::size_t m = intervals.size();
    if (m < 2) throw error(errc::geometry, "need at least 2 steps");
    if (weights.size() != m)
        throw error(errc::geometry, "interval/weight count mismatch");

    ladder_spec spec;
    spec.m = static_cast<int>(m);
    spec.exact = true;
    for (std::size_t k = 0; k < m; ++k) {
        spec.a.push_back(intervals[k].first.value);
        spec.b.push_back(intervals[k].second.value);
        spec.rho.push_back(weights[k].value);
        spec.exact = spec.exact && intervals[k].first.exact &&
                     intervals[k].second.exact && weights[k].exact;
    }

    const double abs_tol = 1e-12;

    // Weight positivity and normalization.
    rat sum = 0;
    for (const rat& w : spec.rho) {
        if (w <= 0) throw error(errc::weight_sum, "weights must be positive");
        sum += w;
    }
    if (spec.exact ? (sum != 1)
                   : (std::fabs(to_double(sum) - 1.0) > abs_tol))
        throw error(errc::weight_sum,
                    "weights sum to " + rat_string(sum) + ", expected 1");

    // Geometry: a_1 = 0, b_m = 1, ordered steps, nonempty gaps.
    auto near = [&](const rat& v, int target) {
        return spec.exact ? (v == target)
                          : (std::fabs(to_double(v) - target) <= abs_tol);
    };
    if (!near(spec.a.front(), 0)) throw error(errc::geometry, "a_1 must be 0");
    if (!near(spec.b.back(), 1)) throw error(errc::geometry, "b_m must be 1");
    for (std::size_t k = 0; k < m; ++k) {
        if (spec.a[k] >= spec.b[k])
            throw error(errc::geometry, "empty step " + std::to_string(k + 1));
        if (k + 1 < m && spec.b[k] >= spec.a[k + 1])
            throw error(errc::geometry, "empty gap after step " + std::to_string(k + 1));
    }

    // The common value tau of rho_k (b_k - a_k).
    spec.tau = spec.rho[0] * (spec.b[0] - spec.a[0]);
    for (std::size_t k = 1; k < m; ++k) {
        rat t = spec.rho[k] * (spec.b[k] - spec.a[k]);
        bool ok = spec.exact
                      ? (t == spec.tau)
                      : (std::fabs(to_double(t) / to_double(spec.tau) - 1.0) <= abs_tol);
        if (!ok)
            throw error(errc::tau_mismatch,
                        "rho_k(b_k-a_k) differs between steps 1 and " +
                            std::to_string(k + 1) + " (" + rat_string(spec.tau) +
                            " vs " + rat_string(t) + ")");
    }

    spec.nu = -std::log(spec.tau_d());
    spec.D = std::log(static_cast<double>(spec.m)) / spec.nu;
    if (!(spec.D > 0.0 && spec.D < 0.5))
        throw error(errc::geometry, "derived exponent D outside (0, 1/2)");
    return spec;
}

ladder_spec even_ladder(int m, const rat& step_length) {
    if (m < 2) throw error(errc::geometry, "need at least 2 steps");
    if (!(step_length > 0 && step_length * m < 1))
        throw error(errc::geometry, "step length must lie in (0, 1/m)");
    rat gap = (1 - step_length * m) / (m - 1);
    std::vector<std::pair<scalar, scalar>> intervals;
    std::vector<scalar> weights;
    rat left = 0;
    for (int k = 0; k < m; ++k) {
        intervals.push_back({{left, true}, {left + step_length, true}});
        weights.push_back({rat(1, m), true});
        left += step_length + gap;
    }
    return validate_ladder(intervals, weights);
}

rat piecewise_linear::at(const rat& t) const {
    if (t < x.front() || t > x.back())
        throw error(errc::domain, "argument outside [0,1]");
    auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t i = static_cast<std::size_t>(it - x.begin());
    if (i == x.size()) return y.back();
    if (i == 0) return y.front();
    --i;
    if (x[i + 1] == x[i]) return y[i];
    return y[i] + (y[i + 1] - y[i]) * (t - x[i]) / (x[i + 1] - x[i]);
}

piecewise_linear pl_identity() { return {{0, 1}, {0, 1}}; }

piecewise_linear apply_S(const piecewise_linear& f, const ladder_spec& spec) {
    piecewise_linear out;
    out.x.reserve(f.x.size() * spec.m);
    out.y.reserve(f.x.size() * spec.m);
    rat offset = 0;
    for (int k = 0; k < spec.m; ++k) {
        for (std::size_t i = 0; i < f.x.size(); ++i) {
            out.x.push_back(spec.map(k, f.x[i]));
            out.y.push_back(offset + spec.rho[k] * f.y[i]);
        }
        offset += spec.rho[k];
        // The value at b_k equals the value at a_{k+1}, so the gap is a
        // plateau of the interpolant without extra breakpoints.
    }
    return out;
}

piecewise_linear iterate_S(const ladder_spec& spec, int g) {
    piecewise_linear f = pl_identity();
    for (int i = 0; i < g; ++i) f = apply_S(f, spec);
    return f;
}

double evaluate_C(const ladder_spec& spec, double t, int g) {
    if (!(t >= 0.0 && t <= 1.0))
        throw error(errc::domain, "t outside [0,1]");
    if (g < 0) throw error(errc::domain, "negative iteration count");
    piecewise_linear f = iterate_S(spec, g);
    return to_double(f.at(rat_from_double(t)));
}

namespace {

scalar scalar_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return {rat(v.get<long long>()), true};
    if (v.is_number_float()) return {rat_from_double(v.get<double>()), false};
    throw error(errc::nonnumeric, "expected number or \"p/q\" string");
}

}  // namespace

ladder_spec ladder_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw error(errc::nonnumeric, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("intervals") || !j.contains("weights"))
        throw error(errc::nonnumeric, "ladder JSON needs 'intervals' and 'weights'");
    std::vector<std::pair<scalar, scalar>> intervals;
    for (const auto& iv : j["intervals"]) {
        if (!iv.is_array() || iv.size() != 2)
            throw error(errc::nonnumeric, "each interval must be a pair [a, b]");
        intervals.push_back({scalar_from_json(iv[0]), scalar_from_json(iv[1])});
    }
    std::vector<scalar> weights;
    for (const auto& w : j["weights"]) weights.push_back(scalar_from_json(w));
    return validate_ladder(intervals, weights);
}

ladder_spec load_ladder(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::nonnumeric, "cannot open ladder file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ladder_from_json_text(ss.str());
}

}  // namespace spectra
