#include "spectra/discretize.hpp"

#include <string>

namespace spectra {

namespace {

std::size_t atom_count(const ladder_spec& spec, int g, std::size_t capacity) {
    if (g < 0) throw error(errc::domain, "negative generation");
    std::size_t n = 1;
    for (int i = 0; i < g; ++i) {
        if (n > capacity / static_cast<std::size_t>(spec.m))
            throw error(errc::capacity,
                        "m^g exceeds atom capacity " + std::to_string(capacity));
        n *= static_cast<std::size_t>(spec.m);
    }
    return n;
}

}  // namespace

std::vector<cylinder> cylinders(const ladder_spec& spec, int g, std::size_t capacity) {
    atom_count(spec, g, capacity);
    std::vector<cylinder> cur{{rat(0), rat(1), rat(1)}};
    // Generation g = union over k of S_k(generation g-1) with mass * rho_k;
    // S_k preserves order and the steps are ordered, so concatenation keeps
    // the canonical left-to-right order.
    for (int step = 0; step < g; ++step) {
        std::vector<cylinder> next;
        next.reserve(cur.size() * spec.m);
        for (int k = 0; k < spec.m; ++k)
            for (const cylinder& c : cur)
                next.push_back({spec.map(k, c.lo), spec.map(k, c.hi),
                                spec.rho[k] * c.mass});
        cur = std::move(next);
    }
    return cur;
}

atomic_measure discretize(const ladder_spec& spec, int g, std::size_t capacity) {
    std::vector<cylinder> cyl = cylinders(spec, g, capacity);
    atomic_measure mu;
    mu.generation = g;
    mu.position.reserve(cyl.size());
    mu.mass.reserve(cyl.size());
    for (const cylinder& c : cyl) {
        mu.position.push_back((c.lo + c.hi) / 2);
        mu.mass.push_back(c.mass);
    }
    refresh_doubles(mu);
    return mu;
}

void refresh_doubles(atomic_measure& mu) {
    mu.position_d.clear();
    mu.mass_d.clear();
    mu.position_d.reserve(mu.position.size());
    mu.mass_d.reserve(mu.mass.size());
    for (const rat& p : mu.position) mu.position_d.push_back(to_double(p));
    for (const rat& m : mu.mass) mu.mass_d.push_back(to_double(m));
}

}  // namespace spectra
