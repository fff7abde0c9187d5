#include "micromaser/field.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace micromaser {

FieldSpec FieldSpec::fock(int m) {
    FieldSpec f;
    f.kind = Kind::Fock;
    f.fock_photons = m;
    return f;
}

FieldSpec FieldSpec::thermal(double nbar, double tail_tolerance) {
    FieldSpec f;
    f.kind = Kind::Thermal;
    f.mean_photons = nbar;
    f.tail_tolerance = tail_tolerance;
    return f;
}

void FieldSpec::validate() const {
    if (kind == Kind::Fock && fock_photons < 0)
        throw std::invalid_argument("Fock photon number must be >= 0, got " +
                                    std::to_string(fock_photons));
    if (kind == Kind::Thermal && !(std::isfinite(mean_photons) && mean_photons >= 0.0))
        throw std::invalid_argument("thermal mean photon number must be finite and >= 0, got " +
                                    std::to_string(mean_photons));
    if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0))
        throw std::invalid_argument("tail tolerance must lie in (0,1), got " +
                                    std::to_string(tail_tolerance));
    if (n_max && *n_max < 0)
        throw std::invalid_argument("explicit photon cutoff must be >= 0");
}

FieldSpec FieldSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("field must be 'fock:m' or 'thermal:nbar', got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string value = text.substr(colon + 1);
    const char* first = value.data();
    const char* last = value.data() + value.size();

    if (kind == "fock") {
        int m = 0;
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("bad Fock photon number '" + value + "'");
        FieldSpec f = fock(m);
        f.validate();
        return f;
    }
    if (kind == "thermal") {
        // from_chars for double is not available in every libstdc++ we target.
        std::size_t used = 0;
        double nbar = 0.0;
        try {
            nbar = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size())
            throw std::invalid_argument("bad thermal mean photon number '" + value + "'");
        FieldSpec f = thermal(nbar);
        f.validate();
        return f;
    }
    throw std::invalid_argument("unknown field kind '" + kind + "' (expected fock or thermal)");
}

std::string FieldSpec::to_string() const {
    if (kind == Kind::Fock) return "fock:" + std::to_string(fock_photons);
    char buf[64];
    std::snprintf(buf, sizeof buf, "thermal:%g", mean_photons);
    return buf;
}

int truncation_for(const FieldSpec& f, double tail_tolerance) {
    if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0))
        throw std::invalid_argument("tail tolerance must lie in (0,1)");
    if (f.kind == FieldSpec::Kind::Fock) return f.fock_photons;
    if (f.mean_photons == 0.0) return 0;

    const double q = f.mean_photons / (1.0 + f.mean_photons);
    // Tail beyond N is q^(N+1); solve q^(N+1) < eps, then fix rounding.
    int n = static_cast<int>(std::ceil(std::log(tail_tolerance) / std::log(q))) - 1;
    if (n < 0) n = 0;
    while (n > 0 && std::pow(q, n) < tail_tolerance) --n;
    while (std::pow(q, n + 1) >= tail_tolerance) ++n;
    return n;
}

int top_photon(const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::Fock) return f.fock_photons;
    return f.n_max ? *f.n_max : truncation_for(f, f.tail_tolerance);
}

std::vector<PhotonWeight> weights(const FieldSpec& f) {
    f.validate();
    if (f.kind == FieldSpec::Kind::Fock) return {{f.fock_photons, 1.0}};

    const int top = top_photon(f);
    const double nbar = f.mean_photons;
    const double q = nbar / (1.0 + nbar);
    std::vector<PhotonWeight> out;
    out.reserve(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) out.push_back({n, std::pow(q, n) / (1.0 + nbar)});
    return out;
}

}  // namespace micromaser
