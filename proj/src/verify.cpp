#include "micromaser/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "micromaser/oracle.hpp"

namespace micromaser {

namespace {

constexpr double kAmplitudeTol = 1e-8;
constexpr double kUnitarityTol = 1e-12;
constexpr double kDensityTol = 1e-8;
constexpr double kConcurrenceTol = 1e-8;
constexpr double kClosedVsGeneralTol = 1e-10;
constexpr double kCutoffTol = 1e-9;

constexpr std::array<double, 8> kTimes{0.37, 1.0, 1.7, 2.5, 4.2, 6.1, 7.9, 9.6};

std::vector<ModelParams> parameter_grid() {
    std::vector<ModelParams> out;
    for (double chi : {0.0, 0.2, 0.5, 1.0, 2.0})
        for (double r : {0.0, 0.001, 0.1, 0.5, 1.0, 2.0}) {
            ModelParams p;
            p.chi_over_kappa = chi;
            p.stark_enabled = r > 0.0;
            p.r = r > 0.0 ? r : 1.0;
            out.push_back(p);
        }
    return out;
}

std::string describe_params(const ModelParams& p) {
    char buf[96];
    if (p.stark_enabled)
        std::snprintf(buf, sizeof buf, "chi/kappa=%g stark on r=%g", p.chi_over_kappa, p.r);
    else
        std::snprintf(buf, sizeof buf, "chi/kappa=%g stark off", p.chi_over_kappa);
    return buf;
}

void record(CheckResult& c, double deviation, const std::string& where) {
    ++c.points;
    if (deviation > c.worst || !std::isfinite(deviation)) {
        c.worst = std::isfinite(deviation) ? deviation : INFINITY;
        c.worst_at = where;
    }
}

// Single-atom amplitudes reached from |n,e>, against the dense propagator.
void check_amplitudes(const AnalyticBackend& backend, VerifyDepth depth, CheckResult& k,
                      CheckResult& r) {
    const auto params = parameter_grid();
    const int top = depth == VerifyDepth::Full ? 12 : 4;
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        if (depth == VerifyDepth::Quick && pi % 6 != 0) continue;
        const ModelParams& p = params[pi];
        const TruncatedHilbert space(top + 4, 1);
        const Propagator u(build_h_int(space, p, 0));
        for (int n = 0; n <= top; ++n) {
            Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dim());
            psi(space.index(n, true)) = 1.0;
            for (double t : {0.3, 2.9, 8.1}) {
                const Eigen::VectorXcd out = u.apply(psi, t);
                const cplx phase = std::polar(1.0, -block_mean_energy(n, p) * t);
                char where[160];
                std::snprintf(where, sizeof where, "n=%d t=%g %s", n, t,
                              describe_params(p).c_str());
                record(k, std::abs(phase * backend.survival(n, t, p) - out(space.index(n, true))),
                       where);
                record(r,
                       std::abs(phase * backend.transition(n + 2, t, p) -
                                out(space.index(n + 2, false))),
                       where);
            }
        }
    }
}

void check_unitarity(const AnalyticBackend& backend, VerifyDepth depth, CheckResult& c) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> chi(0.0, 3.0), ratio(0.001, 3.0), time(0.0, 20.0);
    std::bernoulli_distribution stark(0.5);
    const int draws = depth == VerifyDepth::Full ? 1000 : 50;
    for (int d = 0; d < draws; ++d) {
        ModelParams p;
        p.chi_over_kappa = chi(rng);
        p.r = ratio(rng);
        p.stark_enabled = stark(rng);
        const double t = time(rng);
        for (int n = 0; n <= 60; ++n) {
            const double total =
                std::norm(backend.survival(n, t, p)) + std::norm(backend.transition(n + 2, t, p));
            char where[160];
            std::snprintf(where, sizeof where, "n=%d t=%.6g %s", n, t, describe_params(p).c_str());
            record(c, std::abs(total - 1.0), where);
        }
    }
}

}  // namespace

VerifyDepth parse_depth(const std::string& text) {
    if (text == "quick") return VerifyDepth::Quick;
    if (text == "full") return VerifyDepth::Full;
    throw std::invalid_argument("depth must be 'quick' or 'full', got '" + text + "'");
}

std::vector<OracleCase> oracle_grid(VerifyDepth depth) {
    const auto params = parameter_grid();
    std::vector<OracleCase> out;
    if (depth == VerifyDepth::Quick) {
        const std::array<FieldSpec, 5> fields{FieldSpec::fock(0), FieldSpec::fock(1),
                                              FieldSpec::fock(2), FieldSpec::fock(5),
                                              FieldSpec::thermal(0.5)};
        std::size_t k = 0;
        for (SecondAtom second : {SecondAtom::Ground, SecondAtom::Excited})
            for (const FieldSpec& f : fields) {
                out.push_back({f, second, params[(7 * k + 3) % params.size()],
                               {kTimes[k % kTimes.size()], kTimes[(k + 3) % kTimes.size()]}});
                ++k;
            }
        return out;
    }

    const std::array<FieldSpec, 6> fields{FieldSpec::fock(0), FieldSpec::fock(1),
                                          FieldSpec::fock(2), FieldSpec::fock(5),
                                          FieldSpec::thermal(0.5), FieldSpec::thermal(2.0)};
    std::size_t k = 0;
    for (SecondAtom second : {SecondAtom::Ground, SecondAtom::Excited})
        for (const FieldSpec& f : fields)
            for (const ModelParams& p : params) {
                out.push_back({f, second, p,
                               {kTimes[k % kTimes.size()], kTimes[(k + 5) % kTimes.size()]}});
                ++k;
            }
    return out;
}

std::string describe_point(const OracleCase& c, double t) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s %s %s t=%g", c.field.to_string().c_str(),
                  c.second == SecondAtom::Ground ? "eg" : "ee", describe_params(c.params).c_str(),
                  t);
    return buf;
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["depth"] = depth == VerifyDepth::Quick ? "quick" : "full";
    doc["passed"] = passed();
    auto& list = doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["passed"] = c.passed();
        item["points"] = c.points;
        item["worst_deviation"] = std::isfinite(c.worst) ? nlohmann::ordered_json(c.worst)
                                                         : nlohmann::ordered_json("inf");
        item["tolerance"] = c.tolerance;
        item["worst_at"] = c.worst_at;
        if (!c.error.empty()) item["error"] = c.error;
        list.push_back(item);
    }
    return doc.dump(2);
}

VerifyReport verify(VerifyDepth depth, const AnalyticBackend& backend) {
    CheckResult k{"amp_K", 0, 0.0, kAmplitudeTol, "", ""};
    CheckResult r{"amp_R", 0, 0.0, kAmplitudeTol, "", ""};
    CheckResult unit{"unitarity", 0, 0.0, kUnitarityTol, "", ""};
    CheckResult eg{"rho_eg", 0, 0.0, kDensityTol, "", ""};
    CheckResult ee{"rho_ee", 0, 0.0, kDensityTol, "", ""};
    CheckResult conc{"concurrence", 0, 0.0, kConcurrenceTol, "", ""};
    CheckResult closed{"concurrence_closed", 0, 0.0, kClosedVsGeneralTol, "", ""};
    CheckResult cutoff{"cutoff", 0, 0.0, kCutoffTol, "", ""};

    auto guarded = [](CheckResult& c, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            c.error = e.what();
        }
    };

    guarded(k, [&] { check_amplitudes(backend, depth, k, r); });
    if (!k.error.empty()) r.error = k.error;
    guarded(unit, [&] { check_unitarity(backend, depth, unit); });

    for (const OracleCase& c : oracle_grid(depth)) {
        CheckResult& rho_check = c.second == SecondAtom::Ground ? eg : ee;
        if (!rho_check.error.empty()) continue;
        guarded(rho_check, [&] {
            const SequentialPassOracle oracle(c.field, c.second, c.params);
            std::optional<SequentialPassOracle> wider;
            if (depth == VerifyDepth::Full)
                wider.emplace(c.field, c.second, c.params, oracle.space().n_max() + 4);
            for (double t : c.times) {
                const std::string where = describe_point(c, t);
                const TwoQubitDensity reference = oracle.at(t);
                const TwoQubitDensity analytic = backend.density(c.field, c.second, t, c.params);
                if (analytic.basis() != reference.basis())
                    throw std::runtime_error("density returned in the wrong basis at " + where);
                record(rho_check, (analytic.entries() - reference.entries()).cwiseAbs().maxCoeff(),
                       where);

                const double c_general = concurrence_general(reference).concurrence;
                guarded(closed, [&] {
                    const double c_closed = concurrence_closed(analytic).concurrence;
                    record(conc, std::abs(c_closed - c_general), where);
                    record(closed, std::abs(c_closed - concurrence_general(analytic).concurrence),
                           where);
                });
                if (wider)
                    guarded(cutoff, [&] {
                        record(cutoff,
                               std::abs(concurrence_general(wider->at(t)).concurrence - c_general),
                               where);
                    });
            }
        });
    }

    VerifyReport report{depth, {k, r, unit, eg, ee, conc, closed}};
    if (depth == VerifyDepth::Full) report.checks.push_back(cutoff);
    return report;
}

}  // namespace micromaser
