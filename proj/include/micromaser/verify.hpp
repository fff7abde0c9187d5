#pragma once

// Cross-checks of the closed-form pipeline against brute-force evolution.

#include <functional>
#include <string>
#include <vector>

#include "micromaser/cascade.hpp"
#include "micromaser/entanglement.hpp"
#include "micromaser/field.hpp"
#include "micromaser/model.hpp"

namespace micromaser {

enum class VerifyDepth { Quick, Full };

VerifyDepth parse_depth(const std::string& text);

/// The closed-form operations under test. Defaults are the library
/// functions; tests swap in corrupted versions to check that failures are
/// reported.
struct AnalyticBackend {
    std::function<cplx(int, double, const ModelParams&)> survival = amp_K;
    std::function<cplx(int, double, const ModelParams&)> transition = amp_R;
    std::function<TwoQubitDensity(const FieldSpec&, SecondAtom, double, const ModelParams&)>
        density = reduced_density;
};

/// One oracle configuration and the times at which it is sampled.
struct OracleCase {
    FieldSpec field;
    SecondAtom second;
    ModelParams params;
    std::vector<double> times;
};

/// Quick: 20 points over both atom cases, Fock 0/1/2/5 and thermal 0.5.
/// Full: every combination of eg/ee, Fock {0,1,2,5}, thermal {0.5, 2},
/// chi/kappa {0, 0.2, 0.5, 1, 2} and Stark {off, r = 0.001, 0.1, 0.5, 1, 2},
/// two times each (720 points).
std::vector<OracleCase> oracle_grid(VerifyDepth depth);

std::string describe_point(const OracleCase& c, double t);

struct CheckResult {
    std::string name;  ///< operation under test
    int points = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    std::string worst_at;
    std::string error;  ///< set when the operation threw
    bool passed() const { return error.empty() && worst <= tolerance; }
};

struct VerifyReport {
    VerifyDepth depth;
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string to_json() const;
};

/// Checks amp_K, amp_R, unitarity, rho_eg, rho_ee, oracle concurrence and
/// concurrence_closed; Full adds the cutoff robustness check.
VerifyReport verify(VerifyDepth depth, const AnalyticBackend& backend = {});

}  // namespace micromaser
