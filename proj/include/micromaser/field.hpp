#pragma once

// Initial cavity-field photon statistics. Only the diagonal weights
// p(n) = |F_n|^2 enter the two-atom reduced state, so phases of F_n are not
// represented.

#include <optional>
#include <string>
#include <vector>

namespace micromaser {

inline constexpr double kDefaultTailTolerance = 1e-10;

struct FieldSpec {
    enum class Kind { Fock, Thermal };

    Kind kind = Kind::Fock;
    int fock_photons = 0;          ///< m for Kind::Fock
    double mean_photons = 0.0;     ///< nbar for Kind::Thermal
    double tail_tolerance = kDefaultTailTolerance;
    std::optional<int> n_max;      ///< explicit cutoff; overrides tail_tolerance

    static FieldSpec fock(int m);
    static FieldSpec thermal(double nbar, double tail_tolerance = kDefaultTailTolerance);

    /// Throws std::invalid_argument on negative m / nbar or a bad tolerance.
    void validate() const;

    /// Parses "fock:m" or "thermal:nbar".
    static FieldSpec parse(const std::string& text);
    std::string to_string() const;
};

struct PhotonWeight {
    int n;
    double p;
};

/// Largest photon index kept. Fock returns m; thermal returns the smallest
/// N whose discarded tail (nbar/(1+nbar))^(N+1) is below tail_tolerance.
int truncation_for(const FieldSpec& f, double tail_tolerance);

/// Photon distribution over the kept range, ascending in n. Weights are
/// not renormalized, so a longer range never changes earlier entries.
std::vector<PhotonWeight> weights(const FieldSpec& f);

/// Largest photon index that weights(f) returns.
int top_photon(const FieldSpec& f);

}  // namespace micromaser
