#pragma once

// Brute-force reference: the interaction Hamiltonian as a dense matrix on a
// truncated Fock space, exact propagation by eigendecomposition, and a
// partial trace over the field. Shares no formulas with the closed-form
// pipeline beyond ModelParams.

#include <optional>

#include <Eigen/Dense>

#include "micromaser/entanglement.hpp"
#include "micromaser/field.hpp"
#include "micromaser/model.hpp"

namespace micromaser {

/// Index bookkeeping for field (x) atom [(x) atom]. Photon-major ordering,
/// atoms in passage order, each atom ordered (excited, ground).
class TruncatedHilbert {
public:
    TruncatedHilbert(int n_max, int atoms);

    int n_max() const { return n_max_; }
    int atoms() const { return atoms_; }
    int dim() const { return (n_max_ + 1) << atoms_; }

    int index(int photons, bool atom1_excited, bool atom2_excited = true) const;

    struct Label {
        int photons;
        bool atom1_excited;
        bool atom2_excited;  ///< meaningless for a single-atom space
    };
    Label label(int index) const;

private:
    int n_max_;
    int atoms_;
};

struct HamiltonianMatrix {
    Eigen::MatrixXcd matrix;
};

/// Kerr + Stark + two-photon coupling for `which_atom` (0 = first atom,
/// 1 = second); the other atom, if present, is acted on by the identity.
/// Hard cutoff: |n,e> with n > N_max - 2 has no raising partner.
HamiltonianMatrix build_h_int(const TruncatedHilbert& space, const ModelParams& p,
                              int which_atom);

/// exp(-i H t) by Hermitian eigendecomposition, built once per Hamiltonian.
class Propagator {
public:
    explicit Propagator(const HamiltonianMatrix& h);
    Eigen::VectorXcd apply(const Eigen::VectorXcd& state, double t) const;

private:
    Eigen::MatrixXcd vectors_;
    Eigen::VectorXd energies_;
};

/// exp(-i H t) state. Throws std::runtime_error when the norm drifts by
/// more than 1e-10.
Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, const HamiltonianMatrix& h, double t);

/// Both atoms crossing the cavity in sequence, simulated on the full space.
/// Propagators are built at construction and reused for every time.
class SequentialPassOracle {
public:
    /// n_max defaults to the field's top photon index + 6.
    SequentialPassOracle(const FieldSpec& f, SecondAtom second, const ModelParams& p,
                         std::optional<int> n_max = std::nullopt);

    /// Reduced atom-atom state in the case basis (EG or EE). Throws
    /// std::runtime_error if the cutoff is too small for the field.
    TwoQubitDensity at(double t) const;

    /// Full tripartite state reached from |n, e, second>.
    Eigen::VectorXcd state_from(int n, double t) const;

    const TruncatedHilbert& space() const { return space_; }

private:
    void check_cutoff(const Eigen::VectorXcd& state, int coupled_atom, double weight,
                      double& leaked) const;

    FieldSpec field_;
    SecondAtom second_;
    TruncatedHilbert space_;
    Propagator first_;
    Propagator second_pass_;
};

TwoQubitDensity sequential_pass(const FieldSpec& f, SecondAtom second, double t,
                                const ModelParams& p, std::optional<int> n_max = std::nullopt);

}  // namespace micromaser
