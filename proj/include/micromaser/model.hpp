#pragma once

// Closed-form single-pass dynamics of a two-level atom exchanging photon
// pairs with a Kerr cavity mode, with intensity-dependent Stark shifts.
//
// Units: the two-photon coupling kappa is fixed to 1, so every time
// argument is the scaled time kappa*t and every frequency is in units of
// kappa.

#include <complex>

namespace micromaser {

using cplx = std::complex<double>;

/// Physical knobs of the atom-cavity model.
///
/// `stark_enabled == false` drops every Stark term; this is how an
/// "r = 0" configuration is expressed, since the shifts scale as r and 1/r.
struct ModelParams {
    double chi_over_kappa = 0.0;  ///< Kerr strength chi/kappa, >= 0
    double r = 1.0;               ///< coupling ratio kappa1/kappa2, > 0 when Stark is on
    bool stark_enabled = false;

    /// Throws std::invalid_argument when the invariants are violated.
    void validate() const;

    /// Stark shift of the lower level per photon, beta1/kappa = r.
    double beta_ground() const { return stark_enabled ? r : 0.0; }
    /// Stark shift of the upper level per photon, beta2/kappa = 1/r.
    double beta_excited() const { return stark_enabled ? 1.0 / r : 0.0; }
};

/// Half the detuning between |n,e> and |n+2,g> inside the coupled block:
/// (chi/kappa)(2n+1) + (n(r^2-1) + 2r^2)/(2r).
double stark_bracket(int n, const ModelParams& p);

/// Dressed (Rabi) frequency of the block {|n,e>, |n+2,g>}; always > 0.
double upsilon(int n, const ModelParams& p);

/// Phase rate Lambda_n = (chi/kappa) n(n+1) + (n(r^2+1) + 2r^2)/(2r).
double lambda_phase(int n, const ModelParams& p);

/// Exact mean diagonal energy of the block {|n,e>, |n+2,g>}.
/// Equals lambda_phase(n) + chi/kappa; the extra chi is the Kerr energy
/// that lambda_phase leaves out. Defined by the same polynomial for any
/// integer n, which the cascade uses to phase the decoupled n < 2 sector.
double block_mean_energy(int n, const ModelParams& p);

/// Survival amplitude K_n(t) of |n,e> with the block phase stripped.
cplx amp_K(int n, double t, const ModelParams& p);

/// Transition amplitude R_n(t): the |n,g> component reached from |n-2,e>.
/// Zero for n < 2.
cplx amp_R(int n, double t, const ModelParams& p);

/// Exact phase picked up by |n,g> for n in {0,1}, where the ground state
/// has no two-photon partner: exp(-i [chi n(n-1) + n beta1] t).
/// Throws std::invalid_argument for n outside {0,1}.
cplx ground_survival_phase(int n, double t, const ModelParams& p);

}  // namespace micromaser
