#pragma once

// Reduced two-atom density matrices and Wootters concurrence.

#include <array>

#include <Eigen/Dense>

#include "micromaser/cascade.hpp"
#include "micromaser/field.hpp"
#include "micromaser/model.hpp"

namespace micromaser {

using Matrix4c = Eigen::Matrix<cplx, 4, 4>;

/// Basis labelling of a two-atom density matrix.
///   EG: |e,g>, |e,e>, |g,g>, |g,e>   (one excited atom; coherence 1-4)
///   EE: |e,e>, |e,g>, |g,e>, |g,g>   (two excited atoms; coherence 2-3)
/// Atom 1 is written first.
enum class Basis { EG, EE };

/// Basis natural for a given second-atom preparation.
constexpr Basis basis_for(SecondAtom second) {
    return second == SecondAtom::Ground ? Basis::EG : Basis::EE;
}

class TwoQubitDensity {
public:
    TwoQubitDensity(const Matrix4c& entries, Basis basis) : m_(entries), basis_(basis) {}

    const Matrix4c& entries() const { return m_; }
    Basis basis() const { return basis_; }

    /// 1-based entry accessor in the matrix's own labelling.
    cplx rho(int i, int j) const { return m_(i - 1, j - 1); }

    /// The same state in the product basis |ee>, |eg>, |ge>, |gg>.
    Matrix4c product_basis() const;
    /// Relabels a product-basis matrix into `basis`.
    static TwoQubitDensity from_product_basis(const Matrix4c& product, Basis basis);

    /// 0-based indices of the coherence pair allowed by the X shape.
    std::array<int, 2> coherence_pair() const;

private:
    Matrix4c m_;
    Basis basis_;
};

/// Physicality diagnostics of a density matrix.
struct DensityDiagnostics {
    double hermiticity_error;  ///< max |rho_ij - conj(rho_ji)|
    double trace_error;        ///< |tr rho - 1|
    double min_eigenvalue;
    double x_violation;        ///< largest entry outside the X shape
};

DensityDiagnostics diagnose(const TwoQubitDensity& rho);

struct ConcurrenceResult {
    double concurrence = 0.0;
    std::array<double, 4> sqrt_eigenvalues{};  ///< descending
    double entanglement_of_formation = 0.0;
    double population_sum = 0.0;
};

/// Reduced state after an excited atom and then a ground-state atom cross
/// the cavity prepared in `f`.
TwoQubitDensity rho_eg(const FieldSpec& f, double t, const ModelParams& p);

/// Reduced state after two excited atoms cross the cavity.
TwoQubitDensity rho_ee(const FieldSpec& f, double t, const ModelParams& p);

TwoQubitDensity reduced_density(const FieldSpec& f, SecondAtom second, double t,
                                const ModelParams& p);

/// Concurrence of an X-shaped state from its entries. Throws
/// std::invalid_argument if an entry outside the X shape exceeds 1e-9.
ConcurrenceResult concurrence_closed(const TwoQubitDensity& rho);

/// Wootters concurrence of an arbitrary two-qubit state. Throws
/// std::invalid_argument for non-Hermitian or non-PSD input (1e-10).
ConcurrenceResult concurrence_general(const TwoQubitDensity& rho);

/// rho22 + rho33 in the matrix's own labelling.
double population_sum(const TwoQubitDensity& rho);

/// Binary entropy in bits.
double binary_entropy(double z);

/// E_f = H(1/2 + sqrt(1 - C^2)/2).
double entanglement_of_formation(double concurrence);

}  // namespace micromaser
