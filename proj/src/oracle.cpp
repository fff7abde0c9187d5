#include "micromaser/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace micromaser {

namespace {

using Eigen::MatrixXcd;

MatrixXcd annihilation(int n_max) {
    MatrixXcd a = MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

// Two-level operators in the (excited, ground) ordering.
MatrixXcd inversion() {
    MatrixXcd s = MatrixXcd::Zero(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
    return s;
}

MatrixXcd raising() {
    MatrixXcd s = MatrixXcd::Zero(2, 2);
    s(0, 1) = 1.0;
    return s;
}

}  // namespace

TruncatedHilbert::TruncatedHilbert(int n_max, int atoms) : n_max_(n_max), atoms_(atoms) {
    if (n_max < 2) throw std::invalid_argument("photon cutoff must be >= 2");
    if (atoms != 1 && atoms != 2) throw std::invalid_argument("one or two atoms supported");
}

int TruncatedHilbert::index(int photons, bool atom1_excited, bool atom2_excited) const {
    if (photons < 0 || photons > n_max_)
        throw std::out_of_range("photon number " + std::to_string(photons) + " outside [0, " +
                                std::to_string(n_max_) + "]");
    int i = photons * 2 + (atom1_excited ? 0 : 1);
    if (atoms_ == 2) i = i * 2 + (atom2_excited ? 0 : 1);
    return i;
}

TruncatedHilbert::Label TruncatedHilbert::label(int index) const {
    if (atoms_ == 2) return {index / 4, (index / 2) % 2 == 0, index % 2 == 0};
    return {index / 2, index % 2 == 0, true};
}

HamiltonianMatrix build_h_int(const TruncatedHilbert& space, const ModelParams& p,
                              int which_atom) {
    p.validate();
    if (which_atom < 0 || which_atom >= space.atoms())
        throw std::invalid_argument("atom index outside the space");

    const MatrixXcd a = annihilation(space.n_max());
    const MatrixXcd ad = a.adjoint();
    const MatrixXcd a2 = a * a;
    const MatrixXcd ad2 = ad * ad;
    const MatrixXcd number = ad * a;
    const MatrixXcd id2 = MatrixXcd::Identity(2, 2);

    // Embed an atom operator for the coupled atom.
    auto atom_op = [&](const MatrixXcd& s) -> MatrixXcd {
        if (space.atoms() == 1) return s;
        return which_atom == 0 ? MatrixXcd(Eigen::kroneckerProduct(s, id2))
                               : MatrixXcd(Eigen::kroneckerProduct(id2, s));
    };
    const MatrixXcd atoms_id = MatrixXcd::Identity(1 << space.atoms(), 1 << space.atoms());
    auto field_only = [&](const MatrixXcd& f) -> MatrixXcd {
        return Eigen::kroneckerProduct(f, atoms_id);
    };
    auto joint = [&](const MatrixXcd& f, const MatrixXcd& s) -> MatrixXcd {
        return Eigen::kroneckerProduct(f, atom_op(s));
    };

    const MatrixXcd s3 = inversion();
    const MatrixXcd sp = raising();
    const MatrixXcd sm = sp.adjoint();
    const MatrixXcd one = MatrixXcd::Identity(2, 2);

    MatrixXcd h = p.chi_over_kappa * field_only(ad2 * a2);
    if (p.stark_enabled) {
        const double beta1 = p.r;        // kappa1^2/Delta in units of kappa
        const double beta2 = 1.0 / p.r;  // kappa2^2/Delta in units of kappa
        h += 0.5 * joint(number, beta1 * (one - s3) + beta2 * (one + s3));
    }
    h += joint(ad2, sm) + joint(a2, sp);
    return {h};
}

Propagator::Propagator(const HamiltonianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix);
    if (es.info() != Eigen::Success) throw std::runtime_error("Hamiltonian diagonalization failed");
    vectors_ = es.eigenvectors();
    energies_ = es.eigenvalues();
}

Eigen::VectorXcd Propagator::apply(const Eigen::VectorXcd& state, double t) const {
    Eigen::VectorXcd c = vectors_.adjoint() * state;
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::polar(1.0, -energies_(k) * t);
    return vectors_ * c;
}

Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, const HamiltonianMatrix& h, double t) {
    const Eigen::VectorXcd out = Propagator(h).apply(state, t);
    const double drift = std::abs(out.norm() - state.norm());
    if (drift > 1e-10)
        throw std::runtime_error("norm drift " + std::to_string(drift) + " during evolution");
    return out;
}

SequentialPassOracle::SequentialPassOracle(const FieldSpec& f, SecondAtom second,
                                           const ModelParams& p, std::optional<int> n_max)
    : field_(f),
      second_(second),
      space_(n_max ? *n_max : top_photon(f) + 6, 2),
      first_(build_h_int(space_, p, 0)),
      second_pass_(build_h_int(space_, p, 1)) {
    f.validate();
}

void SequentialPassOracle::check_cutoff(const Eigen::VectorXcd& state, int coupled_atom,
                                        double weight, double& leaked) const {
    for (int n = space_.n_max() - 1; n <= space_.n_max(); ++n)
        for (int other = 0; other < 2; ++other) {
            const bool o = other == 0;
            const int i = coupled_atom == 0 ? space_.index(n, true, o) : space_.index(n, o, true);
            leaked += weight * std::norm(state(i));
        }
}

Eigen::VectorXcd SequentialPassOracle::state_from(int n, double t) const {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space_.dim());
    psi(space_.index(n, true, second_ == SecondAtom::Excited)) = 1.0;
    return second_pass_.apply(first_.apply(psi, t), t);
}

TwoQubitDensity SequentialPassOracle::at(double t) const {
    Matrix4c rho = Matrix4c::Zero();
    double leaked = 0.0;
    for (const auto& [n, w] : weights(field_)) {
        if (n > space_.n_max())
            throw std::runtime_error("photon cutoff " + std::to_string(space_.n_max()) +
                                     " below initial photon number " + std::to_string(n));
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space_.dim());
        psi(space_.index(n, true, second_ == SecondAtom::Excited)) = 1.0;
        check_cutoff(psi, 0, w, leaked);
        psi = first_.apply(psi, t);
        check_cutoff(psi, 1, w, leaked);
        psi = second_pass_.apply(psi, t);

        // Trace over the field: photon-major blocks of four atom states.
        const auto blocks = Eigen::Map<const Eigen::MatrixXcd>(psi.data(), 4, space_.n_max() + 1);
        rho += w * (blocks * blocks.adjoint());
    }
    if (leaked > field_.tail_tolerance)
        throw std::runtime_error("photon cutoff " + std::to_string(space_.n_max()) +
                                 " too small: " + std::to_string(leaked) +
                                 " of the population reaches truncated couplings");
    return TwoQubitDensity::from_product_basis(rho, basis_for(second_));
}

TwoQubitDensity sequential_pass(const FieldSpec& f, SecondAtom second, double t,
                                const ModelParams& p, std::optional<int> n_max) {
    return SequentialPassOracle(f, second, p, n_max).at(t);
}

}  // namespace micromaser
