#include "micromaser/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace micromaser {

namespace {

// Product-basis index (|ee>,|eg>,|ge>,|gg>) of each label in a case basis.
constexpr std::array<int, 4> kEgToProduct{1, 0, 3, 2};
constexpr std::array<int, 4> kEeToProduct{0, 1, 2, 3};

const std::array<int, 4>& to_product(Basis b) {
    return b == Basis::EG ? kEgToProduct : kEeToProduct;
}

// sigma_y (x) sigma_y in the product basis.
Matrix4c spin_flip_operator() {
    Matrix4c y = Matrix4c::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

ConcurrenceResult finish(std::array<double, 4> roots, const TwoQubitDensity& rho) {
    std::sort(roots.begin(), roots.end(), std::greater<>());
    ConcurrenceResult out;
    out.sqrt_eigenvalues = roots;
    out.concurrence = std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
    out.entanglement_of_formation = entanglement_of_formation(out.concurrence);
    out.population_sum = population_sum(rho);
    return out;
}

}  // namespace

Matrix4c TwoQubitDensity::product_basis() const {
    const auto& idx = to_product(basis_);
    Matrix4c out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(idx[i], idx[j]) = m_(i, j);
    return out;
}

TwoQubitDensity TwoQubitDensity::from_product_basis(const Matrix4c& product, Basis basis) {
    const auto& idx = to_product(basis);
    Matrix4c out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = product(idx[i], idx[j]);
    return {out, basis};
}

std::array<int, 2> TwoQubitDensity::coherence_pair() const {
    return basis_ == Basis::EG ? std::array<int, 2>{0, 3} : std::array<int, 2>{1, 2};
}

DensityDiagnostics diagnose(const TwoQubitDensity& rho) {
    const Matrix4c& m = rho.entries();
    DensityDiagnostics d{};
    d.hermiticity_error = max_abs(m - m.adjoint());
    d.trace_error = std::abs(m.trace() - 1.0);
    const Matrix4c herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(herm, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();

    const auto [a, b] = rho.coherence_pair();
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j || (i == a && j == b) || (i == b && j == a)) continue;
            worst = std::max(worst, std::abs(m(i, j)));
        }
    d.x_violation = worst;
    return d;
}

TwoQubitDensity rho_eg(const FieldSpec& f, double t, const ModelParams& p) {
    p.validate();
    double d1 = 0, d2 = 0, d3 = 0, d4 = 0;
    cplx c14{};
    for (const auto& [n, w] : weights(f)) {
        const auto g = joint_amplitudes(n, t, p).ground;
        d1 += w * std::norm(g.w);
        d2 += w * std::norm(g.x);
        d3 += w * std::norm(g.y);
        d4 += w * std::norm(g.z);
        c14 += w * phase_factor_eg(n, t, p) * g.w * std::conj(g.z);
    }
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = d1;
    m(1, 1) = d2;
    m(2, 2) = d3;
    m(3, 3) = d4;
    m(0, 3) = c14;
    m(3, 0) = std::conj(c14);
    return {m, Basis::EG};
}

TwoQubitDensity rho_ee(const FieldSpec& f, double t, const ModelParams& p) {
    p.validate();
    double d1 = 0, d2 = 0, d3 = 0, d4 = 0;
    cplx c23{};
    for (const auto& [n, w] : weights(f)) {
        const auto e = joint_amplitudes(n, t, p).excited;
        d1 += w * std::norm(e.h);
        d2 += w * std::norm(e.t);
        d3 += w * std::norm(e.j);
        d4 += w * std::norm(e.v);
        c23 += w * phase_factor_ee(n, t, p) * e.t * std::conj(e.j);
    }
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = d1;
    m(1, 1) = d2;
    m(2, 2) = d3;
    m(3, 3) = d4;
    m(1, 2) = c23;
    m(2, 1) = std::conj(c23);
    return {m, Basis::EE};
}

TwoQubitDensity reduced_density(const FieldSpec& f, SecondAtom second, double t,
                                const ModelParams& p) {
    return second == SecondAtom::Ground ? rho_eg(f, t, p) : rho_ee(f, t, p);
}

ConcurrenceResult concurrence_closed(const TwoQubitDensity& rho) {
    const DensityDiagnostics d = diagnose(rho);
    if (d.x_violation > 1e-9)
        throw std::invalid_argument("matrix is not X-shaped (off-pattern entry " +
                                    std::to_string(d.x_violation) +
                                    "); use concurrence_general");

    const Matrix4c& m = rho.entries();
    const auto [a, b] = rho.coherence_pair();
    const int k = a == 0 ? 1 : 0;
    const int l = a == 0 ? 2 : 3;
    auto diag = [&](int i) { return std::max(0.0, m(i, i).real()); };

    const double coherent = std::sqrt(diag(a) * diag(b));
    const double modulus = std::abs(m(a, b));
    const double other = std::sqrt(diag(k) * diag(l));
    return finish({coherent + modulus, std::abs(coherent - modulus), other, other}, rho);
}

ConcurrenceResult concurrence_general(const TwoQubitDensity& rho) {
    const Matrix4c m = rho.product_basis();
    const double herm = max_abs(m - m.adjoint());
    if (herm > 1e-10)
        throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                    std::to_string(herm) + ")");
    const Matrix4c h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density matrix is not positive semidefinite (eigenvalue " +
                                    std::to_string(es.eigenvalues().minCoeff()) + ")");

    // rho = Psi Psi^dagger; the square roots of eig(rho rho~) are the
    // singular values of the symmetric matrix Psi^T (sy x sy) Psi. Jacobi
    // SVD leaves decoupled diagonal entries untouched, so exact zeros in rho
    // stay exact instead of turning into sqrt(roundoff).
    Eigen::JacobiSVD<Matrix4c> factor(h, Eigen::ComputeFullU);
    const Eigen::Vector4d roots_of_rho = factor.singularValues().cwiseSqrt();
    const Matrix4c psi = factor.matrixU() * roots_of_rho.cast<cplx>().asDiagonal();
    const Matrix4c tau = psi.transpose() * spin_flip_operator() * psi;
    const Eigen::Vector4d s = Eigen::JacobiSVD<Matrix4c>(tau).singularValues();
    return finish({s(0), s(1), s(2), s(3)}, rho);
}

double population_sum(const TwoQubitDensity& rho) {
    return rho.entries()(1, 1).real() + rho.entries()(2, 2).real();
}

double binary_entropy(double z) {
    auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
    return term(z) + term(1.0 - z);
}

double entanglement_of_formation(double concurrence) {
    const double c = std::clamp(concurrence, 0.0, 1.0);
    return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
}

}  // namespace micromaser
