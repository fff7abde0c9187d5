#include "micromaser/cascade.hpp"

#include <complex>

namespace micromaser {

namespace {

cplx phase(double rate, double t) { return std::polar(1.0, -rate * t); }

double stark_coherence_rate(const ModelParams& p) {
    return p.stark_enabled ? (p.r * p.r + 1.0) / p.r : 0.0;
}

}  // namespace

JointAmplitudes joint_amplitudes(int n, double t, const ModelParams& p) {
    const cplx k_n = amp_K(n, t, p);
    const cplx k_n2 = amp_K(n + 2, t, p);
    const cplx r_n = amp_R(n, t, p);
    const cplx r_n2 = amp_R(n + 2, t, p);
    const cplx r_n4 = amp_R(n + 4, t, p);

    const double m_n = block_mean_energy(n, p);
    const double m_lo = block_mean_energy(n - 2, p);
    const double m_hi = block_mean_energy(n + 2, p);

    JointAmplitudes a;
    a.excited.h = k_n * k_n;
    a.excited.t = k_n * r_n2;
    a.excited.j = k_n2 * r_n2;
    a.excited.v = r_n2 * r_n4;
    a.excited.phase_ht = phase(2.0 * m_n, t);
    a.excited.phase_jv = phase(m_n + m_hi, t);

    // Ground survival of the second atom with the block phase stripped.
    const cplx survival = n >= 2 ? std::conj(amp_K(n - 2, t, p))
                                 : ground_survival_phase(n, t, p) * std::polar(1.0, m_lo * t);
    a.ground.w = k_n * survival;
    a.ground.x = k_n * r_n;
    a.ground.y = std::conj(k_n) * r_n2;
    a.ground.z = r_n2 * r_n2;
    a.ground.phase_wx = phase(m_n + m_lo, t);
    a.ground.phase_yz = phase(2.0 * m_n, t);
    return a;
}

cplx phase_factor_eg(int n, double t, const ModelParams& p) {
    const double rate = 2.0 * p.chi_over_kappa * (2.0 * n - 1.0) + stark_coherence_rate(p);
    return std::polar(1.0, rate * t);
}

cplx phase_factor_ee(int n, double t, const ModelParams& p) {
    const double rate = 2.0 * p.chi_over_kappa * (2.0 * n + 3.0) + stark_coherence_rate(p);
    return std::polar(1.0, rate * t);
}

std::array<TripartiteComponent, 4> tripartite_state(int n, SecondAtom second, double t,
                                                    const ModelParams& p) {
    const JointAmplitudes a = joint_amplitudes(n, t, p);
    // Overall first-pass phase exp(-i M_n t) is folded into the branch phases.
    if (second == SecondAtom::Excited) {
        const auto& b = a.excited;
        return {{{n, true, true, b.phase_ht * b.h},
                 {n + 2, true, false, b.phase_ht * b.t},
                 {n + 2, false, true, b.phase_jv * b.j},
                 {n + 4, false, false, b.phase_jv * b.v}}};
    }
    const auto& b = a.ground;
    return {{{n, true, false, b.phase_wx * b.w},
             {n - 2, true, true, n >= 2 ? b.phase_wx * b.x : cplx{}},
             {n + 2, false, false, b.phase_yz * b.y},
             {n, false, true, b.phase_yz * b.z}}};
}

}  // namespace micromaser
