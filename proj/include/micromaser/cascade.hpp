#pragma once

// Two atoms crossing the cavity one after the other, each for the same
// scaled time t, with no field evolution in between. The first atom always
// enters excited; the second enters excited or in the ground state.

#include <array>

#include "micromaser/model.hpp"

namespace micromaser {

enum class SecondAtom { Ground, Excited };

/// Amplitudes of the tripartite state generated from one initial Fock
/// component |n>. Each branch holds four amplitudes and two phase factors;
/// the physical coefficient of a basis state is phase * amplitude.
struct JointAmplitudes {
    /// Second atom excited.
    struct ExcitedBranch {
        cplx h;  ///< |n,   e, e>
        cplx t;  ///< |n+2, e, g>
        cplx j;  ///< |n+2, g, e>
        cplx v;  ///< |n+4, g, g>
        cplx phase_ht;  ///< exp(-2i M_n t)
        cplx phase_jv;  ///< exp(-i (M_n + M_{n+2}) t)
    };
    /// Second atom in the ground state.
    struct GroundBranch {
        cplx w;  ///< |n,   e, g>
        cplx x;  ///< |n-2, e, e>   (zero for n < 2)
        cplx y;  ///< |n+2, g, g>
        cplx z;  ///< |n,   g, e>
        cplx phase_wx;  ///< exp(-i (M_n + M_{n-2}) t)
        cplx phase_yz;  ///< exp(-2i M_n t)
    };

    ExcitedBranch excited;
    GroundBranch ground;
};

/// All eight joint amplitudes for photon index n at time t.
///
/// For n < 2 the second (ground) atom meets fewer than two photons and does
/// not couple; its survival factor is ground_survival_phase(n) re-expressed
/// against the uniform branch phase, so w = K_n g_n exp(+i M_{n-2} t).
JointAmplitudes joint_amplitudes(int n, double t, const ModelParams& p);

/// Relative phase phase_wx * conj(phase_yz) multiplying W_n Z_n^* in the
/// |e,g><g,e| coherence: exp(+i [2(chi/kappa)(2n-1) + (r^2+1)/r] t).
cplx phase_factor_eg(int n, double t, const ModelParams& p);

/// Relative phase phase_ht * conj(phase_jv) multiplying T J^* in the
/// |e,g><g,e| coherence: exp(+i [2(chi/kappa)(2n+3) + (r^2+1)/r] t).
cplx phase_factor_ee(int n, double t, const ModelParams& p);

/// One component of the tripartite state: photons, atom states and the
/// full complex coefficient (phase included).
struct TripartiteComponent {
    int photons;
    bool atom1_excited;
    bool atom2_excited;
    cplx coefficient;
};

/// The four nonzero components generated from |n, e, second> (branch of
/// the chosen second-atom preparation). Components with photons < 0 carry
/// a zero coefficient.
std::array<TripartiteComponent, 4> tripartite_state(int n, SecondAtom second, double t,
                                                    const ModelParams& p);

}  // namespace micromaser
