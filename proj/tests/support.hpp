#pragma once

// Seeded generators for the property tests.

#include <cmath>
#include <random>

#include "micromaser/entanglement.hpp"
#include "micromaser/model.hpp"

namespace testing {

using micromaser::cplx;
using micromaser::Matrix4c;
using micromaser::ModelParams;

class Gen {
public:
    explicit Gen(unsigned long long seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return std::bernoulli_distribution(0.5)(rng_); }
    cplx normal_complex() {
        std::normal_distribution<double> g;
        return {g(rng_), g(rng_)};
    }

    ModelParams params(double chi_max = 3.0) {
        ModelParams p;
        p.chi_over_kappa = uniform(0.0, chi_max);
        p.r = uniform(0.001, 3.0);
        p.stark_enabled = coin();
        return p;
    }

    /// Random X-state in the given basis: random populations and a
    /// coherence of random phase bounded by positivity.
    micromaser::TwoQubitDensity x_state(micromaser::Basis basis) {
        double d[4];
        double total = 0.0;
        for (double& x : d) total += (x = -std::log(uniform(1e-12, 1.0)));
        for (double& x : d) x /= total;
        // Sparse populations exercise the boundary cases.
        if (integer(0, 4) == 0) d[integer(0, 3)] = 0.0;
        total = d[0] + d[1] + d[2] + d[3];
        for (double& x : d) x /= total;

        Matrix4c m = Matrix4c::Zero();
        for (int i = 0; i < 4; ++i) m(i, i) = d[i];
        const int a = basis == micromaser::Basis::EG ? 0 : 1;
        const int b = basis == micromaser::Basis::EG ? 3 : 2;
        const cplx z = std::polar(uniform(0.0, 1.0) * std::sqrt(d[a] * d[b]), uniform(-M_PI, M_PI));
        m(a, b) = z;
        m(b, a) = std::conj(z);
        return {m, basis};
    }

    /// Random full-rank mixed state G G^dagger / tr.
    micromaser::TwoQubitDensity mixed_state(int rank = 4) {
        Eigen::Matrix<cplx, 4, Eigen::Dynamic> g(4, rank);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < rank; ++j) g(i, j) = normal_complex();
        Matrix4c m = g * g.adjoint();
        m /= m.trace().real();
        return {m, micromaser::Basis::EE};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testing
