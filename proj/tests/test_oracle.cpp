#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "micromaser/oracle.hpp"
#include "support.hpp"

using namespace micromaser;
using doctest::Approx;

namespace {

ModelParams kerr(double chi) {
    ModelParams p;
    p.chi_over_kappa = chi;
    return p;
}

ModelParams stark(double chi, double r) {
    ModelParams p;
    p.chi_over_kappa = chi;
    p.r = r;
    p.stark_enabled = true;
    return p;
}

// Photons plus the inversion of every atom.
int excitation(const TruncatedHilbert& space, int index) {
    const auto l = space.label(index);
    int x = l.photons + (l.atom1_excited ? 1 : -1);
    if (space.atoms() == 2) x += l.atom2_excited ? 1 : -1;
    return x;
}

Eigen::VectorXcd random_state(testing::Gen& gen, int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gen.normal_complex();
    return v.normalized();
}

}  // namespace

TEST_CASE("index maps are bijections") {
    for (int atoms : {1, 2}) {
        const TruncatedHilbert space(7, atoms);
        CHECK(space.dim() == 8 * (atoms == 1 ? 2 : 4));
        std::map<int, int> seen;
        for (int n = 0; n <= 7; ++n)
            for (bool a : {true, false})
                for (bool b : {true, false}) {
                    if (atoms == 1 && !b) continue;
                    const int i = space.index(n, a, b);
                    CHECK(i >= 0);
                    CHECK(i < space.dim());
                    ++seen[i];
                    const auto l = space.label(i);
                    CHECK(l.photons == n);
                    CHECK(l.atom1_excited == a);
                    if (atoms == 2) CHECK(l.atom2_excited == b);
                }
        CHECK(static_cast<int>(seen.size()) == space.dim());
    }
    CHECK_THROWS_AS(TruncatedHilbert(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedHilbert(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedHilbert(4, 1).index(5, true), std::out_of_range);
}

TEST_CASE("Hamiltonian matrix elements") {
    const TruncatedHilbert one(2, 1);
    const auto h = build_h_int(one, kerr(0), 0).matrix;
    const int e0 = one.index(0, true), g2 = one.index(2, false);
    CHECK(h(e0, g2) == cplx(std::sqrt(2.0), 0.0));
    CHECK(h(g2, e0) == cplx(std::sqrt(2.0), 0.0));
    CHECK(h(e0, e0) == cplx(0.0, 0.0));
    CHECK(h(g2, g2) == cplx(0.0, 0.0));
    // No partner for |1,e> and |2,e> below the cutoff.
    CHECK(h.row(one.index(1, true)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.row(one.index(2, true)).cwiseAbs().maxCoeff() == 0.0);

    const TruncatedHilbert space(6, 1);
    const auto kerr_h = build_h_int(space, kerr(1), 0).matrix;
    for (int n = 0; n <= 6; ++n)
        for (bool e : {true, false})
            CHECK(kerr_h(space.index(n, e), space.index(n, e)).real() ==
                  Approx(n * (n - 1.0)).epsilon(1e-14));

    const auto stark_h = build_h_int(space, stark(0, 0.5), 0).matrix;
    CHECK(stark_h(space.index(1, false), space.index(1, false)).real() ==
          Approx(0.5).epsilon(1e-15));
    CHECK(stark_h(space.index(1, true), space.index(1, true)).real() == Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS(build_h_int(space, kerr(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_h_int(TruncatedHilbert(4, 2), kerr(0), 2), std::invalid_argument);
}

TEST_CASE("Hamiltonian symmetry and conservation") {
    testing::Gen gen(41);
    for (int k = 0; k < 20; ++k) {
        const ModelParams p = gen.params();
        const TruncatedHilbert space(gen.integer(2, 12), gen.coin() ? 1 : 2);
        const int atom = space.atoms() == 2 ? gen.integer(0, 1) : 0;
        const auto h = build_h_int(space, p, atom).matrix;
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        for (int i = 0; i < space.dim(); ++i)
            for (int j = 0; j < space.dim(); ++j)
                if (excitation(space, i) != excitation(space, j)) CHECK(h(i, j) == cplx(0.0, 0.0));
    }
}

TEST_CASE("evolution") {
    const TruncatedHilbert space(4, 1);
    const HamiltonianMatrix h = build_h_int(space, kerr(0), 0);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dim());
    psi(space.index(0, true)) = 1.0;
    CHECK((evolve(psi, h, 0.0) - psi).cwiseAbs().maxCoeff() < 1e-15);
    for (double t : {0.3, 1.0, 2.2, 6.5}) {
        const Eigen::VectorXcd out = evolve(psi, h, t);
        CHECK(std::abs(out(space.index(0, true)) - std::cos(std::sqrt(2.0) * t)) < 1e-13);
        CHECK(std::abs(out(space.index(2, false)) - cplx(0, -std::sin(std::sqrt(2.0) * t))) <
              1e-13);
    }
}

TEST_CASE("norm and excitation manifolds are preserved") {
    testing::Gen gen(42);
    for (int k = 0; k < 20; ++k) {
        const ModelParams p = gen.params();
        const TruncatedHilbert space(gen.integer(4, 14), 2);
        const auto h = build_h_int(space, p, gen.integer(0, 1));
        const Eigen::VectorXcd psi = random_state(gen, space.dim());
        const Eigen::VectorXcd out = evolve(psi, h, gen.uniform(0, 10));
        CHECK(std::abs(out.norm() - 1.0) < 1e-10);

        std::map<int, double> before, after;
        for (int i = 0; i < space.dim(); ++i) {
            before[excitation(space, i)] += std::norm(psi(i));
            after[excitation(space, i)] += std::norm(out(i));
        }
        for (const auto& [x, pop] : before) CHECK(std::abs(after[x] - pop) < 1e-10);
    }
}

TEST_CASE("sequential passage at t = 0") {
    for (SecondAtom s : {SecondAtom::Ground, SecondAtom::Excited})
        for (const FieldSpec& f : {FieldSpec::fock(0), FieldSpec::fock(2)}) {
            const TwoQubitDensity rho = sequential_pass(f, s, 0.0, stark(0.5, 0.5));
            CHECK(rho.basis() == basis_for(s));
            Matrix4c expected = Matrix4c::Zero();
            expected(0, 0) = 1.0;
            CHECK((rho.entries() - expected).cwiseAbs().maxCoeff() < 1e-14);
        }
}

TEST_CASE("oracle default cutoff") {
    CHECK(SequentialPassOracle(FieldSpec::fock(2), SecondAtom::Ground, kerr(0)).space().n_max() == 8);
    CHECK(SequentialPassOracle(FieldSpec::thermal(0.5), SecondAtom::Ground, kerr(0))
              .space()
              .n_max() == 26);
}

TEST_CASE("insufficient cutoff is rejected") {
    // |5,e,e> at the top of a 6-photon space: the first atom has no partner.
    CHECK_THROWS_AS(sequential_pass(FieldSpec::fock(5), SecondAtom::Excited, 1.0, kerr(0), 6),
                    std::runtime_error);
    CHECK_THROWS_AS(sequential_pass(FieldSpec::fock(5), SecondAtom::Ground, 1.0, kerr(0), 3),
                    std::runtime_error);
    // The second atom needs two more photons than the first.
    CHECK_THROWS_AS(sequential_pass(FieldSpec::fock(3), SecondAtom::Excited, 1.0, kerr(0), 6),
                    std::runtime_error);
    CHECK_NOTHROW(sequential_pass(FieldSpec::fock(3), SecondAtom::Excited, 1.0, kerr(0), 7));
    // Fock(5), second atom ground never populates an excited atom at 5+ photons.
    CHECK_NOTHROW(sequential_pass(FieldSpec::fock(5), SecondAtom::Ground, 1.0, kerr(0), 7));

    FieldSpec coarse = FieldSpec::thermal(2.0);
    coarse.n_max = 40;
    CHECK_THROWS_AS(sequential_pass(coarse, SecondAtom::Excited, 1.0, kerr(0), 40),
                    std::runtime_error);
}

TEST_CASE("sufficient cutoff gives cutoff-independent results") {
    testing::Gen gen(43);
    for (int k = 0; k < 10; ++k) {
        const ModelParams p = gen.params(2.0);
        const FieldSpec f = k % 2 == 0 ? FieldSpec::fock(gen.integer(0, 5)) : FieldSpec::thermal(0.5);
        const SecondAtom s = gen.coin() ? SecondAtom::Ground : SecondAtom::Excited;
        const double t = gen.uniform(0, 10);
        const SequentialPassOracle base(f, s, p);
        const SequentialPassOracle wider(f, s, p, base.space().n_max() + 4);
        CHECK((base.at(t).entries() - wider.at(t).entries()).cwiseAbs().maxCoeff() < 1e-10);
    }
}
