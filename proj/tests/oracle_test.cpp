// Copyright 2026 The radcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "radcap/oracle.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace radcap;
using radcap::test::binary_entropy;
using radcap::test::max_abs;

namespace {

// Closed forms used as targets only; the oracle never sees them.
double dephasing_capacity(double t) { return 2.0 - binary_entropy(t); }

OptimizerConfig quick(std::uint64_t seed, int restarts = 4) {
    OptimizerConfig c;
    c.seed = seed;
    c.restarts = restarts;
    c.max_iters = 3000;
    return c;
}

}  // namespace

TEST(Oracle, DensityOperatorValidation) {
    EXPECT_THROW(DensityOperator(MatrixXc::Identity(2, 2)), std::invalid_argument);
    MatrixXc neg(2, 2);
    neg << 1.2, 0.0, 0.0, -0.2;
    EXPECT_THROW(DensityOperator{neg}, std::invalid_argument);
    MatrixXc skew(2, 2);
    skew << 0.5, 0.1, -0.1, 0.5;
    EXPECT_THROW(DensityOperator{skew}, std::invalid_argument);
    VectorXc psi(2);
    psi << 3.0, complex_t(0.0, 4.0);
    const DensityOperator pure = DensityOperator::pure(psi);
    EXPECT_NEAR(pure.matrix().trace().real(), 1.0, 1e-15);
    EXPECT_NEAR(pure.matrix()(0, 0).real(), 0.36, 1e-15);
}

TEST(Oracle, VonNeumannExamples) {
    VectorXc psi(4);
    psi << 1.0, 2.0, complex_t(0.0, -1.0), 0.5;
    EXPECT_NEAR(von_neumann_entropy(DensityOperator::pure(psi)), 0.0, 1e-12);
    for (int dim : {2, 4, 8}) {
        EXPECT_NEAR(von_neumann_entropy(DensityOperator::maximally_mixed(dim)), std::log2(dim), 1e-14);
    }
    for (double t : {0.0, 0.1, 0.5, 0.77}) {
        MatrixXc m = MatrixXc::Zero(2, 2);
        m(0, 0) = t;
        m(1, 1) = 1.0 - t;
        EXPECT_NEAR(von_neumann_entropy(DensityOperator(m)), binary_entropy(t), 1e-14);
    }
}

TEST(Oracle, NaiveWalshExamples) {
    const HypercubeFunction f = naive_walsh(dephasing(0.25).symbol());
    EXPECT_NEAR(f.values[0].real(), 3.0, 1e-15);
    EXPECT_NEAR(f.values[1].real(), 0.0, 1e-15);
    EXPECT_NEAR(f.values[2].real(), 0.0, 1e-15);
    EXPECT_NEAR(f.values[3].real(), 1.0, 1e-15);
    const HypercubeFunction delta = naive_walsh(identity_channel(5).symbol());
    EXPECT_NEAR(delta.values[0].real(), 32.0, 1e-12);
    EXPECT_LE(delta.values.tail(31).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(naive_walsh(identity_channel(15).symbol()), std::invalid_argument);
}

TEST(OracleProperty, NaiveWalshMatchesFwht) {
    std::mt19937_64 rng(51);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const MultiplierSymbol s = test::random_complex_symbol(n, rng);
            const double diff = (naive_walsh(s).values - walsh_synthesize(s).values).cwiseAbs().maxCoeff();
            EXPECT_LE(diff, 1e-12 * std::max(1.0, std::sqrt(double(Eigen::Index{1} << n)))) << n;
        }
    }
}

TEST(Oracle, ChoiSpectrumExamples) {
    const SpectrumCheck dep = choi_spectrum_check(dephasing(0.3), 1e-12);
    EXPECT_TRUE(dep.pass);
    Eigen::VectorXd expected(4);
    expected << 0.0, 0.0, 0.6, 1.4;
    EXPECT_LE((dep.choi_eigenvalues - expected).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((dep.expected - expected).cwiseAbs().maxCoeff(), 1e-14);
    const SpectrumCheck id = choi_spectrum_check(identity_channel(4), 1e-12);
    EXPECT_TRUE(id.pass);
    EXPECT_NEAR(id.choi_eigenvalues[15], 4.0, 1e-13);
    EXPECT_THROW(choi_spectrum_check(completely_noisy(3), 1e-8), std::invalid_argument);
}

TEST(OracleProperty, ChoiSpectrumLaw) {
    std::mt19937_64 rng(52);
    for (int n : {2, 4, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            const SpectrumCheck c = choi_spectrum_check(MultiplierChannel(test::random_real_symbol(n, rng)), 1e-8);
            EXPECT_TRUE(c.pass) << "n=" << n << " dev=" << c.max_deviation;
        }
    }
    // Complex symbols give a non-Hermitian Choi matrix; the law does not apply.
    const SpectrumCheck complex = choi_spectrum_check(MultiplierChannel(test::random_complex_symbol(2, rng)), 1e-8);
    EXPECT_FALSE(complex.pass);
    EXPECT_GT(complex.hermiticity_defect, 1e-3);
}

TEST(Oracle, CpCheckChoi) {
    EXPECT_TRUE(cp_check_choi(dephasing(0.5), 1e-8));
    const std::vector<double> phi{1.0, -2.0, 1.0};
    const MultiplierChannel bad = radial(std::span<const double>(phi), 2);
    EXPECT_FALSE(cp_check_choi(bad, 1e-8));
    EXPECT_NEAR(choi_min_eigenvalue(bad), -1.0, 1e-14);  // f(1,1)/N = -2/2
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        MultiplierSymbol s = test::random_channel_symbol(4, rng, 0.0);
        s.coeffs[0] += test::uniform(rng, -0.3, 0.3);  // push min f across zero
        const MultiplierChannel ch(s);
        EXPECT_EQ(cp_check_choi(ch, 1e-8), is_completely_positive(ch));
    }
}

TEST(Oracle, BsstAtMaximallyMixed) {
    const DensityOperator half = DensityOperator::maximally_mixed(2);
    for (double t : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
        EXPECT_NEAR(bsst_mutual_information(dephasing(t), half), dephasing_capacity(t), 1e-10) << t;
    }
    EXPECT_NEAR(bsst_mutual_information(completely_noisy(2), half), 0.0, 1e-12);
    EXPECT_NEAR(bsst_mutual_information(identity_channel(4), DensityOperator::maximally_mixed(4)), 4.0, 1e-12);
    MatrixXc m = MatrixXc::Zero(4, 4);
    m.diagonal() << 0.5, 0.25, 0.125, 0.125;
    const DensityOperator rho(m);
    EXPECT_NEAR(bsst_mutual_information(identity_channel(4), rho), 2.0 * von_neumann_entropy(rho), 1e-12);
    const std::vector<double> phi{1.0, -2.0, 1.0};
    EXPECT_THROW(bsst_mutual_information(radial(std::span<const double>(phi), 2), half), NotAChannel);
}

TEST(Oracle, PurificationReducesToState) {
    std::mt19937_64 rng(54);
    const DensityOperator rho = DensityOperator::from_factor(test::random_matrix(4, rng));
    const VectorXc psi = purify(rho);
    ASSERT_EQ(psi.size(), 16);
    EXPECT_NEAR(psi.squaredNorm(), 1.0, 1e-13);
    // Tracing out the second factor (index k*N + i, k first) recovers rho.
    MatrixXc reduced = MatrixXc::Zero(4, 4);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            for (int i = 0; i < 4; ++i) reduced(k, l) += psi[k * 4 + i] * std::conj(psi[l * 4 + i]);
    EXPECT_LE(max_abs(reduced - rho.matrix()), 1e-13);
}

TEST(OracleProperty, BsstMatchesCapacityAtMaximallyMixed) {
    std::mt19937_64 rng(55);
    for (int n : {2, 4, 6}) {
        for (int trial = 0; trial < 3; ++trial) {
            const MultiplierChannel ch = radial(std::span<const double>(test::random_radial_channel_phi(n, rng)), n);
            const double expected = -segal_entropy(ch.symbol_function());
            EXPECT_NEAR(bsst_mutual_information(ch, DensityOperator::maximally_mixed(ch.dim())), expected, 1e-8);
        }
    }
}

TEST(Oracle, BsstMaximizeExamples) {
    const StateSearchResult dep = bsst_maximize(dephasing(0.25), quick(1));
    EXPECT_NEAR(dep.value, 1.188722, 1e-4);
    EXPECT_LE(dep.value, dephasing_capacity(0.25) + 1e-6);
    EXPECT_NEAR(bsst_maximize(identity_channel(2), quick(2)).value, 2.0, 1e-4);
    const double e = std::exp(-1.0);
    const double ou = 0.5 * ((1 - e) * (1 - e) * std::log2(1 - e) + (1 - e * e) * std::log2(1 - e * e) +
                             (1 + e) * (1 + e) * std::log2(1 + e));
    const StateSearchResult o = bsst_maximize(ou_semigroup(2, 1.0), quick(3));
    EXPECT_NEAR(o.value, ou, 1e-4);
    EXPECT_LE(o.value, ou + 1e-6);
}

TEST(Oracle, OptimizersAreReproducible) {
    const MultiplierChannel ch = ou_semigroup(4, 0.3);
    const StateSearchResult a = bsst_maximize(ch, quick(99, 3));
    const StateSearchResult b = bsst_maximize(ch, quick(99, 3));
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.restart, b.restart);
    EXPECT_EQ(max_abs(a.state.matrix() - b.state.matrix()), 0.0);
    EXPECT_EQ(min_output_entropy_numeric(ch, quick(5, 3)), min_output_entropy_numeric(ch, quick(5, 3)));
    NormalStream s1(12), s2(12);
    EXPECT_EQ(s1.vector(7), s2.vector(7));
}

TEST(Oracle, MinOutputEntropyExamples) {
    for (double t : {0.0, 0.3, 0.5, 1.0}) {
        EXPECT_NEAR(min_output_entropy_numeric(dephasing(t), quick(6, 2)), 0.0, 1e-6) << t;
    }
    EXPECT_NEAR(min_output_entropy_numeric(completely_noisy(2), quick(7, 2)), 1.0, 1e-10);
    EXPECT_NEAR(min_output_entropy_numeric(identity_channel(4), quick(8, 2)), 0.0, 1e-6);
}

TEST(OracleProperty, MinOutputEntropyAboveCbBound) {
    for (int n : {2, 4}) {
        for (double t : {0.2, 1.0}) {
            const MultiplierChannel ch = ou_semigroup(n, t);
            const double bound = segal_entropy(ch.symbol_function()) + n / 2.0;
            EXPECT_GE(min_output_entropy_numeric(ch, quick(10, 3)), bound - 1e-6);
        }
    }
}

TEST(Oracle, NelderMeadRosenbrock) {
    const auto rosen = [](const Eigen::VectorXd& x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    const SimplexResult r = nelder_mead(rosen, Eigen::Vector2d(-1.2, 1.0), 0.5, 5000, 1e-12);
    EXPECT_NEAR(r.argmin[0], 1.0, 1e-5);
    EXPECT_NEAR(r.argmin[1], 1.0, 1e-5);
    EXPECT_LT(r.value, 1e-10);
    const auto bowl = [](const Eigen::VectorXd& x) { return (x.array() - 2.0).square().sum(); };
    const SimplexResult b = nelder_mead(bowl, Eigen::VectorXd::Zero(8), 1.0, 20000, 1e-12);
    EXPECT_LT(b.value, 1e-9);
}
