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

#include "radcap/capacity.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace radcap;
using radcap::test::binary_entropy;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

MultiplierChannel bad_radial() {
    const std::vector<double> phi{1.0, -2.0, 1.0};
    return radial(std::span<const double>(phi), 2);
}

}  // namespace

TEST(Capacity, CbNormExamples) {
    EXPECT_DOUBLE_EQ(cb_norm_1_to_p(identity_channel(2), kInf), 4.0);
    EXPECT_DOUBLE_EQ(cb_norm_1_to_p(identity_channel(6), kInf), 64.0);
    for (double p : {1.5, 2.0, 7.0, kInf}) EXPECT_NEAR(cb_norm_1_to_p(completely_noisy(4), p), 1.0, 1e-15);
    EXPECT_NEAR(cb_norm_1_to_p(dephasing(0.25), 2.0), std::sqrt(2.5), 1e-15);
    EXPECT_THROW(cb_norm_1_to_p(dephasing(0.25), 1.0), std::invalid_argument);
    EXPECT_THROW(cb_norm_1_to_p(dephasing(0.25), 0.5), std::invalid_argument);
}

TEST(Capacity, DephasingClosedForms) {
    for (int i = 0; i <= 20; ++i) {
        const double t = 0.05 * i;
        const MultiplierChannel ch = dephasing(t);
        const double h = binary_entropy(t);
        EXPECT_NEAR(c_ea(ch), 2.0 - h, 1e-12) << t;
        EXPECT_NEAR(hcb_min_normalized(ch), -(2.0 - h), 1e-12);
        EXPECT_NEAR(hcb_min_matrix_trace(ch), -(1.0 - h), 1e-12);
        EXPECT_NEAR(q1_lower_bound(ch), std::max(1.0 - h, 0.0), 1e-12);
    }
    EXPECT_NEAR(c_ea(dephasing(0.25)), 1.188721875540867, 1e-12);
}

TEST(Capacity, Extremes) {
    EXPECT_NEAR(hcb_min_normalized(completely_noisy(4)), 0.0, 1e-15);
    EXPECT_NEAR(c_ea(completely_noisy(2)), 0.0, 1e-15);
    EXPECT_NEAR(hcb_min_matrix_trace(completely_noisy(2)), 1.0, 1e-15);
    EXPECT_NEAR(q1_lower_bound(completely_noisy(2)), 0.0, 1e-15);
    for (int n : {2, 4, 6, 8}) {
        EXPECT_NEAR(hcb_min_normalized(identity_channel(n)), -n, 1e-12);
        EXPECT_NEAR(c_ea(identity_channel(n)), n, 1e-12);
        EXPECT_NEAR(hcb_min_matrix_trace(identity_channel(n)), -n / 2.0, 1e-12);
    }
    EXPECT_NEAR(q1_lower_bound(identity_channel(2)), 1.0, 1e-15);
}

TEST(Capacity, OrnsteinUhlenbeckTwo) {
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double e = std::exp(-t);
        const double closed = 0.5 * ((1 - e) * (1 - e) * std::log2(1 - e) +
                                     (1 - e * e) * std::log2(1 - e * e) +
                                     (1 + e) * (1 + e) * std::log2(1 + e));
        EXPECT_NEAR(c_ea(ou_semigroup(2, t)), closed, 1e-12) << t;
    }
}

TEST(Capacity, RequiresQuantumChannel) {
    const MultiplierChannel bad = bad_radial();
    EXPECT_THROW(c_ea(bad), NotAChannel);
    EXPECT_THROW(hcb_min_normalized(bad), NotAChannel);
    EXPECT_THROW(hcb_min_matrix_trace(bad), NotAChannel);
    EXPECT_THROW(q1_lower_bound(bad), NotAChannel);
    const std::vector<double> scaled{2.0, 0.5, 0.25};
    EXPECT_THROW(c_ea(radial(std::span<const double>(scaled), 2)), NotAChannel);
    // Odd n: fine on the normalized side, no matrix trace.
    const MultiplierChannel odd = ou_semigroup(3, 0.4);
    EXPECT_GT(c_ea(odd), 0.0);
    EXPECT_THROW(hcb_min_matrix_trace(odd), std::invalid_argument);
    EXPECT_THROW(q1_lower_bound(odd), std::invalid_argument);
}

TEST(Capacity, ReportExamples) {
    const std::vector<double> ps{2.0, kInf};
    const CapacityReport half = capacity_report(dephasing(0.5), ps);
    EXPECT_TRUE(half.completely_positive);
    EXPECT_TRUE(half.trace_preserving);
    EXPECT_TRUE(half.unital);
    EXPECT_EQ(half.N.value(), 2);
    EXPECT_NEAR(half.c_ea.value(), 1.0, 1e-15);
    EXPECT_NEAR(half.hcb_min_matrix_trace.value(), 0.0, 1e-15);
    EXPECT_NEAR(half.q1_lower_bound.value(), 0.0, 1e-15);
    ASSERT_EQ(half.lp_norms.size(), 2u);
    EXPECT_EQ(half.lp_norms[1].first, kInf);
    EXPECT_NEAR(half.lp_norms[1].second, 2.0, 1e-15);

    const CapacityReport id = capacity_report(identity_channel(4), ps);
    EXPECT_NEAR(id.c_ea.value(), 4.0, 1e-14);
    EXPECT_NEAR(id.hcb_min_matrix_trace.value(), -2.0, 1e-14);

    const CapacityReport bad = capacity_report(bad_radial(), ps);
    EXPECT_FALSE(bad.completely_positive);
    EXPECT_FALSE(bad.is_quantum_channel());
    EXPECT_FALSE(bad.c_ea.has_value());
    EXPECT_FALSE(bad.segal_entropy_f.has_value());
    EXPECT_FALSE(bad.hcb_min_matrix_trace.has_value());
    EXPECT_FALSE(bad.q1_lower_bound.has_value());
    EXPECT_EQ(bad.lp_norms.size(), 2u);

    const CapacityReport odd = capacity_report(ou_semigroup(5, 0.2), ps);
    EXPECT_FALSE(odd.N.has_value());
    EXPECT_TRUE(odd.c_ea.has_value());
    EXPECT_FALSE(odd.hcb_min_matrix_trace.has_value());
}

TEST(CapacityProperty, InvariantsOnRandomChannels) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 * (1 + trial % 4);
        const MultiplierChannel ch(trial % 2 ? test::random_channel_symbol(n, rng)
                                             : radial(std::span<const double>(
                                                          test::random_radial_channel_phi(n, rng)),
                                                      n)
                                                   .symbol());
        ASSERT_TRUE(is_quantum_channel(ch));
        const double log_n = n / 2.0;
        const double cea = c_ea(ch);
        EXPECT_NEAR(cea, -hcb_min_normalized(ch), 0.0);
        EXPECT_GE(cea, -1e-12);
        EXPECT_LE(cea, n + 1e-12);
        const double htr = hcb_min_matrix_trace(ch);
        EXPECT_NEAR(htr, hcb_min_normalized(ch) + log_n, 1e-12);
        EXPECT_GE(htr, -log_n - 1e-12);
        EXPECT_LE(htr, log_n + 1e-12);
        EXPECT_LE(q1_lower_bound(ch), cea + 1e-12);
        EXPECT_GE(q1_lower_bound(ch), 0.0);
        // Nondecreasing in p, starting at 1.
        double prev = 1.0;
        for (double p : {1.01, 1.5, 2.0, 4.0, 16.0, kInf}) {
            const double v = cb_norm_1_to_p(ch, p);
            EXPECT_GE(v, prev - 1e-12);
            prev = v;
        }
        EXPECT_NEAR(cb_norm_1_to_p(ch, 1.0 + 1e-9), 1.0, 1e-6);
    }
}

TEST(CapacityProperty, EntropyIsDerivativeOfNorm) {
    std::mt19937_64 rng(42);
    const double h = 1e-5;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 8;
        const MultiplierChannel ch(test::random_channel_symbol(n, rng));
        const HypercubeFunction& f = ch.symbol_function();
        const double derivative = (power_mean(f, 1.0 + h) - power_mean(f, 1.0 - h)) / (2.0 * h);
        EXPECT_NEAR(-derivative / std::log(2.0), hcb_min_normalized(ch), 1e-6) << "n=" << n;
    }
}

TEST(CapacityProperty, AdditivityAndRangeEqualities) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const MultiplierChannel a(test::random_channel_symbol(2, rng));
        const MultiplierChannel b(test::random_channel_symbol(4, rng));
        EXPECT_NEAR(c_ea(tensor(a, b)), c_ea(a) + c_ea(b), 1e-11);
    }
    // c_ea = 0 exactly for f = 1, c_ea = n exactly for the identity; strictly in between otherwise.
    EXPECT_EQ(c_ea(completely_noisy(4)), 0.0);
    const double mid = c_ea(ou_semigroup(4, 0.7));
    EXPECT_GT(mid, 0.0);
    EXPECT_LT(mid, 4.0);
}
