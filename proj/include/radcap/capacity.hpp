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

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "radcap/channel.hpp"

namespace radcap {

/// Closed-form information quantities of one multiplier channel. Fields
/// that need a quantum channel (or an even n) are empty when the
/// hypothesis fails.
struct CapacityReport {
    int n = 0;
    /// 2^{n/2} for even n.
    std::optional<long long> N;
    bool radial = true;
    bool unital = false;
    bool trace_preserving = false;
    bool completely_positive = false;

    std::optional<double> segal_entropy_f;
    std::optional<double> c_ea;
    std::optional<double> hcb_min_normalized;
    std::optional<double> hcb_min_matrix_trace;
    std::optional<double> q1_lower_bound;
    /// (p, ||f||_p) in request order.
    std::vector<std::pair<double, double>> lp_norms;

    bool is_quantum_channel() const { return completely_positive && trace_preserving; }
};

/// ||R||_{cb, L^1 -> L^p} = ||f||_p, for p > 1 or p = inf.
double cb_norm_1_to_p(const MultiplierChannel& ch, double p);

/// H_cb,min with respect to the normalized trace: H(f) <= 0.
double hcb_min_normalized(const MultiplierChannel& ch);

/// H_cb,min with respect to the matrix trace: H(f) + log2 N. Even n only.
double hcb_min_matrix_trace(const MultiplierChannel& ch);

/// Entanglement-assisted classical capacity -H(f), in [0, n].
double c_ea(const MultiplierChannel& ch);

/// max{-log2 N - H(f), 0}, a lower bound on the coherent information. Even n only.
double q1_lower_bound(const MultiplierChannel& ch);

CapacityReport capacity_report(const MultiplierChannel& ch, std::span<const double> p_list);

}  // namespace radcap
