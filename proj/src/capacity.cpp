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

#include <algorithm>
#include <cmath>

namespace radcap {

namespace {

void require_quantum_channel(const MultiplierChannel& ch, const char* what) {
    if (!is_completely_positive(ch)) {
        throw NotAChannel(std::string(what) + ": map is not completely positive");
    }
    if (!is_unital_trace_preserving(ch)) {
        throw NotAChannel(std::string(what) + ": map is not trace preserving");
    }
}

double log2_matrix_dim(const MultiplierChannel& ch, const char* what) {
    if (ch.n() % 2 != 0) {
        throw std::invalid_argument(std::string(what) + ": needs even n, got n=" +
                                    std::to_string(ch.n()));
    }
    return ch.n() / 2;
}

}  // namespace

double cb_norm_1_to_p(const MultiplierChannel& ch, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("cb_norm_1_to_p: p must be > 1");
    return lp_norm(ch.symbol_function(), p);
}

double hcb_min_normalized(const MultiplierChannel& ch) {
    require_quantum_channel(ch, "hcb_min_normalized");
    return segal_entropy(ch.symbol_function());
}

double hcb_min_matrix_trace(const MultiplierChannel& ch) {
    const double log_dim = log2_matrix_dim(ch, "hcb_min_matrix_trace");
    require_quantum_channel(ch, "hcb_min_matrix_trace");
    return segal_entropy(ch.symbol_function()) + log_dim;
}

double c_ea(const MultiplierChannel& ch) {
    require_quantum_channel(ch, "c_ea");
    return -segal_entropy(ch.symbol_function());
}

double q1_lower_bound(const MultiplierChannel& ch) {
    const double log_dim = log2_matrix_dim(ch, "q1_lower_bound");
    require_quantum_channel(ch, "q1_lower_bound");
    return std::max(-log_dim - segal_entropy(ch.symbol_function()), 0.0);
}

CapacityReport capacity_report(const MultiplierChannel& ch, std::span<const double> p_list) {
    CapacityReport r;
    r.n = ch.n();
    const bool even = ch.n() % 2 == 0;
    if (even) r.N = 1LL << (ch.n() / 2);
    r.radial = ch.symbol().is_radial();
    r.unital = is_unital_trace_preserving(ch);
    // Unital and trace preserving coincide for diagonal multipliers.
    r.trace_preserving = r.unital;
    r.completely_positive = is_completely_positive(ch);
    if (r.is_quantum_channel()) {
        const double h = segal_entropy(ch.symbol_function());
        r.segal_entropy_f = h;
        r.c_ea = -h;
        r.hcb_min_normalized = h;
        if (even) {
            const double log_dim = ch.n() / 2;
            r.hcb_min_matrix_trace = h + log_dim;
            r.q1_lower_bound = std::max(-log_dim - h, 0.0);
        }
    }
    for (double p : p_list) r.lp_norms.emplace_back(p, lp_norm(ch.symbol_function(), p));
    return r;
}

}  // namespace radcap
