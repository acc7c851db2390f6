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
#include <vector>

#include "radcap/types.hpp"

namespace radcap {

/// Per-subset multiplier coefficients c_A, indexed by subset bitmask.
///
/// Radial symbols (c_A = phi(|A|)) remember the generating list in
/// `radial_origin`; symbols built from arbitrary coefficients (tensor
/// products, analysed functions) leave it empty.
struct MultiplierSymbol {
    int n = 0;
    VectorXc coeffs;
    std::optional<std::vector<complex_t>> radial_origin;

    /// c_A = phi(popcount(A)); `phi` must have n+1 entries.
    static MultiplierSymbol radial(std::span<const complex_t> phi, int n);
    static MultiplierSymbol from_coefficients(int n, VectorXc coeffs);

    std::size_t size() const { return static_cast<std::size_t>(coeffs.size()); }
    bool is_radial() const { return radial_origin.has_value(); }
    /// True when the coefficients depend only on |A|, whether or not the
    /// symbol was built radially.
    bool depends_only_on_cardinality(double tol = kRealTol) const;
    bool is_real(double tol = kRealTol) const;

    /// Throws std::invalid_argument on a dimension mismatch or a broken
    /// radial invariant.
    void validate() const;
};

/// Values of a function on {-1,1}^n, indexed by sign bitmask.
struct HypercubeFunction {
    int n = 0;
    VectorXc values;

    std::size_t size() const { return static_cast<std::size_t>(values.size()); }
    bool is_real(double tol = kRealTol) const;
    /// Real parts; throws std::domain_error if some imaginary part exceeds `tol`.
    Eigen::VectorXd real_values(double tol = kRealTol) const;
    complex_t mean() const { return values.mean(); }
    void validate() const;
};

/// Unnormalized in-place Walsh-Hadamard transform of a length-2^n vector:
/// v[e] <- sum_A v[A] (-1)^{|A and e|}. The transform is its own inverse up to
/// a factor 2^n.
template <typename Derived>
void fwht_inplace(Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index len = v.size();
    Scalar* data = v.derived().data();
    // Radix-2 butterflies; the first two stages are fused to halve the passes
    // over memory for large inputs.
    Eigen::Index h = 1;
    if (len >= 4) {
        for (Eigen::Index i = 0; i < len; i += 4) {
            const Scalar a = data[i], b = data[i + 1], c = data[i + 2], d = data[i + 3];
            const Scalar ab0 = a + b, ab1 = a - b, cd0 = c + d, cd1 = c - d;
            data[i] = ab0 + cd0;
            data[i + 1] = ab1 + cd1;
            data[i + 2] = ab0 - cd0;
            data[i + 3] = ab1 - cd1;
        }
        h = 4;
    }
    for (; h < len; h *= 2) {
        for (Eigen::Index i = 0; i < len; i += 2 * h) {
            Scalar* lo = data + i;
            Scalar* hi = lo + h;
            for (Eigen::Index j = 0; j < h; ++j) {
                const Scalar x = lo[j];
                const Scalar y = hi[j];
                lo[j] = x + y;
                hi[j] = x - y;
            }
        }
    }
}

/// f = sum_A c_A w_A, by fast transform in O(n 2^n).
HypercubeFunction walsh_synthesize(const MultiplierSymbol& symbol);

/// c_A = 2^-n sum_eps w_A(eps) f(eps); inverse of walsh_synthesize.
MultiplierSymbol walsh_analyze(const HypercubeFunction& f);

/// (2^-n sum |f|^p)^{1/p} for any p > 0 (a quasi-norm below 1); p = inf
/// gives the max. Used directly for one-sided derivative probes.
double power_mean(const HypercubeFunction& f, double p);

/// Normalized L^p norm on the hypercube, p >= 1 or p = inf.
double lp_norm(const HypercubeFunction& f, double p);

/// H(f) = -2^-n sum f log2 f for a density (f >= 0, mean 1). Values in
/// [-kPositivityTol, 0) are treated as zero. Throws NotAChannel otherwise.
double segal_entropy(const HypercubeFunction& f);

/// Minimum over all points; f must be real.
double min_value(const HypercubeFunction& f);

/// (f (x) g)(eps, eps') = f(eps) g(eps'), with eps in the low n_f bits.
HypercubeFunction tensor(const HypercubeFunction& f, const HypercubeFunction& g);

}  // namespace radcap
