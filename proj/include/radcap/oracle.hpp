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

// Brute-force verifiers. Nothing here consults the closed forms in
// capacity.hpp; every quantity is computed from matrices directly.

#include <cstdint>
#include <functional>
#include <random>

#include "radcap/channel.hpp"

namespace radcap {

/// A state on M_N: Hermitian, positive semidefinite, unit trace.
class DensityOperator {
public:
    /// Validates the invariants (Hermitian 1e-12, eigenvalues >= -1e-10,
    /// trace 1 within 1e-10); throws std::invalid_argument otherwise.
    explicit DensityOperator(MatrixXc matrix);

    static DensityOperator maximally_mixed(int dim);
    /// |psi><psi| / <psi|psi>.
    static DensityOperator pure(const VectorXc& psi);
    /// A A^* / tr(A A^*).
    static DensityOperator from_factor(const MatrixXc& factor);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const MatrixXc& matrix() const { return matrix_; }

private:
    MatrixXc matrix_;
};

struct OptimizerConfig {
    std::uint64_t seed = 0;
    int restarts = 32;
    int max_iters = 4000;
    double step_tolerance = 1e-10;
};

/// -sum lambda log2 lambda over the spectrum of the Hermitian part of x,
/// dropping eigenvalues <= 0. Matrix (non-normalized) trace convention.
double spectral_entropy(const MatrixXc& x);

double von_neumann_entropy(const DensityOperator& rho);

/// f(eps) = sum_A c_A w_A(eps) by the O(4^n) double loop. n <= 14.
HypercubeFunction naive_walsh(const MultiplierSymbol& symbol);

struct SpectrumCheck {
    bool pass = false;
    double max_deviation = 0.0;
    /// Largest |J - J^*| entry; the check fails when J is not Hermitian.
    double hermiticity_defect = 0.0;
    Eigen::VectorXd choi_eigenvalues;  // ascending
    Eigen::VectorXd expected;          // sorted f / N
};

/// Compares the sorted Choi spectrum with the sorted multiset {f(eps)/N}.
SpectrumCheck choi_spectrum_check(const MultiplierChannel& ch, double tol);

/// Smallest eigenvalue of the Hermitian part of the Choi matrix.
double choi_min_eigenvalue(const MultiplierChannel& ch);
/// Choi matrix Hermitian with min eigenvalue >= -tol.
bool cp_check_choi(const MultiplierChannel& ch, double tol);

/// Purification |psi> = sum_i sqrt(l_i) |e_i> (x) |i>, eigenvalues in
/// descending order with each eigenvector's first nonzero entry made real
/// positive. The channel acts on the first factor.
VectorXc purify(const DensityOperator& rho);

/// (ch (x) Id)(omega) for omega on C^N (x) C^N, channel on the first factor.
MatrixXc apply_on_first_factor(const MultiplierChannel& ch, const MatrixXc& omega);

/// H(rho) + H(ch(rho)) - H((ch (x) Id)(|psi><psi|)).
double bsst_mutual_information(const MultiplierChannel& ch, const DensityOperator& rho);

struct StateSearchResult {
    double value = 0.0;
    DensityOperator state = DensityOperator::maximally_mixed(1);
    int restart = 0;
};

/// Multi-restart Nelder-Mead over rho = A A^*/tr(A A^*). Restart 0 starts at
/// A = I, so the result is never below the value at I/N. N <= 16.
StateSearchResult bsst_maximize(const MultiplierChannel& ch, const OptimizerConfig& config);

/// Multi-restart Nelder-Mead over unit vectors psi of min H(ch(|psi><psi|)).
/// Restart 0 starts at the first basis vector. N <= 16.
StateSearchResult min_output_entropy_search(const MultiplierChannel& ch,
                                            const OptimizerConfig& config);
double min_output_entropy_numeric(const MultiplierChannel& ch, const OptimizerConfig& config);

// Search machinery, exposed for testing.

struct SimplexResult {
    Eigen::VectorXd argmin;
    double value = 0.0;
    int iterations = 0;
};

/// Nelder-Mead minimization from `start` with an axis-aligned initial simplex
/// of edge `step`. Stops when the simplex value spread and diameter both drop
/// below `tolerance`, or after `max_iters` iterations.
SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                          const Eigen::VectorXd& start, double step, int max_iters,
                          double tolerance);

/// Standard normal deviates from a 64-bit Mersenne Twister by Box-Muller,
/// identical on every platform for a given seed.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
    double next();
    Eigen::VectorXd vector(Eigen::Index size);

private:
    double uniform();
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace radcap
