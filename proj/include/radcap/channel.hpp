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

#include <memory>
#include <span>

#include "radcap/clifford.hpp"
#include "radcap/hypercube.hpp"

namespace radcap {

enum class Realization {
    /// Attach a matrix realization whenever n is even and small enough.
    kAuto,
    /// Symbol-level channel only.
    kNone,
};

/// A diagonal multiplier s_A -> c_A s_A on the fermion algebra (and w_A ->
/// c_A w_A on the hypercube), together with its cached symbol function f.
class MultiplierChannel {
public:
    explicit MultiplierChannel(MultiplierSymbol symbol, Realization realization = Realization::kAuto);

    int n() const { return symbol_.n; }
    const MultiplierSymbol& symbol() const { return symbol_; }
    /// f = walsh_synthesize(symbol).
    const HypercubeFunction& symbol_function() const { return f_; }

    bool has_matrix_realization() const { return rep_ != nullptr; }
    /// Throws NoMatrixRealization when absent.
    const FermionRep& rep() const;
    /// N = 2^{n/2}; requires a matrix realization.
    int dim() const { return rep().dim(); }

private:
    MultiplierSymbol symbol_;
    HypercubeFunction f_;
    std::shared_ptr<const FermionRep> rep_;
};

/// Shared immutable Jordan-Wigner representation for even n in [2, 12].
std::shared_ptr<const FermionRep> shared_rep(int n);

// Constructors.
MultiplierChannel radial(std::span<const complex_t> phi, int n);
MultiplierChannel radial(std::span<const double> phi, int n);
/// x -> (1-t) x + t Z x Z on M_2, i.e. phi = (1, 1-2t, 1).
MultiplierChannel dephasing(double t);
/// phi(k) = exp(-t k).
MultiplierChannel ou_semigroup(int n, double t);
MultiplierChannel identity_channel(int n);
/// phi = (1, 0, ..., 0).
MultiplierChannel completely_noisy(int n);

/// R(x) = sum_A c_A lambda_A(x) s_A.
MatrixXc apply_channel(const MultiplierChannel& ch, const MatrixXc& x);
/// The hypercube multiplier T(g) = sum_A c_A ghat_A w_A.
HypercubeFunction apply_hypercube(const MultiplierChannel& ch, const HypercubeFunction& g);

/// Matrix of `apply` acting on column-stacked vec(x).
MatrixXc superoperator_matrix(const MultiplierChannel& ch);
/// J = sum_ij E_ij (x) apply_channel(E_ij).
MatrixXc choi_matrix(const MultiplierChannel& ch);

/// c_{} = 1, confirmed on matrices when a realization is attached.
bool is_unital_trace_preserving(const MultiplierChannel& ch);
/// f real and min f >= -kPositivityTol.
bool is_completely_positive(const MultiplierChannel& ch);
bool is_quantum_channel(const MultiplierChannel& ch);

/// Symbol c_{A u (B+n1)} = c1_A c2_B on n1 + n2 generators. The result is
/// generally not radial.
MultiplierChannel tensor(const MultiplierChannel& first, const MultiplierChannel& second);
/// first o second; pointwise product of symbols.
MultiplierChannel compose(const MultiplierChannel& first, const MultiplierChannel& second);

}  // namespace radcap
