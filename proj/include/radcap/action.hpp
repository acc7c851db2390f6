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

// Matrix realizations of the hypercube action on the fermion algebra and the
// identities relating it to multipliers. Functions on the hypercube act as
// diagonal 2^n x 2^n matrices in bitmask order; tensor products use the
// Kronecker convention with the first factor as the major index.

#include <functional>

#include "radcap/channel.hpp"

namespace radcap {

/// A linear map on matrices, e.g. alpha, beta or a channel.
using MatrixMap = std::function<MatrixXc(const MatrixXc&)>;
/// A linear map from hypercube functions to matrices, e.g. eta.
using FunctionToMatrixMap = std::function<MatrixXc(const HypercubeFunction&)>;
/// A linear map on hypercube functions, e.g. a hypercube multiplier.
using FunctionMap = std::function<HypercubeFunction(const HypercubeFunction&)>;

/// diag(f(eps)) in bitmask order.
MatrixXc diagonal_matrix(const HypercubeFunction& f);
/// w_A as a hypercube function.
HypercubeFunction walsh_function(int n, Subset a);

/// alpha(s_A) = s_A (x) diag(w_A), extended linearly. Size N 2^n.
MatrixXc alpha(const FermionRep& rep, const MatrixXc& x);
/// beta(s_A) = diag(w_A) (x) s_A; the tensor flip of alpha.
MatrixXc beta(const FermionRep& rep, const MatrixXc& x);
/// eta(w_A) = s_A (x) s_A, extended linearly through the Walsh expansion of f.
MatrixXc eta(const FermionRep& rep, const HypercubeFunction& f);

/// Delta(w_A) = w_A (x) w_A, as a function on the doubled hypercube whose
/// index is eps1 * 2^n + eps2.
HypercubeFunction coproduct(const HypercubeFunction& g);

/// Y' with (a (x) b) -> (b (x) a) for Y on C^d1 (x) C^d2.
MatrixXc swap_tensor_factors(const MatrixXc& y, Eigen::Index d1, Eigen::Index d2);
/// (Id (x) tau)(Y) with tau the normalized trace on the d2 factor.
MatrixXc normalized_partial_trace_second(const MatrixXc& y, Eigen::Index d1, Eigen::Index d2);
/// The N x N block of Y in M_N (x) L^inf sitting at point eps.
MatrixXc epsilon_slice(const MatrixXc& y, int dim, int n, Subset eps);

/// Outcome of an identity check; converts to the pass flag.
struct IdentityCheck {
    bool pass = false;
    double max_deviation = 0.0;
    explicit operator bool() const { return pass; }
};

MatrixMap default_alpha(const FermionRep& rep);
MatrixMap default_beta(const FermionRep& rep);
FunctionToMatrixMap default_eta(const FermionRep& rep);

/// `map` with the image of basis element s_target negated. Used to check
/// that each verifier notices a single-sign corruption.
MatrixMap with_sign_flip(const FermionRep& rep, MatrixMap map, Subset target);
FunctionToMatrixMap with_sign_flip(FunctionToMatrixMap map, int n, Subset target);

inline constexpr double kIdentityTol = 1e-12;

/// (alpha (x) Id) o alpha = (Id (x) Delta) o alpha on every s_A. n in {2, 4}.
IdentityCheck verify_coassociativity(const FermionRep& rep);
IdentityCheck verify_coassociativity(const FermionRep& rep, const MatrixMap& alpha_map);

/// Dimension of {x : alpha(x) = x (x) I}, solved over the s_A coefficients.
int fixed_space_dimension(const FermionRep& rep, const MatrixMap& alpha_map);
/// Fixed space of alpha is exactly span{I}. n in {2, 4, 6}.
bool verify_ergodicity(const FermionRep& rep);
bool verify_ergodicity(const FermionRep& rep, const MatrixMap& alpha_map);

/// Normalized traces of alpha(s_A), beta(s_A) and eta(w_A) equal delta_{A,{}}.
IdentityCheck verify_trace_preservation(const FermionRep& rep);
IdentityCheck verify_trace_preservation(const FermionRep& rep, const MatrixMap& alpha_map,
                                        const MatrixMap& beta_map,
                                        const FunctionToMatrixMap& eta_map);

/// beta o R = (Id (x) R) o beta and alpha o R = (Id (x) T) o alpha on every
/// s_A, and (Id (x) R) o eta = eta o T on every w_A. R and T default to the
/// channel's matrix and hypercube multipliers.
IdentityCheck verify_intertwining(const MultiplierChannel& ch);
IdentityCheck verify_intertwining(const MultiplierChannel& ch, const MatrixMap& matrix_multiplier,
                                  const FunctionMap& function_multiplier);

/// Rank of {map(s_A)}; equals 2^n when the map is injective on the basis.
int basis_image_rank(const FermionRep& rep, const MatrixMap& map);
int basis_image_rank(const FermionRep& rep, const FunctionToMatrixMap& map);

}  // namespace radcap
