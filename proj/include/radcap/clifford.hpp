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

#include <vector>

#include "radcap/types.hpp"

namespace radcap {

/// A generalized permutation matrix: row i has its single nonzero entry
/// `phase[i]` in column `col[i]`. Every ordered product s_A of Jordan-Wigner
/// generators has this form.
struct Monomial {
    std::vector<int> col;
    std::vector<complex_t> phase;

    int dim() const { return static_cast<int>(col.size()); }
    MatrixXc to_dense() const;
    /// Matrix product this * rhs.
    Monomial operator*(const Monomial& rhs) const;
};

/// Jordan-Wigner realization of the fermion algebra on n = 2k generators as
/// N x N matrices, N = 2^k. Immutable after construction.
class FermionRep {
public:
    /// s_{2m-1} = Z^(m-1) X I^(k-m), s_{2m} = Z^(m-1) Y I^(k-m).
    /// Throws std::invalid_argument for odd n or n outside [2, 12].
    static FermionRep build(int n);

    int n() const { return n_; }
    int dim() const { return dim_; }
    std::size_t num_subsets() const { return basis_.size(); }
    const std::vector<MatrixXc>& generators() const { return generators_; }

    /// s_A = s_{i1} s_{i2} ... with i1 < i2 < ...; s_{} = I.
    MatrixXc basis_element(Subset a) const;
    const Monomial& monomial(Subset a) const;

    /// lambda_A = tau(s_A^* x) with tau = tr / N.
    VectorXc expand(const MatrixXc& x) const;
    /// sum_A lambda_A s_A.
    MatrixXc reconstruct(const VectorXc& lambda) const;

    /// (tau(|x|^p))^{1/p} from the singular values; p = inf gives the
    /// operator norm.
    double lp_norm_tau(const MatrixXc& x, double p) const;

private:
    FermionRep() = default;
    void check_subset(Subset a) const;
    void check_square(const MatrixXc& x, const char* what) const;

    int n_ = 0;
    int dim_ = 0;
    std::vector<MatrixXc> generators_;
    std::vector<Monomial> basis_;
};

/// (-1)^{#{(a,b) in A x B : a > b}}, so that s_A s_B = product_sign(A,B) s_{A xor B}.
int product_sign(Subset a, Subset b);

/// (-1)^{|A|(|A|-1)/2}, so that s_A^* = adjoint_sign(A) s_A.
int adjoint_sign(Subset a);

/// Normalized Schatten norm of an arbitrary square matrix.
double normalized_schatten_norm(const MatrixXc& x, double p);

}  // namespace radcap
