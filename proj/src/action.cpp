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

#include "radcap/action.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

namespace radcap {

namespace {

constexpr double kNonzero = 1e-14;

Eigen::Index cube_size(int n) { return Eigen::Index{1} << n; }

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
    MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double max_abs(const MatrixXc& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double deviation(const MatrixXc& a, const MatrixXc& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
    return max_abs(a - b);
}

/// Rank of the column set {vec(image_k)}, gathered sparsely so only rows
/// that are nonzero in some image enter the dense factorization.
class SparseColumnRank {
public:
    void add_column(const MatrixXc& image) {
        const Eigen::Index col = static_cast<Eigen::Index>(columns_);
        for (Eigen::Index k = 0; k < image.size(); ++k) {
            const complex_t v = image.reshaped()[k];
            if (std::abs(v) <= kNonzero) continue;
            auto [it, inserted] = rows_.try_emplace(k, static_cast<Eigen::Index>(rows_.size()));
            entries_.push_back({it->second, col, v});
        }
        ++columns_;
    }

    int rank() const {
        if (rows_.empty() || columns_ == 0) return 0;
        MatrixXc dense = MatrixXc::Zero(static_cast<Eigen::Index>(rows_.size()),
                                        static_cast<Eigen::Index>(columns_));
        for (const auto& e : entries_) dense(e.row, e.col) = e.value;
        const Eigen::VectorXd sv = Eigen::JacobiSVD<MatrixXc>(dense).singularValues();
        const double cutoff = 1e-9 * std::max(1.0, sv.maxCoeff());
        return static_cast<int>((sv.array() > cutoff).count());
    }

    int columns() const { return static_cast<int>(columns_); }

private:
    struct Entry {
        Eigen::Index row;
        Eigen::Index col;
        complex_t value;
    };
    std::unordered_map<Eigen::Index, Eigen::Index> rows_;
    std::vector<Entry> entries_;
    std::size_t columns_ = 0;
};

/// Walsh character at every point as an n-point sign pattern, scaled.
VectorXc scaled_walsh(int n, Subset a, complex_t scale) {
    VectorXc v(cube_size(n));
    for (Eigen::Index e = 0; e < v.size(); ++e) {
        v[e] = static_cast<double>(walsh_sign(a, static_cast<Subset>(e))) * scale;
    }
    return v;
}

/// (Id (x) M) on C^d1 (x) C^d2 where M acts on the d2 x d2 blocks.
MatrixXc apply_to_second_factor(const MatrixXc& y, Eigen::Index d1, Eigen::Index d2,
                                const MatrixMap& map) {
    MatrixXc out = MatrixXc::Zero(d1 * d2, d1 * d2);
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d1; ++j) {
            const MatrixXc block = y.block(i * d2, j * d2, d2, d2);
            if (max_abs(block) <= kNonzero) continue;
            out.block(i * d2, j * d2, d2, d2) = map(block);
        }
    }
    return out;
}

/// Applies a function map to each diagonal block in L^inf, recording any
/// off-diagonal mass (which lies outside the map's domain) in `outside`.
MatrixXc apply_to_diagonal_second_factor(const MatrixXc& y, Eigen::Index d1, int n,
                                         const std::function<MatrixXc(const HypercubeFunction&)>& map,
                                         Eigen::Index out_block, double& outside) {
    const Eigen::Index k = cube_size(n);
    MatrixXc out = MatrixXc::Zero(d1 * out_block, d1 * out_block);
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d1; ++j) {
            MatrixXc block = y.block(i * k, j * k, k, k);
            HypercubeFunction g;
            g.n = n;
            g.values = block.diagonal();
            block.diagonal().setZero();
            outside = std::max(outside, max_abs(block));
            if (g.values.cwiseAbs().maxCoeff() <= kNonzero) continue;
            out.block(i * out_block, j * out_block, out_block, out_block) = map(g);
        }
    }
    return out;
}

void require_dimension(const FermionRep& rep, std::initializer_list<int> allowed, const char* what) {
    if (std::find(allowed.begin(), allowed.end(), rep.n()) == allowed.end()) {
        throw std::invalid_argument(std::string(what) + ": unsupported n=" + std::to_string(rep.n()));
    }
}

}  // namespace

MatrixXc diagonal_matrix(const HypercubeFunction& f) {
    f.validate();
    return f.values.asDiagonal();
}

HypercubeFunction walsh_function(int n, Subset a) {
    HypercubeFunction w;
    w.n = n;
    w.values = scaled_walsh(n, a, 1.0);
    return w;
}

MatrixXc alpha(const FermionRep& rep, const MatrixXc& x) {
    const VectorXc lambda = rep.expand(x);
    const int dim = rep.dim();
    const Eigen::Index k = cube_size(rep.n());
    MatrixXc out = MatrixXc::Zero(dim * k, dim * k);
    for (Eigen::Index a = 0; a < lambda.size(); ++a) {
        if (lambda[a] == complex_t{0.0, 0.0}) continue;
        const Monomial& m = rep.monomial(static_cast<Subset>(a));
        const VectorXc w = scaled_walsh(rep.n(), static_cast<Subset>(a), lambda[a]);
        for (int i = 0; i < dim; ++i) {
            for (Eigen::Index e = 0; e < k; ++e) out(i * k + e, m.col[i] * k + e) += m.phase[i] * w[e];
        }
    }
    return out;
}

MatrixXc beta(const FermionRep& rep, const MatrixXc& x) {
    const VectorXc lambda = rep.expand(x);
    const int dim = rep.dim();
    const Eigen::Index k = cube_size(rep.n());
    MatrixXc out = MatrixXc::Zero(dim * k, dim * k);
    for (Eigen::Index a = 0; a < lambda.size(); ++a) {
        if (lambda[a] == complex_t{0.0, 0.0}) continue;
        const Monomial& m = rep.monomial(static_cast<Subset>(a));
        const VectorXc w = scaled_walsh(rep.n(), static_cast<Subset>(a), lambda[a]);
        for (Eigen::Index e = 0; e < k; ++e) {
            for (int i = 0; i < dim; ++i) out(e * dim + i, e * dim + m.col[i]) += w[e] * m.phase[i];
        }
    }
    return out;
}

MatrixXc eta(const FermionRep& rep, const HypercubeFunction& f) {
    if (f.n != rep.n()) throw std::invalid_argument("eta: dimension mismatch");
    const VectorXc c = walsh_analyze(f).coeffs;
    const int dim = rep.dim();
    MatrixXc out = MatrixXc::Zero(Eigen::Index{dim} * dim, Eigen::Index{dim} * dim);
    for (Eigen::Index a = 0; a < c.size(); ++a) {
        if (c[a] == complex_t{0.0, 0.0}) continue;
        const Monomial& m = rep.monomial(static_cast<Subset>(a));
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                out(i * dim + j, m.col[i] * dim + m.col[j]) += c[a] * m.phase[i] * m.phase[j];
            }
        }
    }
    return out;
}

HypercubeFunction coproduct(const HypercubeFunction& g) {
    const MultiplierSymbol coeffs = walsh_analyze(g);
    const int n = g.n;
    // w_A (x) w_A is the Walsh character of A in both halves of the doubled cube.
    VectorXc doubled = VectorXc::Zero(cube_size(2 * n));
    for (Eigen::Index a = 0; a < coeffs.coeffs.size(); ++a) doubled[a | (a << n)] = coeffs.coeffs[a];
    return walsh_synthesize(MultiplierSymbol::from_coefficients(2 * n, std::move(doubled)));
}

MatrixXc swap_tensor_factors(const MatrixXc& y, Eigen::Index d1, Eigen::Index d2) {
    if (y.rows() != d1 * d2 || y.cols() != d1 * d2) {
        throw std::invalid_argument("swap_tensor_factors: size mismatch");
    }
    MatrixXc out(d1 * d2, d1 * d2);
    for (Eigen::Index i = 0; i < d1; ++i)
        for (Eigen::Index j = 0; j < d2; ++j)
            for (Eigen::Index k = 0; k < d1; ++k)
                for (Eigen::Index l = 0; l < d2; ++l) out(j * d1 + i, l * d1 + k) = y(i * d2 + j, k * d2 + l);
    return out;
}

MatrixXc normalized_partial_trace_second(const MatrixXc& y, Eigen::Index d1, Eigen::Index d2) {
    if (y.rows() != d1 * d2 || y.cols() != d1 * d2) {
        throw std::invalid_argument("normalized_partial_trace_second: size mismatch");
    }
    MatrixXc out(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
        for (Eigen::Index k = 0; k < d1; ++k) out(i, k) = y.block(i * d2, k * d2, d2, d2).trace();
    return out / static_cast<double>(d2);
}

MatrixXc epsilon_slice(const MatrixXc& y, int dim, int n, Subset eps) {
    const Eigen::Index k = cube_size(n);
    if (y.rows() != dim * k || y.cols() != dim * k) throw std::invalid_argument("epsilon_slice: size mismatch");
    MatrixXc out(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out(i, j) = y(i * k + eps, j * k + eps);
    return out;
}

MatrixMap default_alpha(const FermionRep& rep) {
    return [&rep](const MatrixXc& x) { return alpha(rep, x); };
}

MatrixMap default_beta(const FermionRep& rep) {
    return [&rep](const MatrixXc& x) { return beta(rep, x); };
}

FunctionToMatrixMap default_eta(const FermionRep& rep) {
    return [&rep](const HypercubeFunction& f) { return eta(rep, f); };
}

MatrixMap with_sign_flip(const FermionRep& rep, MatrixMap map, Subset target) {
    return [&rep, map = std::move(map), target](const MatrixXc& x) {
        VectorXc lambda = rep.expand(x);
        lambda[target] = -lambda[target];
        return map(rep.reconstruct(lambda));
    };
}

FunctionToMatrixMap with_sign_flip(FunctionToMatrixMap map, int n, Subset target) {
    return [map = std::move(map), n, target](const HypercubeFunction& f) {
        MultiplierSymbol c = walsh_analyze(f);
        if (c.n != n) throw std::invalid_argument("with_sign_flip: dimension mismatch");
        c.coeffs[target] = -c.coeffs[target];
        return map(walsh_synthesize(c));
    };
}

IdentityCheck verify_coassociativity(const FermionRep& rep) {
    return verify_coassociativity(rep, default_alpha(rep));
}

IdentityCheck verify_coassociativity(const FermionRep& rep, const MatrixMap& alpha_map) {
    require_dimension(rep, {2, 4}, "verify_coassociativity");
    const int dim = rep.dim();
    const int n = rep.n();
    const Eigen::Index k = cube_size(n);
    const Eigen::Index big = dim * k;
    IdentityCheck check;
    for (std::size_t a = 0; a < rep.num_subsets(); ++a) {
        const MatrixXc y = alpha_map(rep.basis_element(static_cast<Subset>(a)));
        if (y.rows() != big || y.cols() != big) {
            check.max_deviation = std::numeric_limits<double>::infinity();
            break;
        }
        // (alpha (x) Id)(y): alpha on each N x N block over the L^inf factor.
        MatrixXc lhs = MatrixXc::Zero(big * k, big * k);
        MatrixXc block(dim, dim);
        for (Eigen::Index e = 0; e < k; ++e) {
            for (Eigen::Index f = 0; f < k; ++f) {
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) block(i, j) = y(i * k + e, j * k + f);
                if (max_abs(block) <= kNonzero) continue;
                const MatrixXc image = alpha_map(block);
                for (Eigen::Index r = 0; r < big; ++r)
                    for (Eigen::Index c = 0; c < big; ++c) lhs(r * k + e, c * k + f) = image(r, c);
            }
        }
        // (Id (x) Delta)(y).
        double outside = 0.0;
        const MatrixXc rhs = apply_to_diagonal_second_factor(
            y, dim, n, [](const HypercubeFunction& g) { return diagonal_matrix(coproduct(g)); },
            k * k, outside);
        check.max_deviation = std::max({check.max_deviation, deviation(lhs, rhs), outside});
    }
    check.pass = check.max_deviation <= kIdentityTol;
    return check;
}

int fixed_space_dimension(const FermionRep& rep, const MatrixMap& alpha_map) {
    const Eigen::Index k = cube_size(rep.n());
    const MatrixXc id_k = MatrixXc::Identity(k, k);
    SparseColumnRank rank;
    for (std::size_t a = 0; a < rep.num_subsets(); ++a) {
        const MatrixXc s = rep.basis_element(static_cast<Subset>(a));
        rank.add_column(alpha_map(s) - kron(s, id_k));
    }
    return rank.columns() - rank.rank();
}

bool verify_ergodicity(const FermionRep& rep) { return verify_ergodicity(rep, default_alpha(rep)); }

bool verify_ergodicity(const FermionRep& rep, const MatrixMap& alpha_map) {
    require_dimension(rep, {2, 4, 6}, "verify_ergodicity");
    if (fixed_space_dimension(rep, alpha_map) != 1) return false;
    // span{I} itself must be fixed.
    const Eigen::Index k = cube_size(rep.n());
    const MatrixXc id = MatrixXc::Identity(rep.dim(), rep.dim());
    return deviation(alpha_map(id), kron(id, MatrixXc::Identity(k, k))) <= kIdentityTol;
}

IdentityCheck verify_trace_preservation(const FermionRep& rep) {
    return verify_trace_preservation(rep, default_alpha(rep), default_beta(rep), default_eta(rep));
}

IdentityCheck verify_trace_preservation(const FermionRep& rep, const MatrixMap& alpha_map,
                                        const MatrixMap& beta_map,
                                        const FunctionToMatrixMap& eta_map) {
    require_dimension(rep, {2, 4, 6}, "verify_trace_preservation");
    const auto tau = [](const MatrixXc& m) { return m.trace() / static_cast<double>(m.rows()); };
    IdentityCheck check;
    for (std::size_t a = 0; a < rep.num_subsets(); ++a) {
        const Subset subset = static_cast<Subset>(a);
        const double expected = a == 0 ? 1.0 : 0.0;
        const MatrixXc s = rep.basis_element(subset);
        for (const complex_t t : {tau(alpha_map(s)), tau(beta_map(s)),
                                  tau(eta_map(walsh_function(rep.n(), subset)))}) {
            check.max_deviation = std::max(check.max_deviation, std::abs(t - expected));
        }
    }
    check.pass = check.max_deviation <= kIdentityTol;
    return check;
}

IdentityCheck verify_intertwining(const MultiplierChannel& ch) {
    return verify_intertwining(
        ch, [&ch](const MatrixXc& x) { return apply_channel(ch, x); },
        [&ch](const HypercubeFunction& g) { return apply_hypercube(ch, g); });
}

IdentityCheck verify_intertwining(const MultiplierChannel& ch, const MatrixMap& matrix_multiplier,
                                  const FunctionMap& function_multiplier) {
    const FermionRep& rep = ch.rep();
    require_dimension(rep, {2, 4}, "verify_intertwining");
    const int dim = rep.dim();
    const int n = rep.n();
    const Eigen::Index k = cube_size(n);
    IdentityCheck check;
    for (std::size_t a = 0; a < rep.num_subsets(); ++a) {
        const Subset subset = static_cast<Subset>(a);
        const MatrixXc s = rep.basis_element(subset);

        // beta o R = (Id (x) R) o beta
        const MatrixXc lhs1 = beta(rep, matrix_multiplier(s));
        const MatrixXc rhs1 = apply_to_second_factor(beta(rep, s), k, dim, matrix_multiplier);

        // alpha o R = (Id (x) T) o alpha
        const MatrixXc lhs2 = alpha(rep, matrix_multiplier(s));
        double outside = 0.0;
        const MatrixXc rhs2 = apply_to_diagonal_second_factor(
            alpha(rep, s), dim, n,
            [&](const HypercubeFunction& g) { return diagonal_matrix(function_multiplier(g)); }, k,
            outside);

        // (Id (x) R) o eta = eta o T
        const HypercubeFunction w = walsh_function(n, subset);
        const MatrixXc lhs3 = apply_to_second_factor(eta(rep, w), dim, dim, matrix_multiplier);
        const MatrixXc rhs3 = eta(rep, function_multiplier(w));

        check.max_deviation = std::max({check.max_deviation, deviation(lhs1, rhs1),
                                        deviation(lhs2, rhs2), deviation(lhs3, rhs3), outside});
    }
    check.pass = check.max_deviation <= kIdentityTol;
    return check;
}

int basis_image_rank(const FermionRep& rep, const MatrixMap& map) {
    SparseColumnRank rank;
    for (std::size_t a = 0; a < rep.num_subsets(); ++a) {
        rank.add_column(map(rep.basis_element(static_cast<Subset>(a))));
    }
    return rank.rank();
}

int basis_image_rank(const FermionRep& rep, const FunctionToMatrixMap& map) {
    SparseColumnRank rank;
    for (std::size_t a = 0; a < rep.num_subsets(); ++a) {
        rank.add_column(map(walsh_function(rep.n(), static_cast<Subset>(a))));
    }
    return rank.rank();
}

}  // namespace radcap
