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

#include "radcap/clifford.hpp"

#include <cmath>
#include <limits>

namespace radcap {

namespace {

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
    MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Monomial from_dense(const MatrixXc& m) {
    Monomial out;
    out.col.assign(m.rows(), -1);
    out.phase.assign(m.rows(), complex_t{0.0, 0.0});
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) == complex_t{0.0, 0.0}) continue;
            if (out.col[i] >= 0) throw std::logic_error("generator is not monomial");
            out.col[i] = static_cast<int>(j);
            out.phase[i] = m(i, j);
        }
        if (out.col[i] < 0) throw std::logic_error("generator has an empty row");
    }
    return out;
}

}  // namespace

MatrixXc Monomial::to_dense() const {
    const int d = dim();
    MatrixXc out = MatrixXc::Zero(d, d);
    for (int i = 0; i < d; ++i) out(i, col[i]) = phase[i];
    return out;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    const int d = dim();
    out.col.resize(d);
    out.phase.resize(d);
    for (int i = 0; i < d; ++i) {
        const int mid = col[i];
        out.col[i] = rhs.col[mid];
        out.phase[i] = phase[i] * rhs.phase[mid];
    }
    return out;
}

FermionRep FermionRep::build(int n) {
    if (n % 2 != 0) {
        throw std::invalid_argument("odd-dimension matrix realization unsupported (n=" +
                                    std::to_string(n) + ")");
    }
    if (n < 2 || n > kMaxMatrixDim) {
        throw std::invalid_argument("fermion representation needs 2 <= n <= " +
                                    std::to_string(kMaxMatrixDim) + ", got " + std::to_string(n));
    }
    const int k = n / 2;
    const complex_t i1{0.0, 1.0};
    MatrixXc x(2, 2), y(2, 2), z(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    y << 0.0, -i1, i1, 0.0;
    z << 1.0, 0.0, 0.0, -1.0;
    const MatrixXc id2 = MatrixXc::Identity(2, 2);

    FermionRep rep;
    rep.n_ = n;
    rep.dim_ = 1 << k;
    for (int m = 1; m <= k; ++m) {
        for (const MatrixXc* middle : {&x, &y}) {
            MatrixXc g = MatrixXc::Identity(1, 1);
            for (int site = 1; site <= k; ++site) {
                const MatrixXc& factor = site < m ? z : (site == m ? *middle : id2);
                g = kron(g, factor);
            }
            rep.generators_.push_back(std::move(g));
        }
    }

    std::vector<Monomial> gens;
    gens.reserve(n);
    for (const auto& g : rep.generators_) gens.push_back(from_dense(g));

    const std::size_t count = std::size_t{1} << n;
    rep.basis_.resize(count);
    rep.basis_[0] = from_dense(MatrixXc::Identity(rep.dim_, rep.dim_));
    for (std::size_t a = 1; a < count; ++a) {
        // s_A = s_{A minus top} * s_top, keeps ascending order.
        const int top = 31 - __builtin_clz(static_cast<unsigned>(a));
        const std::size_t rest = a & ~(std::size_t{1} << top);
        rep.basis_[a] = rep.basis_[rest] * gens[top];
    }
    return rep;
}

void FermionRep::check_subset(Subset a) const {
    if (a >= basis_.size()) {
        throw std::invalid_argument("subset bitmask " + std::to_string(a) + " out of range for n=" +
                                    std::to_string(n_));
    }
}

void FermionRep::check_square(const MatrixXc& x, const char* what) const {
    if (x.rows() != dim_ || x.cols() != dim_) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(dim_) + "x" +
                                    std::to_string(dim_) + " matrix, got " +
                                    std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
    }
}

MatrixXc FermionRep::basis_element(Subset a) const {
    check_subset(a);
    return basis_[a].to_dense();
}

const Monomial& FermionRep::monomial(Subset a) const {
    check_subset(a);
    return basis_[a];
}

VectorXc FermionRep::expand(const MatrixXc& x) const {
    check_square(x, "expand");
    VectorXc lambda(static_cast<Eigen::Index>(basis_.size()));
    const double inv_dim = 1.0 / dim_;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        const Monomial& m = basis_[a];
        // tr(s_A^* x) = sum_i conj((s_A)_{i,col_i}) x_{i,col_i}
        complex_t acc{0.0, 0.0};
        for (int i = 0; i < dim_; ++i) acc += std::conj(m.phase[i]) * x(i, m.col[i]);
        lambda[static_cast<Eigen::Index>(a)] = acc * inv_dim;
    }
    return lambda;
}

MatrixXc FermionRep::reconstruct(const VectorXc& lambda) const {
    if (lambda.size() != static_cast<Eigen::Index>(basis_.size())) {
        throw std::invalid_argument("reconstruct: coefficient vector has wrong length");
    }
    MatrixXc out = MatrixXc::Zero(dim_, dim_);
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        const complex_t c = lambda[static_cast<Eigen::Index>(a)];
        if (c == complex_t{0.0, 0.0}) continue;
        const Monomial& m = basis_[a];
        for (int i = 0; i < dim_; ++i) out(i, m.col[i]) += c * m.phase[i];
    }
    return out;
}

double FermionRep::lp_norm_tau(const MatrixXc& x, double p) const {
    check_square(x, "lp_norm_tau");
    return normalized_schatten_norm(x, p);
}

double normalized_schatten_norm(const MatrixXc& x, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("Schatten norm: p must be >= 1 or infinity");
    if (x.rows() != x.cols() || x.rows() == 0) {
        throw std::invalid_argument("Schatten norm: matrix must be square and nonempty");
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<MatrixXc>(x).singularValues();
    const double top = sv.maxCoeff();
    if (std::isinf(p)) return top;
    if (top == 0.0) return 0.0;
    const double avg = (sv / top).array().pow(p).sum() / static_cast<double>(x.rows());
    return top * std::pow(avg, 1.0 / p);
}

int product_sign(Subset a, Subset b) {
    // Count pairs (i in A, j in B) with i > j.
    int inversions = 0;
    for (Subset rest = a; rest != 0; rest &= rest - 1) {
        const int i = __builtin_ctz(rest);
        const Subset below = (Subset{1} << i) - 1;
        inversions += popcount(b & below);
    }
    return (inversions & 1) ? -1 : 1;
}

int adjoint_sign(Subset a) {
    const int k = popcount(a);
    return ((k * (k - 1) / 2) & 1) ? -1 : 1;
}

}  // namespace radcap
