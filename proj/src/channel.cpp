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

#include "radcap/channel.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

namespace radcap {

namespace {

constexpr double kStructuralTol = 1e-10;

MultiplierChannel from_real_phi(std::span<const double> phi, int n) {
    std::vector<complex_t> c(phi.begin(), phi.end());
    return radial(std::span<const complex_t>(c), n);
}

}  // namespace

std::shared_ptr<const FermionRep> shared_rep(int n) {
    static std::mutex mutex;
    static std::array<std::shared_ptr<const FermionRep>, kMaxMatrixDim + 1> cache;
    if (n < 2 || n > kMaxMatrixDim || n % 2 != 0) {
        // Delegate the error message.
        return std::make_shared<const FermionRep>(FermionRep::build(n));
    }
    std::lock_guard lock(mutex);
    if (!cache[n]) cache[n] = std::make_shared<const FermionRep>(FermionRep::build(n));
    return cache[n];
}

MultiplierChannel::MultiplierChannel(MultiplierSymbol symbol, Realization realization)
    : symbol_(std::move(symbol)), f_(walsh_synthesize(symbol_)) {
    if (realization == Realization::kAuto && symbol_.n >= 2 && symbol_.n % 2 == 0 &&
        symbol_.n <= kMaxMatrixDim) {
        rep_ = shared_rep(symbol_.n);
    }
}

const FermionRep& MultiplierChannel::rep() const {
    if (!rep_) {
        throw NoMatrixRealization("channel on n=" + std::to_string(symbol_.n) +
                                  " generators has no matrix realization");
    }
    return *rep_;
}

MultiplierChannel radial(std::span<const complex_t> phi, int n) {
    return MultiplierChannel(MultiplierSymbol::radial(phi, n));
}

MultiplierChannel radial(std::span<const double> phi, int n) { return from_real_phi(phi, n); }

MultiplierChannel dephasing(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("dephasing: t must lie in [0, 1], got " + std::to_string(t));
    }
    const std::array<double, 3> phi{1.0, 1.0 - 2.0 * t, 1.0};
    return from_real_phi(phi, 2);
}

MultiplierChannel ou_semigroup(int n, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("ou_semigroup: t must be nonnegative, got " + std::to_string(t));
    }
    if (n < 2) throw std::invalid_argument("ou_semigroup: n must be >= 2");
    std::vector<double> phi(n + 1);
    for (int k = 0; k <= n; ++k) phi[k] = std::exp(-t * k);
    return from_real_phi(phi, n);
}

MultiplierChannel identity_channel(int n) {
    std::vector<double> phi(n + 1, 1.0);
    return from_real_phi(phi, n);
}

MultiplierChannel completely_noisy(int n) {
    std::vector<double> phi(n + 1, 0.0);
    phi[0] = 1.0;
    return from_real_phi(phi, n);
}

MatrixXc apply_channel(const MultiplierChannel& ch, const MatrixXc& x) {
    const FermionRep& rep = ch.rep();
    VectorXc lambda = rep.expand(x);
    lambda.array() *= ch.symbol().coeffs.array();
    return rep.reconstruct(lambda);
}

HypercubeFunction apply_hypercube(const MultiplierChannel& ch, const HypercubeFunction& g) {
    if (g.n != ch.n()) throw std::invalid_argument("apply_hypercube: dimension mismatch");
    MultiplierSymbol coeffs = walsh_analyze(g);
    coeffs.coeffs.array() *= ch.symbol().coeffs.array();
    return walsh_synthesize(coeffs);
}

MatrixXc superoperator_matrix(const MultiplierChannel& ch) {
    const int dim = ch.dim();
    const Eigen::Index d2 = Eigen::Index{dim} * dim;
    MatrixXc out(d2, d2);
    MatrixXc unit = MatrixXc::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            unit(i, j) = 1.0;
            const MatrixXc image = apply_channel(ch, unit);
            unit(i, j) = 0.0;
            out.col(i + Eigen::Index{j} * dim) = image.reshaped();
        }
    }
    return out;
}

MatrixXc choi_matrix(const MultiplierChannel& ch) {
    const int dim = ch.dim();
    const Eigen::Index d2 = Eigen::Index{dim} * dim;
    MatrixXc out(d2, d2);
    MatrixXc unit = MatrixXc::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            unit(i, j) = 1.0;
            out.block(Eigen::Index{i} * dim, Eigen::Index{j} * dim, dim, dim) = apply_channel(ch, unit);
            unit(i, j) = 0.0;
        }
    }
    return out;
}

bool is_unital_trace_preserving(const MultiplierChannel& ch) {
    if (std::abs(ch.symbol().coeffs[0] - 1.0) > kRealTol) return false;
    if (!ch.has_matrix_realization()) return true;
    const int dim = ch.dim();
    const MatrixXc id = MatrixXc::Identity(dim, dim);
    if ((apply_channel(ch, id) - id).cwiseAbs().maxCoeff() > kStructuralTol) return false;
    MatrixXc unit = MatrixXc::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            unit(i, j) = 1.0;
            const complex_t tr = apply_channel(ch, unit).trace();
            unit(i, j) = 0.0;
            if (std::abs(tr - (i == j ? 1.0 : 0.0)) > kStructuralTol) return false;
        }
    }
    return true;
}

bool is_completely_positive(const MultiplierChannel& ch) {
    const HypercubeFunction& f = ch.symbol_function();
    if (!f.is_real()) return false;
    return min_value(f) >= -kPositivityTol;
}

bool is_quantum_channel(const MultiplierChannel& ch) {
    return is_completely_positive(ch) && is_unital_trace_preserving(ch);
}

MultiplierChannel tensor(const MultiplierChannel& first, const MultiplierChannel& second) {
    const int n1 = first.n();
    const int n2 = second.n();
    if (n1 + n2 > kMaxHypercubeDim) {
        throw std::invalid_argument("tensor: combined dimension " + std::to_string(n1 + n2) +
                                    " exceeds " + std::to_string(kMaxHypercubeDim));
    }
    const VectorXc& c1 = first.symbol().coeffs;
    const VectorXc& c2 = second.symbol().coeffs;
    VectorXc c(c1.size() * c2.size());
    for (Eigen::Index b = 0; b < c2.size(); ++b) c.segment(b * c1.size(), c1.size()) = c1 * c2[b];
    return MultiplierChannel(MultiplierSymbol::from_coefficients(n1 + n2, std::move(c)));
}

MultiplierChannel compose(const MultiplierChannel& first, const MultiplierChannel& second) {
    if (first.n() != second.n()) throw std::invalid_argument("compose: dimension mismatch");
    const MultiplierSymbol& s1 = first.symbol();
    const MultiplierSymbol& s2 = second.symbol();
    if (s1.radial_origin && s2.radial_origin) {
        std::vector<complex_t> phi(first.n() + 1);
        for (int k = 0; k <= first.n(); ++k) phi[k] = (*s1.radial_origin)[k] * (*s2.radial_origin)[k];
        return radial(std::span<const complex_t>(phi), first.n());
    }
    VectorXc c = s1.coeffs.cwiseProduct(s2.coeffs);
    return MultiplierChannel(MultiplierSymbol::from_coefficients(first.n(), std::move(c)));
}

}  // namespace radcap
