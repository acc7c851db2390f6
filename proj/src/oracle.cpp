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

#include "radcap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace radcap {

namespace {

constexpr int kMaxSearchDim = 16;
constexpr double kStateHermitianTol = 1e-12;
constexpr double kStateEigenTol = 1e-10;
constexpr double kStateTraceTol = 1e-10;

Eigen::VectorXd hermitian_eigenvalues(const MatrixXc& x) {
    const MatrixXc herm = 0.5 * (x + x.adjoint());
    return Eigen::SelfAdjointEigenSolver<MatrixXc>(herm, Eigen::EigenvaluesOnly).eigenvalues();
}

void require_search_channel(const MultiplierChannel& ch, const char* what) {
    if (!is_quantum_channel(ch)) throw NotAChannel(std::string(what) + ": not a quantum channel");
    if (ch.dim() > kMaxSearchDim) {
        throw std::invalid_argument(std::string(what) + ": matrix size " +
                                    std::to_string(ch.dim()) + " exceeds " +
                                    std::to_string(kMaxSearchDim));
    }
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
    return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart + 1);
}

MatrixXc unpack_matrix(const Eigen::VectorXd& params, int dim) {
    const Eigen::Index count = Eigen::Index{dim} * dim;
    MatrixXc a(dim, dim);
    for (Eigen::Index k = 0; k < count; ++k) {
        a.reshaped()[k] = complex_t{params[2 * k], params[2 * k + 1]};
    }
    return a;
}

VectorXc unpack_vector(const Eigen::VectorXd& params) {
    VectorXc v(params.size() / 2);
    for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = complex_t{params[2 * k], params[2 * k + 1]};
    return v;
}

Eigen::VectorXd pack(const VectorXc& v) {
    Eigen::VectorXd out(2 * v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out[2 * k] = v[k].real();
        out[2 * k + 1] = v[k].imag();
    }
    return out;
}

}  // namespace

DensityOperator::DensityOperator(MatrixXc matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw std::invalid_argument("density operator must be a nonempty square matrix");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kStateHermitianTol) {
        throw std::invalid_argument("density operator is not Hermitian");
    }
    if (std::abs(matrix_.trace() - 1.0) > kStateTraceTol) {
        throw std::invalid_argument("density operator trace differs from 1");
    }
    if (hermitian_eigenvalues(matrix_).minCoeff() < -kStateEigenTol) {
        throw std::invalid_argument("density operator has a negative eigenvalue");
    }
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
    return DensityOperator(MatrixXc::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator DensityOperator::pure(const VectorXc& psi) {
    const double norm2 = psi.squaredNorm();
    if (!(norm2 > 0.0)) throw std::invalid_argument("pure state from the zero vector");
    MatrixXc m = psi * psi.adjoint() / norm2;
    m = 0.5 * (m + m.adjoint());
    return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::from_factor(const MatrixXc& factor) {
    MatrixXc m = factor * factor.adjoint();
    const double tr = m.trace().real();
    if (!(tr > 0.0)) throw std::invalid_argument("state factor is zero");
    m /= tr;
    m = 0.5 * (m + m.adjoint());
    return DensityOperator(std::move(m));
}

double spectral_entropy(const MatrixXc& x) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(x);
    double acc = 0.0;
    for (double l : ev) {
        if (l > 0.0) acc -= l * std::log2(l);
    }
    return acc;
}

double von_neumann_entropy(const DensityOperator& rho) { return spectral_entropy(rho.matrix()); }

HypercubeFunction naive_walsh(const MultiplierSymbol& symbol) {
    symbol.validate();
    if (symbol.n > 14) throw std::invalid_argument("naive_walsh: n must be <= 14");
    const Subset count = Subset{1} << symbol.n;
    HypercubeFunction f;
    f.n = symbol.n;
    f.values = VectorXc::Zero(count);
    // Neumaier-compensated sums, so the reference is measurably more
    // accurate than the transform it checks.
    const auto add = [](double& sum, double& carry, double term) {
        const double t = sum + term;
        carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    };
    for (Subset eps = 0; eps < count; ++eps) {
        double re = 0.0, re_carry = 0.0, im = 0.0, im_carry = 0.0;
        for (Subset a = 0; a < count; ++a) {
            const double w = static_cast<double>(walsh_sign(a, eps));
            add(re, re_carry, w * symbol.coeffs[a].real());
            add(im, im_carry, w * symbol.coeffs[a].imag());
        }
        f.values[eps] = complex_t{re + re_carry, im + im_carry};
    }
    return f;
}

SpectrumCheck choi_spectrum_check(const MultiplierChannel& ch, double tol) {
    if (ch.n() % 2 != 0) throw std::invalid_argument("choi_spectrum_check: odd n");
    const MatrixXc choi = choi_matrix(ch);
    SpectrumCheck out;
    out.hermiticity_defect = (choi - choi.adjoint()).cwiseAbs().maxCoeff();
    out.choi_eigenvalues = hermitian_eigenvalues(choi);
    const HypercubeFunction& f = ch.symbol_function();
    out.expected = f.values.real() / static_cast<double>(ch.dim());
    std::sort(out.expected.begin(), out.expected.end());
    const double imag_defect = f.values.imag().cwiseAbs().maxCoeff();
    out.max_deviation = (out.choi_eigenvalues - out.expected).cwiseAbs().maxCoeff();
    out.pass = out.max_deviation <= tol && out.hermiticity_defect <= tol && imag_defect <= tol;
    return out;
}

double choi_min_eigenvalue(const MultiplierChannel& ch) {
    return hermitian_eigenvalues(choi_matrix(ch)).minCoeff();
}

bool cp_check_choi(const MultiplierChannel& ch, double tol) {
    if (ch.n() % 2 != 0) throw std::invalid_argument("cp_check_choi: odd n");
    const MatrixXc choi = choi_matrix(ch);
    if ((choi - choi.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    return hermitian_eigenvalues(choi).minCoeff() >= -tol;
}

VectorXc purify(const DensityOperator& rho) {
    const int dim = rho.dim();
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho.matrix());
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    // Stable: equal eigenvalues keep the solver's order.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return es.eigenvalues()[a] > es.eigenvalues()[b];
    });
    VectorXc psi = VectorXc::Zero(Eigen::Index{dim} * dim);
    for (int i = 0; i < dim; ++i) {
        const double weight = std::max(es.eigenvalues()[order[i]], 0.0);
        VectorXc e = es.eigenvectors().col(order[i]);
        for (Eigen::Index k = 0; k < e.size(); ++k) {
            if (std::abs(e[k]) > 1e-12) {
                e *= std::conj(e[k]) / std::abs(e[k]);
                break;
            }
        }
        const double amp = std::sqrt(weight);
        for (int k = 0; k < dim; ++k) psi[Eigen::Index{k} * dim + i] = amp * e[k];
    }
    return psi;
}

MatrixXc apply_on_first_factor(const MultiplierChannel& ch, const MatrixXc& omega) {
    const int dim = ch.dim();
    const Eigen::Index d2 = Eigen::Index{dim} * dim;
    if (omega.rows() != d2 || omega.cols() != d2) {
        throw std::invalid_argument("apply_on_first_factor: size mismatch");
    }
    MatrixXc out(d2, d2);
    MatrixXc slice(dim, dim);
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            for (int k = 0; k < dim; ++k) {
                for (int l = 0; l < dim; ++l) slice(k, l) = omega(k * dim + a, l * dim + b);
            }
            const MatrixXc image = apply_channel(ch, slice);
            for (int k = 0; k < dim; ++k) {
                for (int l = 0; l < dim; ++l) out(k * dim + a, l * dim + b) = image(k, l);
            }
        }
    }
    return out;
}

double bsst_mutual_information(const MultiplierChannel& ch, const DensityOperator& rho) {
    if (!is_quantum_channel(ch)) throw NotAChannel("bsst_mutual_information: not a quantum channel");
    if (rho.dim() != ch.dim()) throw std::invalid_argument("bsst_mutual_information: size mismatch");
    const VectorXc psi = purify(rho);
    const MatrixXc joint = apply_on_first_factor(ch, psi * psi.adjoint());
    return von_neumann_entropy(rho) + spectral_entropy(apply_channel(ch, rho.matrix())) -
           spectral_entropy(joint);
}

StateSearchResult bsst_maximize(const MultiplierChannel& ch, const OptimizerConfig& config) {
    require_search_channel(ch, "bsst_maximize");
    if (config.restarts < 1) throw std::invalid_argument("bsst_maximize: restarts must be >= 1");
    const int dim = ch.dim();
    const auto objective = [&](const Eigen::VectorXd& params) {
        const MatrixXc a = unpack_matrix(params, dim);
        if (!(a.squaredNorm() > 1e-300)) return std::numeric_limits<double>::infinity();
        return -bsst_mutual_information(ch, DensityOperator::from_factor(a));
    };

    StateSearchResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < config.restarts; ++r) {
        Eigen::VectorXd start;
        if (r == 0) {
            start = pack(MatrixXc::Identity(dim, dim).reshaped());
        } else {
            NormalStream normals(restart_seed(config.seed, r));
            start = normals.vector(2 * Eigen::Index{dim} * dim);
        }
        const SimplexResult res =
            nelder_mead(objective, start, 0.1, config.max_iters, config.step_tolerance);
        const double value = -res.value;
        if (value > best.value) {
            best.value = value;
            best.state = DensityOperator::from_factor(unpack_matrix(res.argmin, dim));
            best.restart = r;
        }
    }
    return best;
}

StateSearchResult min_output_entropy_search(const MultiplierChannel& ch,
                                            const OptimizerConfig& config) {
    require_search_channel(ch, "min_output_entropy_numeric");
    if (config.restarts < 1) {
        throw std::invalid_argument("min_output_entropy_numeric: restarts must be >= 1");
    }
    const int dim = ch.dim();
    const auto objective = [&](const Eigen::VectorXd& params) {
        const VectorXc psi = unpack_vector(params);
        if (!(psi.squaredNorm() > 1e-300)) return std::numeric_limits<double>::infinity();
        return spectral_entropy(apply_channel(ch, DensityOperator::pure(psi).matrix()));
    };

    StateSearchResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (int r = 0; r < config.restarts; ++r) {
        Eigen::VectorXd start;
        if (r == 0) {
            start = pack(VectorXc::Unit(dim, 0));
        } else {
            NormalStream normals(restart_seed(config.seed, r));
            start = normals.vector(2 * Eigen::Index{dim});
        }
        const SimplexResult res =
            nelder_mead(objective, start, 0.1, config.max_iters, config.step_tolerance);
        if (res.value < best.value) {
            best.value = res.value;
            best.state = DensityOperator::pure(unpack_vector(res.argmin));
            best.restart = r;
        }
    }
    return best;
}

double min_output_entropy_numeric(const MultiplierChannel& ch, const OptimizerConfig& config) {
    return min_output_entropy_search(ch, config).value;
}

SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                          const Eigen::VectorXd& start, double step, int max_iters,
                          double tolerance) {
    const Eigen::Index dim = start.size();
    if (dim == 0) return {start, objective(start), 0};
    // Dimension-adaptive coefficients (Gao and Han); they reduce to the
    // classical 1, 2, 1/2, 1/2 for dim = 2.
    const double d = static_cast<double>(dim);
    const double reflect = 1.0;
    const double expand = 1.0 + 2.0 / d;
    const double contract = 0.75 - 1.0 / (2.0 * d);
    const double shrink = 1.0 - 1.0 / d;

    std::vector<Eigen::VectorXd> pts(dim + 1, start);
    std::vector<double> vals(dim + 1);
    for (Eigen::Index i = 0; i < dim; ++i) pts[i + 1][i] += step;
    for (Eigen::Index i = 0; i <= dim; ++i) vals[i] = objective(pts[i]);

    std::vector<Eigen::Index> order(dim + 1);
    int iter = 0;
    for (; iter < max_iters; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return vals[a] < vals[b]; });
        const Eigen::Index best = order.front();
        const Eigen::Index worst = order.back();
        const Eigen::Index second_worst = order[dim - 1];

        double spread = 0.0;
        double diameter = 0.0;
        for (Eigen::Index i = 0; i <= dim; ++i) {
            spread = std::max(spread, std::abs(vals[i] - vals[best]));
            diameter = std::max(diameter, (pts[i] - pts[best]).cwiseAbs().maxCoeff());
        }
        if (spread <= tolerance && diameter <= tolerance) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
        for (Eigen::Index i = 0; i <= dim; ++i) {
            if (i != worst) centroid += pts[i];
        }
        centroid /= d;

        const Eigen::VectorXd reflected = centroid + reflect * (centroid - pts[worst]);
        const double f_reflected = objective(reflected);
        if (f_reflected < vals[best]) {
            const Eigen::VectorXd expanded = centroid + expand * (reflected - centroid);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                pts[worst] = expanded;
                vals[worst] = f_expanded;
            } else {
                pts[worst] = reflected;
                vals[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < vals[second_worst]) {
            pts[worst] = reflected;
            vals[worst] = f_reflected;
            continue;
        }
        const bool outside = f_reflected < vals[worst];
        const Eigen::VectorXd contracted =
            outside ? Eigen::VectorXd(centroid + contract * (reflected - centroid))
                    : Eigen::VectorXd(centroid + contract * (pts[worst] - centroid));
        const double f_contracted = objective(contracted);
        if (f_contracted < (outside ? f_reflected : vals[worst])) {
            pts[worst] = contracted;
            vals[worst] = f_contracted;
            continue;
        }
        for (Eigen::Index i = 0; i <= dim; ++i) {
            if (i == best) continue;
            pts[i] = pts[best] + shrink * (pts[i] - pts[best]);
            vals[i] = objective(pts[i]);
        }
    }
    const auto best_it = std::min_element(vals.begin(), vals.end());
    const auto best_idx = static_cast<std::size_t>(best_it - vals.begin());
    return {pts[best_idx], *best_it, iter};
}

double NormalStream::uniform() {
    // 53 random bits in (0, 1).
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * M_PI * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Eigen::VectorXd NormalStream::vector(Eigen::Index size) {
    Eigen::VectorXd v(size);
    for (Eigen::Index i = 0; i < size; ++i) v[i] = next();
    return v;
}

}  // namespace radcap
