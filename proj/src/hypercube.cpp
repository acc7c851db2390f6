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

#include "radcap/hypercube.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radcap {

namespace {

void check_dimension(int n, Eigen::Index length, const char* what) {
    if (n < 0 || n > kMaxHypercubeDim) {
        throw std::invalid_argument(std::string(what) + ": dimension n=" + std::to_string(n) +
                                    " outside [0, " + std::to_string(kMaxHypercubeDim) + "]");
    }
    if (length != (Eigen::Index{1} << n)) {
        throw std::invalid_argument(std::string(what) + ": expected 2^" + std::to_string(n) +
                                    " entries, got " + std::to_string(length));
    }
}

bool all_real(const VectorXc& v, double tol) {
    return v.size() == 0 || v.imag().cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

MultiplierSymbol MultiplierSymbol::radial(std::span<const complex_t> phi, int n) {
    if (n < 0 || static_cast<int>(phi.size()) != n + 1) {
        throw std::invalid_argument("radial symbol: expected n+1=" + std::to_string(n + 1) +
                                    " values of phi, got " + std::to_string(phi.size()));
    }
    check_dimension(n, Eigen::Index{1} << n, "radial symbol");
    MultiplierSymbol s;
    s.n = n;
    s.coeffs.resize(Eigen::Index{1} << n);
    for (Eigen::Index a = 0; a < s.coeffs.size(); ++a) {
        s.coeffs[a] = phi[popcount(static_cast<Subset>(a))];
    }
    s.radial_origin = std::vector<complex_t>(phi.begin(), phi.end());
    return s;
}

MultiplierSymbol MultiplierSymbol::from_coefficients(int n, VectorXc coeffs) {
    check_dimension(n, coeffs.size(), "symbol");
    MultiplierSymbol s;
    s.n = n;
    s.coeffs = std::move(coeffs);
    return s;
}

bool MultiplierSymbol::depends_only_on_cardinality(double tol) const {
    std::vector<complex_t> seen(n + 1);
    std::vector<bool> have(n + 1, false);
    for (Eigen::Index a = 0; a < coeffs.size(); ++a) {
        const int k = popcount(static_cast<Subset>(a));
        if (!have[k]) {
            seen[k] = coeffs[a];
            have[k] = true;
        } else if (std::abs(coeffs[a] - seen[k]) > tol) {
            return false;
        }
    }
    return true;
}

bool MultiplierSymbol::is_real(double tol) const { return all_real(coeffs, tol); }

void MultiplierSymbol::validate() const {
    check_dimension(n, coeffs.size(), "symbol");
    if (!radial_origin) return;
    if (static_cast<int>(radial_origin->size()) != n + 1) {
        throw std::invalid_argument("symbol: radial_origin must have n+1 entries");
    }
    for (Eigen::Index a = 0; a < coeffs.size(); ++a) {
        if (coeffs[a] != (*radial_origin)[popcount(static_cast<Subset>(a))]) {
            throw std::invalid_argument("symbol: coefficient for subset " + std::to_string(a) +
                                        " disagrees with radial_origin");
        }
    }
}

bool HypercubeFunction::is_real(double tol) const { return all_real(values, tol); }

Eigen::VectorXd HypercubeFunction::real_values(double tol) const {
    if (!is_real(tol)) throw std::domain_error("hypercube function is not real-valued");
    return values.real();
}

void HypercubeFunction::validate() const { check_dimension(n, values.size(), "hypercube function"); }

HypercubeFunction walsh_synthesize(const MultiplierSymbol& symbol) {
    symbol.validate();
    HypercubeFunction f;
    f.n = symbol.n;
    if (symbol.is_real(0.0)) {
        // Real symbols take the half-cost real path.
        Eigen::VectorXd re = symbol.coeffs.real();
        fwht_inplace(re);
        f.values = re.cast<complex_t>();
    } else {
        f.values = symbol.coeffs;
        fwht_inplace(f.values);
    }
    return f;
}

MultiplierSymbol walsh_analyze(const HypercubeFunction& f) {
    f.validate();
    const double scale = std::ldexp(1.0, -f.n);
    VectorXc c;
    if (f.is_real(0.0)) {
        Eigen::VectorXd re = f.values.real();
        fwht_inplace(re);
        c = (re * scale).cast<complex_t>();
    } else {
        c = f.values;
        fwht_inplace(c);
        c *= scale;
    }
    return MultiplierSymbol::from_coefficients(f.n, std::move(c));
}

double power_mean(const HypercubeFunction& f, double p) {
    f.validate();
    if (!(p > 0.0)) throw std::invalid_argument("power_mean: p must be positive");
    const Eigen::VectorXd mod = f.values.cwiseAbs();
    const double top = mod.maxCoeff();
    if (std::isinf(p)) return top;
    if (top == 0.0) return 0.0;
    // Scale by the maximum so large p cannot overflow.
    const double avg = (mod / top).array().pow(p).mean();
    return top * std::pow(avg, 1.0 / p);
}

double lp_norm(const HypercubeFunction& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
    return power_mean(f, p);
}

double segal_entropy(const HypercubeFunction& f) {
    f.validate();
    if (!f.is_real()) throw NotAChannel("segal_entropy: function is not real-valued");
    const Eigen::VectorXd v = f.values.real();
    if (v.minCoeff() < -kPositivityTol) {
        throw NotAChannel("segal_entropy: function takes negative value " +
                          std::to_string(v.minCoeff()));
    }
    const double avg = v.mean();
    if (std::abs(avg - 1.0) > kMeanTol) {
        throw NotAChannel("segal_entropy: mean is " + std::to_string(avg) + ", expected 1");
    }
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] > 0.0) acc += v[i] * std::log2(v[i]);
    }
    return -acc * std::ldexp(1.0, -f.n);
}

double min_value(const HypercubeFunction& f) {
    f.validate();
    return f.real_values().minCoeff();
}

HypercubeFunction tensor(const HypercubeFunction& f, const HypercubeFunction& g) {
    f.validate();
    g.validate();
    if (f.n + g.n > kMaxHypercubeDim) {
        throw std::invalid_argument("tensor: combined dimension exceeds " +
                                    std::to_string(kMaxHypercubeDim));
    }
    HypercubeFunction out;
    out.n = f.n + g.n;
    out.values.resize(f.values.size() * g.values.size());
    for (Eigen::Index j = 0; j < g.values.size(); ++j) {
        out.values.segment(j * f.values.size(), f.values.size()) = f.values * g.values[j];
    }
    return out;
}

}  // namespace radcap
