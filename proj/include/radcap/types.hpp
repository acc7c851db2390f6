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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace radcap {

using complex_t = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Subset A of {1..n} encoded with bit j-1 set for element j. The same
/// encoding is used for hypercube points: bit j-1 set means eps_j = -1.
using Subset = std::uint32_t;

/// Largest hypercube dimension (2^24 values).
inline constexpr int kMaxHypercubeDim = 24;
/// Largest even dimension with a matrix realization (N = 64).
inline constexpr int kMaxMatrixDim = 12;

inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kMeanTol = 1e-9;
inline constexpr double kRealTol = 1e-12;

inline int popcount(Subset a) { return __builtin_popcount(a); }

/// Walsh character w_A(eps) = (-1)^{|A and eps|}.
inline int walsh_sign(Subset a, Subset eps) { return (popcount(a & eps) & 1) ? -1 : 1; }

/// Input rejected because the map is not completely positive and trace
/// preserving.
class NotAChannel : public std::domain_error {
public:
    explicit NotAChannel(const std::string& what) : std::domain_error(what) {}
};

/// Operation needs a matrix realization the object does not carry.
class NoMatrixRealization : public std::logic_error {
public:
    explicit NoMatrixRealization(const std::string& what) : std::logic_error(what) {}
};

}  // namespace radcap
