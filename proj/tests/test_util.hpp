// Copyright 2026 The qsym Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qsym/state.hpp"

namespace qsym::testing {

inline StateVector random_state(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Vector v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); i++) {
        v[i] = Complex(normal(rng), normal(rng));
    }
    return StateVector::from_unnormalized(n, v);
}

inline Matrix random_hermitian(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Eigen::Index d = Eigen::Index{1} << n;
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            m(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return (m + m.adjoint()) / 2.0;
}

/// exp(-i h t) by scaling and squaring of a truncated Taylor series. Shares no
/// code with the eigendecomposition path.
inline Matrix series_propagator(const Matrix &h, double t) {
    Matrix a = h * Complex(0, -t);
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = norm > 0.5 ? static_cast<int>(std::ceil(std::log2(norm / 0.5))) : 0;
    a /= std::pow(2.0, squarings);
    Matrix term = Matrix::Identity(h.rows(), h.cols());
    Matrix sum = term;
    for (int k = 1; k <= 30; k++) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; s++) {
        sum = sum * sum;
    }
    return sum;
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A> &a, const Eigen::MatrixBase<B> &b) {
    return (a.eval() - b.eval()).cwiseAbs().maxCoeff();
}

/// Numerical rank via singular values.
inline Eigen::Index numerical_rank(const Matrix &m, double tol = 1e-9) {
    Eigen::JacobiSVD<Matrix> svd(m);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); i++) {
        rank += svd.singularValues()[i] > tol;
    }
    return rank;
}

}  // namespace qsym::testing
