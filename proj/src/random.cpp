// Copyright 2026 The lcinv Authors
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

#include "lcinv/random.hpp"

namespace lcinv {

Matrix random_complex_matrix(int dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      double re = gauss(rng);
      double im = gauss(rng);
      m(a, b) = Complex(re, im);
    }
  return m;
}

Eigen::Matrix2cd haar_u2(std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd z;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double re = gauss(rng);
      double im = gauss(rng);
      z(a, b) = Complex(re, im);
    }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
  Eigen::Matrix2cd q = qr.householderQ();
  Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int a = 0; a < 2; ++a) {
    Complex d = r(a, a);
    q.col(a) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0));
  }
  return q;
}

Matrix haar_product_unitary(int n, std::mt19937_64 &rng) {
  Matrix u = Matrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    Eigen::Matrix2cd g = haar_u2(rng);
    Matrix next(u.rows() * 2, u.cols() * 2);
    for (Eigen::Index a = 0; a < u.rows(); ++a)
      for (Eigen::Index b = 0; b < u.cols(); ++b) next.block(a * 2, b * 2, 2, 2) = u(a, b) * g;
    u = std::move(next);
  }
  return u;
}

}  // namespace lcinv
