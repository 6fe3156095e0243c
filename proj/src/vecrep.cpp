// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/vecrep.hpp"

#include <cmath>

namespace sqpt {

std::size_t index_mu(std::size_t i, std::size_t j, std::size_t d) {
  if (i >= d || j >= d)
    throw std::invalid_argument("index_mu: indices out of range");
  return d * i + j;
}

std::pair<std::size_t, std::size_t> index_ij(std::size_t mu, std::size_t d) {
  if (mu >= d * d) throw std::invalid_argument("index_ij: index out of range");
  return {mu / d, mu % d};
}

CVec vec(const CMat &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("vec: matrix must be square");
  const auto d = static_cast<std::size_t>(a.rows());
  CVec v(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) v(d * i + j) = a(i, j);
  return v;
}

CMat unvec(const CVec &v) {
  const auto n = static_cast<std::size_t>(v.size());
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(n))));
  if (d * d != n)
    throw std::invalid_argument("unvec: length is not a perfect square");
  CMat a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = v(d * i + j);
  return a;
}

cplx hs_inner(const CMat &a, const CMat &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  return (a.adjoint() * b).trace();
}

CMat kron(const CMat &a, const CMat &b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVec apply_sandwich(const CMat &a, const CMat &b, const CMat &rho) {
  if (a.rows() != rho.rows() || b.rows() != rho.rows() || a.rows() != a.cols())
    throw std::invalid_argument("apply_sandwich: dimension mismatch");
  CVec lhs = kron(a, b.transpose()) * vec(rho);
  CVec rhs = vec(a * rho * b);
  if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-9)
    throw NumericError("apply_sandwich: sandwich identity violated");
  return lhs;
}

CVec vec2(const CMat &gamma) {
  const auto n = static_cast<std::size_t>(gamma.rows());
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(n))));
  if (gamma.rows() != gamma.cols() || d * d != n)
    throw std::invalid_argument("vec2: side must be a perfect square");
  return vec(gamma);
}

CMat unvec2(const CVec &v) { return unvec(v); }

std::size_t beta_swap_index(std::size_t x, std::size_t d) {
  const std::size_t d2 = d * d;
  if (x >= d2 * d2) throw std::invalid_argument("beta_swap_index: out of range");
  const auto [i, j] = index_ij(x / d2, d);
  const auto [k, l] = index_ij(x % d2, d);
  return (d * i + k) * d2 + (d * j + l);
}

CMat beta_swap(std::size_t d) {
  if (d < 2) throw std::invalid_argument("beta_swap: d >= 2 required");
  const std::size_t n = d * d * d * d;
  CMat b = CMat::Zero(n, n);
  for (std::size_t x = 0; x < n; ++x) b(x, beta_swap_index(x, d)) = 1.0;
  return b;
}

CMat reshuffle(const CMat &gamma) {
  const auto n = static_cast<std::size_t>(gamma.rows());
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(n))));
  if (gamma.rows() != gamma.cols() || d * d != n)
    throw std::invalid_argument("reshuffle: side must be a perfect square");
  CMat out(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          out(d * i + j, d * k + l) = gamma(d * i + k, d * j + l);
  return out;
}

}  // namespace sqpt
