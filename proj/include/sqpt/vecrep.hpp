// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_VECREP_HPP
#define SQPTLAB_VECREP_HPP

#include <cstddef>
#include <utility>

#include "sqpt/types.hpp"

namespace sqpt {

// Row-major operator vectorization: |A>> stacks the rows of A, so that
// vec(A)[mu(i,j)] = A(i,j) and |A rho B>> = (A (x) B^T)|rho>>.
// All composite indices in the library follow the same convention.

// Flat index mu = d*i + j, a bijection {0..d-1}^2 -> {0..d^2-1}.
std::size_t index_mu(std::size_t i, std::size_t j, std::size_t d);
std::pair<std::size_t, std::size_t> index_ij(std::size_t mu, std::size_t d);

CVec vec(const CMat &a);
CMat unvec(const CVec &v);

// Tr[A^dag B] = <<A|B>>
cplx hs_inner(const CMat &a, const CMat &b);

// (A (x) B)_{(i,k),(j,l)} = A_ij B_kl
CMat kron(const CMat &a, const CMat &b);

// (A (x) B^T) vec(rho); asserts equality with vec(A rho B).
CVec apply_sandwich(const CMat &a, const CMat &b, const CMat &rho);

// Same row-major flattening one level up: d^2 x d^2 matrix -> d^4 vector.
CVec vec2(const CMat &gamma);
CMat unvec2(const CVec &v);

// The reshuffle permutation beta^c = sum |ij;kl)(ik;jl|.
// It is a symmetric self-inverse 0/1 matrix and maps
// vec2(|A>><<B|) to vec2(A (x) B^*).
CMat beta_swap(std::size_t d);

// Index form of the same permutation: (beta v)[x] = v[beta_swap_index(x, d)],
// usable without materializing the d^4 x d^4 matrix.
std::size_t beta_swap_index(std::size_t x, std::size_t d);

// Action of beta^c on the matrix it vectorizes: out(di+j, dk+l) = in(di+k, dj+l).
// This is the chi <-> lambda conversion; it is an involution.
CMat reshuffle(const CMat &gamma);

}  // namespace sqpt

#endif
