// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_CHANNELS_HPP
#define SQPTLAB_CHANNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sqpt/types.hpp"

namespace sqpt {

// Trace-preserving channel in Kraus form: eps(rho) = sum_m E_m rho E_m^dag.
struct KrausSet {
  int d = 0;
  std::vector<CMat> ops;

  // Throws RepresentationError when sum E^dag E deviates from identity.
  void validate(double tol = 1e-8) const;
};

CMat apply(const KrausSet &k, const CMat &rho);

// chi^c = sum_m |E_m>><<E_m|; Hermitian, PSD, trace d.
CMat chi_c(const KrausSet &k);

// lambda^c = sum_m E_m (x) E_m^*; vec(eps(rho)) = lambda^c vec(rho).
CMat lambda_c(const KrausSet &k);

// Normalized Choi state chi^c / d.
CMat choi(const KrausSet &k);

// The reshuffle relating the two channel matrices (mutually inverse).
CMat chi_from_lambda(const CMat &lambda);
CMat lambda_from_chi(const CMat &chi);

// Spectral factorization of chi^c back into Kraus form. Eigenvalues are
// sorted descending, eigenvector phases fixed (first nonzero component real
// positive), weights below drop_tol discarded.
KrausSet kraus_from_chi(const CMat &chi, double psd_tol = 1e-8,
                        double drop_tol = 1e-12);

struct ChannelSpec {
  enum class Kind { KrausList, Depolarizing, Unitary, AmplitudeDamping, Random };
  Kind kind = Kind::Depolarizing;
  int d = 2;
  double q = 0.0;               // depolarizing strength
  double gamma = 0.0;           // amplitude damping
  CMat unitary;                 // unitary channel
  std::vector<CMat> kraus_ops;  // explicit list
  int rank = 1;                 // random channel Kraus rank
  std::uint64_t seed = 0;

  std::string to_json() const;
  static ChannelSpec from_json(const std::string &text);
};

// Depolarizing channels use the Weyl displacement mixture, which realizes
// eps(rho) = (1-q) rho + (q/d) Tr[rho] I for every d.
KrausSet make_channel(const ChannelSpec &spec);

}  // namespace sqpt

#endif
