#pragma once

namespace qfd {

inline constexpr const char* kVersion = "qfd 1.0.0";

/// Numerical tolerances used across the library. Every threshold is a
/// parameter; the defaults below are the reference values used by the
/// test suite and the CLI.
struct Tolerances {
  double hermitian = 1e-10;     // max |A - A^dag| entry for Hermitian inputs
  double skew_hermitian = 1e-10;// max |G + G^dag| entry for generators
  double psd_clip = 1e-12;      // eigenvalues >= -psd_clip; smaller ones clip to 0
  double eig_floor = 1e-12;     // density eigenvalues below this count as 0
  double pair_floor = 1e-14;    // lambda_m + lambda_n <= this contributes 0
  double trace = 1e-8;          // |tr(rho) - 1| allowed
  double weight = 1e-10;        // probability-vector normalization slack
  double thermal_tail = 1e-12;  // untruncated tail mass allowed without renormalize
};

}  // namespace qfd
