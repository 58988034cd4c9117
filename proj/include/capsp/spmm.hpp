#pragma once

#include "capsp/ledger.hpp"
#include "capsp/tropical.hpp"

namespace capsp {

// Sparse (min,+) product S * T. rho_st_bound is the caller's bound on the
// product density (finite entries / n); exceeding it raises DensityViolation.
// Charged rounds: ceil((rho_S * rho_T * rho_ST)^(1/3) / n^(2/3)) + 1, with the
// measured input densities and the declared product bound.
TropicalMatrix sparse_minplus_mul(const TropicalMatrix& s, const TropicalMatrix& t,
                                  double rho_st_bound, RoundLedger& ledger,
                                  const std::string& label = "sparse_minplus_mul");

// The round charge alone (exposed for tests).
std::uint64_t sparse_mul_rounds(double rho_s, double rho_t, double rho_st, int n);

}  // namespace capsp
