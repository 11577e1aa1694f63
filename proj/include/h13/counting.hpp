#pragma once

// Coefficient-counting certificates: a degree-r trivariate polynomial carries
// more coefficients than k bivariate nodes can supply, so degree-r polynomials
// outside the k-composition class exist. Two counting modes ship side by side:
//
//   literal  r^3 target coefficients vs r^2 per node (the classical form of
//            the argument, in which the certificate holds exactly when r > k);
//   exact    (r+1)^3 - 1 vs (r+1)^2 - 1, the full binomial slot counts of
//            origin-vanishing polynomials.
//
// A holding certificate is an existence statement about the degree-r class;
// it never decides membership of any particular polynomial.

#include <cstdint>

#include "h13/polynomial.hpp"

namespace h13 {

enum class CountMode { literal, exact };

const char* to_string(CountMode mode);

// Coefficient slots of a trivariate polynomial of degree r per variable.
// Throws std::invalid_argument for r < 1.
std::int64_t trivariate_count(int r, CountMode mode);

// Parameters contributed by one bivariate node of degree r per variable.
std::int64_t bivariate_count(int r, CountMode mode);

struct CountCertificate {
  int k = 0;
  int r = 0;
  CountMode mode = CountMode::literal;
  std::int64_t target_count = 0;       // trivariate side
  std::int64_t composition_count = 0;  // k * per-node count
  std::int64_t gap = 0;                // target - composition
  bool holds = false;                  // gap > 0
};

CountCertificate certificate(int k, int r, CountMode mode);

// Smallest r whose certificate holds. Terminates: at r = k+1 the gap is
// positive in both modes (literal: (k+1)^3 > k*(k+1)^2; exact:
// (k+2)^3 - 1 - k*((k+2)^2 - 1) = 2*(k+2)^2 + k - 1 > 0).
int min_gap_degree(int k, CountMode mode);

// Random degree-(k+1) polynomial, coefficients i.i.d. uniform on [-1,1] from
// the given seed. Generic outside the k-composition class by the dimension
// argument, but never individually certified as such.
TriPoly witness(int k, std::uint64_t seed);

}  // namespace h13
