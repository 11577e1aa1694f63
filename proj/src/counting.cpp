#include "h13/counting.hpp"

#include <stdexcept>

#include "h13/rng.hpp"

namespace h13 {

const char* to_string(CountMode mode) { return mode == CountMode::literal ? "literal" : "exact"; }

std::int64_t trivariate_count(int r, CountMode mode) {
  if (r < 1) throw std::invalid_argument("trivariate_count: r must be >= 1");
  const std::int64_t n = r;
  return mode == CountMode::literal ? n * n * n : (n + 1) * (n + 1) * (n + 1) - 1;
}

std::int64_t bivariate_count(int r, CountMode mode) {
  if (r < 1) throw std::invalid_argument("bivariate_count: r must be >= 1");
  const std::int64_t n = r;
  return mode == CountMode::literal ? n * n : (n + 1) * (n + 1) - 1;
}

CountCertificate certificate(int k, int r, CountMode mode) {
  if (k < 1) throw std::invalid_argument("certificate: k must be >= 1");
  CountCertificate c;
  c.k = k;
  c.r = r;
  c.mode = mode;
  c.target_count = trivariate_count(r, mode);
  c.composition_count = k * bivariate_count(r, mode);
  c.gap = c.target_count - c.composition_count;
  c.holds = c.gap > 0;
  return c;
}

int min_gap_degree(int k, CountMode mode) {
  if (k < 1) throw std::invalid_argument("min_gap_degree: k must be >= 1");
  for (int r = 1;; ++r)
    if (certificate(k, r, mode).holds) return r;
}

TriPoly witness(int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("witness: k must be >= 1");
  Rng rng(seed);
  TriPoly p({k + 1, k + 1, k + 1});
  std::vector<double> coeffs(std::size_t(p.coeff_count()));
  for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
  return TriPoly({k + 1, k + 1, k + 1}, std::move(coeffs));
}

}  // namespace h13
