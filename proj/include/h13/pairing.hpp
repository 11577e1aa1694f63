#pragma once

// Digit-interleaving bijection between the unit square and the unit interval,
// exact on the finite grids G_d = { m * b^-d : 0 <= m < b^d }.
//
// Conventions (normative): the first coordinate owns the odd (1st, 3rd, ...)
// base-b digit positions of the paired value, the second coordinate the even
// positions. Inputs off the grid are quantized by truncation toward zero.
// The domain is the half-open square [0,1)^2, which avoids the dual
// expansions of 1.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace h13 {

class PairingCodec {
public:
  // Requires base >= 2, digits >= 1 and base^(2*digits) <= 2^62 so that all
  // digit arithmetic stays exact in 64-bit integers.
  PairingCodec(int base, int digits);

  int base() const { return base_; }
  int digits() const { return digits_; }

  std::int64_t grid_size() const { return scale_d_; }        // b^d
  std::int64_t paired_grid_size() const { return scale_2d_; }  // b^(2d)

  // Grid index of x in [0,1): truncation toward zero of x*b^d, with a snap to
  // the next integer when the scaled value sits within a few ulps below it
  // (so that grid points stored as nearest doubles keep their own index).
  std::int64_t quantize(double x) const { return quantize_scaled(x, scale_d_); }

  double grid_value(std::int64_t m) const { return double(m) / double(scale_d_); }

  // Exact digit interleaving on grid indices.
  std::int64_t interleave(std::int64_t m2, std::int64_t m3) const;
  std::pair<std::int64_t, std::int64_t> deinterleave(std::int64_t my) const;

  // y = phi(x2, x3). Throws std::domain_error outside [0,1).
  double pair(double x2, double x3) const;

  // (x2, x3) = (alpha(y), beta(y)). Exact inverse of pair on G_d x G_d.
  std::pair<double, double> unpair(double y) const;

  // String path used by the CLI: base-b fraction digit strings (most
  // significant first, no "0." prefix), parsed and emitted without any float
  // round trip. Short inputs are zero-padded to length d, long ones truncated.
  std::string pair_digits(std::string_view x2_digits, std::string_view x3_digits) const;
  std::pair<std::string, std::string> unpair_digits(std::string_view y_digits) const;

private:
  std::int64_t quantize_scaled(double x, std::int64_t scale) const;
  std::string normalize_digits(std::string_view digits, int want) const;

  int base_;
  int digits_;
  std::int64_t scale_d_;
  std::int64_t scale_2d_;
};

int digit_value(char c);   // '0'-'9', 'a'-'z'; -1 if not a digit
char digit_char(int v);

struct ParsedFraction {
  std::string digits;  // exactly the requested number of base-b digits
  bool clamped;        // true when an input of 1 was clamped to 1 - b^-d
};

// Parses decimal-style text ("0.12", ".12", "0", "1") as a base-b fraction
// with the given digit count. Exact: no floating point involved.
ParsedFraction parse_unit_fraction(std::string_view text, int base, int digits);

using TrivariateFn = std::function<double(double, double, double)>;

// F(x, y) = f(x, alpha(y), beta(y)). Defined for x in [0,1], y in [0,1).
class RepresentedFunction {
public:
  RepresentedFunction(TrivariateFn f, PairingCodec codec)
      : f_(std::move(f)), codec_(codec) {}

  double operator()(double x, double y) const {
    const auto [x2, x3] = codec_.unpair(y);
    return f_(x, x2, x3);
  }

  const PairingCodec& codec() const { return codec_; }

private:
  TrivariateFn f_;
  PairingCodec codec_;
};

inline RepresentedFunction represent(TrivariateFn f, const PairingCodec& codec) {
  return RepresentedFunction(std::move(f), codec);
}

struct IdentityReport {
  struct Sample {
    std::array<double, 3> point;
    bool exact_on_quantized;  // bitwise equality after quantizing x2, x3
    double raw_deviation;     // |F(x1, pair(x2,x3)) - f(x1,x2,x3)| at the raw point
  };
  std::vector<Sample> samples;
  double max_raw_deviation = 0.0;
  bool all_exact = true;
};

IdentityReport verify_identity(const TrivariateFn& f, const RepresentedFunction& F,
                               const std::vector<std::array<double, 3>>& samples);

}  // namespace h13
