#include "h13/pairing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace h13 {

namespace {

std::int64_t checked_pow(int base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > (std::int64_t(1) << 62) / base)
      throw std::invalid_argument("PairingCodec: base^(2*digits) exceeds the exact 64-bit range");
    v *= base;
  }
  return v;
}

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0) || !(x < 1.0))
    throw std::domain_error(std::string(what) + " must lie in [0,1)");
}

}  // namespace

PairingCodec::PairingCodec(int base, int digits) : base_(base), digits_(digits) {
  if (base < 2) throw std::invalid_argument("PairingCodec: base must be >= 2");
  if (base > 36) throw std::invalid_argument("PairingCodec: base must be <= 36 (digit characters 0-9a-z)");
  if (digits < 1) throw std::invalid_argument("PairingCodec: digits must be >= 1");
  scale_2d_ = checked_pow(base, 2 * digits);
  scale_d_ = checked_pow(base, digits);
}

std::int64_t PairingCodec::quantize_scaled(double x, std::int64_t scale) const {
  check_unit_interval(x, "pairing input");
  const double scaled = x * double(scale);
  auto m = std::int64_t(scaled);
  const double next = double(m + 1);
  if (next - scaled <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, next)) ++m;
  if (m >= scale) m = scale - 1;
  return m;
}

std::int64_t PairingCodec::interleave(std::int64_t m2, std::int64_t m3) const {
  std::vector<int> d2(digits_), d3(digits_);
  for (int i = digits_ - 1; i >= 0; --i) {
    d2[i] = int(m2 % base_);
    m2 /= base_;
    d3[i] = int(m3 % base_);
    m3 /= base_;
  }
  std::int64_t y = 0;
  for (int i = 0; i < digits_; ++i) {
    y = y * base_ + d2[i];
    y = y * base_ + d3[i];
  }
  return y;
}

std::pair<std::int64_t, std::int64_t> PairingCodec::deinterleave(std::int64_t my) const {
  std::vector<int> dy(2 * digits_);
  for (int i = 2 * digits_ - 1; i >= 0; --i) {
    dy[i] = int(my % base_);
    my /= base_;
  }
  std::int64_t m2 = 0, m3 = 0;
  for (int i = 0; i < digits_; ++i) {
    m2 = m2 * base_ + dy[2 * i];
    m3 = m3 * base_ + dy[2 * i + 1];
  }
  return {m2, m3};
}

double PairingCodec::pair(double x2, double x3) const {
  const std::int64_t my = interleave(quantize(x2), quantize(x3));
  return double(my) / double(scale_2d_);
}

std::pair<double, double> PairingCodec::unpair(double y) const {
  const std::int64_t my = quantize_scaled(y, scale_2d_);
  const auto [m2, m3] = deinterleave(my);
  return {grid_value(m2), grid_value(m3)};
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

char digit_char(int v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

std::string PairingCodec::normalize_digits(std::string_view digits, int want) const {
  std::string out(digits.substr(0, std::size_t(want)));
  for (char c : out) {
    const int v = digit_value(c);
    if (v < 0 || v >= base_)
      throw std::invalid_argument(std::string("digit '") + c + "' is not valid in base " + std::to_string(base_));
  }
  out.append(std::size_t(want) - out.size(), '0');
  return out;
}

std::string PairingCodec::pair_digits(std::string_view x2_digits, std::string_view x3_digits) const {
  const std::string a = normalize_digits(x2_digits, digits_);
  const std::string b = normalize_digits(x3_digits, digits_);
  std::string y(std::size_t(2 * digits_), '0');
  for (int i = 0; i < digits_; ++i) {
    y[std::size_t(2 * i)] = a[std::size_t(i)];
    y[std::size_t(2 * i + 1)] = b[std::size_t(i)];
  }
  return y;
}

std::pair<std::string, std::string> PairingCodec::unpair_digits(std::string_view y_digits) const {
  const std::string y = normalize_digits(y_digits, 2 * digits_);
  std::string a(std::size_t(digits_), '0'), b(std::size_t(digits_), '0');
  for (int i = 0; i < digits_; ++i) {
    a[std::size_t(i)] = y[std::size_t(2 * i)];
    b[std::size_t(i)] = y[std::size_t(2 * i + 1)];
  }
  return {a, b};
}

ParsedFraction parse_unit_fraction(std::string_view text, int base, int digits) {
  std::string_view s = text;
  if (s.empty()) throw std::invalid_argument("empty number");
  std::string_view intpart = s;
  std::string_view frac;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    intpart = s.substr(0, dot);
    frac = s.substr(dot + 1);
  } else {
    frac = {};
  }
  bool one = false;
  if (intpart.empty() || intpart == "0") {
    one = false;
  } else if (intpart == "1") {
    one = true;
    for (char c : frac)
      if (c != '0') throw std::domain_error("value exceeds 1: " + std::string(text));
  } else {
    throw std::domain_error("value outside [0,1]: " + std::string(text));
  }

  ParsedFraction out;
  if (one) {
    // 1 has no base-b fraction expansion; clamp to 1 - b^-d.
    out.digits.assign(std::size_t(digits), digit_char(base - 1));
    out.clamped = true;
    return out;
  }
  out.clamped = false;
  out.digits.assign(frac.substr(0, std::size_t(digits)));
  for (char c : out.digits) {
    const int v = digit_value(c);
    if (v < 0 || v >= base)
      throw std::invalid_argument(std::string("digit '") + c + "' is not valid in base " + std::to_string(base));
  }
  out.digits.append(std::size_t(digits) - out.digits.size(), '0');
  return out;
}

IdentityReport verify_identity(const TrivariateFn& f, const RepresentedFunction& F,
                               const std::vector<std::array<double, 3>>& samples) {
  const PairingCodec& codec = F.codec();
  IdentityReport report;
  report.samples.reserve(samples.size());
  for (const auto& p : samples) {
    const double x1 = p[0], x2 = p[1], x3 = p[2];
    const double q2 = codec.grid_value(codec.quantize(x2));
    const double q3 = codec.grid_value(codec.quantize(x3));
    const bool exact = F(x1, codec.pair(q2, q3)) == f(x1, q2, q3);
    const double dev = std::fabs(F(x1, codec.pair(x2, x3)) - f(x1, x2, x3));
    report.samples.push_back({p, exact, dev});
    report.max_raw_deviation = std::max(report.max_raw_deviation, dev);
    report.all_exact = report.all_exact && exact;
  }
  return report;
}

}  // namespace h13
