#pragma once

// Dense tensor-product polynomials on the unit cube/square.
//
// Coefficients are stored row-major with the last variable fastest: for a
// trivariate polynomial with degree bounds (d1,d2,d3), the coefficient of
// x1^i x2^j x3^k lives at flat index ((i*(d2+1))+j)*(d3+1)+k. This layout is
// also the normative order of the "coeffs" array in the JSON format.
//
// The scalar type is a template parameter: double for fitting and grids,
// an exact rational for the expand/verify paths.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace h13 {

// Uniform lattice on [0,1] per axis, endpoints included. Sup norms taken on
// such lattices are lower bounds of the true sup over the cube ("grid
// sup-norm" everywhere in reports).
struct GridSpec {
  int points_per_axis;

  explicit GridSpec(int n = 17) : points_per_axis(n) {
    if (n < 2) throw std::invalid_argument("GridSpec: need at least 2 points per axis");
  }

  double node(int i) const { return double(i) / double(points_per_axis - 1); }
};

enum class TruncateMode { per_variable, total_degree };

template <typename T, int N>
class DensePoly {
  static_assert(N >= 1, "DensePoly needs at least one variable");

public:
  using Bounds = std::array<int, N>;

  DensePoly() : bounds_{}, coeffs_(1, T(0)) {}

  explicit DensePoly(const Bounds& bounds)
      : bounds_(bounds), coeffs_(std::size_t(checked_slots(bounds)), T(0)) {}

  DensePoly(const Bounds& bounds, std::vector<T> coeffs)
      : bounds_(bounds), coeffs_(std::move(coeffs)) {
    if (std::int64_t(coeffs_.size()) != checked_slots(bounds))
      throw std::invalid_argument("DensePoly: coefficient count does not match degree bounds");
  }

  static DensePoly constant(T c) {
    DensePoly p;
    p.coeffs_[0] = std::move(c);
    return p;
  }

  static DensePoly monomial(const Bounds& exponents, T c = T(1)) {
    DensePoly p(exponents);
    p.coeffs_.back() = std::move(c);
    return p;
  }

  const Bounds& degree_bounds() const { return bounds_; }

  // Number of coefficient slots at the declared bounds.
  std::int64_t coeff_count() const { return std::int64_t(coeffs_.size()); }

  const std::vector<T>& coeffs() const { return coeffs_; }

  const T& at(const Bounds& idx) const { return coeffs_[flat(idx)]; }
  T& at(const Bounds& idx) { return coeffs_[flat(idx)]; }

  template <typename... I>
  const T& coeff(I... idx) const {
    static_assert(sizeof...(I) == N);
    return coeffs_[flat(Bounds{int(idx)...})];
  }
  template <typename... I>
  T& coeff(I... idx) {
    static_assert(sizeof...(I) == N);
    return coeffs_[flat(Bounds{int(idx)...})];
  }

  // Nested Horner evaluation, outermost variable first.
  T eval(const std::array<T, N>& x) const { return eval_dim(x, 0, 0); }

  template <typename... X>
  T operator()(X&&... xs) const {
    static_assert(sizeof...(X) == N);
    return eval(std::array<T, N>{T(std::forward<X>(xs))...});
  }

  bool is_zero() const {
    for (const T& c : coeffs_)
      if (!(c == T(0))) return false;
    return true;
  }

  // Tightest per-variable degrees actually used; all zero for the zero polynomial.
  Bounds tight_degrees() const {
    Bounds tight{};
    Bounds idx{};
    for (std::size_t f = 0; f < coeffs_.size(); ++f) {
      if (!(coeffs_[f] == T(0)))
        for (int d = 0; d < N; ++d) tight[d] = std::max(tight[d], idx[d]);
      advance(idx);
    }
    return tight;
  }

  DensePoly trimmed() const {
    const Bounds tight = tight_degrees();
    if (tight == bounds_) return *this;
    DensePoly out(tight);
    Bounds idx{};
    for (std::size_t f = 0; f < out.coeffs_.size(); ++f) {
      out.coeffs_[f] = at(idx);
      out.advance(idx);
    }
    return out;
  }

  // Copy with enlarged bounds; added slices are zero.
  DensePoly padded(const Bounds& bounds) const {
    for (int d = 0; d < N; ++d)
      if (bounds[d] < bounds_[d]) throw std::invalid_argument("DensePoly::padded: bounds shrink");
    DensePoly out(bounds);
    Bounds idx{};
    for (std::size_t f = 0; f < coeffs_.size(); ++f) {
      out.at(idx) = coeffs_[f];
      advance(idx);
    }
    return out;
  }

  DensePoly operator+(const DensePoly& o) const {
    Bounds nb;
    for (int d = 0; d < N; ++d) nb[d] = std::max(bounds_[d], o.bounds_[d]);
    DensePoly out = padded(nb);
    Bounds idx{};
    for (std::size_t f = 0; f < o.coeffs_.size(); ++f) {
      out.at(idx) += o.coeffs_[f];
      o.advance(idx);
    }
    return out;
  }

  DensePoly operator-() const { return scaled(T(-1)); }

  DensePoly operator-(const DensePoly& o) const { return *this + (-o); }

  DensePoly scaled(const T& s) const {
    DensePoly out = *this;
    for (T& c : out.coeffs_) c = c * s;
    return out;
  }

  DensePoly operator*(const DensePoly& o) const {
    if (is_zero() || o.is_zero()) return DensePoly{};
    Bounds nb;
    for (int d = 0; d < N; ++d) nb[d] = bounds_[d] + o.bounds_[d];
    DensePoly out(nb);
    // Flat output index of a product term decomposes as the sum of the two
    // operand indices mapped through the output strides.
    const auto a_terms = nonzero_terms_in(out.bounds_);
    const auto b_terms = o.nonzero_terms_in(out.bounds_);
    for (const auto& [fa, ca] : a_terms)
      for (const auto& [fb, cb] : b_terms) out.coeffs_[fa + fb] += (*ca) * (*cb);
    return out;
  }

  // Equality as functions: bounds-independent coefficient comparison.
  bool operator==(const DensePoly& o) const {
    Bounds nb;
    for (int d = 0; d < N; ++d) nb[d] = std::max(bounds_[d], o.bounds_[d]);
    Bounds idx{};
    const std::int64_t total = checked_slots(nb);
    for (std::int64_t f = 0; f < total; ++f) {
      if (!(coeff_or_zero(idx) == o.coeff_or_zero(idx))) return false;
      advance_in(nb, idx);
    }
    return true;
  }
  bool operator!=(const DensePoly& o) const { return !(*this == o); }

  DensePoly truncated(int r, TruncateMode mode) const {
    if (r < 0) throw std::invalid_argument("truncated: r must be >= 0");
    DensePoly out;
    if (mode == TruncateMode::per_variable) {
      Bounds nb;
      for (int d = 0; d < N; ++d) nb[d] = std::min(bounds_[d], r);
      out = DensePoly(nb);
      Bounds idx{};
      for (std::size_t f = 0; f < out.coeffs_.size(); ++f) {
        out.coeffs_[f] = at(idx);
        out.advance(idx);
      }
    } else {
      out = *this;
      Bounds idx{};
      for (std::size_t f = 0; f < out.coeffs_.size(); ++f) {
        int total = 0;
        for (int d = 0; d < N; ++d) total += idx[d];
        if (total > r) out.coeffs_[f] = T(0);
        advance(idx);
      }
    }
    return out.trimmed();
  }

private:
  static std::int64_t checked_slots(const Bounds& b) {
    std::int64_t n = 1;
    for (int d = 0; d < N; ++d) {
      if (b[d] < 0) throw std::invalid_argument("DensePoly: negative degree bound");
      n *= b[d] + 1;
      if (n > (std::int64_t(1) << 27)) throw std::length_error("DensePoly: coefficient tensor too large");
    }
    return n;
  }

  std::size_t flat(const Bounds& idx) const {
    std::size_t f = 0;
    for (int d = 0; d < N; ++d) {
      if (idx[d] < 0 || idx[d] > bounds_[d]) throw std::out_of_range("DensePoly: index outside bounds");
      f = f * std::size_t(bounds_[d] + 1) + std::size_t(idx[d]);
    }
    return f;
  }

  T coeff_or_zero(const Bounds& idx) const {
    for (int d = 0; d < N; ++d)
      if (idx[d] > bounds_[d]) return T(0);
    return at(idx);
  }

  // Odometer increment over this polynomial's bounds (last dim fastest).
  void advance(Bounds& idx) const { advance_in(bounds_, idx); }

  static void advance_in(const Bounds& bounds, Bounds& idx) {
    for (int d = N - 1; d >= 0; --d) {
      if (++idx[d] <= bounds[d]) return;
      idx[d] = 0;
    }
  }

  // Nonzero coefficients with their flat index under the strides of `target`.
  std::vector<std::pair<std::size_t, const T*>> nonzero_terms_in(const Bounds& target) const {
    std::array<std::size_t, N> stride;
    std::size_t s = 1;
    for (int d = N - 1; d >= 0; --d) {
      stride[d] = s;
      s *= std::size_t(target[d] + 1);
    }
    std::vector<std::pair<std::size_t, const T*>> terms;
    Bounds idx{};
    for (std::size_t f = 0; f < coeffs_.size(); ++f) {
      if (!(coeffs_[f] == T(0))) {
        std::size_t mapped = 0;
        for (int d = 0; d < N; ++d) mapped += std::size_t(idx[d]) * stride[d];
        terms.emplace_back(mapped, &coeffs_[f]);
      }
      advance(idx);
    }
    return terms;
  }

  T eval_dim(const std::array<T, N>& x, int dim, std::size_t offset) const {
    if (dim == N - 1) {
      T acc(0);
      for (int i = bounds_[dim]; i >= 0; --i) acc = acc * x[dim] + coeffs_[offset + std::size_t(i)];
      return acc;
    }
    std::size_t stride = 1;
    for (int d = dim + 1; d < N; ++d) stride *= std::size_t(bounds_[d] + 1);
    T acc(0);
    for (int i = bounds_[dim]; i >= 0; --i)
      acc = acc * x[dim] + eval_dim(x, dim + 1, offset + std::size_t(i) * stride);
    return acc;
  }

  Bounds bounds_;
  std::vector<T> coeffs_;
};

using TriPoly = DensePoly<double, 3>;
using BiPoly = DensePoly<double, 2>;

// s*g + t*f, coefficientwise on the common padded bounds.
template <typename T, int N>
DensePoly<T, N> lin_comb(const DensePoly<T, N>& g, const DensePoly<T, N>& f, const T& s, const T& t) {
  return g.scaled(s) + f.scaled(t);
}

// Substitute (u,v) <- (a,b) into a bivariate polynomial, by Horner in
// polynomial arithmetic. Exact for exact scalar types.
template <typename T, int M>
DensePoly<T, M> compose(const DensePoly<T, 2>& node, const DensePoly<T, M>& a, const DensePoly<T, M>& b) {
  const auto& nb = node.degree_bounds();
  DensePoly<T, M> acc_u;
  for (int i = nb[0]; i >= 0; --i) {
    DensePoly<T, M> acc_v;
    for (int j = nb[1]; j >= 0; --j)
      acc_v = acc_v * b + DensePoly<T, M>::constant(node.coeff(i, j));
    acc_u = acc_u * a + acc_v;
  }
  return acc_u.trimmed();
}

// Max |p| over the N-dimensional lattice. A lower bound of the true sup
// over the cube, never a certified bound.
template <int N>
double sup_norm(const DensePoly<double, N>& p, const GridSpec& grid) {
  std::array<int, N> idx{};
  std::array<double, N> x;
  double best = 0.0;
  while (true) {
    for (int d = 0; d < N; ++d) x[d] = grid.node(idx[d]);
    best = std::max(best, std::fabs(p.eval(x)));
    int d = N - 1;
    for (; d >= 0; --d) {
      if (++idx[d] < grid.points_per_axis) break;
      idx[d] = 0;
    }
    if (d < 0) break;
  }
  return best;
}

}  // namespace h13
