#pragma once

// Composition DAGs: acyclic nestings of bivariate nodes over the three
// inputs x1, x2, x3. A DAG whose n bivariate nodes all carry polynomials
// realizes an n-polynomial; nodes may instead carry opaque continuous
// callables, which support evaluation only (all algebra requires
// polynomial nodes).
//
// Node references always point strictly earlier in the node list, so a
// well-formed node list is acyclic by construction and list order is a
// topological order.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "h13/counting.hpp"
#include "h13/polynomial.hpp"
#include "h13/rational.hpp"

namespace h13 {

struct unsupported_node_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputNode {
  int var = 1;  // 1-based: x1, x2, x3
};

template <typename T>
struct PolyNode {
  int left = -1;
  int right = -1;
  DensePoly<T, 2> poly;
};

template <typename T>
struct OpaqueNode {
  int left = -1;
  int right = -1;
  std::function<T(T, T)> fn;
};

template <typename T>
struct BasicDag {
  using Node = std::variant<InputNode, PolyNode<T>, OpaqueNode<T>>;

  std::vector<Node> nodes;
  int output = -1;

  int bivariate_count() const {
    int n = 0;
    for (const auto& node : nodes)
      if (!std::holds_alternative<InputNode>(node)) ++n;
    return n;
  }

  bool all_polynomial() const {
    for (const auto& node : nodes)
      if (std::holds_alternative<OpaqueNode<T>>(node)) return false;
    return true;
  }
};

using Dag = BasicDag<double>;
using DagQ = BasicDag<Rational>;

// Checks the structural invariants; returns the first violation, or nullopt.
template <typename T>
std::optional<std::string> validate(const BasicDag<T>& dag) {
  if (dag.nodes.empty()) return "dag has no nodes";
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const auto check_children = [&](int left, int right) -> std::optional<std::string> {
      for (int c : {left, right})
        if (c < 0 || c >= int(i))
          return "node " + std::to_string(i) + ": bivariate node must reference two earlier nodes, got child " +
                 std::to_string(c);
      return std::nullopt;
    };
    if (const auto* in = std::get_if<InputNode>(&dag.nodes[i])) {
      if (in->var < 1 || in->var > 3)
        return "node " + std::to_string(i) + ": input variable must be 1, 2 or 3";
    } else if (const auto* pn = std::get_if<PolyNode<T>>(&dag.nodes[i])) {
      if (auto err = check_children(pn->left, pn->right)) return err;
    } else {
      const auto& on = std::get<OpaqueNode<T>>(dag.nodes[i]);
      if (auto err = check_children(on.left, on.right)) return err;
      if (!on.fn) return "node " + std::to_string(i) + ": opaque node has no callable";
    }
  }
  if (dag.output < 0 || dag.output >= int(dag.nodes.size()))
    return "output index " + std::to_string(dag.output) + " out of range";
  return std::nullopt;
}

// Topological-order evaluation. Precondition: validated DAG.
template <typename T>
T eval_dag(const BasicDag<T>& dag, const T& x1, const T& x2, const T& x3) {
  const std::array<T, 3> x{x1, x2, x3};
  std::vector<T> values(dag.nodes.size(), T(0));
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    if (const auto* in = std::get_if<InputNode>(&dag.nodes[i])) {
      values[i] = x[std::size_t(in->var - 1)];
    } else if (const auto* pn = std::get_if<PolyNode<T>>(&dag.nodes[i])) {
      values[i] = pn->poly(values[std::size_t(pn->left)], values[std::size_t(pn->right)]);
    } else {
      const auto& on = std::get<OpaqueNode<T>>(dag.nodes[i]);
      values[i] = on.fn(values[std::size_t(on.left)], values[std::size_t(on.right)]);
    }
  }
  return values[std::size_t(dag.output)];
}

// Symbolic expansion to a trivariate polynomial. Identical as a function to
// eval_dag; exact in rational mode. Throws unsupported_node_error on opaque
// nodes.
template <typename T>
DensePoly<T, 3> expand(const BasicDag<T>& dag) {
  if (auto err = validate(dag)) throw std::invalid_argument("expand: " + *err);
  std::vector<DensePoly<T, 3>> polys(dag.nodes.size());
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    if (const auto* in = std::get_if<InputNode>(&dag.nodes[i])) {
      typename DensePoly<T, 3>::Bounds e{};
      e[std::size_t(in->var - 1)] = 1;
      polys[i] = DensePoly<T, 3>::monomial(e);
    } else if (const auto* pn = std::get_if<PolyNode<T>>(&dag.nodes[i])) {
      polys[i] = compose(pn->poly, polys[std::size_t(pn->left)], polys[std::size_t(pn->right)]);
    } else {
      throw unsupported_node_error("expand: node " + std::to_string(i) + " carries an opaque callable");
    }
  }
  return polys[std::size_t(dag.output)];
}

template <typename T>
struct NormalizationResult {
  BasicDag<T> dag;
  T constant;  // value of the original DAG at the origin
};

// Rewrites every node polynomial to vanish at (0,0): each node absorbs its
// children's origin values by an argument shift, then its own origin value is
// subtracted and carried upward. The normalized DAG computes the original
// function minus its value at the origin.
template <typename T>
NormalizationResult<T> normalize_origin(const BasicDag<T>& dag) {
  if (auto err = validate(dag)) throw std::invalid_argument("normalize_origin: " + *err);
  NormalizationResult<T> result{dag, T(0)};
  std::vector<T> origin(dag.nodes.size(), T(0));
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    if (std::holds_alternative<InputNode>(dag.nodes[i])) continue;  // inputs are 0 at the origin
    const auto* pn = std::get_if<PolyNode<T>>(&dag.nodes[i]);
    if (!pn)
      throw unsupported_node_error("normalize_origin: node " + std::to_string(i) + " carries an opaque callable");
    // shift arguments: u -> u + c_left, v -> v + c_right
    DensePoly<T, 2> arg_u({1, 0});
    arg_u.coeff(0, 0) = origin[std::size_t(pn->left)];
    arg_u.coeff(1, 0) = T(1);
    DensePoly<T, 2> arg_v({0, 1});
    arg_v.coeff(0, 0) = origin[std::size_t(pn->right)];
    arg_v.coeff(0, 1) = T(1);
    DensePoly<T, 2> shifted = compose(pn->poly, arg_u, arg_v);
    origin[i] = shifted.coeff(0, 0);
    shifted.coeff(0, 0) = T(0);
    result.dag.nodes[i] = PolyNode<T>{pn->left, pn->right, shifted.trimmed()};
  }
  result.constant = origin[std::size_t(dag.output)];
  return result;
}

// Truncates every node polynomial at degree r (mode as in DensePoly::truncated).
template <typename T>
BasicDag<T> truncate_nodes(const BasicDag<T>& dag, int r, TruncateMode mode) {
  BasicDag<T> out = dag;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    if (std::holds_alternative<InputNode>(out.nodes[i])) continue;
    const auto* pn = std::get_if<PolyNode<T>>(&out.nodes[i]);
    if (!pn)
      throw unsupported_node_error("truncate_nodes: node " + std::to_string(i) + " carries an opaque callable");
    out.nodes[i] = PolyNode<T>{pn->left, pn->right, pn->poly.truncated(r, mode)};
  }
  return out;
}

// Free parameters of the DAG at node degree r: bivariate node count times the
// per-node coefficient count of the chosen mode.
template <typename T>
std::int64_t param_count(const BasicDag<T>& dag, int r, CountMode mode) {
  if (r < 0) throw std::invalid_argument("param_count: r must be >= 0");
  if (r == 0) return 0;
  return std::int64_t(dag.bivariate_count()) * bivariate_count(r, mode);
}

// Named topologies used by the CLI and the experiments. Node polynomials are
// zero-initialized at square bounds (r, r).
inline Dag make_chain2(int r) {
  Dag dag;
  dag.nodes = {InputNode{1}, InputNode{2}, InputNode{3},
               Dag::Node(PolyNode<double>{1, 2, BiPoly({r, r})}),
               Dag::Node(PolyNode<double>{0, 3, BiPoly({r, r})})};
  dag.output = 4;
  return dag;
}

// Three leaves f(x1,x2), g(x2,x3), h(x3,x1) combined pairwise up to a single
// output: a(f,g), b(g,h), c(h,f), A(a,b), B(b,c), C(A,B). Nine bivariate nodes.
inline Dag make_hilbert_3leaf(int r) {
  Dag dag;
  auto bi = [r](int l, int rr) { return Dag::Node(PolyNode<double>{l, rr, BiPoly({r, r})}); };
  dag.nodes = {InputNode{1}, InputNode{2}, InputNode{3},
               bi(0, 1),   // 3: f(x1,x2)
               bi(1, 2),   // 4: g(x2,x3)
               bi(2, 0),   // 5: h(x3,x1)
               bi(3, 4),   // 6: a(f,g)
               bi(4, 5),   // 7: b(g,h)
               bi(5, 3),   // 8: c(h,f)
               bi(6, 7),   // 9: A(a,b)
               bi(7, 8),   // 10: B(b,c)
               bi(9, 10)}; // 11: C(A,B)
  dag.output = 11;
  return dag;
}

inline Dag make_preset(std::string_view name, int r) {
  if (name == "chain2") return make_chain2(r);
  if (name == "hilbert-3leaf") return make_hilbert_3leaf(r);
  throw std::invalid_argument("unknown preset: " + std::string(name) +
                              " (available: chain2, hilbert-3leaf)");
}

}  // namespace h13
