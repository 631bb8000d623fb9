#pragma once

#include "rogers/multipoly.hpp"
#include "rogers/qpoly.hpp"
#include "rogers/theta.hpp"

#include <map>
#include <string>
#include <vector>

namespace rogers {

/// Univariate polynomial in t with QPoly coefficients, ascending in t.
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(std::vector<QPoly> coeffs);
  /// From a one-variable MultiPoly.
  static TPoly from_multipoly(const MultiPoly &p);

  const std::vector<QPoly> &coeffs() const { return coeffs_; }
  QPoly coeff(std::size_t power) const;
  bool is_zero() const { return coeffs_.empty(); }

  TPoly &operator+=(const TPoly &rhs);
  friend TPoly operator+(TPoly a, const TPoly &b) { return a += b; }
  friend TPoly operator*(const TPoly &a, const TPoly &b);
  friend TPoly operator*(const QPoly &c, const TPoly &a);
  friend bool operator==(const TPoly &, const TPoly &) = default;

  /// Multiply by t^power.
  TPoly shifted(std::size_t power) const;

  std::string to_string() const;

private:
  void trim();

  std::vector<QPoly> coeffs_;
};

void to_json(nlohmann::json &j, const TPoly &p);

/// H_n(t) = sum_r [n choose r]_q t^r
TPoly h_univariate(int n);

/// sum_r [k choose r]_q [n choose r]_q (q)_r t^r H_{k+n-2r}(t)
TPoly product_classical(int k, int n);

/**
 * Per-l cache of H~_n and e_i. H~_n comes from the recursion
 *
 *   H~_{n+1} = sum_{j=0}^{l-1} (-1)^j e_{j+1} [n choose j]_q (q)_j H~_{n-j}
 *
 * with H~_0 = 1 and H~_j = 0 for j < 0. Single-threaded.
 */
class RSContext {
public:
  explicit RSContext(std::size_t l);

  std::size_t nvars() const { return l_; }
  const MultiPoly &elementary(int i);
  MultiPoly htilde(int n);
  /// prod_{i>=2} e_i^{m_i}
  MultiPoly elementary_power(const MVec &m);

private:
  std::size_t l_;
  std::map<int, MultiPoly> e_cache_;
  std::vector<MultiPoly> h_cache_;
};

inline MultiPoly htilde_rec(int n, RSContext &ctx) { return ctx.htilde(n); }

/// Right-hand side of the generalized product formula:
/// sum_m (-1)^wt(m) theta_{m,k,n} prod e_i^{m_i} H~_{k+n-wt(m)}.
/// Throws std::invalid_argument if ctx and table disagree on l.
MultiPoly product_general(int k, int n, RSContext &ctx, ThetaTable &table);

/// One nonzero summand of the generalized product formula.
struct ProductTerm {
  MVec m;
  QPoly signed_theta; // (-1)^wt(m) theta_{m,k,n}
};

/// The nonzero terms of product_general in lexicographic order of m.
std::vector<ProductTerm> product_general_terms(int k, int n, ThetaTable &table);

/// G_n^{(l)}(q) = H~_n(1, ..., 1)
QPoly galois(int n, std::size_t l);

/// The generalized product formula with every t_i = 1:
/// sum_m (-1)^wt(m) theta_{m,k,n} prod binom(l,i)^{m_i} G_{k+n-wt(m)}^{(l)}.
QPoly galois_alternating_sum(int k, int n, ThetaTable &table);

} // namespace rogers
