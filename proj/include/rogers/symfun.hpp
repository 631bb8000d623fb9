#pragma once

#include "rogers/multipoly.hpp"
#include "rogers/qpoly.hpp"
#include "rogers/theta.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rogers {

/**
 * An integer partition stored as part multiplicities (1^{m_1} 2^{m_2} ...).
 * Zero multiplicities are never stored.
 */
class Partition {
public:
  Partition() = default;
  /// Parts in any order; every part must be positive.
  static Partition from_parts(const std::vector<int> &parts);
  static Partition ones(int count);

  const std::map<int, int> &mults() const { return mults_; }
  int mult(int part) const;
  int m1() const { return mult(1); }
  int size() const;
  int length() const;
  int largest() const { return mults_.empty() ? 0 : mults_.rbegin()->first; }
  bool empty() const { return mults_.empty(); }

  /// Parts in weakly decreasing order.
  std::vector<int> parts() const;
  /// Drops every part equal to 1.
  Partition reduced() const;
  /// Multiset union of parts.
  Partition unite(const Partition &other) const;
  /// Multiset difference, or nullopt if other is not contained in *this.
  std::optional<Partition> minus(const Partition &other) const;

  std::string to_string() const;

  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::map<int, int> mults_;
};

/**
 * Presentation and elimination order for partitions: increasing size, then
 * decreasing m_1, then the reduced parts (as decreasing lists) in decreasing
 * lexicographic order.
 */
struct PartitionOrder {
  bool operator()(const Partition &a, const Partition &b) const;
};

/// All partitions of k, in PartitionOrder.
std::vector<Partition> partitions_of(int k);

/// Partition of k+n whose parts >= 2 have the multiplicities in m and whose
/// remaining mass is 1s. Throws std::invalid_argument if wt(m) > k+n.
Partition mvec_to_partition(const MVec &m, int k, int n);
/// [m_2(lambda), ..., m_l(lambda)]; throws if lambda has a part above l.
MVec partition_to_mvec(const Partition &lambda, std::size_t l);

enum class Basis { E, R };

/**
 * A homogeneous element of Lambda[q] written in the e-basis or the
 * Rogers-Szego basis R_lambda = H~_{m_1(lambda)} e_{reduced lambda}.
 */
class SymExpansion {
public:
  using Terms = std::map<Partition, QPoly, PartitionOrder>;

  explicit SymExpansion(Basis basis) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common size of every partition; nullopt for zero.
  std::optional<int> degree() const;
  QPoly coeff(const Partition &lambda) const;

  /// Throws std::invalid_argument if lambda's size differs from degree().
  void add_term(const Partition &lambda, const QPoly &c);

  SymExpansion &operator+=(const SymExpansion &rhs);
  SymExpansion &operator-=(const SymExpansion &rhs);
  friend SymExpansion operator*(const QPoly &c, const SymExpansion &x);
  /// Unions every label with lambda (multiplication by e_lambda when
  /// lambda has no part 1).
  SymExpansion unioned(const Partition &lambda) const;

  friend bool operator==(const SymExpansion &a, const SymExpansion &b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  void check_basis(const SymExpansion &other) const;

  Basis basis_;
  Terms terms_;
};

void to_json(nlohmann::json &j, const Partition &p);
void to_json(nlohmann::json &j, const SymExpansion &x);

/// H~_n in the e-basis of Lambda[q]. Cached process-wide (mutex guarded).
SymExpansion expand_htilde_in_e(int n);

SymExpansion r_to_e(const SymExpansion &x);
/// Back-substitution in PartitionOrder; every pivot is 1.
SymExpansion e_to_r(const SymExpansion &x);

/// Image in l variables: each e_lambda becomes a product of elementary
/// polynomials, each R_lambda becomes H~_{m_1} e_{reduced lambda}.
MultiPoly to_multipoly(const SymExpansion &x, std::size_t l);

/// theta_{lambda,k,n}, using a table with l = max(2, largest part).
/// Not synchronized.
class ThetaProvider {
public:
  QPoly theta(const Partition &lambda, int k, int n);

private:
  std::map<std::size_t, ThetaTable> tables_;
};

/// R_kappa R_nu in the R-basis.
SymExpansion product_r(const Partition &kappa, const Partition &nu, ThetaProvider &thetas);

/// Coefficient of R_gamma in R_kappa R_nu, computed without expanding the
/// product.
QPoly structure_constant(const Partition &kappa, const Partition &nu, const Partition &gamma,
                         ThetaProvider &thetas);

} // namespace rogers
