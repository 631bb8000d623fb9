#include "rogers/verify.hpp"

#include "rogers/multipoly.hpp"
#include "rogers/rspoly.hpp"
#include "rogers/symfun.hpp"
#include "rogers/theta.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rogers {

namespace {

// Records one cell of a sweep, keeping only the first failure.
class Tally {
public:
  explicit Tally(std::string name) { report_.name = std::move(name); }

  template <typename T>
  void check(const std::string &inputs, const T &lhs, const T &rhs) {
    ++report_.total;
    if (lhs == rhs) {
      ++report_.passed;
    } else if (!report_.counterexample) {
      std::ostringstream os;
      os << inputs << "\n  lhs: " << lhs.to_string() << "\n  rhs: " << rhs.to_string();
      report_.counterexample = os.str();
    }
  }

  void check_bool(const std::string &inputs, bool ok, const std::string &detail) {
    ++report_.total;
    if (ok)
      ++report_.passed;
    else if (!report_.counterexample)
      report_.counterexample = inputs + "\n  " + detail;
  }

  CheckReport take() { return std::move(report_); }

private:
  CheckReport report_;
};

std::string mvec_str(const MVec &m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.entries().size(); ++i)
    os << (i ? "," : "") << m.entries()[i];
  os << ']';
  return os.str();
}

std::string cell(const SweepSpec &s, int k, int n) {
  return "l=" + std::to_string(s.l) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

CheckReport check_htilde_recursion(const SweepSpec &s) {
  Tally t("htilde_recursion");
  RSContext ctx(static_cast<std::size_t>(s.l));
  for (int n = 0; n <= std::max(s.k_max, s.n_max); ++n)
    t.check("l=" + std::to_string(s.l) + " n=" + std::to_string(n), ctx.htilde(n),
            htilde_direct(n, static_cast<std::size_t>(s.l)));
  return t.take();
}

CheckReport check_product_general(const SweepSpec &s) {
  Tally t("product_general");
  const auto l = static_cast<std::size_t>(s.l);
  RSContext ctx(l);
  ThetaTable table(l);
  for (int k = 0; k <= s.k_max; ++k)
    for (int n = 0; n <= s.n_max; ++n)
      t.check(cell(s, k, n), product_general(k, n, ctx, table), htilde_direct(k, l) * htilde_direct(n, l));
  return t.take();
}

CheckReport check_product_classical(const SweepSpec &s) {
  Tally t("product_classical");
  for (int k = 0; k <= s.k_max; ++k)
    for (int n = 0; n <= s.n_max; ++n)
      t.check("k=" + std::to_string(k) + " n=" + std::to_string(n), product_classical(k, n),
              h_univariate(k) * h_univariate(n));
  return t.take();
}

// Two variables with t_2 = 1 turns the general formula into the classical one.
CheckReport check_classical_specialization(const SweepSpec &s) {
  Tally t("classical_specialization");
  RSContext ctx(2);
  ThetaTable table(2);
  for (int k = 0; k <= s.k_max; ++k)
    for (int n = 0; n <= s.n_max; ++n)
      t.check("l=2 k=" + std::to_string(k) + " n=" + std::to_string(n),
              TPoly::from_multipoly(product_general(k, n, ctx, table).substitute(1, 1)),
              product_classical(k, n));
  return t.take();
}

CheckReport check_theta_closed_uj(const SweepSpec &s) {
  Tally t("theta_closed_uj");
  const auto l = static_cast<std::size_t>(s.l);
  ThetaTable table(l);
  for (std::size_t j = 1; j < l; ++j)
    for (int k = 0; k <= s.k_max; ++k)
      for (int n = 0; n <= s.n_max; ++n)
        t.check(cell(s, k, n) + " j=" + std::to_string(j), table.theta(MVec::unit(j, l), k, n),
                theta_closed_uj(static_cast<int>(j), k, n));
  return t.take();
}

CheckReport check_theta_closed_full(const SweepSpec &s) {
  Tally t("theta_closed_full");
  const auto l = static_cast<std::size_t>(s.l);
  ThetaTable table(l);
  for (int k = 0; k <= s.k_max; ++k)
    for (int n = 0; n <= s.n_max; ++n)
      for (const MVec &m : mvecs_up_to_weight(l, k + n))
        if (m.size() == k)
          t.check(cell(s, k, n) + " m=" + mvec_str(m), table.theta(m, k, n), theta_closed_full(m, k, n));
  return t.take();
}

CheckReport check_theta_closed_ru1(const SweepSpec &s) {
  Tally t("theta_closed_ru1");
  const auto l = static_cast<std::size_t>(s.l);
  ThetaTable table(l);
  for (int r = 0; r <= std::max(s.k_max, s.n_max); ++r)
    for (int k = 0; k <= s.k_max; ++k)
      for (int n = 0; n <= s.n_max; ++n)
        t.check(cell(s, k, n) + " r=" + std::to_string(r), table.theta(MVec::unit(1, l).scaled(r), k, n),
                theta_closed_ru1(r, k, n));
  return t.take();
}

CheckReport check_theta_symmetry(const SweepSpec &s) {
  Tally t("theta_symmetry");
  const auto l = static_cast<std::size_t>(s.l);
  ThetaTable table(l);
  for (int k = 0; k <= s.k_max; ++k)
    for (int n = 0; n <= s.n_max; ++n) {
      bool ok = true;
      std::string detail;
      for (const MVec &m : mvecs_up_to_weight(l, k + n)) {
        QPoly a = table.theta(m, k, n);
        QPoly b = table.theta(m, n, k);
        if (a != b) {
          ok = false;
          detail = "m=" + mvec_str(m) + " theta(k,n)=" + a.to_string() + " theta(n,k)=" + b.to_string();
          break;
        }
      }
      t.check_bool(cell(s, k, n), ok, detail);
    }
  return t.take();
}

CheckReport check_theta_vanishing(const SweepSpec &s) {
  Tally t("theta_vanishing");
  const auto l = static_cast<std::size_t>(s.l);
  ThetaTable table(l);
  for (int k = 0; k <= s.k_max; ++k)
    for (int n = 0; n <= s.n_max; ++n) {
      bool ok = true;
      std::string detail;
      // Reach past k+n so the wt(m) > k+n rule is exercised too.
      for (const MVec &m : mvecs_up_to_weight(l, k + n + 2)) {
        bool zero = table.theta(m, k, n).is_zero();
        if (zero != theta_vanishes(m, k, n)) {
          ok = false;
          detail = "m=" + mvec_str(m) + (zero ? " is zero but not forced" : " is forced zero but nonzero");
          break;
        }
      }
      t.check_bool(cell(s, k, n), ok, detail);
    }
  return t.take();
}

CheckReport check_lemma_e1n(const SweepSpec &s) {
  Tally t("lemma_e1n");
  for (int n = 0; n <= std::max(s.k_max, s.n_max); ++n)
    t.check("n=" + std::to_string(n), expand_htilde_in_e(n).coeff(Partition::ones(n)), QPoly(1));
  return t.take();
}

CheckReport check_basis_roundtrip(const SweepSpec &s) {
  Tally t("basis_roundtrip");
  for (int d = 0; d <= std::max(s.k_max, s.n_max); ++d)
    for (const Partition &lambda : partitions_of(d)) {
      SymExpansion r(Basis::R), e(Basis::E);
      r.add_term(lambda, 1);
      e.add_term(lambda, 1);
      t.check("R" + lambda.to_string(), e_to_r(r_to_e(r)), r);
      t.check("e" + lambda.to_string(), r_to_e(e_to_r(e)), e);
    }
  return t.take();
}

CheckReport check_galois_product(const SweepSpec &s) {
  Tally t("galois_product");
  const auto l = static_cast<std::size_t>(s.l);
  RSContext ctx(l);
  ThetaTable table(l);
  for (int k = 0; k <= s.k_max; ++k)
    for (int n = 0; n <= s.n_max; ++n) {
      QPoly lhs = galois(k, l) * galois(n, l);
      t.check(cell(s, k, n), galois_alternating_sum(k, n, table), lhs);
      t.check(cell(s, k, n) + " (all t_i = 1)", specialize_all_ones(product_general(k, n, ctx, table)), lhs);
    }
  return t.take();
}

CheckReport check_structure_constants(const SweepSpec &s) {
  Tally t("structure_constants");
  ThetaProvider thetas;
  for (int a = 0; a <= s.k_max; ++a)
    for (int b = 0; b <= s.n_max; ++b)
      for (const Partition &kappa : partitions_of(a))
        for (const Partition &nu : partitions_of(b)) {
          const auto vars = static_cast<std::size_t>(std::max(1, a + b));
          SymExpansion rk(Basis::R), rn(Basis::R);
          rk.add_term(kappa, 1);
          rn.add_term(nu, 1);
          t.check("kappa=" + kappa.to_string() + " nu=" + nu.to_string(),
                  to_multipoly(r_to_e(product_r(kappa, nu, thetas)), vars),
                  to_multipoly(rk, vars) * to_multipoly(rn, vars));
        }
  return t.take();
}

using CheckFn = std::function<CheckReport(const SweepSpec &)>;

const std::vector<std::pair<std::string, CheckFn>> &registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"htilde_recursion", check_htilde_recursion},
      {"product_general", check_product_general},
      {"product_classical", check_product_classical},
      {"classical_specialization", check_classical_specialization},
      {"theta_closed_uj", check_theta_closed_uj},
      {"theta_closed_full", check_theta_closed_full},
      {"theta_closed_ru1", check_theta_closed_ru1},
      {"theta_symmetry", check_theta_symmetry},
      {"theta_vanishing", check_theta_vanishing},
      {"lemma_e1n", check_lemma_e1n},
      {"basis_roundtrip", check_basis_roundtrip},
      {"galois_product", check_galois_product},
      {"structure_constants", check_structure_constants},
  };
  return checks;
}

} // namespace

const std::vector<std::string> &registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, fn] : registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckReport> run_sweep(const SweepSpec &spec) {
  if (spec.l < 2)
    throw std::invalid_argument("verify: l must be at least 2");
  if (spec.k_max < 0 || spec.n_max < 0)
    throw std::invalid_argument("verify: kmax and nmax must be non-negative");
  std::vector<const CheckFn *> selected;
  if (spec.checks.empty()) {
    for (const auto &[name, fn] : registry())
      selected.push_back(&fn);
  } else {
    for (const auto &want : spec.checks) {
      auto it = std::find_if(registry().begin(), registry().end(),
                             [&](const auto &entry) { return entry.first == want; });
      if (it == registry().end())
        throw std::invalid_argument("verify: unknown check '" + want + "'");
      selected.push_back(&it->second);
    }
  }
  std::vector<CheckReport> reports;
  for (const CheckFn *fn : selected)
    reports.push_back((*fn)(spec));
  return reports;
}

} // namespace rogers
