// rogers: compute Rogers-Szego polynomials, theta coefficients and
// structure constants, and run identity-verification sweeps.

#include "rogers/multipoly.hpp"
#include "rogers/qpoly.hpp"
#include "rogers/rspoly.hpp"
#include "rogers/symfun.hpp"
#include "rogers/theta.hpp"
#include "rogers/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <tuple>

using namespace rogers;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_non_negative(int v, const char *flag) {
  if (v < 0)
    throw UsageError(std::string(flag) + " must be non-negative");
}

void print(const json &j) { std::cout << j.dump(2) << '\n'; }

std::string mvec_str(const MVec &m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.entries().size(); ++i)
    os << (i ? "," : "") << m.entries()[i];
  os << ']';
  return os.str();
}

Partition parse_partition(const std::vector<int> &parts) {
  for (int p : parts)
    if (p <= 0)
      throw UsageError("partition parts must be positive");
  return Partition::from_parts(parts);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Rogers-Szego polynomials, theta coefficients and the R-basis of Lambda[q]"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON schemas instead of polynomial strings");

  // theta
  std::vector<int> m_entries;
  int k = 0, n = 0;
  auto *theta_cmd = app.add_subcommand("theta", "theta_{m,k,n}(q) from the recursion");
  theta_cmd->add_option("--m", m_entries, "m_2,...,m_l (comma separated); l = length + 1")
      ->required()
      ->delimiter(',');
  theta_cmd->add_option("--k", k)->required();
  theta_cmd->add_option("--n", n)->required();

  // theta-table
  int l = 2, k_max = 4, n_max = 4;
  auto *table_cmd = app.add_subcommand("theta-table", "every theta_{m,k,n} with wt(m) <= k+n in a box");
  table_cmd->add_option("--l", l, "number of variables")->required();
  table_cmd->add_option("--kmax", k_max)->required();
  table_cmd->add_option("--nmax", n_max)->required();

  // htilde
  auto *htilde_cmd = app.add_subcommand("htilde", "homogeneous Rogers-Szego polynomial H~_n(t_1..t_l)");
  htilde_cmd->add_option("--n", n)->required();
  htilde_cmd->add_option("--l", l)->required();

  // galois
  std::optional<long> q_at;
  auto *galois_cmd = app.add_subcommand("galois", "generalized Galois number G_n^(l)(q)");
  galois_cmd->add_option("--n", n)->required();
  galois_cmd->add_option("--l", l)->required();
  galois_cmd->add_option("--q", q_at, "evaluate at this integer q");

  // expand-htilde
  auto *expand_cmd = app.add_subcommand("expand-htilde", "H~_n in the elementary basis of Lambda[q]");
  expand_cmd->add_option("--n", n)->required();

  // product-r
  std::vector<int> kappa_parts, nu_parts;
  auto *product_cmd = app.add_subcommand("product-r", "R_kappa * R_nu in the R-basis");
  product_cmd->add_option("--kappa", kappa_parts, "parts of kappa (comma separated, may be empty)")
      ->delimiter(',')
      ->expected(0, -1);
  product_cmd->add_option("--nu", nu_parts, "parts of nu (comma separated, may be empty)")
      ->delimiter(',')
      ->expected(0, -1);

  // verify
  std::vector<std::string> checks;
  auto *verify_cmd = app.add_subcommand("verify", "run identity checks over 0 <= k <= kmax, 0 <= n <= nmax");
  verify_cmd->add_option("--l", l, "number of variables (default 2)");
  verify_cmd->add_option("--kmax", k_max, "default 4");
  verify_cmd->add_option("--nmax", n_max, "default 4");
  verify_cmd->add_option("--checks", checks, "comma separated check names (default: all)")->delimiter(',');
  bool list_checks = false;
  verify_cmd->add_flag("--list", list_checks, "list the registered checks and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*theta_cmd) {
      require_non_negative(k, "--k");
      require_non_negative(n, "--n");
      for (int x : m_entries)
        require_non_negative(x, "--m entries");
      MVec m(m_entries);
      ThetaTable table(m.nvars());
      QPoly value = table.theta(m, k, n);
      if (as_json)
        print(json{{"m", m.entries()}, {"k", k}, {"n", n}, {"theta", value}});
      else
        std::cout << value << '\n';
    } else if (*table_cmd) {
      if (l < 2)
        throw UsageError("--l must be at least 2");
      require_non_negative(k_max, "--kmax");
      require_non_negative(n_max, "--nmax");
      ThetaTable table(static_cast<std::size_t>(l));
      std::vector<std::tuple<int, int, MVec>> rows;
      for (int kk = 0; kk <= k_max; ++kk)
        for (int nn = 0; nn <= n_max; ++nn)
          for (const MVec &m : mvecs_up_to_weight(static_cast<std::size_t>(l), kk + nn))
            rows.emplace_back(kk, nn, m);
      std::stable_sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        const auto &[ka, na, ma] = a;
        const auto &[kb, nb, mb] = b;
        const int wa = ma.weight(), wb = mb.weight();
        return std::tie(ka, na, wa, ma) < std::tie(kb, nb, wb, mb);
      });
      json out = json::array();
      for (const auto &[kk, nn, m] : rows) {
        QPoly value = table.theta(m, kk, nn);
        if (as_json)
          out.push_back({{"m", m.entries()}, {"k", kk}, {"n", nn}, {"theta", value}});
        else
          std::cout << "m=" << mvec_str(m) << " k=" << kk << " n=" << nn << ": " << value << '\n';
      }
      if (as_json)
        print(out);
    } else if (*htilde_cmd) {
      require_non_negative(n, "--n");
      if (l < 1)
        throw UsageError("--l must be positive");
      MultiPoly h = htilde_direct(n, static_cast<std::size_t>(l));
      if (as_json)
        print(h);
      else
        std::cout << h.to_string() << '\n';
    } else if (*galois_cmd) {
      require_non_negative(n, "--n");
      if (l < 1)
        throw UsageError("--l must be positive");
      QPoly g = galois(n, static_cast<std::size_t>(l));
      if (q_at) {
        Integer value = g.evaluate(Integer(*q_at));
        if (as_json)
          print(json(value.get_str()));
        else
          std::cout << value.get_str() << '\n';
      } else if (as_json) {
        print(g);
      } else {
        std::cout << g << '\n';
      }
    } else if (*expand_cmd) {
      require_non_negative(n, "--n");
      SymExpansion x = expand_htilde_in_e(n);
      if (as_json)
        print(x);
      else
        std::cout << x.to_string() << '\n';
    } else if (*product_cmd) {
      ThetaProvider thetas;
      SymExpansion x = product_r(parse_partition(kappa_parts), parse_partition(nu_parts), thetas);
      if (as_json)
        print(x);
      else
        std::cout << x.to_string() << '\n';
    } else if (*verify_cmd) {
      if (list_checks) {
        for (const auto &name : registered_checks())
          std::cout << name << '\n';
        return 0;
      }
      SweepSpec spec{l, k_max, n_max, checks};
      std::vector<CheckReport> reports;
      try {
        reports = run_sweep(spec);
      } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
      }
      bool all_ok = true;
      for (const auto &r : reports) {
        std::cout << r.name << ": " << r.passed << '/' << r.total << " pass\n";
        if (!r.ok()) {
          all_ok = false;
          std::cout << "  first counterexample: " << *r.counterexample << '\n';
        }
      }
      return all_ok ? 0 : 1;
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
