#include "rogers/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rogers {

MultiPoly MultiPoly::constant(std::size_t nvars, const QPoly &c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars)
    throw std::out_of_range("MultiPoly::variable: index past nvars");
  Exponents e(nvars, 0);
  e[var] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

QPoly MultiPoly::coeff(const Exponents &exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QPoly{} : it->second;
}

void MultiPoly::add_term(const Exponents &exps, const QPoly &c) {
  if (exps.size() != nvars_)
    throw std::invalid_argument("MultiPoly: exponent vector has wrong length");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void MultiPoly::check_same(const MultiPoly &other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("MultiPoly: mismatched number of variables");
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &rhs) {
  check_same(rhs);
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &rhs) {
  check_same(rhs);
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  a.check_same(b);
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const QPoly &c, const MultiPoly &a) {
  MultiPoly out(a.nvars_);
  if (c.is_zero())
    return out;
  for (const auto &[e, x] : a.terms_)
    out.terms_.emplace(e, c * x);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i)
    acc = acc * *this;
  return acc;
}

bool MultiPoly::is_homogeneous(unsigned d) const {
  for (const auto &[e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) != d)
      return false;
  return true;
}

MultiPoly MultiPoly::permuted(const std::vector<std::size_t> &perm) const {
  if (perm.size() != nvars_)
    throw std::invalid_argument("MultiPoly::permuted: permutation has wrong length");
  MultiPoly out(nvars_);
  Exponents e(nvars_);
  for (const auto &[src, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      e[perm[i]] = src[i];
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, int value) const {
  if (var >= nvars_)
    throw std::out_of_range("MultiPoly::substitute: index past nvars");
  if (value != 0 && value != 1)
    throw std::invalid_argument("MultiPoly::substitute: only 0 and 1 are supported");
  MultiPoly out(nvars_ - 1);
  Exponents e;
  for (const auto &[src, c] : terms_) {
    if (value == 0 && src[var] != 0)
      continue;
    e.assign(src.begin(), src.end());
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(var));
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::with_extra_vars(std::size_t extra) const {
  MultiPoly out(nvars_ + extra);
  for (const auto &[src, c] : terms_) {
    Exponents e = src;
    e.resize(nvars_ + extra, 0);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    bool negative = c.num_terms() == 1 && c.coeffs().back() < 0;
    QPoly mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      mono << (any ? "*" : "") << 't' << (i + 1);
      if (e[i] > 1)
        mono << '^' << e[i];
      any = true;
    }
    if (!any)
      os << (mag.num_terms() > 1 ? "(" + mag.to_string() + ")" : mag.to_string());
    else if (mag == QPoly(1))
      os << mono.str();
    else if (mag.num_terms() > 1)
      os << '(' << mag.to_string() << ")*" << mono.str();
    else
      os << mag.to_string() << '*' << mono.str();
  }
  return os.str();
}

MultiPoly mp_add(const MultiPoly &a, const MultiPoly &b) { return a + b; }
MultiPoly mp_mul(const MultiPoly &a, const MultiPoly &b) { return a * b; }
MultiPoly mp_scale(const QPoly &c, const MultiPoly &a) { return c * a; }

MultiPoly elementary(int i, std::size_t l) {
  MultiPoly out(l);
  if (i < 0 || static_cast<std::size_t>(i) > l)
    return out;
  // Squarefree monomials of degree i: walk the 0/1 exponent vectors.
  Exponents e(l, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (left == 0) {
      out.add_term(e, 1);
      return;
    }
    if (l - pos < static_cast<std::size_t>(left))
      return;
    e[pos] = 1;
    rec(pos + 1, left - 1);
    e[pos] = 0;
    rec(pos + 1, left);
  };
  rec(0, i);
  return out;
}

void for_each_composition(int n, std::size_t l, const std::function<void(const std::vector<int> &)> &visit) {
  if (n < 0 || l == 0)
    return;
  std::vector<int> parts(l, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == l) {
      parts[pos] = left;
      visit(parts);
      return;
    }
    for (int r = 0; r <= left; ++r) {
      parts[pos] = r;
      rec(pos + 1, left - r);
    }
  };
  rec(0, n);
}

MultiPoly htilde_direct(int n, std::size_t l) {
  MultiPoly out(l);
  for_each_composition(n, l, [&](const std::vector<int> &parts) {
    out.add_term(Exponents(parts.begin(), parts.end()), qmultinomial(n, parts));
  });
  return out;
}

QPoly specialize_all_ones(const MultiPoly &a) {
  QPoly sum;
  for (const auto &[e, c] : a.terms())
    sum += c;
  return sum;
}

void to_json(nlohmann::json &j, const MultiPoly &p) {
  j = nlohmann::json::array();
  for (const auto &[e, c] : p.terms())
    j.push_back({{"exponents", e}, {"coeff", c}});
}

} // namespace rogers
