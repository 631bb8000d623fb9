#include "rogers/symfun.hpp"

#include "rogers/rspoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rogers {

Partition Partition::from_parts(const std::vector<int> &parts) {
  Partition p;
  for (int x : parts) {
    if (x <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    ++p.mults_[x];
  }
  return p;
}

Partition Partition::ones(int count) {
  Partition p;
  if (count > 0)
    p.mults_[1] = count;
  return p;
}

int Partition::mult(int part) const {
  auto it = mults_.find(part);
  return it == mults_.end() ? 0 : it->second;
}

int Partition::size() const {
  int s = 0;
  for (const auto &[part, m] : mults_)
    s += part * m;
  return s;
}

int Partition::length() const {
  int s = 0;
  for (const auto &[part, m] : mults_)
    s += m;
  return s;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (auto it = mults_.rbegin(); it != mults_.rend(); ++it)
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
  return out;
}

Partition Partition::reduced() const {
  Partition p = *this;
  p.mults_.erase(1);
  return p;
}

Partition Partition::unite(const Partition &other) const {
  Partition p = *this;
  for (const auto &[part, m] : other.mults_)
    p.mults_[part] += m;
  return p;
}

std::optional<Partition> Partition::minus(const Partition &other) const {
  Partition p = *this;
  for (const auto &[part, m] : other.mults_) {
    int have = p.mult(part);
    if (have < m)
      return std::nullopt;
    if (have == m)
      p.mults_.erase(part);
    else
      p.mults_[part] = have - m;
  }
  return p;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int x : parts()) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ')';
  return os.str();
}

bool PartitionOrder::operator()(const Partition &a, const Partition &b) const {
  if (a.size() != b.size())
    return a.size() < b.size();
  if (a.m1() != b.m1())
    return a.m1() > b.m1();
  auto pa = a.reduced().parts();
  auto pb = b.reduced().parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0)
    return out;
  std::vector<int> parts;
  auto rec = [&](auto &self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(Partition::from_parts(parts));
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  rec(rec, k, k);
  std::sort(out.begin(), out.end(), PartitionOrder{});
  return out;
}

Partition mvec_to_partition(const MVec &m, int k, int n) {
  if (m.has_negative())
    throw std::invalid_argument("mvec_to_partition: negative entry");
  const int wt = m.weight();
  if (wt > k + n)
    throw std::invalid_argument("mvec_to_partition: wt(m) exceeds k+n");
  std::vector<int> parts(static_cast<std::size_t>(k + n - wt), 1);
  for (std::size_t i = 0; i < m.entries().size(); ++i)
    parts.insert(parts.end(), static_cast<std::size_t>(m.entries()[i]), static_cast<int>(i + 2));
  return Partition::from_parts(parts);
}

MVec partition_to_mvec(const Partition &lambda, std::size_t l) {
  if (lambda.largest() > static_cast<int>(l))
    throw std::invalid_argument("partition_to_mvec: part larger than l");
  std::vector<int> entries(l - 1, 0);
  for (const auto &[part, m] : lambda.mults())
    if (part >= 2)
      entries[static_cast<std::size_t>(part - 2)] = m;
  return MVec(std::move(entries));
}

std::optional<int> SymExpansion::degree() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.begin()->first.size();
}

QPoly SymExpansion::coeff(const Partition &lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QPoly{} : it->second;
}

void SymExpansion::add_term(const Partition &lambda, const QPoly &c) {
  if (c.is_zero())
    return;
  if (auto d = degree(); d && *d != lambda.size())
    throw std::invalid_argument("SymExpansion: mixing degrees " + std::to_string(*d) + " and " +
                                std::to_string(lambda.size()));
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void SymExpansion::check_basis(const SymExpansion &other) const {
  if (basis_ != other.basis_)
    throw std::invalid_argument("SymExpansion: mixing E and R bases");
}

SymExpansion &SymExpansion::operator+=(const SymExpansion &rhs) {
  check_basis(rhs);
  for (const auto &[lambda, c] : rhs.terms_)
    add_term(lambda, c);
  return *this;
}

SymExpansion &SymExpansion::operator-=(const SymExpansion &rhs) {
  check_basis(rhs);
  for (const auto &[lambda, c] : rhs.terms_)
    add_term(lambda, -c);
  return *this;
}

SymExpansion operator*(const QPoly &c, const SymExpansion &x) {
  SymExpansion out(x.basis_);
  if (c.is_zero())
    return out;
  for (const auto &[lambda, v] : x.terms_)
    out.terms_.emplace(lambda, c * v);
  return out;
}

SymExpansion SymExpansion::unioned(const Partition &lambda) const {
  SymExpansion out(basis_);
  for (const auto &[mu, c] : terms_)
    out.terms_.emplace(mu.unite(lambda), c);
  return out;
}

std::string SymExpansion::to_string() const {
  if (is_zero())
    return "0";
  const char *sym = basis_ == Basis::E ? "e" : "R";
  std::ostringstream os;
  bool first = true;
  for (const auto &[lambda, c] : terms_) {
    bool negative = c.num_terms() == 1 && c.coeffs().back() < 0;
    QPoly mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mag != QPoly(1))
      os << (mag.num_terms() > 1 ? "(" + mag.to_string() + ")" : mag.to_string()) << '*';
    os << sym << lambda.to_string();
  }
  return os.str();
}

void to_json(nlohmann::json &j, const Partition &p) { j = p.parts(); }

void to_json(nlohmann::json &j, const SymExpansion &x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &[lambda, c] : x.terms())
    terms.push_back({{"partition", lambda}, {"coeff", c}});
  j = {{"basis", x.basis() == Basis::E ? "E" : "R"}, {"terms", std::move(terms)}};
}

namespace {

class HtildeExpansions {
public:
  SymExpansion get(int n) {
    std::lock_guard lock(mutex_);
    if (cache_.empty()) {
      SymExpansion h0(Basis::E);
      h0.add_term(Partition{}, 1);
      cache_.push_back(std::move(h0));
    }
    while (static_cast<int>(cache_.size()) <= n) {
      // H~_{m+1} = sum_{j=0}^{m} (-1)^j e_{j+1} [m choose j]_q (q)_j H~_{m-j}
      const int m = static_cast<int>(cache_.size()) - 1;
      SymExpansion next(Basis::E);
      for (int j = 0; j <= m; ++j) {
        QPoly c = qbinomial(m, j) * pochhammer(j);
        if (j % 2 == 1)
          c = -c;
        next += c * cache_[static_cast<std::size_t>(m - j)].unioned(Partition::from_parts({j + 1}));
      }
      cache_.push_back(std::move(next));
    }
    return cache_[static_cast<std::size_t>(n)];
  }

private:
  std::mutex mutex_;
  std::vector<SymExpansion> cache_;
};

} // namespace

SymExpansion expand_htilde_in_e(int n) {
  if (n < 0)
    return SymExpansion(Basis::E);
  static HtildeExpansions expansions;
  return expansions.get(n);
}

SymExpansion r_to_e(const SymExpansion &x) {
  if (x.basis() != Basis::R)
    throw std::invalid_argument("r_to_e: input must be in the R basis");
  SymExpansion out(Basis::E);
  for (const auto &[lambda, c] : x.terms())
    out += c * expand_htilde_in_e(lambda.m1()).unioned(lambda.reduced());
  return out;
}

SymExpansion e_to_r(const SymExpansion &x) {
  if (x.basis() != Basis::E)
    throw std::invalid_argument("e_to_r: input must be in the E basis");
  SymExpansion remainder = x;
  SymExpansion out(Basis::R);
  // R_mu = e_mu + (terms with fewer 1s), so the first remaining label in
  // PartitionOrder is always a unit pivot.
  while (!remainder.is_zero()) {
    const auto &[mu, c] = *remainder.terms().begin();
    Partition pivot = mu;
    QPoly coeff = c;
    SymExpansion basis_elt(Basis::R);
    basis_elt.add_term(pivot, 1);
    SymExpansion image = r_to_e(basis_elt);
    if (image.coeff(pivot) != QPoly(1))
      throw std::logic_error("e_to_r: non-unit pivot at " + pivot.to_string());
    out.add_term(pivot, coeff);
    remainder -= coeff * image;
  }
  return out;
}

MultiPoly to_multipoly(const SymExpansion &x, std::size_t l) {
  RSContext ctx(l);
  MultiPoly out(l);
  for (const auto &[lambda, c] : x.terms()) {
    MultiPoly term = MultiPoly::constant(l, c);
    const Partition rest = x.basis() == Basis::R ? lambda.reduced() : lambda;
    if (x.basis() == Basis::R)
      term = term * htilde_direct(lambda.m1(), l);
    for (const auto &[part, m] : rest.mults())
      term = term * ctx.elementary(part).pow(static_cast<unsigned>(m));
    out += term;
  }
  return out;
}

QPoly ThetaProvider::theta(const Partition &lambda, int k, int n) {
  const std::size_t l = static_cast<std::size_t>(std::max(2, lambda.largest()));
  auto it = tables_.find(l);
  if (it == tables_.end())
    it = tables_.emplace(l, ThetaTable(l)).first;
  return it->second.theta(partition_to_mvec(lambda, l), k, n);
}

SymExpansion product_r(const Partition &kappa, const Partition &nu, ThetaProvider &thetas) {
  const int k = kappa.m1();
  const int n = nu.m1();
  const Partition extra = kappa.reduced().unite(nu.reduced());
  SymExpansion out(Basis::R);
  for (const Partition &lambda : partitions_of(k + n)) {
    QPoly th = thetas.theta(lambda, k, n);
    if (th.is_zero())
      continue;
    if (lambda.reduced().size() % 2 == 1)
      th = -th;
    out.add_term(lambda.unite(extra), th);
  }
  return out;
}

QPoly structure_constant(const Partition &kappa, const Partition &nu, const Partition &gamma,
                         ThetaProvider &thetas) {
  const int k = kappa.m1();
  const int n = nu.m1();
  if (gamma.size() != kappa.size() + nu.size())
    return {};
  auto rest = gamma.reduced().minus(kappa.reduced().unite(nu.reduced()));
  if (!rest)
    return {};
  Partition lambda = rest->unite(Partition::ones(gamma.m1()));
  if (lambda.size() != k + n)
    return {};
  QPoly th = thetas.theta(lambda, k, n);
  return lambda.reduced().size() % 2 == 1 ? -th : th;
}

} // namespace rogers
