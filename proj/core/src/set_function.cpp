#include "submwp/set_function.hpp"

#include <numeric>
#include <sstream>

#include "submwp/errors.hpp"

namespace submwp {

const char* kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::explicit_table: return "explicit";
    case OracleKind::coverage: return "coverage";
    case OracleKind::graph_coverage: return "graph_coverage";
    case OracleKind::partition_matroid: return "partition_matroid";
    case OracleKind::cut: return "cut";
    case OracleKind::sym_grid: return "symgap";
  }
  return "?";
}

void SetFunction::check_domain(Mask s) const {
  if ((s & ~ground_.full()) != 0)
    throw DomainError("subset contains elements outside the ground set");
}

ExplicitTable::ExplicitTable(GroundSet g, std::map<Mask, Rational> values)
    : SetFunction(std::move(g), OracleKind::explicit_table), values_(std::move(values)) {
  auto it = values_.find(0);
  if (it != values_.end() && it->second != 0)
    throw DomainError("explicit table must be normalized: f(empty) = 0");
  values_[0] = 0;
}

Rational ExplicitTable::eval_exact(Mask s) const {
  auto it = values_.find(s);
  if (it == values_.end()) {
    std::ostringstream os;
    os << "explicit table has no value for subset {";
    bool first = true;
    for (int i = 0; i < n(); ++i)
      if (contains(s, i)) {
        os << (first ? "" : ",") << ground().name(i);
        first = false;
      }
    os << "}";
    throw DomainError(os.str());
  }
  return it->second;
}

HypergraphCoverage::HypergraphCoverage(GroundSet g, std::vector<Hyperedge> edges)
    : SetFunction(std::move(g), OracleKind::coverage), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if ((e.members & ~ground().full()) != 0)
      throw DomainError("hyperedge member outside ground set");
    if (e.members == 0) throw DomainError("empty hyperedge");
    if (e.w < 0) throw DomainError("negative hyperedge weight");
    wd_.push_back(to_double(e.w));
  }
}

Rational HypergraphCoverage::eval_exact(Mask s) const {
  Rational t = 0;
  for (const auto& e : edges_)
    if (e.members & s) t += e.w;
  return t;
}

double HypergraphCoverage::eval(Mask s) const {
  double t = 0;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].members & s) t += wd_[i];
  return t;
}

GraphCoverage::GraphCoverage(WeightedGraph g)
    : SetFunction(g.vertices, OracleKind::graph_coverage), graph_(std::move(g)) {
  for (const auto& e : graph_.edges) wd_.push_back(to_double(e.w));
}

Rational GraphCoverage::eval_exact(Mask s) const { return graph_.coverage(s); }

double GraphCoverage::eval(Mask s) const {
  double t = 0;
  for (size_t i = 0; i < graph_.edges.size(); ++i) {
    const auto& e = graph_.edges[i];
    if (contains(s, e.u) || contains(s, e.v)) t += wd_[i];
  }
  return t;
}

GraphCut::GraphCut(WeightedGraph g)
    : SetFunction(g.vertices, OracleKind::cut), graph_(std::move(g)) {
  for (const auto& e : graph_.edges) wd_.push_back(to_double(e.w));
}

Rational GraphCut::eval_exact(Mask s) const { return graph_.cut(s); }

double GraphCut::eval(Mask s) const {
  double t = 0;
  for (size_t i = 0; i < graph_.edges.size(); ++i) {
    const auto& e = graph_.edges[i];
    if (contains(s, e.u) != contains(s, e.v)) t += wd_[i];
  }
  return t;
}

PartitionMatroidRank::PartitionMatroidRank(GroundSet g, std::vector<Mask> blocks)
    : SetFunction(std::move(g), OracleKind::partition_matroid), blocks_(std::move(blocks)) {
  Mask seen = 0;
  for (Mask b : blocks_) {
    if (b == 0) throw DomainError("empty matroid block");
    if ((b & ~ground().full()) != 0) throw DomainError("block member outside ground set");
    if (b & seen) throw DomainError("matroid blocks must be disjoint");
    seen |= b;
  }
  if (seen != ground().full()) throw DomainError("matroid blocks must cover the ground set");
}

Rational PartitionMatroidRank::eval_exact(Mask s) const {
  long r = 0;
  for (Mask b : blocks_)
    if (b & s) ++r;
  return Rational(r);
}

double PartitionMatroidRank::eval(Mask s) const {
  long r = 0;
  for (Mask b : blocks_)
    if (b & s) ++r;
  return static_cast<double>(r);
}

CachedOracle::CachedOracle(OraclePtr inner)
    : SetFunction(inner->ground(), inner->kind()), inner_(std::move(inner)) {}

Rational CachedOracle::eval_exact(Mask s) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
  }
  Rational v = inner_->value_exact(s);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(s, v);
  return v;
}

double CachedOracle::eval(Mask s) const { return to_double(eval_exact(s)); }

std::vector<Rational> full_table_exact(const SetFunction& f, int max_n) {
  if (f.n() > max_n)
    throw CapacityError("exhaustive table needs 2^" + std::to_string(f.n()) +
                            " evaluations, above the n <= " + std::to_string(max_n) + " limit",
                        Mask{1} << f.n());
  const Mask total = Mask{1} << f.n();
  std::vector<Rational> tab(total);
  for (Mask s = 0; s < total; ++s) tab[s] = f.value_exact(s);
  return tab;
}

std::optional<ScaledTable> try_scale_table(const std::vector<Rational>& table,
                                           long long max_den, long long max_num) {
  mpz_class den = 1;
  for (const auto& r : table) {
    mpz_class d = r.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
    if (!den.fits_slong_p() || den.get_si() > max_den) return std::nullopt;
  }
  ScaledTable out;
  out.den = den.get_si();
  out.num.reserve(table.size());
  for (const auto& r : table) {
    mpz_class num = r.get_num() * (den / r.get_den());
    if (!num.fits_slong_p()) return std::nullopt;
    const long long v = num.get_si();
    if (v > max_num || v < -max_num) return std::nullopt;
    out.num.push_back(v);
  }
  return out;
}

}  // namespace submwp
