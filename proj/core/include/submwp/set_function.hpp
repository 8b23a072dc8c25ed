#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "submwp/graph.hpp"
#include "submwp/ground_set.hpp"
#include "submwp/rational.hpp"

namespace submwp {

enum class OracleKind {
  explicit_table,
  coverage,
  graph_coverage,
  partition_matroid,
  cut,
  sym_grid,
};

const char* kind_name(OracleKind k);

/// Evaluation oracle for a normalized (f(empty)=0) set function over a ground
/// set of at most 64 elements. Each oracle carries an exact-rational
/// evaluation path and a float64 path. Oracles are immutable after
/// construction and safe to evaluate concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  OracleKind kind() const { return kind_; }

  /// True for every bundled kind except the graph cut function.
  bool monotone_kind() const { return kind_ != OracleKind::cut; }

  Rational value_exact(Mask s) const {
    check_domain(s);
    return eval_exact(s);
  }
  double value(Mask s) const {
    check_domain(s);
    return eval(s);
  }

 protected:
  SetFunction(GroundSet g, OracleKind k) : ground_(std::move(g)), kind_(k) {}
  virtual Rational eval_exact(Mask s) const = 0;
  virtual double eval(Mask s) const { return to_double(eval_exact(s)); }
  void check_domain(Mask s) const;

 private:
  GroundSet ground_;
  OracleKind kind_;
};

using OraclePtr = std::shared_ptr<const SetFunction>;

/// f(S) given by a table over subsets. Every queried subset must be present
/// except the empty set, which is pinned to 0.
class ExplicitTable final : public SetFunction {
 public:
  ExplicitTable(GroundSet g, std::map<Mask, Rational> values);
  const std::map<Mask, Rational>& values() const { return values_; }

 protected:
  Rational eval_exact(Mask s) const override;

 private:
  std::map<Mask, Rational> values_;
};

/// b(S) = total weight of hyperedges meeting S.
class HypergraphCoverage final : public SetFunction {
 public:
  struct Hyperedge {
    Mask members;
    Rational w;
  };
  HypergraphCoverage(GroundSet g, std::vector<Hyperedge> edges);
  const std::vector<Hyperedge>& hyperedges() const { return edges_; }

 protected:
  Rational eval_exact(Mask s) const override;
  double eval(Mask s) const override;

 private:
  std::vector<Hyperedge> edges_;
  std::vector<double> wd_;
};

/// Graph specialization of coverage; keeps the underlying graph accessible.
class GraphCoverage final : public SetFunction {
 public:
  explicit GraphCoverage(WeightedGraph g);
  const WeightedGraph& graph() const { return graph_; }

 protected:
  Rational eval_exact(Mask s) const override;
  double eval(Mask s) const override;

 private:
  WeightedGraph graph_;
  std::vector<double> wd_;
};

/// d(S), the (symmetric, non-monotone) graph cut function.
class GraphCut final : public SetFunction {
 public:
  explicit GraphCut(WeightedGraph g);
  const WeightedGraph& graph() const { return graph_; }

 protected:
  Rational eval_exact(Mask s) const override;
  double eval(Mask s) const override;

 private:
  WeightedGraph graph_;
  std::vector<double> wd_;
};

/// Rank of the partition matroid on the given blocks: number of blocks
/// touched by S, each counted at most once. Blocks must partition the ground
/// set.
class PartitionMatroidRank final : public SetFunction {
 public:
  PartitionMatroidRank(GroundSet g, std::vector<Mask> blocks);
  const std::vector<Mask>& blocks() const { return blocks_; }

 protected:
  Rational eval_exact(Mask s) const override;
  double eval(Mask s) const override;

 private:
  std::vector<Mask> blocks_;
};

/// Thread-safe memo in front of another oracle, keyed by subset bitmask.
/// Useful when brute-force sweeps re-query the same masks heavily.
class CachedOracle final : public SetFunction {
 public:
  explicit CachedOracle(OraclePtr inner);

 protected:
  Rational eval_exact(Mask s) const override;
  double eval(Mask s) const override;

 private:
  OraclePtr inner_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Mask, Rational> memo_;
};

/// All 2^n exact values of f, indexed by mask. CapacityError if n > max_n.
std::vector<Rational> full_table_exact(const SetFunction& f, int max_n = 20);

/// Fixed-denominator integer view of a value table: value[i] = num[i] / den.
/// Enables exact int64 arithmetic in enumeration hot loops.
struct ScaledTable {
  std::vector<long long> num;
  long long den = 1;
};

/// Attempts the integer view; fails (nullopt) when the common denominator or
/// any scaled numerator would risk overflow under summation.
std::optional<ScaledTable> try_scale_table(const std::vector<Rational>& table,
                                           long long max_den = 1LL << 24,
                                           long long max_num = 1LL << 46);

}  // namespace submwp
