#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primal/setkit.hpp"

namespace primal {

enum class TopologyRule {
  MissingEmptySet,
  MissingFullSet,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
};

std::string to_string(TopologyRule rule);

struct TopologyViolation {
  TopologyRule rule;
  std::vector<SubsetCode> witnesses;

  std::string describe(const Universe& u) const;
};

using TopologyCheck = std::optional<TopologyViolation>;

// Empty and full set present, closed under pairwise union and intersection
// (which suffices for arbitrary ones on a finite universe). Violations are
// reported in that order with the lexicographically smallest witness pair.
TopologyCheck check_topology(const SetFamily& f);

class FiniteTopology {
 public:
  static FiniteTopology checked(SetFamily opens);  // throws ValidationError
  static FiniteTopology unchecked(SetFamily opens);

  static FiniteTopology indiscrete(const Universe& u);
  static FiniteTopology discrete(const Universe& u);

  const Universe& universe() const { return opens_.universe(); }
  const SetFamily& opens() const { return opens_; }

  bool is_open(SubsetCode a) const { return opens_.contains(a); }
  bool is_closed(SubsetCode a) const {
    return opens_.contains(universe().full() ^ a);
  }

  // Intersection of every open set containing x; itself open by finiteness.
  SubsetCode minimal_neighborhood(int x) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.opens_ == b.opens_;
  }

 private:
  explicit FiniteTopology(SetFamily opens);

  SetFamily opens_;
  std::vector<SubsetCode> min_nbhd_;  // one entry per element
};

// Smallest closed superset of a.
SubsetCode closure(SubsetCode a, const FiniteTopology& t);
// Largest open subset of a; equals complement(closure(complement(a))).
SubsetCode interior(SubsetCode a, const FiniteTopology& t);

// All open sets containing element x, in canonical (ascending code) order.
std::vector<SubsetCode> neighborhoods(int x, const FiniteTopology& t);
SubsetCode minimal_neighborhood(int x, const FiniteTopology& t);

// Every topology on u, canonically ordered, by exhaustive scan of all
// 2^(2^n) candidate families. Capped at n <= 4; n = 5 (a scan of 2^30
// candidates, expected 6942 results) must be requested explicitly.
std::vector<FiniteTopology> enumerate_topologies(const Universe& u,
                                                 bool allow_size_5 = false);

}  // namespace primal
