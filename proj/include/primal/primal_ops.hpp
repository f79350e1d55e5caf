#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "primal/structures.hpp"
#include "primal/topology.hpp"

namespace primal {

// A topological space together with a primal on the same universe.
class PrimalSpace {
 public:
  PrimalSpace(FiniteTopology topology, Primal primal);

  const Universe& universe() const { return topology_.universe(); }
  const FiniteTopology& topology() const { return topology_; }
  const Primal& primal() const { return primal_; }

 private:
  FiniteTopology topology_;
  Primal primal_;
};

// The diamond of A: the points x whose every open neighborhood U satisfies
// A^c \/ U^c in P. diamond_naive quantifies over all of tau(x) exactly as
// stated; diamond tests only the minimal neighborhood of x, which downward
// closure of the primal makes the binding constraint. The naive form is the
// permanent reference; equality of the two is enforced by the test suite
// over every enumerated space.
SubsetCode diamond_naive(SubsetCode a, const PrimalSpace& s);
SubsetCode diamond(SubsetCode a, const PrimalSpace& s);

// cl_diamond(A) = A \/ diamond(A); a Kuratowski closure operator.
SubsetCode cl_diamond(SubsetCode a, const PrimalSpace& s);

// cl_diamond tabulated over the whole powerset.
struct ClosureTable {
  Universe universe;
  std::vector<SubsetCode> table;  // indexed by subset code

  SubsetCode operator()(SubsetCode a) const {
    return table[static_cast<std::size_t>(a)];
  }
};

ClosureTable closure_table(const PrimalSpace& s);

// Outcome of checking the four closure axioms on a table. An empty optional
// means the axiom holds; otherwise the witness is the smallest failing input
// (pair, for additivity).
struct KuratowskiReport {
  std::optional<SubsetCode> empty_witness;       // table[0] != 0
  std::optional<SubsetCode> extensive_witness;   // a not subset of table[a]
  std::optional<std::pair<SubsetCode, SubsetCode>> additive_witness;
  std::optional<SubsetCode> idempotent_witness;  // table[table[a]] != table[a]

  bool preserves_empty() const { return !empty_witness.has_value(); }
  bool extensive() const { return !extensive_witness.has_value(); }
  bool additive() const { return !additive_witness.has_value(); }
  bool idempotent() const { return !idempotent_witness.has_value(); }
  bool is_kuratowski() const {
    return preserves_empty() && extensive() && additive() && idempotent();
  }
};

KuratowskiReport kuratowski_audit(const ClosureTable& t);

// The topology generated by the primal: opens are the sets whose complement
// is a fixed point of cl_diamond. Always finer than s.topology().
FiniteTopology primal_topology(const PrimalSpace& s);

// Membership of A in the generated topology, characterized pointwise: for
// every x in A some open U containing x has U^c \/ A outside the primal.
// When the test succeeds, one witness U (the smallest) is kept per point;
// when it fails, blocked_point is the smallest point with no admissible U.
struct TauStarMembership {
  bool is_member = false;
  std::vector<std::pair<int, SubsetCode>> witnesses;
  std::optional<int> blocked_point;
};

TauStarMembership tau_star_membership(SubsetCode a, const PrimalSpace& s);

// {T /\ P : T open, P not in the primal}, deduplicated; a base for the
// generated topology.
SetFamily base_family(const PrimalSpace& s);

struct BaseCheck {
  bool ok = false;
  std::optional<SubsetCode> non_open_member;    // base member not open in t
  std::optional<SubsetCode> unexpressible_open; // open with no base cover
};

// True iff every member of b is open in t and every open of t is a union of
// members of b.
BaseCheck is_base_for(const SetFamily& b, const FiniteTopology& t);

// Whether a_open /\ diamond(b) is contained in diamond(a_open /\ b); holds
// for every open a_open. Throws NotOpen when a_open is not in the topology.
bool distribution_check(SubsetCode a_open, SubsetCode b, const PrimalSpace& s);

}  // namespace primal
