#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primal/setkit.hpp"

namespace primal {

// A primal on X is a family P of subsets with
//   (i)   X not in P,
//   (ii)  A in P and B subset A  =>  B in P,
//   (iii) A /\ B in P  =>  A in P or B in P.
// A grill is the memberwise-complement dual: empty set excluded, upward
// closed, and a union in the family forces one of its parts in.
enum class StructureRule {
  ContainsX,
  ContainsEmpty,
  NotDownwardClosed,
  NotUpwardClosed,
  MeetConditionFails,
  JoinConditionFails,
};

std::string to_string(StructureRule rule);

// Witness form of a failed rule: substituting the witness codes into the
// named rule falsifies it. Rules are checked in definition order and the
// lexicographically smallest witness pair is reported, so diagnostics are
// deterministic.
struct StructureViolation {
  StructureRule rule;
  std::vector<SubsetCode> witnesses;

  std::string describe(const Universe& u) const;
};

// Empty optional means the family satisfies all three conditions.
using StructureCheck = std::optional<StructureViolation>;

StructureCheck check_primal(const SetFamily& f);
StructureCheck check_grill(const SetFamily& f);

class Primal {
 public:
  static Primal checked(SetFamily family);    // throws ValidationError
  static Primal unchecked(SetFamily family);  // caller guarantees validity

  const SetFamily& family() const { return family_; }
  const Universe& universe() const { return family_.universe(); }

  friend bool operator==(const Primal& a, const Primal& b) {
    return a.family_ == b.family_;
  }

 private:
  explicit Primal(SetFamily family) : family_(std::move(family)) {}
  SetFamily family_;
};

class Grill {
 public:
  static Grill checked(SetFamily family);
  static Grill unchecked(SetFamily family);

  const SetFamily& family() const { return family_; }
  const Universe& universe() const { return family_.universe(); }

  friend bool operator==(const Grill& a, const Grill& b) {
    return a.family_ == b.family_;
  }

 private:
  explicit Grill(SetFamily family) : family_(std::move(family)) {}
  SetFamily family_;
};

// The two structures are dual under memberwise complementation; the maps
// below are mutually inverse bijections.
Primal grill_to_primal(const Grill& g);
Grill primal_to_grill(const Primal& p);

// The union of two primals is again a primal.
Primal union_primals(const Primal& p, const Primal& q);

// A derived family together with the outcome of validating it as a primal.
struct CheckedFamily {
  SetFamily family;
  StructureCheck primal_check;

  bool ok() const { return !primal_check.has_value(); }
};

// Memberwise intersection P /\ Q. Need not be a primal; the validation
// outcome is attached rather than thrown.
CheckedFamily intersect_families(const Primal& p, const Primal& q);

enum class CombineMode { Meet, Join };

// {P o Q : P in p, Q in q} for o = intersection (Meet) or union (Join).
CheckedFamily elementwise_combine(const Primal& p, const Primal& q,
                                  CombineMode mode);

// {A : b is not a subset of A} — the complement of the up-set of b. Every
// primal on a finite universe has this form for exactly one b (b = empty set
// gives the empty family). This characterization is our own derivation from
// the validation rules; exhaustive_primal_scan is kept as its oracle.
SetFamily sets_not_containing(const Universe& u, SubsetCode b);

// All 2^n primals on u, canonically ordered. Produced structurally, one per
// subset b of X.
std::vector<Primal> enumerate_primals(const Universe& u);

// Oracle enumerator: scans all 2^(2^n) families through check_primal.
// Restricted to n <= 4; must return exactly enumerate_primals(u).
std::vector<Primal> exhaustive_primal_scan(const Universe& u);
std::vector<Grill> exhaustive_grill_scan(const Universe& u);

// A total function between two finite universes, given pointwise.
struct PointMap {
  Universe domain;
  Universe codomain;
  std::vector<int> table;  // table[i] = image of element i

  PointMap(Universe d, Universe c, std::vector<int> t);

  bool is_surjective() const;
  SubsetCode image(SubsetCode a) const;     // f(A)
  SubsetCode preimage(SubsetCode b) const;  // f^{-1}(B)
};

struct PushforwardResult {
  SetFamily family;  // {f(P) : P in p}, over the codomain
  StructureCheck primal_check;
  // True when f is surjective, i.e. the hypothesis guaranteeing a primal
  // image does not apply; the validation outcome is still reported as-is.
  bool precondition_unmet;

  bool ok() const { return !primal_check.has_value(); }
};

PushforwardResult pushforward_primal(const PointMap& m, const Primal& p);

// {f^{-1}(Q) : Q in q}, over the domain. Need not be a primal.
CheckedFamily preimage_family(const PointMap& m, const Primal& q);

}  // namespace primal
