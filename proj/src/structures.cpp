#include "primal/structures.hpp"

#include <algorithm>

namespace primal {
namespace {

// Ascending enumeration of the submasks of `sup` (including 0 and sup
// itself): s -> (s - sup) & sup visits them in increasing numeric order.
inline SubsetCode next_submask(SubsetCode s, SubsetCode sup) {
  return (s - sup) & sup;
}

StructureCheck violation(StructureRule rule, std::vector<SubsetCode> w) {
  return StructureViolation{rule, std::move(w)};
}

// Lexicographically smallest pair (A, B) of non-members whose meet (primal
// case) or join (grill case) lands in the family. Only called once the fast
// check has established that such a pair exists; symmetry lets us restrict
// to A <= B.
template <typename Op>
std::vector<SubsetCode> smallest_condition_witness(const SetFamily& f,
                                                   Op&& combine) {
  const SubsetCode full = f.universe().full();
  for (SubsetCode a = 0;; ++a) {
    if (!f.contains(a)) {
      for (SubsetCode b = a;; ++b) {
        if (!f.contains(b) && f.contains(combine(a, b))) return {a, b};
        if (b == full) break;
      }
    }
    if (a == full) break;
  }
  return {};  // unreachable: caller guarantees a witness exists
}

}  // namespace

std::string to_string(StructureRule rule) {
  switch (rule) {
    case StructureRule::ContainsX: return "ContainsX";
    case StructureRule::ContainsEmpty: return "ContainsEmpty";
    case StructureRule::NotDownwardClosed: return "NotDownwardClosed";
    case StructureRule::NotUpwardClosed: return "NotUpwardClosed";
    case StructureRule::MeetConditionFails: return "MeetConditionFails";
    case StructureRule::JoinConditionFails: return "JoinConditionFails";
  }
  return "?";
}

std::string StructureViolation::describe(const Universe& u) const {
  std::string s = to_string(rule);
  for (SubsetCode w : witnesses) s += " " + to_bitstring(w, u);
  return s;
}

StructureCheck check_primal(const SetFamily& f) {
  const Universe& u = f.universe();
  const SubsetCode full = u.full();

  // (i) X must not be a member.
  if (f.contains(full))
    return violation(StructureRule::ContainsX, {full});

  // (ii) Downward closure. Single-bit removals generate the subset relation,
  // so the O(n 2^n) pass below decides the rule; the exact lexicographic
  // witness is recovered by a submask scan only when it fails.
  bool downward_ok = true;
  for (SubsetCode a = 0; a <= full && downward_ok; ++a) {
    if (!f.contains(a)) continue;
    for (SubsetCode rest = a; rest;) {
      SubsetCode bit = rest & (0u - rest);
      if (!f.contains(a ^ bit)) {
        downward_ok = false;
        break;
      }
      rest ^= bit;
    }
  }
  if (!downward_ok) {
    for (SubsetCode a = 0; a <= full; ++a) {
      if (!f.contains(a)) continue;
      for (SubsetCode b = 0;; b = next_submask(b, a)) {
        if (!f.contains(b))
          return violation(StructureRule::NotDownwardClosed, {a, b});
        if (b == a) break;
      }
    }
  }

  // (iii) Meet condition. With (ii) established, the non-members form an
  // upward-closed family, and closure of that family under pairwise
  // intersection is equivalent to its total intersection being a non-member.
  SubsetCode meet_of_non_members = full;
  for (SubsetCode a = 0; a <= full; ++a)
    if (!f.contains(a)) meet_of_non_members &= a;
  if (f.contains(meet_of_non_members)) {
    return violation(
        StructureRule::MeetConditionFails,
        smallest_condition_witness(
            f, [](SubsetCode a, SubsetCode b) { return a & b; }));
  }

  return std::nullopt;
}

StructureCheck check_grill(const SetFamily& f) {
  const Universe& u = f.universe();
  const SubsetCode full = u.full();

  // (i) The empty set must not be a member.
  if (f.contains(0))
    return violation(StructureRule::ContainsEmpty, {0});

  // (ii) Upward closure via single-bit additions.
  bool upward_ok = true;
  for (SubsetCode a = 0; a <= full && upward_ok; ++a) {
    if (!f.contains(a)) continue;
    for (SubsetCode rest = full ^ a; rest;) {
      SubsetCode bit = rest & (0u - rest);
      if (!f.contains(a | bit)) {
        upward_ok = false;
        break;
      }
      rest ^= bit;
    }
  }
  if (!upward_ok) {
    for (SubsetCode a = 0; a <= full; ++a) {
      if (!f.contains(a)) continue;
      // Supersets of a in ascending order: a | s for ascending submasks s of
      // the complement (disjoint unions preserve numeric order).
      SubsetCode comp = full ^ a;
      for (SubsetCode s = 0;; s = next_submask(s, comp)) {
        if (!f.contains(a | s))
          return violation(StructureRule::NotUpwardClosed, {a, a | s});
        if (s == comp) break;
      }
    }
  }

  // (iii) Join condition: dual of the primal meet condition.
  SubsetCode join_of_non_members = 0;
  for (SubsetCode a = 0; a <= full; ++a)
    if (!f.contains(a)) join_of_non_members |= a;
  if (f.contains(join_of_non_members)) {
    return violation(
        StructureRule::JoinConditionFails,
        smallest_condition_witness(
            f, [](SubsetCode a, SubsetCode b) { return a | b; }));
  }

  return std::nullopt;
}

Primal Primal::checked(SetFamily family) {
  if (auto v = check_primal(family))
    throw ValidationError(to_string(v->rule),
                          "family is not a primal (" +
                              v->describe(family.universe()) + ")");
  return Primal(std::move(family));
}

Primal Primal::unchecked(SetFamily family) { return Primal(std::move(family)); }

Grill Grill::checked(SetFamily family) {
  if (auto v = check_grill(family))
    throw ValidationError(to_string(v->rule),
                          "family is not a grill (" +
                              v->describe(family.universe()) + ")");
  return Grill(std::move(family));
}

Grill Grill::unchecked(SetFamily family) { return Grill(std::move(family)); }

Primal grill_to_primal(const Grill& g) {
  return Primal::unchecked(g.family().complement_members());
}

Grill primal_to_grill(const Primal& p) {
  return Grill::unchecked(p.family().complement_members());
}

Primal union_primals(const Primal& p, const Primal& q) {
  SetFamily merged = p.family().united(q.family());
  if (auto v = check_primal(merged))
    throw Error("union of two primals failed validation (" +
                v->describe(merged.universe()) + ")");
  return Primal::unchecked(std::move(merged));
}

CheckedFamily intersect_families(const Primal& p, const Primal& q) {
  SetFamily common = p.family().intersected(q.family());
  StructureCheck check = check_primal(common);
  return CheckedFamily{std::move(common), std::move(check)};
}

CheckedFamily elementwise_combine(const Primal& p, const Primal& q,
                                  CombineMode mode) {
  require_compatible(p.universe(), q.universe(), "elementwise combine");
  SetFamily out(p.universe());
  for (SubsetCode a : p.family().members())
    for (SubsetCode b : q.family().members())
      out.insert(mode == CombineMode::Meet ? (a & b) : (a | b));
  StructureCheck check = check_primal(out);
  return CheckedFamily{std::move(out), std::move(check)};
}

SetFamily sets_not_containing(const Universe& u, SubsetCode b) {
  SetFamily f(u);
  for (SubsetCode a = 0; a <= u.full(); ++a)
    if ((b & ~a) != 0) f.insert(a);
  return f;
}

std::vector<Primal> enumerate_primals(const Universe& u) {
  std::vector<SetFamily> families;
  families.reserve(u.subset_count());
  for (SubsetCode b = 0; b <= u.full(); ++b)
    families.push_back(sets_not_containing(u, b));
  std::sort(families.begin(), families.end());
  std::vector<Primal> out;
  out.reserve(families.size());
  for (auto& f : families) out.push_back(Primal::unchecked(std::move(f)));
  return out;
}

namespace {

constexpr int kMaxScanSize = 4;

void require_scannable(const Universe& u) {
  if (u.size() > kMaxScanSize)
    throw UniverseTooLargeForScan(
        "exhaustive family scan supports universes up to size " +
        std::to_string(kMaxScanSize) + ", got " + std::to_string(u.size()));
}

}  // namespace

std::vector<Primal> exhaustive_primal_scan(const Universe& u) {
  require_scannable(u);
  std::vector<Primal> out;
  const std::uint64_t family_count = std::uint64_t{1} << u.subset_count();
  for (std::uint64_t mask = 0; mask < family_count; ++mask) {
    SetFamily f = SetFamily::from_mask(u, mask);
    if (!check_primal(f)) out.push_back(Primal::unchecked(std::move(f)));
  }
  return out;  // ascending mask order is the canonical order
}

std::vector<Grill> exhaustive_grill_scan(const Universe& u) {
  require_scannable(u);
  std::vector<Grill> out;
  const std::uint64_t family_count = std::uint64_t{1} << u.subset_count();
  for (std::uint64_t mask = 0; mask < family_count; ++mask) {
    SetFamily f = SetFamily::from_mask(u, mask);
    if (!check_grill(f)) out.push_back(Grill::unchecked(std::move(f)));
  }
  return out;
}

PointMap::PointMap(Universe d, Universe c, std::vector<int> t)
    : domain(std::move(d)), codomain(std::move(c)), table(std::move(t)) {
  if (static_cast<int>(table.size()) != domain.size())
    throw Error("point map table has " + std::to_string(table.size()) +
                " entries for a domain of size " +
                std::to_string(domain.size()));
  for (int image : table)
    if (image < 0 || image >= codomain.size())
      throw IndexOutOfUniverse("point map image " + std::to_string(image) +
                               " outside codomain of size " +
                               std::to_string(codomain.size()));
}

bool PointMap::is_surjective() const {
  SubsetCode hit = 0;
  for (int image : table) hit |= 1u << image;
  return hit == codomain.full();
}

SubsetCode PointMap::image(SubsetCode a) const {
  SubsetCode out = 0;
  for (int i = 0; i < domain.size(); ++i)
    if ((a >> i) & 1u) out |= 1u << table[static_cast<std::size_t>(i)];
  return out;
}

SubsetCode PointMap::preimage(SubsetCode b) const {
  SubsetCode out = 0;
  for (int i = 0; i < domain.size(); ++i)
    if ((b >> table[static_cast<std::size_t>(i)]) & 1u) out |= 1u << i;
  return out;
}

PushforwardResult pushforward_primal(const PointMap& m, const Primal& p) {
  require_compatible(m.domain, p.universe(), "pushforward");
  SetFamily out(m.codomain);
  for (SubsetCode a : p.family().members()) out.insert(m.image(a));
  StructureCheck check = check_primal(out);
  return PushforwardResult{std::move(out), std::move(check),
                           m.is_surjective()};
}

CheckedFamily preimage_family(const PointMap& m, const Primal& q) {
  require_compatible(m.codomain, q.universe(), "preimage family");
  SetFamily out(m.domain);
  for (SubsetCode b : q.family().members()) out.insert(m.preimage(b));
  StructureCheck check = check_primal(out);
  return CheckedFamily{std::move(out), std::move(check)};
}

}  // namespace primal
