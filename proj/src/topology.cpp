#include "primal/topology.hpp"

#include <bit>

#include "primal/util.hpp"

namespace primal {

std::string to_string(TopologyRule rule) {
  switch (rule) {
    case TopologyRule::MissingEmptySet: return "MissingEmptySet";
    case TopologyRule::MissingFullSet: return "MissingFullSet";
    case TopologyRule::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case TopologyRule::NotClosedUnderIntersection:
      return "NotClosedUnderIntersection";
  }
  return "?";
}

std::string TopologyViolation::describe(const Universe& u) const {
  std::string s = to_string(rule);
  for (SubsetCode w : witnesses) s += " " + to_bitstring(w, u);
  return s;
}

TopologyCheck check_topology(const SetFamily& f) {
  const SubsetCode full = f.universe().full();
  if (!f.contains(0))
    return TopologyViolation{TopologyRule::MissingEmptySet, {}};
  if (!f.contains(full))
    return TopologyViolation{TopologyRule::MissingFullSet, {}};

  const std::vector<SubsetCode> opens = f.members();
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j)
      if (!f.contains(opens[i] | opens[j]))
        return TopologyViolation{TopologyRule::NotClosedUnderUnion,
                                 {opens[i], opens[j]}};
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j)
      if (!f.contains(opens[i] & opens[j]))
        return TopologyViolation{TopologyRule::NotClosedUnderIntersection,
                                 {opens[i], opens[j]}};
  return std::nullopt;
}

FiniteTopology::FiniteTopology(SetFamily opens) : opens_(std::move(opens)) {
  const Universe& u = opens_.universe();
  min_nbhd_.assign(static_cast<std::size_t>(u.size()), u.full());
  for (SubsetCode open : opens_.members())
    for (int x = 0; x < u.size(); ++x)
      if ((open >> x) & 1u) min_nbhd_[static_cast<std::size_t>(x)] &= open;
}

FiniteTopology FiniteTopology::checked(SetFamily opens) {
  if (auto v = check_topology(opens))
    throw ValidationError(to_string(v->rule),
                          "family is not a topology (" +
                              v->describe(opens.universe()) + ")");
  return FiniteTopology(std::move(opens));
}

FiniteTopology FiniteTopology::unchecked(SetFamily opens) {
  return FiniteTopology(std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(const Universe& u) {
  return FiniteTopology(SetFamily(u, {0, u.full()}));
}

FiniteTopology FiniteTopology::discrete(const Universe& u) {
  return FiniteTopology(SetFamily::full_powerset(u));
}

SubsetCode FiniteTopology::minimal_neighborhood(int x) const {
  if (x < 0 || x >= universe().size())
    throw IndexOutOfUniverse("element index " + std::to_string(x) +
                             " outside universe of size " +
                             std::to_string(universe().size()));
  return min_nbhd_[static_cast<std::size_t>(x)];
}

SubsetCode closure(SubsetCode a, const FiniteTopology& t) {
  // Intersection of every closed superset of a; X itself always qualifies.
  SubsetCode out = t.universe().full();
  for (SubsetCode open : t.opens().members())
    if ((a & open) == 0) out &= t.universe().full() ^ open;
  return out;
}

SubsetCode interior(SubsetCode a, const FiniteTopology& t) {
  SubsetCode out = 0;
  for (SubsetCode open : t.opens().members())
    if (is_subset(open, a)) out |= open;
  return out;
}

std::vector<SubsetCode> neighborhoods(int x, const FiniteTopology& t) {
  if (x < 0 || x >= t.universe().size())
    throw IndexOutOfUniverse("element index " + std::to_string(x) +
                             " outside universe of size " +
                             std::to_string(t.universe().size()));
  std::vector<SubsetCode> out;
  for (SubsetCode open : t.opens().members())
    if ((open >> x) & 1u) out.push_back(open);
  return out;
}

SubsetCode minimal_neighborhood(int x, const FiniteTopology& t) {
  return t.minimal_neighborhood(x);
}

namespace {

// Pairwise closure of a word-encoded family (mask bit c = code c present).
// Rejects at the first failing pair.
bool closed_under_pairs(std::uint32_t mask) {
  int codes[32];
  int k = 0;
  for (std::uint32_t w = mask; w; w &= w - 1)
    codes[k++] = std::countr_zero(w);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (!((mask >> (codes[i] | codes[j])) & 1u)) return false;
      if (!((mask >> (codes[i] & codes[j])) & 1u)) return false;
    }
  return true;
}

std::vector<FiniteTopology> scan_topologies_size5(const Universe& u) {
  // Candidates must contain codes 0 and 31, leaving 30 free membership bits.
  const std::uint64_t candidates = std::uint64_t{1} << 30;
  std::vector<std::vector<std::uint32_t>> found(
      static_cast<std::size_t>(worker_count()));
  parallel_chunks(candidates, [&](int chunk, std::uint64_t begin,
                                  std::uint64_t end) {
    auto& local = found[static_cast<std::size_t>(chunk)];
    for (std::uint64_t g = begin; g < end; ++g) {
      std::uint32_t mask =
          1u | (static_cast<std::uint32_t>(g) << 1) | (1u << 31);
      if (closed_under_pairs(mask)) local.push_back(mask);
    }
  });
  std::vector<FiniteTopology> out;
  for (const auto& local : found)  // chunk order keeps masks ascending
    for (std::uint32_t mask : local)
      out.push_back(FiniteTopology::unchecked(SetFamily::from_mask(u, mask)));
  return out;
}

}  // namespace

std::vector<FiniteTopology> enumerate_topologies(const Universe& u,
                                                 bool allow_size_5) {
  if (u.size() > 5 || (u.size() == 5 && !allow_size_5))
    throw UniverseTooLargeForScan(
        u.size() == 5
            ? "topology enumeration at size 5 scans 2^30 candidates and must "
              "be requested explicitly"
            : "topology enumeration supports universes up to size 5, got " +
                  std::to_string(u.size()));
  if (u.size() == 5) return scan_topologies_size5(u);

  std::vector<FiniteTopology> out;
  const std::uint64_t family_count = std::uint64_t{1} << u.subset_count();
  for (std::uint64_t mask = 0; mask < family_count; ++mask) {
    // Quick reject: the empty set and X must be members.
    if (!(mask & 1u)) continue;
    if (!((mask >> u.full()) & 1u)) continue;
    if (!closed_under_pairs(static_cast<std::uint32_t>(mask))) continue;
    out.push_back(FiniteTopology::unchecked(SetFamily::from_mask(u, mask)));
  }
  return out;
}

}  // namespace primal
