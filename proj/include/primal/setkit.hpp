#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primal/errors.hpp"

namespace primal {

// A subset of a finite universe, encoded as a bitmask: bit j set <=> element
// j is a member. With universes capped at 16 elements every code fits easily.
using SubsetCode = std::uint32_t;

constexpr int kMaxUniverseSize = 16;

// The carrier set X. Elements are the indices 0..size-1. Labels are display
// names only and never enter any computation.
class Universe {
 public:
  explicit Universe(int size);
  Universe(int size, std::vector<std::string> labels);

  int size() const { return size_; }
  std::uint32_t subset_count() const { return 1u << size_; }
  SubsetCode full() const { return subset_count() - 1; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int element) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.size_ == b.size_ && a.labels_ == b.labels_;
  }

 private:
  int size_;
  std::vector<std::string> labels_;
};

// Two universes carry compatible subset codes iff they have the same size.
inline bool compatible(const Universe& a, const Universe& b) {
  return a.size() == b.size();
}

void require_compatible(const Universe& a, const Universe& b,
                        const char* what);

SubsetCode encode_set(const std::vector<int>& elements, const Universe& u);
SubsetCode complement(SubsetCode a, const Universe& u);

inline bool is_subset(SubsetCode a, SubsetCode b) { return (a & ~b) == 0; }

// Canonical textual form: exactly size() characters from {0,1}, character j
// giving the membership of element j. "101" on a 3-element universe is
// {element0, element2}.
std::string to_bitstring(SubsetCode a, const Universe& u);
SubsetCode from_bitstring(const std::string& text, const Universe& u);

// Human rendering: "{a,c}" with labels, "{0,2}" without.
std::string render_set(SubsetCode a, const Universe& u);

// A family of subsets, stored as a bit-vector indexed by subset code.
// Membership tests and insertions are O(1); the canonical order used for all
// outputs and comparisons is the ascending integer value of the bit-vector
// (equivalently: the family containing the larger unmatched code is larger).
class SetFamily {
 public:
  explicit SetFamily(Universe u);
  SetFamily(Universe u, const std::vector<SubsetCode>& members);

  static SetFamily full_powerset(Universe u);
  // Builds the family from a word-sized bit-vector; only usable when the
  // universe has at most 6 elements (2^6 = 64 codes).
  static SetFamily from_mask(Universe u, std::uint64_t mask);

  const Universe& universe() const { return universe_; }

  bool contains(SubsetCode a) const {
    return (words_[a >> 6] >> (a & 63)) & 1u;
  }
  void insert(SubsetCode a);
  void erase(SubsetCode a);

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<SubsetCode> members() const;  // strictly ascending codes

  // Memberwise algebra; operands must live on compatible universes.
  SetFamily united(const SetFamily& other) const;
  SetFamily intersected(const SetFamily& other) const;
  SetFamily complement_members() const;  // {A^c : A in this}
  bool is_subfamily_of(const SetFamily& other) const;

  std::uint64_t mask() const;  // inverse of from_mask (size() <= 6 only)

  static int compare(const SetFamily& a, const SetFamily& b);

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.universe_.size() == b.universe_.size() && a.words_ == b.words_;
  }
  friend bool operator<(const SetFamily& a, const SetFamily& b) {
    return compare(a, b) < 0;
  }

 private:
  Universe universe_;
  std::vector<std::uint64_t> words_;
};

std::vector<SubsetCode> family_members(const SetFamily& f);

// Families rendered as space-separated bitstrings in canonical member order,
// e.g. "[00 10 01]".
std::string render_family(const SetFamily& f);

}  // namespace primal
