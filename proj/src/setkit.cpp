#include "primal/setkit.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace primal {

Universe::Universe(int size) : size_(size) {
  if (size < 1 || size > kMaxUniverseSize)
    throw Error("universe size must be between 1 and " +
                std::to_string(kMaxUniverseSize) + ", got " +
                std::to_string(size));
}

Universe::Universe(int size, std::vector<std::string> labels)
    : Universe(size) {
  if (static_cast<int>(labels.size()) != size)
    throw Error("expected " + std::to_string(size) + " labels, got " +
                std::to_string(labels.size()));
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size())
    throw Error("universe labels must be pairwise distinct");
  labels_ = std::move(labels);
}

std::string Universe::label(int element) const {
  if (element < 0 || element >= size_)
    throw IndexOutOfUniverse("element index " + std::to_string(element) +
                             " outside universe of size " +
                             std::to_string(size_));
  if (has_labels()) return labels_[element];
  return std::to_string(element);
}

void require_compatible(const Universe& a, const Universe& b,
                        const char* what) {
  if (!compatible(a, b))
    throw UniverseMismatch(std::string(what) + ": universes of size " +
                           std::to_string(a.size()) + " and " +
                           std::to_string(b.size()));
}

SubsetCode encode_set(const std::vector<int>& elements, const Universe& u) {
  SubsetCode code = 0;
  for (int e : elements) {
    if (e < 0 || e >= u.size())
      throw IndexOutOfUniverse("element index " + std::to_string(e) +
                               " outside universe of size " +
                               std::to_string(u.size()));
    code |= 1u << e;
  }
  return code;
}

SubsetCode complement(SubsetCode a, const Universe& u) {
  if (a > u.full())
    throw IndexOutOfUniverse("subset code " + std::to_string(a) +
                             " outside universe of size " +
                             std::to_string(u.size()));
  return u.full() ^ a;
}

std::string to_bitstring(SubsetCode a, const Universe& u) {
  std::string s(static_cast<std::size_t>(u.size()), '0');
  for (int j = 0; j < u.size(); ++j)
    if ((a >> j) & 1u) s[j] = '1';
  return s;
}

SubsetCode from_bitstring(const std::string& text, const Universe& u) {
  if (static_cast<int>(text.size()) != u.size())
    throw SyntaxError(0, 0,
                      "expected a bitstring of length " +
                          std::to_string(u.size()) + ", got \"" + text + "\"");
  SubsetCode code = 0;
  for (int j = 0; j < u.size(); ++j) {
    char c = text[static_cast<std::size_t>(j)];
    if (c == '1')
      code |= 1u << j;
    else if (c != '0')
      throw SyntaxError(0, j + 1,
                        std::string("invalid bitstring character '") + c +
                            "', expected 0 or 1");
  }
  return code;
}

std::string render_set(SubsetCode a, const Universe& u) {
  std::string s = "{";
  bool first = true;
  for (int j = 0; j < u.size(); ++j) {
    if (!((a >> j) & 1u)) continue;
    if (!first) s += ",";
    s += u.label(j);
    first = false;
  }
  return s + "}";
}

SetFamily::SetFamily(Universe u)
    : universe_(std::move(u)), words_((universe_.subset_count() + 63) / 64) {}

SetFamily::SetFamily(Universe u, const std::vector<SubsetCode>& members)
    : SetFamily(std::move(u)) {
  for (SubsetCode m : members) insert(m);
}

SetFamily SetFamily::full_powerset(Universe u) {
  SetFamily f(std::move(u));
  for (SubsetCode a = 0; a <= f.universe_.full(); ++a) f.insert(a);
  return f;
}

SetFamily SetFamily::from_mask(Universe u, std::uint64_t mask) {
  if (u.size() > 6)
    throw Error("from_mask requires a universe of at most 6 elements");
  if (u.subset_count() < 64 && (mask >> u.subset_count()) != 0)
    throw IndexOutOfUniverse("family mask has bits beyond the powerset");
  SetFamily f(std::move(u));
  f.words_[0] = mask;
  return f;
}

void SetFamily::insert(SubsetCode a) {
  if (a > universe_.full())
    throw IndexOutOfUniverse("subset code " + std::to_string(a) +
                             " outside universe of size " +
                             std::to_string(universe_.size()));
  words_[a >> 6] |= std::uint64_t{1} << (a & 63);
}

void SetFamily::erase(SubsetCode a) {
  if (a > universe_.full())
    throw IndexOutOfUniverse("subset code " + std::to_string(a) +
                             " outside universe of size " +
                             std::to_string(universe_.size()));
  words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
}

std::size_t SetFamily::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<SubsetCode> SetFamily::members() const {
  std::vector<SubsetCode> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int bit = std::countr_zero(w);
      out.push_back(static_cast<SubsetCode>(wi * 64 + bit));
      w &= w - 1;
    }
  }
  return out;
}

SetFamily SetFamily::united(const SetFamily& other) const {
  require_compatible(universe_, other.universe_, "family union");
  SetFamily out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] |= other.words_[i];
  return out;
}

SetFamily SetFamily::intersected(const SetFamily& other) const {
  require_compatible(universe_, other.universe_, "family intersection");
  SetFamily out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] &= other.words_[i];
  return out;
}

SetFamily SetFamily::complement_members() const {
  SetFamily out(universe_);
  for (SubsetCode a = 0; a <= universe_.full(); ++a)
    if (contains(a)) out.insert(universe_.full() ^ a);
  return out;
}

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
  require_compatible(universe_, other.universe_, "subfamily test");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::uint64_t SetFamily::mask() const {
  if (universe_.size() > 6)
    throw Error("mask() requires a universe of at most 6 elements");
  return words_[0];
}

int SetFamily::compare(const SetFamily& a, const SetFamily& b) {
  require_compatible(a.universe_, b.universe_, "family comparison");
  // Ascending integer value of the membership bit-vector: the most
  // significant differing word decides.
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<SubsetCode> family_members(const SetFamily& f) {
  return f.members();
}

std::string render_family(const SetFamily& f) {
  std::string s = "[";
  bool first = true;
  for (SubsetCode m : f.members()) {
    if (!first) s += " ";
    s += to_bitstring(m, f.universe());
    first = false;
  }
  return s + "]";
}

}  // namespace primal
