#pragma once

#include <compare>
#include <string>
#include <vector>

namespace seminormal {

/// Element of the dihedral group of order 12 (the Weyl group of G2),
/// presented by s1, s2 with (s1 s2)^6 = 1. Stored as refl^f * rot^k where
/// rot = s1 s2 has order 6 and refl = s1; composition matches word
/// concatenation left to right.
struct G2Elem {
  bool refl = false;
  int rot = 0; // mod 6

  static G2Elem identity() { return {}; }
  static G2Elem s1() { return {true, 0}; }
  static G2Elem s2() { return {true, 1}; }

  friend G2Elem operator*(const G2Elem& a, const G2Elem& b);
  G2Elem inverse() const;
  bool is_identity() const { return !refl && rot == 0; }
  int order() const;

  friend bool operator==(const G2Elem&, const G2Elem&) = default;
  friend std::strong_ordering operator<=>(const G2Elem&, const G2Elem&) = default;

  /// Normal form as an alternating word in s1, s2 ("s1s2s1", "" for identity).
  std::string str() const;
  /// Shortest alternating word, entries 0 (s1) and 1 (s2).
  std::vector<int> word() const;

  /// Product of generators along a word of 0/1 entries.
  static G2Elem from_word(const std::vector<int>& word);
};

} // namespace seminormal
