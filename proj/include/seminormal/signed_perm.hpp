#pragma once

#include <compare>
#include <string>
#include <vector>

namespace seminormal {

/// Signed permutation of 1..n: a permutation pi of {-n..-1, 1..n} with
/// pi(-k) = -pi(k), stored as the images of the positive points.
/// Composition is (a * b)(x) = a(b(x)).
struct SignedPerm {
  std::vector<int> img; // img[k-1] = pi(k), in +-{1..n}

  static SignedPerm identity(int n);

  int n() const { return static_cast<int>(img.size()); }
  int apply(int x) const; ///< signed point, |x| <= n

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  SignedPerm inverse() const;
  bool is_identity() const;
  int order() const;
  int negative_count() const; ///< number of k with pi(k) < 0

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend std::strong_ordering operator<=>(const SignedPerm&, const SignedPerm&) = default;

  std::string str() const; ///< "[2,-1,3]"
};

/// (i, j)(-i, -j): exchange of two positive points.
SignedPerm sp_transposition(int n, int i, int j);
/// (i, -j)(-i, j): exchange with sign flips.
SignedPerm sp_neg_transposition(int n, int i, int j);
/// (k, -k): sign flip of a single point.
SignedPerm sp_sign_flip(int n, int k);

} // namespace seminormal
