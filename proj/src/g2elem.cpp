#include "seminormal/g2elem.hpp"

#include <numeric>
#include <stdexcept>

namespace seminormal {

namespace {
int mod6(int k) { return ((k % 6) + 6) % 6; }
} // namespace

G2Elem operator*(const G2Elem& a, const G2Elem& b) {
  // (f^x r^j)(f^y r^k) with r f = f r^-1.
  G2Elem out;
  out.refl = a.refl != b.refl;
  out.rot = b.refl ? mod6(b.rot - a.rot) : mod6(a.rot + b.rot);
  return out;
}

G2Elem G2Elem::inverse() const {
  if (refl) return *this; // reflections are involutions
  return {false, mod6(-rot)};
}

int G2Elem::order() const {
  if (is_identity()) return 1;
  if (refl) return 2;
  return 6 / std::gcd(6, rot);
}

std::vector<int> G2Elem::word() const {
  // Shortest alternating words; the longest element is rendered s1s2s1s2s1s2.
  auto alt = [](int first, int len) {
    std::vector<int> w;
    for (int i = 0; i < len; ++i) w.push_back((first + i) % 2);
    return w;
  };
  if (!refl) {
    switch (rot) {
      case 0: return {};
      case 1: return alt(0, 2); // s1s2
      case 2: return alt(0, 4);
      case 3: return alt(0, 6);
      case 4: return alt(1, 4); // (s2s1)^2
      case 5: return alt(1, 2);
    }
  } else {
    switch (rot) {
      case 0: return {0};
      case 1: return {1};
      case 2: return alt(1, 3); // s2s1s2
      case 3: return alt(1, 5);
      case 4: return alt(0, 5);
      case 5: return alt(0, 3); // s1s2s1
    }
  }
  throw std::logic_error("unreachable");
}

std::string G2Elem::str() const {
  std::string s;
  for (int g : word()) s += g == 0 ? "s1" : "s2";
  return s;
}

G2Elem G2Elem::from_word(const std::vector<int>& w) {
  G2Elem acc;
  for (int g : w) {
    if (g != 0 && g != 1) throw std::invalid_argument("G2 word entries must be 0 or 1");
    acc = acc * (g == 0 ? s1() : s2());
  }
  return acc;
}

} // namespace seminormal
