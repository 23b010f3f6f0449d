#include "seminormal/signed_perm.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace seminormal {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.img.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) p.img[static_cast<std::size_t>(k - 1)] = k;
  return p;
}

int SignedPerm::apply(int x) const {
  assert(x != 0 && std::abs(x) <= n());
  int y = img[static_cast<std::size_t>(std::abs(x) - 1)];
  return x > 0 ? y : -y;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("composing elements of different ranks");
  SignedPerm out;
  out.img.resize(static_cast<std::size_t>(a.n()));
  for (int k = 1; k <= a.n(); ++k)
    out.img[static_cast<std::size_t>(k - 1)] = a.apply(b.apply(k));
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  out.img.resize(img.size());
  for (int k = 1; k <= n(); ++k) {
    int y = apply(k);
    out.img[static_cast<std::size_t>(std::abs(y) - 1)] = y > 0 ? k : -k;
  }
  return out;
}

bool SignedPerm::is_identity() const {
  for (int k = 1; k <= n(); ++k)
    if (apply(k) != k) return false;
  return true;
}

int SignedPerm::order() const {
  SignedPerm acc = *this;
  int ord = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++ord;
    if (ord > 1 << 20) throw std::logic_error("runaway order computation");
  }
  return ord;
}

int SignedPerm::negative_count() const {
  int cnt = 0;
  for (int v : img)
    if (v < 0) ++cnt;
  return cnt;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i) os << ',';
    os << img[i];
  }
  os << ']';
  return os.str();
}

SignedPerm sp_transposition(int n, int i, int j) {
  SignedPerm p = SignedPerm::identity(n);
  p.img[static_cast<std::size_t>(i - 1)] = j;
  p.img[static_cast<std::size_t>(j - 1)] = i;
  return p;
}

SignedPerm sp_neg_transposition(int n, int i, int j) {
  SignedPerm p = SignedPerm::identity(n);
  p.img[static_cast<std::size_t>(i - 1)] = -j;
  p.img[static_cast<std::size_t>(j - 1)] = -i;
  return p;
}

SignedPerm sp_sign_flip(int n, int k) {
  SignedPerm p = SignedPerm::identity(n);
  p.img[static_cast<std::size_t>(k - 1)] = -k;
  return p;
}

} // namespace seminormal
