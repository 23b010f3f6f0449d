#pragma once

#include "seminormal/errors.hpp"
#include "seminormal/g2elem.hpp"
#include "seminormal/labels.hpp"
#include "seminormal/rational.hpp"
#include "seminormal/signed_perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace seminormal {

/// Coxeter presentation: generator names plus relations given as word pairs
/// over 0-based generator indices. Involutions appear as ([i, i], []); in the
/// Hecke algebra those same positions carry the quadratic relations instead.
struct Relation {
  std::vector<int> lhs;
  std::vector<int> rhs;
};

struct Presentation {
  std::vector<std::string> gen_names;
  std::vector<Relation> relations;
};

/// Generators in the paper's indexing. Type A yields s_2..s_n (n-1 elements),
/// types B/D yield s_1..s_n, G2 yields s1, s2 (rank argument ignored).
std::vector<SignedPerm> group_generators(GroupType t, int n);
std::vector<G2Elem> g2_generators();

/// "s2".."sn", "s1".."sn", "st1".."stn", or Hecke names "T2".."Tn" etc.
std::vector<std::string> generator_names(GroupType t, int n, bool hecke);

/// True when the generator's Hecke quadratic relation uses the parameter p
/// (short simple roots: s_1 of type B, s_1 of G2).
bool generator_uses_p(GroupType t, int gen_index);

Presentation group_presentation(GroupType t, int n, bool hecke = false);

/// Full enumeration in breadth-first order, with one reduced-by-construction
/// word per element. Throws CapError beyond the cap.
template <class E>
struct GroupData {
  std::vector<E> gens;
  std::vector<E> elements;              // elements[0] is the identity
  std::vector<std::vector<int>> words;  // generator-index word per element
  std::map<E, int> index;

  int size() const { return static_cast<int>(elements.size()); }

  int index_of(const E& e) const {
    auto it = index.find(e);
    if (it == index.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }

  static GroupData enumerate(std::vector<E> gens, const E& id, std::size_t cap);
};

GroupData<SignedPerm> make_group_data(GroupType t, int n, std::size_t cap = 1000000);
GroupData<G2Elem> make_g2_group_data();

long long group_order(GroupType t, int n); ///< n!, 2^n n!, 2^(n-1) n!, 12

SignedPerm longest_element(GroupType t, int n);
G2Elem g2_longest_element();

/// Formal sum over group elements with rational coefficients; no zero terms.
template <class E>
using Algebra = std::map<E, Rational>;

template <class E>
void alg_add_term(Algebra<E>& a, const E& e, const Rational& c) {
  if (c == 0) return;
  auto it = a.find(e);
  if (it == a.end()) {
    a.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

template <class E>
Algebra<E> alg_mul(const Algebra<E>& a, const Algebra<E>& b) {
  Algebra<E> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) alg_add_term(out, ea * eb, Rational(ca * cb));
  return out;
}

template <class E>
Algebra<E> alg_add(const Algebra<E>& a, const Algebra<E>& b) {
  Algebra<E> out = a;
  for (const auto& [e, c] : b) alg_add_term(out, e, c);
  return out;
}

template <class E>
Algebra<E> alg_sub(const Algebra<E>& a, const Algebra<E>& b) {
  Algebra<E> out = a;
  for (const auto& [e, c] : b) alg_add_term(out, e, Rational(-c));
  return out;
}

template <class E>
Algebra<E> alg_single(const E& e, const Rational& c = Rational(1)) {
  Algebra<E> out;
  alg_add_term(out, e, c);
  return out;
}

enum class Flavor { Short, Long, Zero, One, Two };

std::string flavor_str(Flavor f);

/// Jucys-Murphy elements:
///  A  Long: sum_{i<k} (i,k),
///  B  Short: (k,-k); Long: sum_{i<k} (i,k) + (i,-k)(-i,k),
///  D  One: (1,-1)(k,-k); Two: the B Long element.
Algebra<SignedPerm> jm_element(GroupType t, int n, int k, Flavor f);

/// Reflection sums and longest-element singleton:
///  A  Long: sum_{i<j<=k} (i,j),
///  B  Short: sum_{i<=k} (i,-i); Long: sum_{i<j<=k} (i,j) + (i,-j)(-i,j);
///     Zero: (1,-1)...(k,-k),
///  D  Long: same reflection sum as B Long (all roots of D_k).
Algebra<SignedPerm> central_sum(GroupType t, int n, int k, Flavor f);

/// G2 chain central elements: level 1 has z_{1,0} = s1 (Flavor::Zero); level 2
/// has the short and long reflection sums and the longest element.
Algebra<G2Elem> g2_central_sum(int k, Flavor f);

} // namespace seminormal
