#pragma once

#include "seminormal/group.hpp"
#include "seminormal/labels.hpp"
#include "seminormal/matrix.hpp"
#include "seminormal/ratfunc.hpp"
#include "seminormal/tableau.hpp"

#include <string>
#include <vector>

namespace seminormal {

/// Path in the G2 branching graph: empty -> level1 -> label, where level1 is
/// 0 for the trivial S2 module (2) and 1 for the sign module (1,1).
struct G2Path {
  int level1 = 0;
  G2Label label = G2Label::phi_1_0;

  friend bool operator==(const G2Path&, const G2Path&) = default;
};

/// Tabulated central-element constants of the G2 chain.
long g2_c1(int level1);                         ///< c_{1,0} of the level-1 shape
LevelConstants g2_level2_constants(G2Label l);  ///< (c_{2,s}, c_{2,l}, c_{2,0})
std::vector<G2Path> g2_paths(G2Label l);        ///< basis order: (2) path first

/// Seminormal representation: one matrix per generator over an exact
/// coefficient field (Rational for Weyl groups, RatFunc for Hecke algebras).
/// Column j of each matrix gives the action on basis vector j.
template <class T>
struct Rep {
  GroupType group = GroupType::A;
  int n = 0;
  ShapeLabel label;
  bool hecke = false;
  std::vector<StandardTableau> basis; // types A/B/D (the canonical half for D splits)
  std::vector<G2Path> g2_basis;       // type G2
  std::vector<std::string> gen_names;
  std::vector<Matrix<T>> gens;

  int dim() const {
    return group == GroupType::G2 ? static_cast<int>(g2_basis.size())
                                  : static_cast<int>(basis.size());
  }

  /// Product of generator matrices along a word of generator indices.
  Matrix<T> word_matrix(const std::vector<int>& word) const {
    Matrix<T> acc = identity_matrix();
    for (int g : word) acc = acc * gens.at(static_cast<std::size_t>(g));
    return acc;
  }

  Matrix<T> identity_matrix() const;
};

template <>
inline Matrix<Rational> Rep<Rational>::identity_matrix() const {
  return Matrix<Rational>::identity(dim(), Rational(1));
}

template <>
inline Matrix<RatFunc> Rep<RatFunc>::identity_matrix() const {
  return Matrix<RatFunc>::identity(dim(), RatFunc::constant(1));
}

using WeylRep = Rep<Rational>;
using HeckeRep = Rep<RatFunc>;

/// Position of the tableau in the rep's basis; throws when absent.
int basis_index(const std::vector<StandardTableau>& basis, const StandardTableau& L);

WeylRep build_weyl_rep(const ShapeLabel& label);

/// Shared enumeration caches (BFS words for element decomposition).
const GroupData<SignedPerm>& cached_group_data(GroupType t, int n);
const GroupData<G2Elem>& cached_g2_group_data();

/// Matrix of a group element, decomposed through the cached BFS word.
Matrix<Rational> element_matrix(const WeylRep& rep, const SignedPerm& w);
Matrix<Rational> element_matrix(const WeylRep& rep, const G2Elem& w);

/// Matrices of every group element, in enumeration order.
std::vector<Matrix<Rational>> all_element_matrices(const WeylRep& rep);

Matrix<Rational> apply_group_algebra(const WeylRep& rep, const Algebra<SignedPerm>& x);
Matrix<Rational> apply_group_algebra(const WeylRep& rep, const Algebra<G2Elem>& x);

Rational character(const WeylRep& rep, const SignedPerm& w);
Rational character(const WeylRep& rep, const G2Elem& w);

} // namespace seminormal
