#include "seminormal/rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace seminormal {

long g2_c1(int level1) { return level1 == 0 ? 1 : -1; }

LevelConstants g2_level2_constants(G2Label l) {
  // Character-table values chi(z_{2,j}) / chi(1) of section 6.
  switch (l) {
    case G2Label::phi_1_0: return {3, 3, 1};
    case G2Label::phi_1_6: return {-3, -3, 1};
    case G2Label::phi_1_3p: return {3, -3, -1};
    case G2Label::phi_1_3pp: return {-3, 3, -1};
    case G2Label::phi_2_1: return {0, 0, -1};
    case G2Label::phi_2_2: return {0, 0, 1};
  }
  throw std::logic_error("unreachable");
}

std::vector<G2Path> g2_paths(G2Label l) {
  switch (l) {
    case G2Label::phi_1_0: return {{0, l}};
    case G2Label::phi_1_6: return {{1, l}};
    case G2Label::phi_1_3p: return {{0, l}};
    case G2Label::phi_1_3pp: return {{1, l}};
    case G2Label::phi_2_1:
    case G2Label::phi_2_2: return {{0, l}, {1, l}};
  }
  throw std::logic_error("unreachable");
}

int basis_index(const std::vector<StandardTableau>& basis, const StandardTableau& L) {
  auto it = std::lower_bound(basis.begin(), basis.end(), L);
  if (it == basis.end() || !(*it == L)) throw std::invalid_argument("tableau not in basis");
  return static_cast<int>(it - basis.begin());
}

namespace {

Rational inv(long v) { return Rational(1) / Rational(v); }

// s_i column data on the full tableau basis of a single or double shape:
// diagonal coefficient and, when s_i L is standard, the off-diagonal target.
struct WeylColumn {
  Rational diag;
  std::optional<StandardTableau> swapped;
};

WeylColumn weyl_column(const StandardTableau& L, int i) {
  WeylColumn col;
  if (L.sign(i) == L.sign(i - 1)) {
    col.diag = inv(L.content(i) - L.content(i - 1));
  } else {
    col.diag = 0; // signs differ: the numerator 1 + sgn*sgn vanishes
  }
  col.swapped = L.adjacent_swap(i);
  return col;
}

Matrix<Rational> weyl_generator_matrix(const std::vector<StandardTableau>& basis, int i,
                                       bool d_twisted) {
  int d = static_cast<int>(basis.size());
  Matrix<Rational> m(d, d);
  for (int j = 0; j < d; ++j) {
    WeylColumn col = weyl_column(basis[static_cast<std::size_t>(j)], i);
    m.at(j, j) = col.diag;
    if (col.swapped) {
      Rational off = Rational(1) + col.diag;
      if (d_twisted) off = -off; // st_1 = s_1 s_2 s_1 carries a minus sign
      m.at(basis_index(basis, *col.swapped), j) = off;
    }
  }
  return m;
}

Matrix<Rational> weyl_sign_matrix(const std::vector<StandardTableau>& basis) {
  int d = static_cast<int>(basis.size());
  Matrix<Rational> m(d, d);
  for (int j = 0; j < d; ++j) m.at(j, j) = basis[static_cast<std::size_t>(j)].sign(1);
  return m;
}

WeylRep build_weyl_a(const ShapeLabel& label) {
  WeylRep rep;
  rep.group = GroupType::A;
  rep.label = label;
  rep.n = label.shape.size();
  rep.basis = enum_standard_tableaux(label.shape);
  rep.gen_names = generator_names(GroupType::A, rep.n, false);
  for (int i = 2; i <= rep.n; ++i)
    rep.gens.push_back(weyl_generator_matrix(rep.basis, i, false));
  return rep;
}

WeylRep build_weyl_b(const ShapeLabel& label) {
  WeylRep rep;
  rep.group = GroupType::B;
  rep.label = label;
  rep.n = label.shape.size();
  rep.basis = enum_standard_tableaux(label.shape);
  rep.gen_names = generator_names(GroupType::B, rep.n, false);
  rep.gens.push_back(weyl_sign_matrix(rep.basis));
  for (int i = 2; i <= rep.n; ++i)
    rep.gens.push_back(weyl_generator_matrix(rep.basis, i, false));
  return rep;
}

// Projects a matrix on the full basis of (alpha, alpha) to the split module
// with basis w_L = v_L + split * v_{sigma L}, L in the canonical half.
Matrix<Rational> project_split(const Matrix<Rational>& full,
                               const std::vector<StandardTableau>& full_basis,
                               const std::vector<StandardTableau>& half_basis,
                               const std::vector<int>& half_pos, // index in half, or -1
                               const std::vector<int>& sigma_pos, int split) {
  int d = static_cast<int>(half_basis.size());
  Matrix<Rational> m(d, d);
  for (int j = 0; j < d; ++j) {
    int full_j = basis_index(full_basis, half_basis[static_cast<std::size_t>(j)]);
    for (int r = 0; r < static_cast<int>(full_basis.size()); ++r) {
      const Rational& c = full.at(r, full_j);
      if (c == 0) continue;
      if (half_pos[static_cast<std::size_t>(r)] >= 0) {
        m.at(half_pos[static_cast<std::size_t>(r)], j) += c;
      } else {
        m.at(half_pos[static_cast<std::size_t>(sigma_pos[static_cast<std::size_t>(r)])], j) +=
            split > 0 ? c : Rational(-c);
      }
    }
  }
  return m;
}

WeylRep build_weyl_d(const ShapeLabel& label) {
  WeylRep rep;
  rep.group = GroupType::D;
  rep.label = label;
  rep.n = label.shape.size();
  rep.gen_names = generator_names(GroupType::D, rep.n, false);

  std::vector<StandardTableau> full = enum_standard_tableaux(label.shape);
  std::vector<Matrix<Rational>> full_gens;
  full_gens.push_back(weyl_generator_matrix(full, 2, true)); // st_1 action
  for (int i = 2; i <= rep.n; ++i)
    full_gens.push_back(weyl_generator_matrix(full, i, false));

  if (label.split == 0) {
    rep.basis = std::move(full);
    rep.gens = std::move(full_gens);
    return rep;
  }

  // Split module on the half where entry 1 sits in the first component.
  std::vector<int> half_pos(full.size(), -1);
  std::vector<int> sigma_pos(full.size(), -1);
  for (std::size_t r = 0; r < full.size(); ++r) {
    if (full[r].sign(1) == 1) {
      rep.basis.push_back(full[r]);
      half_pos[r] = static_cast<int>(rep.basis.size()) - 1;
    }
    sigma_pos[r] = basis_index(full, full[r].sigma());
  }
  for (const Matrix<Rational>& g : full_gens)
    rep.gens.push_back(project_split(g, full, rep.basis, half_pos, sigma_pos, label.split));
  return rep;
}

WeylRep build_weyl_g2(const ShapeLabel& label) {
  WeylRep rep;
  rep.group = GroupType::G2;
  rep.label = label;
  rep.n = 2;
  rep.g2_basis = g2_paths(label.g2);
  rep.gen_names = generator_names(GroupType::G2, 2, false);
  auto one_dim = [&](long s1, long s2) {
    Matrix<Rational> m1(1, 1), m2(1, 1);
    m1.at(0, 0) = s1;
    m2.at(0, 0) = s2;
    rep.gens = {m1, m2};
  };
  auto half = [](long num) { return Rational(num) / 2; };
  switch (label.g2) {
    case G2Label::phi_1_0: one_dim(1, 1); break;
    case G2Label::phi_1_6: one_dim(-1, -1); break;
    case G2Label::phi_1_3p: one_dim(1, -1); break;
    case G2Label::phi_1_3pp: one_dim(-1, 1); break;
    case G2Label::phi_2_1: {
      Matrix<Rational> m1(2, 2), m2(2, 2);
      m1.at(0, 0) = 1;
      m1.at(1, 1) = -1;
      m2.at(0, 0) = half(1);
      m2.at(0, 1) = half(1);
      m2.at(1, 0) = half(3);
      m2.at(1, 1) = half(-1);
      rep.gens = {m1, m2};
      break;
    }
    case G2Label::phi_2_2: {
      Matrix<Rational> m1(2, 2), m2(2, 2);
      m1.at(0, 0) = 1;
      m1.at(1, 1) = -1;
      m2.at(0, 0) = half(-1);
      m2.at(0, 1) = half(3);
      m2.at(1, 0) = half(1);
      m2.at(1, 1) = half(1);
      rep.gens = {m1, m2};
      break;
    }
  }
  return rep;
}

} // namespace

WeylRep build_weyl_rep(const ShapeLabel& label) {
  label.validate();
  switch (label.group) {
    case GroupType::A: return build_weyl_a(label);
    case GroupType::B: return build_weyl_b(label);
    case GroupType::D: return build_weyl_d(label);
    case GroupType::G2: return build_weyl_g2(label);
  }
  throw std::logic_error("unreachable");
}

const GroupData<SignedPerm>& cached_group_data(GroupType t, int n) {
  static std::mutex mu;
  static std::map<std::pair<GroupType, int>, GroupData<SignedPerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_group_data(t, n)).first;
  return it->second;
}

const GroupData<G2Elem>& cached_g2_group_data() {
  static GroupData<G2Elem> data = make_g2_group_data();
  return data;
}

Matrix<Rational> element_matrix(const WeylRep& rep, const SignedPerm& w) {
  const auto& data = cached_group_data(rep.group, rep.n);
  return rep.word_matrix(data.words[static_cast<std::size_t>(data.index_of(w))]);
}

Matrix<Rational> element_matrix(const WeylRep& rep, const G2Elem& w) {
  return rep.word_matrix(w.word());
}

std::vector<Matrix<Rational>> all_element_matrices(const WeylRep& rep) {
  std::vector<Matrix<Rational>> mats;
  auto sweep = [&](const auto& data) {
    mats.reserve(data.elements.size());
    mats.push_back(rep.identity_matrix());
    // BFS order guarantees every prefix of a word is already computed.
    for (std::size_t i = 1; i < data.elements.size(); ++i) {
      const std::vector<int>& w = data.words[i];
      auto parent = data.elements[i] * data.gens[static_cast<std::size_t>(w.back())].inverse();
      mats.push_back(mats[static_cast<std::size_t>(data.index_of(parent))] *
                     rep.gens[static_cast<std::size_t>(w.back())]);
    }
  };
  if (rep.group == GroupType::G2) {
    sweep(cached_g2_group_data());
  } else {
    sweep(cached_group_data(rep.group, rep.n));
  }
  return mats;
}

Matrix<Rational> apply_group_algebra(const WeylRep& rep, const Algebra<SignedPerm>& x) {
  Matrix<Rational> acc(rep.dim(), rep.dim());
  for (const auto& [w, c] : x) acc = acc + element_matrix(rep, w).scaled(c);
  return acc;
}

Matrix<Rational> apply_group_algebra(const WeylRep& rep, const Algebra<G2Elem>& x) {
  Matrix<Rational> acc(rep.dim(), rep.dim());
  for (const auto& [w, c] : x) acc = acc + element_matrix(rep, w).scaled(c);
  return acc;
}

Rational character(const WeylRep& rep, const SignedPerm& w) {
  return element_matrix(rep, w).trace();
}

Rational character(const WeylRep& rep, const G2Elem& w) {
  return element_matrix(rep, w).trace();
}

} // namespace seminormal
