#include "seminormal/hecke.hpp"

#include <optional>

namespace seminormal {

RatFunc hecke_content(GroupType t, const StandardTableau& L, int k) {
  int ct = L.content(k);
  switch (t) {
    case GroupType::A:
      return RatFunc::q_power(2 * ct);
    case GroupType::B: {
      int sgn = L.sign(k);
      return RatFunc::monomial(sgn, sgn, 2 * ct);
    }
    case GroupType::D:
      return RatFunc::monomial(L.sign(k), 0, 2 * ct);
    case GroupType::G2:
      break;
  }
  throw InvalidLabel("no tableau contents in type G2");
}

namespace {

RatFunc q_minus_qinv() { return RatFunc::var_q() - RatFunc::q_power(-1); }

// (T_i)_{LL} = (q - q^-1) / (1 - CT(L(i-1)) / CT(L(i))).
RatFunc hecke_diag(GroupType t, const StandardTableau& L, int i) {
  RatFunc ratio = hecke_content(t, L, i - 1) / hecke_content(t, L, i);
  return q_minus_qinv() / (RatFunc::from_int(1) - ratio);
}

Matrix<RatFunc> hecke_generator_matrix(GroupType t, const std::vector<StandardTableau>& basis,
                                       int i, bool d_twisted) {
  int d = static_cast<int>(basis.size());
  Matrix<RatFunc> m(d, d);
  for (int j = 0; j < d; ++j) {
    const StandardTableau& L = basis[static_cast<std::size_t>(j)];
    RatFunc diag = hecke_diag(t, L, i);
    m.at(j, j) = diag;
    if (std::optional<StandardTableau> s = L.adjacent_swap(i)) {
      RatFunc off = RatFunc::q_power(-1) + diag;
      if (d_twisted) off = -off;
      m.at(basis_index(basis, *s), j) = off;
    }
  }
  return m;
}

Matrix<RatFunc> hecke_t1_matrix(GroupType t, const std::vector<StandardTableau>& basis) {
  int d = static_cast<int>(basis.size());
  Matrix<RatFunc> m(d, d);
  for (int j = 0; j < d; ++j)
    m.at(j, j) = hecke_content(t, basis[static_cast<std::size_t>(j)], 1);
  return m;
}

HeckeRep build_hecke_a(const ShapeLabel& label) {
  HeckeRep rep;
  rep.group = GroupType::A;
  rep.hecke = true;
  rep.label = label;
  rep.n = label.shape.size();
  rep.basis = enum_standard_tableaux(label.shape);
  rep.gen_names = generator_names(GroupType::A, rep.n, true);
  for (int i = 2; i <= rep.n; ++i)
    rep.gens.push_back(hecke_generator_matrix(GroupType::A, rep.basis, i, false));
  return rep;
}

HeckeRep build_hecke_b(const ShapeLabel& label) {
  HeckeRep rep;
  rep.group = GroupType::B;
  rep.hecke = true;
  rep.label = label;
  rep.n = label.shape.size();
  rep.basis = enum_standard_tableaux(label.shape);
  rep.gen_names = generator_names(GroupType::B, rep.n, true);
  rep.gens.push_back(hecke_t1_matrix(GroupType::B, rep.basis));
  for (int i = 2; i <= rep.n; ++i)
    rep.gens.push_back(hecke_generator_matrix(GroupType::B, rep.basis, i, false));
  return rep;
}

Matrix<RatFunc> project_split(const Matrix<RatFunc>& full,
                              const std::vector<StandardTableau>& full_basis,
                              const std::vector<StandardTableau>& half_basis,
                              const std::vector<int>& half_pos,
                              const std::vector<int>& sigma_pos, int split) {
  int d = static_cast<int>(half_basis.size());
  Matrix<RatFunc> m(d, d);
  for (int j = 0; j < d; ++j) {
    int full_j = basis_index(full_basis, half_basis[static_cast<std::size_t>(j)]);
    for (int r = 0; r < static_cast<int>(full_basis.size()); ++r) {
      const RatFunc& c = full.at(r, full_j);
      if (c.is_zero()) continue;
      if (half_pos[static_cast<std::size_t>(r)] >= 0) {
        m.at(half_pos[static_cast<std::size_t>(r)], j) += c;
      } else {
        int tgt = half_pos[static_cast<std::size_t>(sigma_pos[static_cast<std::size_t>(r)])];
        m.at(tgt, j) += split > 0 ? c : -c;
      }
    }
  }
  return m;
}

HeckeRep build_hecke_d(const ShapeLabel& label) {
  HeckeRep rep;
  rep.group = GroupType::D;
  rep.hecke = true;
  rep.label = label;
  rep.n = label.shape.size();
  rep.gen_names = generator_names(GroupType::D, rep.n, true);

  std::vector<StandardTableau> full = enum_standard_tableaux(label.shape);
  std::vector<Matrix<RatFunc>> full_gens;
  full_gens.push_back(hecke_generator_matrix(GroupType::D, full, 2, true)); // Tt_1
  for (int i = 2; i <= rep.n; ++i)
    full_gens.push_back(hecke_generator_matrix(GroupType::D, full, i, false));

  if (label.split == 0) {
    rep.basis = std::move(full);
    rep.gens = std::move(full_gens);
    return rep;
  }
  std::vector<int> half_pos(full.size(), -1);
  std::vector<int> sigma_pos(full.size(), -1);
  for (std::size_t r = 0; r < full.size(); ++r) {
    if (full[r].sign(1) == 1) {
      rep.basis.push_back(full[r]);
      half_pos[r] = static_cast<int>(rep.basis.size()) - 1;
    }
    sigma_pos[r] = basis_index(full, full[r].sigma());
  }
  for (const Matrix<RatFunc>& g : full_gens)
    rep.gens.push_back(project_split(g, full, rep.basis, half_pos, sigma_pos, label.split));
  return rep;
}

HeckeRep build_hecke_g2(const ShapeLabel& label) {
  HeckeRep rep;
  rep.group = GroupType::G2;
  rep.hecke = true;
  rep.label = label;
  rep.n = 2;
  rep.g2_basis = g2_paths(label.g2);
  rep.gen_names = generator_names(GroupType::G2, 2, true);

  RatFunc p = RatFunc::var_p();
  RatFunc pinv = RatFunc::p_power(-1);
  RatFunc q = RatFunc::var_q();
  RatFunc qinv = RatFunc::q_power(-1);
  auto one_dim = [&](const RatFunc& t1, const RatFunc& t2) {
    Matrix<RatFunc> m1(1, 1), m2(1, 1);
    m1.at(0, 0) = t1;
    m2.at(0, 0) = t2;
    rep.gens = {m1, m2};
  };
  switch (label.g2) {
    case G2Label::phi_1_0: one_dim(p, q); break;
    case G2Label::phi_1_6: one_dim(-pinv, -qinv); break;
    case G2Label::phi_1_3p: one_dim(p, -qinv); break;
    case G2Label::phi_1_3pp: one_dim(-pinv, q); break;
    case G2Label::phi_2_1:
    case G2Label::phi_2_2: {
      Matrix<RatFunc> m1(2, 2), m2(2, 2);
      m1.at(0, 0) = p;
      m1.at(1, 1) = -pinv;
      RatFunc sign = label.g2 == G2Label::phi_2_1 ? RatFunc::from_int(1) : RatFunc::from_int(-1);
      // a = (c + p^-1 (q - q^-1)) / (p + p^-1) with c = 1 for phi_21, -1 for phi_22
      RatFunc a = (sign + pinv * q_minus_qinv()) / (p + pinv);
      m2.at(0, 0) = a;
      m2.at(0, 1) = q - a;
      m2.at(1, 0) = qinv + a;
      m2.at(1, 1) = q_minus_qinv() - a;
      rep.gens = {m1, m2};
      break;
    }
  }
  return rep;
}

} // namespace

HeckeRep build_hecke_rep(const ShapeLabel& label) {
  label.validate();
  switch (label.group) {
    case GroupType::A: return build_hecke_a(label);
    case GroupType::B: return build_hecke_b(label);
    case GroupType::D: return build_hecke_d(label);
    case GroupType::G2: return build_hecke_g2(label);
  }
  throw std::logic_error("unreachable");
}

std::vector<Matrix<RatFunc>> hecke_b_matrices_p1(const std::vector<StandardTableau>& basis) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  int n = basis.front().size();
  std::vector<Matrix<RatFunc>> gens;
  gens.push_back(hecke_t1_matrix(GroupType::D, basis)); // CT with p = 1
  for (int i = 2; i <= n; ++i)
    gens.push_back(hecke_generator_matrix(GroupType::D, basis, i, false));
  return gens;
}

namespace {

std::vector<int> murphy_word(GroupType t, int n, int k) {
  // Words over 0-based generator indices of the rep.
  std::vector<int> w;
  switch (t) {
    case GroupType::A: {
      if (k < 2 || k > n) throw std::out_of_range("type A Murphy elements have 2 <= k <= n");
      for (int i = k; i >= 2; --i) w.push_back(i - 2);
      for (int i = 2; i <= k; ++i) w.push_back(i - 2);
      break;
    }
    case GroupType::B: {
      if (k < 1 || k > n) throw std::out_of_range("Murphy level out of range");
      for (int i = k; i >= 1; --i) w.push_back(i - 1);
      for (int i = 2; i <= k; ++i) w.push_back(i - 1);
      break;
    }
    case GroupType::D: {
      if (k < 1 || k > n) throw std::out_of_range("Murphy level out of range");
      if (k == 1) break;
      for (int i = k; i >= 1; --i) w.push_back(i - 1);
      for (int i = 3; i <= k; ++i) w.push_back(i - 1); // ascent skips Tt_2
      break;
    }
    case GroupType::G2: {
      if (k == 1) {
        w = {0};
      } else if (k == 2) {
        w = {0, 1, 0, 1, 0, 1};
      } else {
        throw std::out_of_range("G2 has levels 1 and 2");
      }
      break;
    }
  }
  return w;
}

} // namespace

Matrix<RatFunc> murphy_matrix(const HeckeRep& rep, int k) {
  return rep.word_matrix(murphy_word(rep.group, rep.n, k));
}

Matrix<RatFunc> central_matrix(const HeckeRep& rep, int k) {
  if (k < 1 || k > rep.n) throw std::out_of_range("central element level out of range");
  Matrix<RatFunc> acc = rep.identity_matrix();
  switch (rep.group) {
    case GroupType::A:
      for (int i = k; i >= 2; --i) acc = acc * murphy_matrix(rep, i);
      break;
    case GroupType::B:
    case GroupType::D:
      for (int i = k; i >= 1; --i) acc = acc * murphy_matrix(rep, i);
      break;
    case GroupType::G2:
      return murphy_matrix(rep, k);
  }
  return acc;
}

WeylRep specialize_rep(const HeckeRep& rep, const Rational& p0, const Rational& q0) {
  WeylRep out;
  out.group = rep.group;
  out.n = rep.n;
  out.label = rep.label;
  out.basis = rep.basis;
  out.g2_basis = rep.g2_basis;
  out.gen_names = generator_names(rep.group, rep.n, false);
  for (const Matrix<RatFunc>& g : rep.gens)
    out.gens.push_back(g.map([&](const RatFunc& f) { return f.eval(p0, q0); }));
  return out;
}

} // namespace seminormal
