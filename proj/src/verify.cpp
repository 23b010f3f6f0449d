#include "seminormal/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace seminormal {

namespace {

std::string entry_str(const Rational& r) { return rational_str(r); }
std::string entry_str(const RatFunc& f) { return f.str(); }

template <class T>
std::string matrix_str(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << entry_str(m.at(i, j));
    }
  }
  os << ']';
  return os.str();
}

template <class E>
std::string algebra_str(const Algebra<E>& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a) {
    if (!first) os << " + ";
    first = false;
    std::string w = e.str();
    os << rational_str(c) << '*' << (w.empty() ? "e" : w);
  }
  return os.str();
}

template <class T>
bool expect_equal(CheckReport& report, const std::string& what, const Matrix<T>& lhs,
                  const Matrix<T>& rhs) {
  if (!report.pass) return false;
  if (lhs == rhs) return true;
  report.pass = false;
  report.witness = Witness{what, matrix_str(lhs), matrix_str(rhs)};
  return false;
}

template <class T>
Matrix<T> diagonal_matrix(const std::vector<T>& entries) {
  Matrix<T> m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  return m;
}

Subject subject_of(GroupType t, int n) { return Subject{t, n, std::nullopt, false}; }

template <class T>
Subject subject_of(const Rep<T>& rep) {
  return Subject{rep.group, rep.n, rep.label.str(), rep.hecke};
}

std::string word_str(const Presentation& pres, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int g : word) s += pres.gen_names[static_cast<std::size_t>(g)];
  return s;
}

template <class T>
CheckReport relations_impl(const Rep<T>& rep) {
  CheckReport report{"relations", subject_of(rep), true, std::nullopt};
  Presentation pres = group_presentation(rep.group, rep.n, rep.hecke);
  for (const Relation& r : pres.relations) {
    bool quadratic = r.rhs.empty() && r.lhs.size() == 2 && r.lhs[0] == r.lhs[1];
    if (quadratic && rep.hecke) {
      if constexpr (std::is_same_v<T, RatFunc>) {
        int g = r.lhs[0];
        RatFunc par = generator_uses_p(rep.group, g) ? RatFunc::var_p() : RatFunc::var_q();
        const Matrix<RatFunc>& tg = rep.gens[static_cast<std::size_t>(g)];
        Matrix<RatFunc> lhs = tg * tg;
        Matrix<RatFunc> rhs = tg.scaled(par - par.inverse()) + rep.identity_matrix();
        std::string name = pres.gen_names[static_cast<std::size_t>(g)];
        if (!expect_equal(report, name + "^2 = (x - x^-1)" + name + " + 1", lhs, rhs))
          return report;
      }
      continue;
    }
    Matrix<T> lhs = rep.word_matrix(r.lhs);
    Matrix<T> rhs = rep.word_matrix(r.rhs);
    if (!expect_equal(report, word_str(pres, r.lhs) + " = " + word_str(pres, r.rhs), lhs, rhs))
      return report;
  }
  return report;
}

} // namespace

CheckReport check_relations(const WeylRep& rep) { return relations_impl(rep); }
CheckReport check_relations(const HeckeRep& rep) { return relations_impl(rep); }

namespace {

// Named diagonal operator with its expected spectrum.
template <class T>
struct SpectralClaim {
  std::string name;
  Matrix<T> matrix;
  std::vector<T> expected;
};

std::vector<SpectralClaim<Rational>> weyl_claims(const WeylRep& rep) {
  std::vector<SpectralClaim<Rational>> claims;
  int n = rep.n;
  auto diag = [&](auto&& f) {
    std::vector<Rational> v;
    for (const StandardTableau& L : rep.basis) v.push_back(Rational(f(L)));
    return v;
  };
  auto weight_diag = [&](int k, auto&& pick) {
    std::vector<Rational> v;
    for (const StandardTableau& L : rep.basis)
      v.push_back(Rational(pick(tableau_weight(rep.group, L)[static_cast<std::size_t>(k - 1)])));
    return v;
  };
  switch (rep.group) {
    case GroupType::A:
      for (int k = 2; k <= n; ++k)
        claims.push_back({"m_" + std::to_string(k),
                          apply_group_algebra(rep, jm_element(rep.group, n, k, Flavor::Long)),
                          diag([&](const StandardTableau& L) { return L.content(k); })});
      for (int k = 1; k <= n; ++k)
        claims.push_back({"z_" + std::to_string(k) + ",l",
                          apply_group_algebra(rep, central_sum(rep.group, n, k, Flavor::Long)),
                          weight_diag(k, [](const LevelConstants& c) { return c.c_l; })});
      break;
    case GroupType::B:
      for (int k = 1; k <= n; ++k)
        claims.push_back({"m_" + std::to_string(k) + ",s",
                          apply_group_algebra(rep, jm_element(rep.group, n, k, Flavor::Short)),
                          diag([&](const StandardTableau& L) { return L.sign(k); })});
      for (int k = 2; k <= n; ++k)
        claims.push_back({"m_" + std::to_string(k) + ",l",
                          apply_group_algebra(rep, jm_element(rep.group, n, k, Flavor::Long)),
                          diag([&](const StandardTableau& L) { return 2 * L.content(k); })});
      for (int k = 1; k <= n; ++k) {
        claims.push_back({"z_" + std::to_string(k) + ",s",
                          apply_group_algebra(rep, central_sum(rep.group, n, k, Flavor::Short)),
                          weight_diag(k, [](const LevelConstants& c) { return c.c_s; })});
        claims.push_back({"z_" + std::to_string(k) + ",l",
                          apply_group_algebra(rep, central_sum(rep.group, n, k, Flavor::Long)),
                          weight_diag(k, [](const LevelConstants& c) { return c.c_l; })});
        claims.push_back({"z_" + std::to_string(k) + ",0",
                          apply_group_algebra(rep, central_sum(rep.group, n, k, Flavor::Zero)),
                          weight_diag(k, [](const LevelConstants& c) { return c.c_0; })});
      }
      break;
    case GroupType::D:
      for (int k = 2; k <= n; ++k) {
        claims.push_back({"mt_" + std::to_string(k) + ",1",
                          apply_group_algebra(rep, jm_element(rep.group, n, k, Flavor::One)),
                          diag([&](const StandardTableau& L) { return L.sign(1) * L.sign(k); })});
        claims.push_back({"mt_" + std::to_string(k) + ",2",
                          apply_group_algebra(rep, jm_element(rep.group, n, k, Flavor::Two)),
                          diag([&](const StandardTableau& L) { return 2 * L.content(k); })});
      }
      for (int k = 1; k <= n; ++k)
        claims.push_back({"z_" + std::to_string(k) + ",l",
                          apply_group_algebra(rep, central_sum(rep.group, n, k, Flavor::Long)),
                          weight_diag(k, [](const LevelConstants& c) { return c.c_l; })});
      break;
    case GroupType::G2: {
      std::vector<Rational> c1;
      for (const G2Path& path : rep.g2_basis) c1.push_back(Rational(g2_c1(path.level1)));
      claims.push_back({"z_1,0", apply_group_algebra(rep, g2_central_sum(1, Flavor::Zero)), c1});
      auto level2 = [&](Flavor f, const std::string& name, auto&& pick) {
        std::vector<Rational> v;
        for (const G2Path& path : rep.g2_basis)
          v.push_back(Rational(pick(g2_level2_constants(path.label))));
        claims.push_back({name, apply_group_algebra(rep, g2_central_sum(2, f)), v});
      };
      level2(Flavor::Short, "z_2,s", [](const LevelConstants& c) { return c.c_s; });
      level2(Flavor::Long, "z_2,l", [](const LevelConstants& c) { return c.c_l; });
      level2(Flavor::Zero, "z_2,0", [](const LevelConstants& c) { return c.c_0; });
      break;
    }
  }
  return claims;
}

std::vector<SpectralClaim<RatFunc>> hecke_claims(const HeckeRep& rep) {
  std::vector<SpectralClaim<RatFunc>> claims;
  int n = rep.n;
  auto diag = [&](auto&& f) {
    std::vector<RatFunc> v;
    for (const StandardTableau& L : rep.basis) v.push_back(f(L));
    return v;
  };
  switch (rep.group) {
    case GroupType::A:
      for (int k = 2; k <= n; ++k)
        claims.push_back({"M_" + std::to_string(k), murphy_matrix(rep, k),
                          diag([&](const StandardTableau& L) {
                            return RatFunc::q_power(2 * L.content(k));
                          })});
      for (int k = 1; k <= n; ++k)
        claims.push_back({"z_" + std::to_string(k), central_matrix(rep, k),
                          diag([&](const StandardTableau& L) {
                            long cl = tableau_weight(rep.group, L)[static_cast<std::size_t>(k - 1)].c_l;
                            return RatFunc::q_power(static_cast<int>(2 * cl));
                          })});
      break;
    case GroupType::B:
      for (int k = 1; k <= n; ++k)
        claims.push_back({"M_" + std::to_string(k), murphy_matrix(rep, k),
                          diag([&](const StandardTableau& L) {
                            return RatFunc::monomial(L.sign(k), L.sign(k), 2 * L.content(k));
                          })});
      for (int k = 1; k <= n; ++k)
        claims.push_back({"z_" + std::to_string(k), central_matrix(rep, k),
                          diag([&](const StandardTableau& L) {
                            LevelConstants c =
                                tableau_weight(rep.group, L)[static_cast<std::size_t>(k - 1)];
                            return RatFunc::monomial(c.c_0, static_cast<int>(c.c_s),
                                                     static_cast<int>(c.c_l));
                          })});
      break;
    case GroupType::D:
      for (int k = 1; k <= n; ++k)
        claims.push_back({"Mt_" + std::to_string(k), murphy_matrix(rep, k),
                          diag([&](const StandardTableau& L) {
                            if (k == 1) return RatFunc::from_int(1);
                            return RatFunc::monomial(L.sign(1) * L.sign(k), 0, 2 * L.content(k));
                          })});
      for (int k = 1; k <= n; ++k)
        claims.push_back({"zt_" + std::to_string(k), central_matrix(rep, k),
                          diag([&](const StandardTableau& L) {
                            LevelConstants c =
                                tableau_weight(rep.group, L)[static_cast<std::size_t>(k - 1)];
                            long s1k = k % 2 == 0 ? 1 : L.sign(1);
                            return RatFunc::monomial(s1k * c.c_0, 0, static_cast<int>(c.c_l));
                          })});
      break;
    case GroupType::G2: {
      auto path_diag = [&](int k) {
        std::vector<RatFunc> v;
        for (const G2Path& path : rep.g2_basis) {
          if (k == 1) {
            long c1 = g2_c1(path.level1);
            v.push_back(RatFunc::monomial(c1, static_cast<int>(c1), 0));
          } else {
            LevelConstants c = g2_level2_constants(path.label);
            v.push_back(RatFunc::monomial(c.c_0, static_cast<int>(c.c_s), static_cast<int>(c.c_l)));
          }
        }
        return v;
      };
      claims.push_back({"z_1", central_matrix(rep, 1), path_diag(1)});
      claims.push_back({"z_2", central_matrix(rep, 2), path_diag(2)});
      break;
    }
  }
  return claims;
}

template <class T>
CheckReport jm_spectra_impl(const Rep<T>& rep, std::vector<SpectralClaim<T>> claims) {
  CheckReport report{"jm-spectra", subject_of(rep), true, std::nullopt};
  for (const SpectralClaim<T>& claim : claims) {
    if (!expect_equal(report, claim.name + " diagonal with tabulated eigenvalues", claim.matrix,
                      diagonal_matrix(claim.expected)))
      return report;
  }
  // Pairwise commutation of the diagonal family.
  for (std::size_t i = 0; i < claims.size(); ++i)
    for (std::size_t j = i + 1; j < claims.size(); ++j)
      if (!expect_equal(report, claims[i].name + " commutes with " + claims[j].name,
                        claims[i].matrix * claims[j].matrix,
                        claims[j].matrix * claims[i].matrix))
        return report;
  return report;
}

} // namespace

CheckReport check_jm_spectra(const WeylRep& rep) {
  return jm_spectra_impl(rep, weyl_claims(rep));
}

CheckReport check_jm_spectra(const HeckeRep& rep) {
  return jm_spectra_impl(rep, hecke_claims(rep));
}

namespace {

template <class Data>
CheckReport completeness_impl(GroupType t, int n, const Data& data,
                              const std::vector<WeylRep>& reps) {
  CheckReport report{"completeness", subject_of(t, n), true, std::nullopt};
  long long order = group_order(t, n);
  long long sumsq = 0;
  for (const WeylRep& rep : reps) sumsq += static_cast<long long>(rep.dim()) * rep.dim();
  if (sumsq != order) {
    report.pass = false;
    report.witness = Witness{"sum of squared dimensions vs group order",
                             std::to_string(sumsq), std::to_string(order)};
    return report;
  }
  std::vector<std::vector<Rational>> traces;
  for (const WeylRep& rep : reps) {
    std::vector<Rational> tr;
    for (const auto& m : all_element_matrices(rep)) tr.push_back(m.trace());
    traces.push_back(std::move(tr));
  }
  std::vector<int> inv_index(data.elements.size());
  for (std::size_t i = 0; i < data.elements.size(); ++i)
    inv_index[i] = data.index_of(data.elements[i].inverse());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a; b < reps.size(); ++b) {
      Rational inner(0);
      for (std::size_t w = 0; w < data.elements.size(); ++w)
        inner += traces[a][w] * traces[b][static_cast<std::size_t>(inv_index[w])];
      Rational expected = a == b ? Rational(order) : Rational(0);
      if (inner != expected) {
        report.pass = false;
        report.witness = Witness{"character inner product of " + reps[a].label.str() + " and " +
                                     reps[b].label.str(),
                                 rational_str(inner), rational_str(expected)};
        return report;
      }
    }
  return report;
}

} // namespace

CheckReport check_completeness(GroupType t, int n, std::size_t cap) {
  if (t != GroupType::G2 && group_order(t, n) > static_cast<long long>(cap))
    throw CapError("group order exceeds the enumeration cap");
  std::vector<WeylRep> reps;
  for (const ShapeLabel& label : enum_shapes(t, n)) reps.push_back(build_weyl_rep(label));
  if (t == GroupType::G2) return completeness_impl(t, 2, cached_g2_group_data(), reps);
  return completeness_impl(t, n, cached_group_data(t, n), reps);
}

namespace {

StandardTableau truncate_tableau(const StandardTableau& L, int k) {
  std::vector<Box> boxes(L.boxes().begin(), L.boxes().begin() + k);
  return StandardTableau(L.level_shape(k), std::move(boxes));
}

} // namespace

CheckReport check_branching(const WeylRep& rep) {
  CheckReport report{"branching", subject_of(rep), true, std::nullopt};
  if (rep.group == GroupType::D)
    throw InvalidLabel("branching check follows the A/B/G2 chains");
  int n = rep.n;
  if (n < 2) return report;

  // Block key: the level-(n-1) label of each basis path.
  std::map<std::string, std::vector<int>> blocks;
  std::map<std::string, ShapeLabel> sub_labels;
  if (rep.group == GroupType::G2) {
    for (std::size_t i = 0; i < rep.g2_basis.size(); ++i) {
      Partition level1({rep.g2_basis[i].level1 == 0 ? std::vector<int>{2}
                                                    : std::vector<int>{1, 1}});
      ShapeLabel sub = ShapeLabel::type_a(level1);
      blocks[sub.str()].push_back(static_cast<int>(i));
      sub_labels.emplace(sub.str(), sub);
    }
  } else {
    for (std::size_t i = 0; i < rep.basis.size(); ++i) {
      Shape level = rep.basis[i].level_shape(n - 1);
      ShapeLabel sub = rep.group == GroupType::A ? ShapeLabel::type_a(level.alpha)
                                                 : ShapeLabel::type_b(level);
      blocks[sub.str()].push_back(static_cast<int>(i));
      sub_labels.emplace(sub.str(), sub);
    }
  }

  // Generators of the subgroup: all but the last (G2 restricts to <s1>).
  std::size_t sub_gen_count = rep.group == GroupType::G2 ? 1 : rep.gens.size() - 1;

  // Cross-block entries vanish.
  std::vector<std::string> key_of(static_cast<std::size_t>(rep.dim()));
  for (const auto& [key, idxs] : blocks)
    for (int i : idxs) key_of[static_cast<std::size_t>(i)] = key;
  for (std::size_t g = 0; g < sub_gen_count; ++g) {
    const Matrix<Rational>& m = rep.gens[g];
    for (int i = 0; i < rep.dim(); ++i)
      for (int j = 0; j < rep.dim(); ++j)
        if (key_of[static_cast<std::size_t>(i)] != key_of[static_cast<std::size_t>(j)] &&
            m.at(i, j) != 0) {
          report.pass = false;
          report.witness = Witness{
              rep.gen_names[g] + " has a nonzero entry across branching blocks at (" +
                  std::to_string(i) + "," + std::to_string(j) + ")",
              entry_str(m.at(i, j)), "0"};
          return report;
        }
  }

  // Each block equals the smaller seminormal representation verbatim.
  for (const auto& [key, idxs] : blocks) {
    WeylRep sub = build_weyl_rep(sub_labels.at(key));
    if (static_cast<int>(idxs.size()) != sub.dim()) {
      report.pass = false;
      report.witness = Witness{"block size of " + key, std::to_string(idxs.size()),
                               std::to_string(sub.dim())};
      return report;
    }
    if (rep.group != GroupType::G2) {
      for (std::size_t t = 0; t < idxs.size(); ++t) {
        StandardTableau trunc =
            truncate_tableau(rep.basis[static_cast<std::size_t>(idxs[t])], n - 1);
        if (!(trunc == sub.basis[t])) {
          report.pass = false;
          report.witness = Witness{"basis order inside block " + key,
                                   "parent tableau " + std::to_string(idxs[t]),
                                   "sub-module tableau " + std::to_string(t)};
          return report;
        }
      }
    }
    for (std::size_t g = 0; g < sub.gens.size(); ++g) {
      Matrix<Rational> block(static_cast<int>(idxs.size()), static_cast<int>(idxs.size()));
      for (std::size_t a = 0; a < idxs.size(); ++a)
        for (std::size_t b = 0; b < idxs.size(); ++b)
          block.at(static_cast<int>(a), static_cast<int>(b)) =
              rep.gens[g].at(idxs[a], idxs[b]);
      if (!expect_equal(report, "block " + key + " of " + rep.gen_names[g], block, sub.gens[g]))
        return report;
    }
  }
  return report;
}

CheckReport check_weight_separation(GroupType t, int n) {
  CheckReport report{"weights", subject_of(t, n), true, std::nullopt};
  auto fail = [&](const std::string& desc, const std::string& lhs, const std::string& rhs) {
    report.pass = false;
    report.witness = Witness{desc, lhs, rhs};
  };
  if (t == GroupType::G2) {
    std::map<std::vector<long>, G2Path> seen;
    for (G2Label l : kG2Labels)
      for (const G2Path& path : g2_paths(l)) {
        LevelConstants c2 = g2_level2_constants(path.label);
        std::vector<long> key{g2_c1(path.level1), c2.c_s, c2.c_l, c2.c_0};
        auto [it, inserted] = seen.emplace(key, path);
        if (!inserted) {
          fail("two G2 paths share a weight", g2_label_str(it->second.label),
               g2_label_str(path.label));
          return report;
        }
      }
    return report;
  }
  if (t == GroupType::D) {
    // Fibers of (contents, relative signs) are exactly the sigma orbits.
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<StandardTableau>> fibers;
    for (int a = n; a >= 0; --a)
      for (const Partition& alpha : partitions_of(a))
        for (const Partition& beta : partitions_of(n - a)) {
          Shape shape = Shape::double_shape(alpha, beta);
          for (const StandardTableau& L : enum_standard_tableaux(shape))
            fibers[{contents_vector(L), dsign_vector(L)}].push_back(L);
        }
    for (const auto& [key, members] : fibers) {
      if (members.size() != 2) {
        fail("sigma-orbit fiber has unexpected size", std::to_string(members.size()), "2");
        return report;
      }
      if (!(members[0].sigma() == members[1])) {
        fail("weight fiber is not a sigma orbit", members[0].shape().str(),
             members[1].shape().str());
        return report;
      }
    }
    return report;
  }
  // A and B: the reduced weight vectors are injective across all shapes.
  std::map<std::pair<std::vector<int>, std::vector<int>>, StandardTableau> seen;
  std::vector<Shape> shapes;
  if (t == GroupType::A) {
    for (const Partition& p : partitions_of(n)) shapes.push_back(Shape::single(p));
  } else {
    for (int a = n; a >= 0; --a)
      for (const Partition& alpha : partitions_of(a))
        for (const Partition& beta : partitions_of(n - a))
          shapes.push_back(Shape::double_shape(alpha, beta));
  }
  for (const Shape& shape : shapes)
    for (const StandardTableau& L : enum_standard_tableaux(shape)) {
      std::vector<int> signs = t == GroupType::A ? std::vector<int>{} : signs_vector(L);
      auto [it, inserted] = seen.emplace(std::make_pair(contents_vector(L), signs), L);
      if (!inserted) {
        fail("two tableaux share a weight", it->second.shape().str(), shape.str());
        return report;
      }
    }
  return report;
}

namespace {

// Distinct eigenvalues of one central element over the level-k label set.
std::vector<long> level_values(GroupType t, int k, Flavor f) {
  std::set<long> values;
  auto pick = [&](const LevelConstants& c) {
    switch (f) {
      case Flavor::Short: return c.c_s;
      case Flavor::Long: return c.c_l;
      case Flavor::Zero: return c.c_0;
      default: throw InvalidLabel("bad projector flavor");
    }
  };
  if (t == GroupType::A) {
    for (const Partition& mu : partitions_of(k))
      values.insert(pick(weight_constants(t, Shape::single(mu))));
  } else if (t == GroupType::B) {
    for (int a = k; a >= 0; --a)
      for (const Partition& alpha : partitions_of(a))
        for (const Partition& beta : partitions_of(k - a))
          values.insert(pick(weight_constants(t, Shape::double_shape(alpha, beta))));
  } else {
    throw InvalidLabel("level_values handles A and B");
  }
  return {values.begin(), values.end()};
}

struct ProjectorLevel {
  std::string name;
  Matrix<Rational> z;                  // central element in the representation
  std::vector<long> values;            // all c-values over the level's labels
  std::vector<long> value_of_basis;    // c-value of each basis path at this level
};

std::vector<ProjectorLevel> projector_levels(const WeylRep& rep) {
  std::vector<ProjectorLevel> levels;
  auto pick = [](Flavor f, const LevelConstants& c) {
    return f == Flavor::Short ? c.c_s : f == Flavor::Long ? c.c_l : c.c_0;
  };
  if (rep.group == GroupType::G2) {
    ProjectorLevel l1;
    l1.name = "z_1,0";
    l1.z = apply_group_algebra(rep, g2_central_sum(1, Flavor::Zero));
    l1.values = {-1, 1};
    for (const G2Path& path : rep.g2_basis) l1.value_of_basis.push_back(g2_c1(path.level1));
    levels.push_back(std::move(l1));
    for (Flavor f : {Flavor::Short, Flavor::Long, Flavor::Zero}) {
      ProjectorLevel l2;
      l2.name = std::string("z_2,") + (f == Flavor::Short ? "s" : f == Flavor::Long ? "l" : "0");
      l2.z = apply_group_algebra(rep, g2_central_sum(2, f));
      std::set<long> vals;
      for (G2Label lab : kG2Labels) vals.insert(pick(f, g2_level2_constants(lab)));
      l2.values = {vals.begin(), vals.end()};
      for (const G2Path& path : rep.g2_basis)
        l2.value_of_basis.push_back(pick(f, g2_level2_constants(path.label)));
      levels.push_back(std::move(l2));
    }
    return levels;
  }
  std::vector<Flavor> flavors = rep.group == GroupType::A
                                    ? std::vector<Flavor>{Flavor::Long}
                                    : std::vector<Flavor>{Flavor::Short, Flavor::Long, Flavor::Zero};
  for (int k = 1; k <= rep.n; ++k)
    for (Flavor f : flavors) {
      ProjectorLevel level;
      level.name = "z_" + std::to_string(k) + "," +
                   (f == Flavor::Short ? "s" : f == Flavor::Long ? "l" : "0");
      level.z = apply_group_algebra(rep, central_sum(rep.group, rep.n, k, f));
      level.values = level_values(rep.group, k, f);
      for (const StandardTableau& L : rep.basis)
        level.value_of_basis.push_back(
            pick(f, tableau_weight(rep.group, L)[static_cast<std::size_t>(k - 1)]));
      levels.push_back(std::move(level));
    }
  return levels;
}

} // namespace

CheckReport check_projectors(const WeylRep& rep) {
  CheckReport report{"projectors", subject_of(rep), true, std::nullopt};
  if (rep.group == GroupType::D)
    throw InvalidLabel("projector check follows the A/B/G2 chains");
  int d = rep.dim();
  Matrix<Rational> id = rep.identity_matrix();
  std::vector<ProjectorLevel> levels = projector_levels(rep);

  // Lemma 1.9 semantics: the central element is diagonal and constant on each
  // branching block with the block's constant.
  for (const ProjectorLevel& level : levels) {
    std::vector<Rational> expected;
    for (long v : level.value_of_basis) expected.push_back(Rational(v));
    if (!expect_equal(report, level.name + " acts by the level constants", level.z,
                      diagonal_matrix(expected)))
      return report;
  }

  // Prop 1.12 products of spectral projectors give elementary idempotents.
  Matrix<Rational> sum(d, d);
  for (int b = 0; b < d; ++b) {
    Matrix<Rational> e = id;
    for (const ProjectorLevel& level : levels) {
      long own = level.value_of_basis[static_cast<std::size_t>(b)];
      for (long v : level.values) {
        if (v == own) continue;
        Matrix<Rational> factor =
            (level.z - id.scaled(Rational(v))).scaled(Rational(1) / Rational(own - v));
        e = e * factor;
      }
    }
    Matrix<Rational> elementary(d, d);
    elementary.at(b, b) = 1;
    if (!expect_equal(report, "projector product for basis path " + std::to_string(b), e,
                      elementary))
      return report;
    sum = sum + e;
  }
  if (!expect_equal(report, "resolution of identity", sum, id)) return report;
  return report;
}

namespace {

template <class E>
bool expect_algebra_equal(CheckReport& report, const std::string& what, const Algebra<E>& lhs,
                          const Algebra<E>& rhs) {
  if (!report.pass) return false;
  if (lhs == rhs) return true;
  report.pass = false;
  report.witness = Witness{what, algebra_str(lhs), algebra_str(rhs)};
  return false;
}

Matrix<RatFunc> hecke_inverse_generator(const HeckeRep& rep, int gen_index) {
  RatFunc par = generator_uses_p(rep.group, gen_index) ? RatFunc::var_p() : RatFunc::var_q();
  const Matrix<RatFunc>& tg = rep.gens[static_cast<std::size_t>(gen_index)];
  return tg - rep.identity_matrix().scaled(par - par.inverse());
}

} // namespace

CheckReport check_step2_identities(GroupType t, int n) {
  CheckReport report{"step2", subject_of(t, n), true, std::nullopt};
  if (t == GroupType::B) {
    if (n < 2) return report;
    auto m_long = [&](int k) {
      return alg_sub(central_sum(t, n, k, Flavor::Long), central_sum(t, n, k - 1, Flavor::Long));
    };
    auto m_short = [&](int k) {
      return alg_sub(central_sum(t, n, k, Flavor::Short), central_sum(t, n, k - 1, Flavor::Short));
    };
    SignedPerm sn = group_generators(t, n).back();
    Algebra<SignedPerm> lhs = alg_mul(alg_single(sn), m_long(n - 1));
    Algebra<SignedPerm> rhs = alg_sub(
        alg_sub(alg_mul(m_long(n), alg_single(sn)), alg_single(SignedPerm::identity(n))),
        alg_mul(m_short(n), m_short(n - 1)));
    if (!expect_algebra_equal(report, "s_n m_{n-1,l} = m_{n,l} s_n - 1 - m_{n,s} m_{n-1,s}", lhs,
                              rhs))
      return report;
    for (const ShapeLabel& label : enum_shapes(t, n)) {
      WeylRep rep = build_weyl_rep(label);
      Matrix<Rational> sn_mat = rep.gens.back();
      Matrix<Rational> ml_n = apply_group_algebra(rep, m_long(n));
      Matrix<Rational> ml_prev = apply_group_algebra(rep, m_long(n - 1));
      Matrix<Rational> ms_n = apply_group_algebra(rep, m_short(n));
      Matrix<Rational> ms_prev = apply_group_algebra(rep, m_short(n - 1));
      Matrix<Rational> left = sn_mat * ml_prev;
      Matrix<Rational> right = ml_n * sn_mat - rep.identity_matrix() - ms_n * ms_prev;
      if (!expect_equal(report, "matrix step-2 identity on " + label.str(), left, right))
        return report;

      HeckeRep hrep = build_hecke_rep(label);
      Matrix<RatFunc> mn = murphy_matrix(hrep, n);
      Matrix<RatFunc> mn_prev = murphy_matrix(hrep, n - 1);
      Matrix<RatFunc> tn = hrep.gens.back();
      if (!expect_equal(report, "M_n = T_n M_{n-1} T_n on " + label.str(), mn, tn * mn_prev * tn))
        return report;
      if (!mn.is_diagonal()) {
        report.pass = false;
        report.witness = Witness{"M_n is diagonal on " + label.str(), matrix_str(mn), "diagonal"};
        return report;
      }
      Matrix<RatFunc> mn_inv(mn.rows(), mn.cols());
      for (int i = 0; i < mn.rows(); ++i) mn_inv.at(i, i) = mn.at(i, i).inverse();
      Matrix<RatFunc> tn_inv =
          hecke_inverse_generator(hrep, static_cast<int>(hrep.gens.size()) - 1);
      if (!expect_equal(report, "T_n^-1 = M_n^-1 T_n M_{n-1} on " + label.str(), tn_inv,
                        mn_inv * tn * mn_prev))
        return report;
    }
    return report;
  }
  if (t == GroupType::G2) {
    // z_{2,l} = s_2 + z_{1,0} s_2 z_{1,0} + z_{2,0} z_{1,0}, proof of Thm 6.7(b).
    Algebra<G2Elem> s1 = alg_single(G2Elem::s1());
    Algebra<G2Elem> s2 = alg_single(G2Elem::s2());
    Algebra<G2Elem> rhs = alg_add(
        alg_add(s2, alg_mul(s1, alg_mul(s2, s1))), alg_mul(g2_central_sum(2, Flavor::Zero), s1));
    if (!expect_algebra_equal(report, "z_{2,l} = s_2 + z_{1,0} s_2 z_{1,0} + z_{2,0} z_{1,0}",
                              g2_central_sum(2, Flavor::Long), rhs))
      return report;
    for (const ShapeLabel& label : enum_shapes(t, 2)) {
      WeylRep rep = build_weyl_rep(label);
      Matrix<Rational> s1m = rep.gens[0];
      Matrix<Rational> s2m = rep.gens[1];
      Matrix<Rational> z20 = apply_group_algebra(rep, g2_central_sum(2, Flavor::Zero));
      Matrix<Rational> left = apply_group_algebra(rep, g2_central_sum(2, Flavor::Long));
      Matrix<Rational> right = s2m + s1m * s2m * s1m + z20 * s1m;
      if (!expect_equal(report, "matrix form of the z_{2,l} identity on " + label.str(), left,
                        right))
        return report;

      HeckeRep hrep = build_hecke_rep(label);
      Matrix<RatFunc> t1_inv = hecke_inverse_generator(hrep, 0);
      Matrix<RatFunc> t2_inv = hecke_inverse_generator(hrep, 1);
      Matrix<RatFunc> z2 = central_matrix(hrep, 2);
      Matrix<RatFunc> left_h = t1_inv * t2_inv * t1_inv * z2;
      Matrix<RatFunc> right_h = hrep.gens[1] * hrep.gens[0] * hrep.gens[1];
      if (!expect_equal(report, "T_1^-1 T_2^-1 T_1^-1 z_2 = T_2 T_1 T_2 on " + label.str(),
                        left_h, right_h))
        return report;
    }
    return report;
  }
  throw InvalidLabel("step-2 identities are stated for types B and G2");
}

CheckReport check_specialization(GroupType t, int n) {
  CheckReport report{"specialize", subject_of(t, n), true, std::nullopt};
  for (const ShapeLabel& label : enum_shapes(t, n)) {
    WeylRep weyl = build_weyl_rep(label);
    HeckeRep hecke = build_hecke_rep(label);
    WeylRep specialized;
    try {
      specialized = specialize_rep(hecke, 1, 1);
    } catch (const PoleError& e) {
      report.pass = false;
      report.witness = Witness{"pole at p = q = 1 on " + label.str(), e.what(), "no pole"};
      return report;
    }
    for (std::size_t g = 0; g < weyl.gens.size(); ++g)
      if (!expect_equal(report,
                        "specialized " + hecke.gen_names[g] + " vs " + weyl.gen_names[g] +
                            " on " + label.str(),
                        specialized.gens[g], weyl.gens[g]))
        return report;
  }
  return report;
}

namespace {

SignedPerm level_longest(GroupType t, int n, int k) {
  SignedPerm w = SignedPerm::identity(n);
  if (t == GroupType::A) {
    for (int i = 1; i <= k; ++i) w.img[static_cast<std::size_t>(i - 1)] = k + 1 - i;
  } else {
    for (int i = 1; i <= k; ++i) w.img[static_cast<std::size_t>(i - 1)] = -i;
  }
  return w;
}

Matrix<Rational> eval_matrix(const Matrix<RatFunc>& m, const Rational& p0, const Rational& q0) {
  return m.map([&](const RatFunc& f) { return f.eval(p0, q0); });
}

} // namespace

CheckReport check_central_specialization(GroupType t, int n) {
  CheckReport report{"prop28", subject_of(t, n), true, std::nullopt};
  if (t == GroupType::D)
    throw InvalidLabel("central specialization identities cover types A, B, G2");
  RatFunc q_gap = RatFunc::var_q() - RatFunc::q_power(-1);
  RatFunc p_gap = RatFunc::var_p() - RatFunc::p_power(-1);
  for (const ShapeLabel& label : enum_shapes(t, n)) {
    WeylRep weyl = build_weyl_rep(label);
    HeckeRep hecke = build_hecke_rep(label);
    Matrix<RatFunc> id = hecke.identity_matrix();
    int levels = t == GroupType::G2 ? 2 : n;
    for (int k = 1; k <= levels; ++k) {
      Matrix<RatFunc> z = central_matrix(hecke, k);
      Matrix<RatFunc> square = t == GroupType::A ? z : z * z;
      try {
        // Long-root identity: [([T_w0]_{p=1})^2 - 1] / (q - q^-1) at q = 1.
        Matrix<RatFunc> at_p1 =
            t == GroupType::A ? square
                              : square.map([&](const RatFunc& f) { return f.subst_p(1); });
        Matrix<RatFunc> quotient =
            (at_p1 - id).map([&](const RatFunc& f) { return f / q_gap; });
        Matrix<Rational> lhs_long = eval_matrix(quotient, 1, 1);
        Matrix<Rational> rhs_long =
            t == GroupType::G2
                ? (k == 1 ? Matrix<Rational>(weyl.dim(), weyl.dim())
                          : apply_group_algebra(weyl, g2_central_sum(2, Flavor::Long)))
                : apply_group_algebra(weyl, central_sum(t, n, k, Flavor::Long));
        if (!expect_equal(report,
                          "long-root specialization at level " + std::to_string(k) + " on " +
                              label.str(),
                          lhs_long, rhs_long))
          return report;

        if (t != GroupType::A) {
          // Short-root identity with the roles of p and q exchanged.
          Matrix<RatFunc> at_q1 = square.map([&](const RatFunc& f) { return f.subst_q(1); });
          Matrix<RatFunc> quotient_s =
              (at_q1 - id).map([&](const RatFunc& f) { return f / p_gap; });
          Matrix<Rational> lhs_short = eval_matrix(quotient_s, 1, 1);
          Matrix<Rational> rhs_short =
              t == GroupType::G2
                  ? (k == 1 ? apply_group_algebra(weyl, alg_single(G2Elem::s1()))
                            : apply_group_algebra(weyl, g2_central_sum(2, Flavor::Short)))
                  : apply_group_algebra(weyl, central_sum(t, n, k, Flavor::Short));
          if (!expect_equal(report,
                            "short-root specialization at level " + std::to_string(k) + " on " +
                                label.str(),
                            lhs_short, rhs_short))
            return report;
        }

        // T_{w_k0} at p = q = 1 equals the Weyl matrix of w_k0 (its square
        // for type A, where only T_{w_k0}^2 lives in the algebra).
        Matrix<Rational> lhs_w = eval_matrix(z, 1, 1);
        Matrix<Rational> rhs_w;
        if (t == GroupType::G2) {
          G2Elem w = k == 1 ? G2Elem::s1() : g2_longest_element();
          rhs_w = element_matrix(weyl, w);
        } else {
          Matrix<Rational> wm = element_matrix(weyl, level_longest(t, n, k));
          rhs_w = t == GroupType::A ? wm * wm : wm;
        }
        if (!expect_equal(report,
                          "longest-element specialization at level " + std::to_string(k) +
                              " on " + label.str(),
                          lhs_w, rhs_w))
          return report;
      } catch (const PoleError& e) {
        report.pass = false;
        report.witness =
            Witness{"pole during specialization at level " + std::to_string(k) + " on " +
                        label.str(),
                    e.what(), "exact division should cancel the pole"};
        return report;
      }
    }
  }
  return report;
}

CheckReport check_centrality(const HeckeRep& rep) {
  CheckReport report{"centrality", subject_of(rep), true, std::nullopt};
  if (rep.group == GroupType::D)
    throw InvalidLabel("centrality check covers types A, B, G2");
  int levels = rep.group == GroupType::G2 ? 2 : rep.n;
  for (int k = 1; k <= levels; ++k) {
    Matrix<RatFunc> z = central_matrix(rep, k);
    // Generators of the level-k subalgebra.
    std::size_t first = 0;
    std::size_t last = 0; // exclusive
    if (rep.group == GroupType::A) {
      last = static_cast<std::size_t>(std::max(0, k - 1));
    } else if (rep.group == GroupType::B) {
      last = static_cast<std::size_t>(k);
    } else {
      last = static_cast<std::size_t>(k);
    }
    for (std::size_t g = first; g < last && g < rep.gens.size(); ++g)
      if (!expect_equal(report,
                        "z_" + std::to_string(k) + " commutes with " + rep.gen_names[g],
                        z * rep.gens[g], rep.gens[g] * z))
        return report;

    // T_{w_k0}^2 acts by p^{2 c_s} q^{2 c_l} per branching block.
    Matrix<RatFunc> square = rep.group == GroupType::A ? z : z * z;
    std::vector<RatFunc> expected;
    if (rep.group == GroupType::G2) {
      for (const G2Path& path : rep.g2_basis) {
        if (k == 1) {
          expected.push_back(RatFunc::p_power(static_cast<int>(2 * g2_c1(path.level1))));
        } else {
          LevelConstants c = g2_level2_constants(path.label);
          expected.push_back(
              RatFunc::monomial(1, static_cast<int>(2 * c.c_s), static_cast<int>(2 * c.c_l)));
        }
      }
    } else {
      for (const StandardTableau& L : rep.basis) {
        LevelConstants c = tableau_weight(rep.group, L)[static_cast<std::size_t>(k - 1)];
        int ps = rep.group == GroupType::A ? 0 : static_cast<int>(2 * c.c_s);
        expected.push_back(RatFunc::monomial(1, ps, static_cast<int>(2 * c.c_l)));
      }
    }
    if (!expect_equal(report, "T_{w_k0}^2 eigenvalues at level " + std::to_string(k), square,
                      diagonal_matrix(expected)))
      return report;
  }
  return report;
}

CheckReport check_g2_character_table() {
  CheckReport report{"chartable", subject_of(GroupType::G2, 2), true, std::nullopt};
  std::vector<G2Elem> classes = {
      G2Elem::identity(),
      G2Elem::s1(),
      G2Elem::s2(),
      G2Elem::s1() * G2Elem::s2(),
      G2Elem::from_word({0, 1, 0, 1}),
      g2_longest_element(),
  };
  const long table[6][6] = {
      {1, 1, 1, 1, 1, 1},     {1, -1, -1, 1, 1, 1},  {1, 1, -1, -1, 1, -1},
      {1, -1, 1, -1, 1, -1},  {2, 0, 0, 1, -1, -2},  {2, 0, 0, -1, -1, 2},
  };
  for (int row = 0; row < 6; ++row) {
    WeylRep rep = build_weyl_rep(ShapeLabel::type_g2(kG2Labels[row]));
    for (int col = 0; col < 6; ++col) {
      Rational value = character(rep, classes[static_cast<std::size_t>(col)]);
      if (value != table[row][col]) {
        report.pass = false;
        report.witness = Witness{"character of " + g2_label_str(kG2Labels[row]) + " at class " +
                                     std::to_string(col),
                                 rational_str(value), std::to_string(table[row][col])};
        return report;
      }
    }
  }
  return report;
}

std::vector<CheckReport> run_suite(GroupType t, int n, const SuiteOptions& opts) {
  if (t == GroupType::G2) n = 2;
  if (t != GroupType::G2) {
    if (n > 20 || group_order(t, n) > static_cast<long long>(opts.group_cap))
      throw CapError("rank exceeds the verification cap");
  }
  auto wanted = [&](const std::string& name) {
    return opts.checks.empty() || opts.checks.contains(name);
  };
  std::vector<CheckReport> reports;
  std::vector<ShapeLabel> labels = enum_shapes(t, n);

  std::vector<WeylRep> weyl;
  std::vector<HeckeRep> hecke;
  for (const ShapeLabel& label : labels) {
    weyl.push_back(build_weyl_rep(label));
    hecke.push_back(build_hecke_rep(label));
  }

  if (wanted("relations")) {
    for (const WeylRep& rep : weyl) reports.push_back(check_relations(rep));
    for (const HeckeRep& rep : hecke) reports.push_back(check_relations(rep));
  }
  if (wanted("jm-spectra")) {
    for (const WeylRep& rep : weyl) reports.push_back(check_jm_spectra(rep));
    for (const HeckeRep& rep : hecke) reports.push_back(check_jm_spectra(rep));
  }
  if (wanted("completeness")) reports.push_back(check_completeness(t, n, opts.group_cap));
  if (wanted("branching") && t != GroupType::D && n >= 2)
    for (const WeylRep& rep : weyl) reports.push_back(check_branching(rep));
  if (wanted("weights")) reports.push_back(check_weight_separation(t, n));
  if (wanted("projectors") && t != GroupType::D)
    for (const WeylRep& rep : weyl) reports.push_back(check_projectors(rep));
  if (wanted("step2") && (t == GroupType::B || t == GroupType::G2))
    reports.push_back(check_step2_identities(t, n));
  if (wanted("specialize")) reports.push_back(check_specialization(t, n));
  if (wanted("prop28") && t != GroupType::D)
    reports.push_back(check_central_specialization(t, n));
  if (wanted("centrality") && t != GroupType::D)
    for (const HeckeRep& rep : hecke) reports.push_back(check_centrality(rep));
  if (wanted("chartable") && t == GroupType::G2) reports.push_back(check_g2_character_table());
  return reports;
}

} // namespace seminormal
