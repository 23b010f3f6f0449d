#include "seminormal/hecke.hpp"
#include "seminormal/verify.hpp"

#include <doctest.h>

using namespace seminormal;

namespace {

RatFunc rf(const char* text) { return RatFunc::parse(text); }

HeckeRep hecke_a(const std::vector<int>& rows) {
  return build_hecke_rep(ShapeLabel::type_a(Partition(rows)));
}

HeckeRep hecke_b(const std::vector<int>& alpha, const std::vector<int>& beta) {
  return build_hecke_rep(
      ShapeLabel::type_b(Shape::double_shape(Partition(alpha), Partition(beta))));
}

} // namespace

TEST_CASE("type A Hecke matrices") {
  HeckeRep triv = hecke_a({3});
  for (const auto& g : triv.gens) CHECK(g.at(0, 0) == rf("q"));

  HeckeRep sign = hecke_a({1, 1, 1});
  for (const auto& g : sign.gens) CHECK(g.at(0, 0) == rf("-q^-1"));

  // Both eigenvalues satisfy the quadratic relation T^2 = (q - q^-1) T + 1.
  for (const RatFunc& eigen : {rf("q"), rf("-q^-1")})
    CHECK(eigen * eigen == (rf("q") - rf("q^-1")) * eigen + rf("1"));

  HeckeRep std21 = hecke_a({2, 1});
  const auto& t2 = std21.gens[0];
  const auto& t3 = std21.gens[1];
  CHECK(t2.at(0, 0) == rf("q"));
  CHECK(t2.at(1, 1) == rf("-q^-1"));
  CHECK(t2.at(0, 1).is_zero());
  CHECK(t3 * t2 * t3 == t2 * t3 * t2);
}

TEST_CASE("type B Hecke matrices") {
  CHECK(hecke_b({1}, {}).gens[0].at(0, 0) == rf("p"));
  CHECK(hecke_b({}, {1}).gens[0].at(0, 0) == rf("-p^-1"));

  HeckeRep r = hecke_b({1}, {1});
  // (T_2)_{L1,L1} = (q - q^-1)/(1 + p^2) where L1 has entry 1 in alpha.
  CHECK(r.gens[1].at(0, 0) == (rf("q") - rf("q^-1")) / (rf("1") + rf("p^2")));
  // T_1 carries the Hoefsmit contents on the diagonal.
  CHECK(r.gens[0].at(0, 0) == rf("p"));
  CHECK(r.gens[0].at(1, 1) == rf("-p^-1"));
  // Length-4 braid relation.
  const auto& t1 = r.gens[0];
  const auto& t2 = r.gens[1];
  CHECK(t1 * t2 * t1 * t2 == t2 * t1 * t2 * t1);
  // Quadratic relations with the correct parameters.
  CHECK(t1 * t1 == t1.scaled(rf("p") - rf("p^-1")) + r.identity_matrix());
  CHECK(t2 * t2 == t2.scaled(rf("q") - rf("q^-1")) + r.identity_matrix());
}

TEST_CASE("Murphy element matrices") {
  // A: M_2 = T_2^2 has eigenvalues q^2 and q^-2 on the shapes (2) and (1,1).
  CHECK(murphy_matrix(hecke_a({2}), 2).at(0, 0) == rf("q^2"));
  CHECK(murphy_matrix(hecke_a({1, 1}), 2).at(0, 0) == rf("q^-2"));

  // B: M_1 = T_1 with eigenvalues sgn p^sgn.
  HeckeRep r = hecke_b({1}, {1});
  CHECK(murphy_matrix(r, 1) == r.gens[0]);

  // Murphy matrices are diagonal and pairwise commute.
  HeckeRep r2 = hecke_b({2}, {1});
  for (int k = 1; k <= 3; ++k) CHECK(murphy_matrix(r2, k).is_diagonal());

  // D: Mt_k equals M_k M_1 inside HB_n(1, q^2).
  Shape shape = Shape::double_shape(Partition({2}), Partition({1}));
  ShapeLabel d_label = ShapeLabel::type_d(shape);
  HeckeRep d = build_hecke_rep(d_label);
  auto b_p1 = hecke_b_matrices_p1(enum_standard_tableaux(shape));
  auto word = [&](std::initializer_list<int> gens) {
    Matrix<RatFunc> acc = d.identity_matrix();
    for (int g : gens) acc = acc * b_p1[static_cast<std::size_t>(g)];
    return acc;
  };
  CHECK(murphy_matrix(d, 2) == word({1, 0, 1, 0}));          // M_2 M_1
  CHECK(murphy_matrix(d, 3) == word({2, 1, 0, 1, 2, 0}));    // M_3 M_1
  // Tt_1 = T_1 T_2 T_1 as matrices over HB_n(1, q^2).
  CHECK(d.gens[0] == word({0, 1, 0}));
}

TEST_CASE("central element matrices") {
  // A, trivial shape: z_n = q^{n(n-1)}.
  for (int n = 2; n <= 4; ++n) {
    HeckeRep triv = build_hecke_rep(ShapeLabel::type_a(Partition({n})));
    CHECK(central_matrix(triv, n).at(0, 0) == RatFunc::q_power(n * (n - 1)));
  }

  // B: z_k eigenvalue = prod_{i<=k} CT(L(i)).
  HeckeRep r = hecke_b({1}, {1});
  Matrix<RatFunc> z2 = central_matrix(r, 2);
  CHECK(z2.is_diagonal());
  for (int j = 0; j < r.dim(); ++j) {
    RatFunc expected = hecke_content(GroupType::B, r.basis[static_cast<std::size_t>(j)], 1) *
                       hecke_content(GroupType::B, r.basis[static_cast<std::size_t>(j)], 2);
    CHECK(z2.at(j, j) == expected);
  }

  // G2: z_2 = p^3 q^3 on the trivial module.
  HeckeRep g2 = build_hecke_rep(ShapeLabel::type_g2(G2Label::phi_1_0));
  CHECK(central_matrix(g2, 2).at(0, 0) == rf("p^3*q^3"));
}

TEST_CASE("G2 Hecke printed matrices") {
  HeckeRep phi21 = build_hecke_rep(ShapeLabel::type_g2(G2Label::phi_2_1));
  RatFunc p = rf("p"), q = rf("q");
  RatFunc a = (rf("1") + rf("p^-1") * (q - rf("q^-1"))) / (p + rf("p^-1"));
  CHECK(phi21.gens[0].at(0, 0) == p);
  CHECK(phi21.gens[0].at(1, 1) == rf("-p^-1"));
  CHECK(phi21.gens[1].at(0, 0) == a);
  CHECK(phi21.gens[1].at(0, 1) == q - a);
  CHECK(phi21.gens[1].at(1, 0) == rf("q^-1") + a);
  CHECK(phi21.gens[1].at(1, 1) == (q - rf("q^-1")) - a);
  CHECK(a.eval(1, 1) == Rational(1) / 2);

  HeckeRep phi10 = build_hecke_rep(ShapeLabel::type_g2(G2Label::phi_1_0));
  CHECK(phi10.gens[0].at(0, 0) == p);
  CHECK(phi10.gens[1].at(0, 0) == q);

  // Braid relation of length six.
  const auto& t1 = phi21.gens[0];
  const auto& t2 = phi21.gens[1];
  CHECK(t1 * t2 * t1 * t2 * t1 * t2 == t2 * t1 * t2 * t1 * t2 * t1);
}

TEST_CASE("specialization at p = q = 1") {
  // A (2,1) specializes to the Weyl matrices.
  WeylRep w = specialize_rep(hecke_a({2, 1}), 1, 1);
  WeylRep expected = build_weyl_rep(ShapeLabel::type_a(Partition({2, 1})));
  CHECK(w.gens == expected.gens);

  CHECK(specialize_rep(hecke_b({1}, {}), 1, 1).gens[0].at(0, 0) == 1);

  // Thm 6.11 matrices at p = q = 1 give the Thm 6.7 matrices.
  for (G2Label l : kG2Labels) {
    WeylRep s = specialize_rep(build_hecke_rep(ShapeLabel::type_g2(l)), 1, 1);
    CHECK(s.gens == build_weyl_rep(ShapeLabel::type_g2(l)).gens);
  }

  // D at q = 1 reproduces the Weyl D matrices (p is absent).
  for (const ShapeLabel& label : enum_shapes(GroupType::D, 3)) {
    WeylRep s = specialize_rep(build_hecke_rep(label), 1, 1);
    CHECK(s.gens == build_weyl_rep(label).gens);
  }

  // A pole: q = 0 hits the q^-1 entries.
  CHECK_THROWS_AS(specialize_rep(hecke_a({1, 1}), 1, 0), PoleError);
}

TEST_CASE("D-type relations through the embedding") {
  // The Tt matrices satisfy the D presentation inside HB_n(1, q^2).
  for (const ShapeLabel& label : enum_shapes(GroupType::D, 3)) {
    HeckeRep rep = build_hecke_rep(label);
    CHECK(check_relations(rep).pass);
  }
  // Traces of Tt words agree for (alpha,beta) and (beta,alpha).
  HeckeRep ab = build_hecke_rep(ShapeLabel::parse(GroupType::D, "(2)|(1)"));
  HeckeRep ba =
      build_hecke_rep(ShapeLabel::type_d(Shape::double_shape(Partition({1}), Partition({2}))));
  std::vector<std::vector<int>> words = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2},
                                         {2, 1, 0}, {0, 1, 2, 1}, {1, 2, 1}, {0, 2, 0}};
  for (const auto& word : words)
    CHECK(ab.word_matrix(word).trace() == ba.word_matrix(word).trace());
}
