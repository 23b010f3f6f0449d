#include "seminormal/rep.hpp"
#include "seminormal/verify.hpp"

#include <doctest.h>

using namespace seminormal;

namespace {

Matrix<Rational> mat2(long a, long b, long c, long d, long den = 1) {
  Matrix<Rational> m(2, 2);
  m.at(0, 0) = Rational(a) / den;
  m.at(0, 1) = Rational(b) / den;
  m.at(1, 0) = Rational(c) / den;
  m.at(1, 1) = Rational(d) / den;
  return m;
}

WeylRep rep_a(const std::vector<int>& rows) {
  return build_weyl_rep(ShapeLabel::type_a(Partition(rows)));
}

WeylRep rep_b(const std::vector<int>& alpha, const std::vector<int>& beta) {
  return build_weyl_rep(
      ShapeLabel::type_b(Shape::double_shape(Partition(alpha), Partition(beta))));
}

} // namespace

TEST_CASE("type A seminormal matrices") {
  WeylRep triv = rep_a({4});
  CHECK(triv.dim() == 1);
  for (const auto& g : triv.gens) CHECK(g.at(0, 0) == 1);

  WeylRep sign = rep_a({1, 1, 1, 1});
  for (const auto& g : sign.gens) CHECK(g.at(0, 0) == -1);

  WeylRep std21 = rep_a({2, 1});
  REQUIRE(std21.dim() == 2);
  CHECK(std21.gens[0] == mat2(1, 0, 0, -1));       // s2
  CHECK(std21.gens[1] == mat2(-1, 3, 1, 1, 2));    // s3 = [[-1/2,3/2],[1/2,1/2]]

  // Braid relation as an oracle for the coefficients.
  const auto& s2 = std21.gens[0];
  const auto& s3 = std21.gens[1];
  CHECK(s2 * s3 * s2 == s3 * s2 * s3);
  CHECK((s3 * s3) == std21.identity_matrix());

  // Degenerate cases: empty shape and n = 1 give the trivial representation
  // of the trivial group.
  WeylRep empty = build_weyl_rep(ShapeLabel::type_a(Partition{}));
  CHECK(empty.dim() == 1);
  CHECK(empty.gens.empty());
  CHECK(rep_a({1}).dim() == 1);
}

TEST_CASE("type B seminormal matrices") {
  CHECK(rep_b({1}, {}).gens[0].at(0, 0) == 1);
  CHECK(rep_b({}, {1}).gens[0].at(0, 0) == -1);

  WeylRep r = rep_b({1}, {1});
  REQUIRE(r.dim() == 2);
  CHECK(r.gens[0] == mat2(1, 0, 0, -1));  // s1 by sgn(L(1))
  CHECK(r.gens[1] == mat2(0, 1, 1, 0));   // signs differ: zero diagonal
  const auto& s1 = r.gens[0];
  const auto& s2 = r.gens[1];
  CHECK(s1 * s2 * s1 * s2 == s2 * s1 * s2 * s1); // the length-4 braid of B2
}

TEST_CASE("type D construction") {
  // st_1 acts as the product s_1 s_2 s_1 of the ambient B matrices.
  for (const char* spec : {"(2)|(1)", "(1,1)|(1)", "(2,1)|(1)"}) {
    ShapeLabel d_label = ShapeLabel::parse(GroupType::D, spec);
    WeylRep d = build_weyl_rep(d_label);
    WeylRep b = build_weyl_rep(ShapeLabel::type_b(d_label.shape));
    CHECK(d.gens[0] == b.gens[0] * b.gens[1] * b.gens[0]);
    for (std::size_t i = 1; i < d.gens.size(); ++i) CHECK(d.gens[i] == b.gens[i]);
  }

  // Split labels have half the dimension of the full tableau set.
  ShapeLabel plus = ShapeLabel::parse(GroupType::D, "(2)|(2)+");
  ShapeLabel minus = ShapeLabel::parse(GroupType::D, "(2)|(2)-");
  int full = static_cast<int>(
      enum_standard_tableaux(Shape::double_shape(Partition({2}), Partition({2}))).size());
  CHECK(build_weyl_rep(plus).dim() == full / 2);
  CHECK(build_weyl_rep(minus).dim() == full / 2);

  // Sum of squared dimensions over all labels is |WD_4| = 192.
  long long sum = 0;
  for (const ShapeLabel& label : enum_shapes(GroupType::D, 4)) {
    int d = build_weyl_rep(label).dim();
    sum += static_cast<long long>(d) * d;
  }
  CHECK(sum == 192);

  // (alpha, beta) and (beta, alpha) have equal characters on all of WD_3.
  ShapeLabel ab = ShapeLabel::parse(GroupType::D, "(2)|(1)");
  ShapeLabel ba = ShapeLabel::type_d(Shape::double_shape(Partition({1}), Partition({2})));
  WeylRep rep_ab = build_weyl_rep(ab);
  WeylRep rep_ba = build_weyl_rep(ba);
  for (const SignedPerm& w : cached_group_data(GroupType::D, 3).elements)
    CHECK(character(rep_ab, w) == character(rep_ba, w));
}

TEST_CASE("G2 printed matrices and characters") {
  WeylRep phi21 = build_weyl_rep(ShapeLabel::type_g2(G2Label::phi_2_1));
  CHECK(phi21.gens[0] == mat2(1, 0, 0, -1));
  CHECK(phi21.gens[1] == mat2(1, 1, 3, -1, 2)); // [[1/2,1/2],[3/2,-1/2]]

  WeylRep phi22 = build_weyl_rep(ShapeLabel::type_g2(G2Label::phi_2_2));
  CHECK(phi22.gens[0] == mat2(1, 0, 0, -1));
  CHECK(phi22.gens[1] == mat2(-1, 3, 1, 1, 2));

  WeylRep phi10 = build_weyl_rep(ShapeLabel::type_g2(G2Label::phi_1_0));
  CHECK(phi10.gens[0].at(0, 0) == 1);
  CHECK(phi10.gens[1].at(0, 0) == 1);

  CHECK(character(phi21, G2Elem::s1() * G2Elem::s2()) == 1);
  CHECK(character(phi21, G2Elem::identity()) == 2);
  CHECK(check_g2_character_table().pass);
}

TEST_CASE("characters") {
  WeylRep std21 = rep_a({2, 1});
  CHECK(character(std21, SignedPerm::identity(3)) == 2);
  CHECK(character(std21, sp_transposition(3, 1, 2)) == 0);
}

TEST_CASE("apply_group_algebra") {
  WeylRep r = rep_b({2}, {});
  Algebra<SignedPerm> id = alg_single(SignedPerm::identity(2));
  CHECK(apply_group_algebra(r, id) == r.identity_matrix());

  // m_{2,l} = (1,2) + (1,-2)(-1,2) acts as 2 ct(L(2)) = 2 on the trivial shape.
  Matrix<Rational> m2l = apply_group_algebra(r, jm_element(GroupType::B, 2, 2, Flavor::Long));
  CHECK(m2l.at(0, 0) == 2);

  // Type A JM elements act diagonally by contents.
  WeylRep std21 = rep_a({2, 1});
  Matrix<Rational> m3 = apply_group_algebra(std21, jm_element(GroupType::A, 3, 3, Flavor::Long));
  CHECK(m3 == [&] {
    Matrix<Rational> d(2, 2);
    d.at(0, 0) = -1; // canonical first tableau has 3 in row 2
    d.at(1, 1) = 1;
    return d;
  }());
}

TEST_CASE("sigma equivariance of the (alpha,alpha) matrices") {
  Shape saa = Shape::double_shape(Partition({2}), Partition({2}));
  ShapeLabel label = ShapeLabel::type_d(saa, +1);
  // Build the unsplit matrices via the B shape and conjugate by sigma.
  auto basis = enum_standard_tableaux(saa);
  WeylRep d_full = build_weyl_rep(ShapeLabel::type_b(saa)); // same tableau basis
  int dim = static_cast<int>(basis.size());
  Matrix<Rational> perm(dim, dim);
  for (int j = 0; j < dim; ++j)
    perm.at(basis_index(basis, basis[static_cast<std::size_t>(j)].sigma()), j) = 1;
  for (std::size_t g = 1; g < d_full.gens.size(); ++g) // s_i, i >= 2 restrict to WD
    CHECK(perm * d_full.gens[g] * perm == d_full.gens[g]);
}
