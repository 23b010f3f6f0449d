#include "seminormal/errors.hpp"
#include "seminormal/labels.hpp"
#include "seminormal/tableau.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace seminormal;

namespace {

// Independent oracle: the hook length formula for a single partition.
long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long hook_count(const Partition& p) {
  std::vector<int> conj(static_cast<std::size_t>(p.row(0)), 0);
  for (int r = 0; r < p.num_rows(); ++r)
    for (int c = 0; c < p.row(r); ++c) conj[static_cast<std::size_t>(c)]++;
  long long hooks = 1;
  for (int r = 0; r < p.num_rows(); ++r)
    for (int c = 0; c < p.row(r); ++c) {
      int arm = p.row(r) - c - 1;
      int leg = conj[static_cast<std::size_t>(c)] - r - 1;
      hooks *= arm + leg + 1;
    }
  return factorial(p.size()) / hooks;
}

// Independent oracle: all double partitions of n by direct size splitting.
int count_double_partitions(int n) {
  int count = 0;
  for (int a = 0; a <= n; ++a)
    count += static_cast<int>(partitions_of(a).size() * partitions_of(n - a).size());
  return count;
}

StandardTableau from_rows(const Shape& shape, const std::vector<std::vector<int>>& alpha,
                          const std::vector<std::vector<int>>& beta = {}) {
  std::vector<Box> boxes(static_cast<std::size_t>(shape.size()),
                         Box{Component::first, 0, 0});
  for (std::size_t r = 0; r < alpha.size(); ++r)
    for (std::size_t c = 0; c < alpha[r].size(); ++c)
      boxes[static_cast<std::size_t>(alpha[r][c] - 1)] =
          Box{Component::first, static_cast<int>(r), static_cast<int>(c)};
  for (std::size_t r = 0; r < beta.size(); ++r)
    for (std::size_t c = 0; c < beta[r].size(); ++c)
      boxes[static_cast<std::size_t>(beta[r][c] - 1)] =
          Box{Component::second, static_cast<int>(r), static_cast<int>(c)};
  return StandardTableau(shape, boxes);
}

} // namespace

TEST_CASE("partition basics") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0).size() == 1);
  CHECK(parse_partition("3,2").rows == std::vector<int>{3, 2});
  CHECK_THROWS_AS(parse_partition("1,2"), InvalidLabel);
  CHECK_THROWS_AS(parse_partition("0"), InvalidLabel);
  CHECK(Partition({3, 1}).str() == "3,1");
  // Descending lex order: (3) first.
  CHECK(partitions_of(3).front().rows == std::vector<int>{3});
  CHECK(partitions_of(3).back().rows == std::vector<int>{1, 1, 1});
}

TEST_CASE("enum_shapes per type") {
  auto a3 = enum_shapes(GroupType::A, 3);
  REQUIRE(a3.size() == 3);
  CHECK(a3[0].str() == "3");
  CHECK(a3[1].str() == "2,1");
  CHECK(a3[2].str() == "1,1,1");

  auto b2 = enum_shapes(GroupType::B, 2);
  CHECK(b2.size() == 5);
  CHECK(b2.size() == static_cast<std::size_t>(count_double_partitions(2)));

  auto g2 = enum_shapes(GroupType::G2, 2);
  REQUIRE(g2.size() == 6);
  CHECK(g2[0].str() == "phi_1_0");
  CHECK(g2[5].str() == "phi_2_2");

  // D: unordered pairs with alpha != beta, plus split labels for alpha = beta.
  auto d4 = enum_shapes(GroupType::D, 4);
  CHECK(d4.size() == 13);
  int splits = 0;
  for (const ShapeLabel& l : d4) {
    if (l.split != 0) {
      ++splits;
      CHECK(l.shape.alpha == l.shape.beta);
    } else {
      CHECK(l.shape.alpha != l.shape.beta);
    }
  }
  CHECK(splits == 4);

  auto d2 = enum_shapes(GroupType::D, 2);
  CHECK(d2.size() == 4);
}

TEST_CASE("standard tableau enumeration counts against the hook oracle") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) {
      auto tabs = enum_standard_tableaux(Shape::single(p));
      CHECK(static_cast<long long>(tabs.size()) == hook_count(p));
    }
  // Frozen value for the paper's running example shape.
  CHECK(enum_standard_tableaux(Shape::single(Partition({3, 3, 2}))).size() == 42);
  CHECK(hook_count(Partition({3, 3, 2})) == 42);
}

TEST_CASE("enumeration examples") {
  CHECK(enum_standard_tableaux(Shape::single(Partition({5}))).size() == 1);
  CHECK(enum_standard_tableaux(Shape::single(Partition({2, 1}))).size() == 2);
  CHECK(enum_standard_tableaux(Shape::double_shape(Partition({1}), Partition({1}))).size() == 2);
  CHECK(enum_standard_tableaux(Shape::double_shape({}, {})).size() == 1); // empty shape

  // The standard tableau of Figure (3.2) belongs to L((3,3,2)).
  Shape s332 = Shape::single(Partition({3, 3, 2}));
  StandardTableau fig32 = from_rows(s332, {{1, 2, 4}, {3, 5, 6}, {7, 8}});
  auto all = enum_standard_tableaux(s332);
  CHECK(std::find(all.begin(), all.end(), fig32) != all.end());
  // Entry 4 sits in row 1, column 3: content 2.
  CHECK(fig32.content(4) == 2);
  CHECK(fig32.content(1) == 0);
}

TEST_CASE("box stats and signs") {
  Shape s = Shape::double_shape(Partition({2}), Partition({1, 1}));
  for (const StandardTableau& L : enum_standard_tableaux(s))
    for (int k = 1; k <= 4; ++k) {
      CHECK(L.sign(k) == (L.box_of(k).comp == Component::first ? 1 : -1));
      CHECK(L.content(k) == L.box_of(k).col - L.box_of(k).row);
    }
  CHECK_THROWS_AS(enum_standard_tableaux(s).front().box_of(5), std::out_of_range);
}

TEST_CASE("weight constants") {
  for (int k = 1; k <= 6; ++k) {
    LevelConstants a = weight_constants(GroupType::A, Shape::single(Partition({k})));
    CHECK(a.c_l == k * (k - 1) / 2);
    LevelConstants b = weight_constants(GroupType::B, Shape::double_shape(Partition({k}), {}));
    CHECK(b.c_s == k);
    CHECK(b.c_l == k * (k - 1));
    CHECK(b.c_0 == 1);
  }
  LevelConstants mixed =
      weight_constants(GroupType::B, Shape::double_shape(Partition({1}), Partition({1})));
  CHECK(mixed.c_s == 0);
  CHECK(mixed.c_l == 0);
  CHECK(mixed.c_0 == -1);
}

TEST_CASE("adjacent swaps") {
  Shape s21 = Shape::single(Partition({2, 1}));
  StandardTableau L = from_rows(s21, {{1, 2}, {3}});
  CHECK(!L.adjacent_swap(2)); // 1 and 2 share a row
  auto M = L.adjacent_swap(3);
  REQUIRE(M);
  CHECK(*M == from_rows(s21, {{1, 3}, {2}}));
  auto back = M->adjacent_swap(3);
  REQUIRE(back);
  CHECK(*back == L);
  CHECK_THROWS_AS(L.adjacent_swap(4), std::out_of_range);
}

TEST_CASE("sigma involution") {
  Shape s = Shape::double_shape(Partition({2}), Partition({1}));
  for (const StandardTableau& L : enum_standard_tableaux(s)) {
    StandardTableau sL = L.sigma();
    CHECK(sL.shape() == Shape::double_shape(Partition({1}), Partition({2})));
    CHECK(sL.sigma() == L);
    for (int k = 1; k <= 3; ++k) CHECK(sL.sign(k) == -L.sign(k));
  }
  // On (alpha, alpha) shapes sigma has no fixed points.
  Shape saa = Shape::double_shape(Partition({2}), Partition({2}));
  for (const StandardTableau& L : enum_standard_tableaux(saa)) CHECK(!(L.sigma() == L));
  CHECK_THROWS_AS(enum_standard_tableaux(Shape::single(Partition({2}))).front().sigma(),
                  InvalidLabel);
}

TEST_CASE("tableau weights") {
  Shape s21 = Shape::single(Partition({2, 1}));
  StandardTableau L = from_rows(s21, {{1, 2}, {3}});
  CHECK(contents_vector(L) == std::vector<int>{0, 1, -1});
  StandardTableau row = from_rows(Shape::single(Partition({4})), {{1, 2, 3, 4}});
  CHECK(contents_vector(row) == std::vector<int>{0, 1, 2, 3});

  // Relative sign vector is sigma invariant.
  Shape s = Shape::double_shape(Partition({2, 1}), Partition({2}));
  for (const StandardTableau& T : enum_standard_tableaux(s))
    CHECK(dsign_vector(T.sigma()) == dsign_vector(T));

  // Per-level constants match weight_constants of the level shapes.
  for (const StandardTableau& T : enum_standard_tableaux(s)) {
    auto weights = tableau_weight(GroupType::B, T);
    for (int k = 1; k <= T.size(); ++k)
      CHECK(weights[static_cast<std::size_t>(k - 1)] ==
            weight_constants(GroupType::B, T.level_shape(k)));
  }
}

TEST_CASE("canonical order and index") {
  Shape s21 = Shape::single(Partition({2, 1}));
  auto tabs = enum_standard_tableaux(s21);
  REQUIRE(tabs.size() == 2);
  CHECK(tabs[0] == from_rows(s21, {{1, 2}, {3}}));
  CHECK(tabs[1] == from_rows(s21, {{1, 3}, {2}}));
  CHECK(canonical_index(tabs[0]) == 0);
  CHECK(canonical_index(tabs[1]) == 1);

  CHECK(canonical_index(from_rows(Shape::single(Partition({3})), {{1, 2, 3}})) == 0);

  // Indices form a bijection onto 0..d-1.
  Shape big = Shape::double_shape(Partition({2}), Partition({1, 1}));
  auto all = enum_standard_tableaux(big);
  std::set<int> indices;
  for (const StandardTableau& L : all) indices.insert(canonical_index(L));
  CHECK(indices.size() == all.size());
  CHECK(*indices.begin() == 0);
  CHECK(*indices.rbegin() == static_cast<int>(all.size()) - 1);
}

TEST_CASE("consecutive entries in one component never share a diagonal") {
  for (int n = 1; n <= 5; ++n)
    for (int a = 0; a <= n; ++a)
      for (const Partition& alpha : partitions_of(a))
        for (const Partition& beta : partitions_of(n - a)) {
          Shape s = Shape::double_shape(alpha, beta);
          for (const StandardTableau& L : enum_standard_tableaux(s))
            for (int k = 2; k <= n; ++k)
              if (L.sign(k) == L.sign(k - 1)) CHECK(L.content(k) != L.content(k - 1));
        }
}

TEST_CASE("shape label parsing") {
  CHECK(ShapeLabel::parse(GroupType::A, "3,1").str() == "3,1");
  CHECK(ShapeLabel::parse(GroupType::B, "(2,1)|(1)").str() == "(2,1)|(1)");
  CHECK(ShapeLabel::parse(GroupType::B, "(3)|()").shape.beta.empty());
  CHECK(ShapeLabel::parse(GroupType::D, "(2)|(2)+").split == 1);
  CHECK(ShapeLabel::parse(GroupType::D, "(2)|(2)-").split == -1);
  CHECK(ShapeLabel::parse(GroupType::G2, "phi_2_1").g2 == G2Label::phi_2_1);
  CHECK_THROWS_AS(ShapeLabel::parse(GroupType::A, "1,2"), InvalidLabel);
  CHECK_THROWS_AS(ShapeLabel::parse(GroupType::D, "(2)|(2)"), InvalidLabel);
  CHECK_THROWS_AS(ShapeLabel::parse(GroupType::D, "(2)|(1)+"), InvalidLabel);
  CHECK_THROWS_AS(ShapeLabel::parse(GroupType::G2, "phi_9_9"), InvalidLabel);
  CHECK_THROWS_AS(ShapeLabel::parse(GroupType::B, "2,1"), InvalidLabel);
}
