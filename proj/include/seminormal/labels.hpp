#pragma once

#include "seminormal/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace seminormal {

enum class GroupType { A, B, D, G2 };

std::string group_type_str(GroupType t);
GroupType parse_group_type(std::string_view s);

/// Labels of the six irreducible WG_2 / HG_2 modules.
enum class G2Label { phi_1_0, phi_1_6, phi_1_3p, phi_1_3pp, phi_2_1, phi_2_2 };

inline constexpr G2Label kG2Labels[] = {G2Label::phi_1_0, G2Label::phi_1_6,
                                        G2Label::phi_1_3p, G2Label::phi_1_3pp,
                                        G2Label::phi_2_1, G2Label::phi_2_2};

std::string g2_label_str(G2Label l);
G2Label parse_g2_label(std::string_view s);

/// Label of an irreducible module:
///  - type A: a single partition,
///  - type B: an ordered double partition,
///  - type D: a double partition with alpha != beta, or (alpha, alpha) with a
///    split sign +1/-1,
///  - type G2: one of the six phi labels.
struct ShapeLabel {
  GroupType group = GroupType::A;
  Shape shape;
  int split = 0; // type D only: +1 / -1 on (alpha, alpha) labels
  G2Label g2 = G2Label::phi_1_0;

  static ShapeLabel type_a(Partition p);
  static ShapeLabel type_b(Shape s);
  static ShapeLabel type_d(Shape s, int split = 0);
  static ShapeLabel type_g2(G2Label l);

  int size() const; ///< n (2 for G2)

  friend bool operator==(const ShapeLabel&, const ShapeLabel&) = default;

  std::string str() const; ///< "2,1", "(2,1)|(1)", "(2)|(2)+", "phi_2_1"
  /// Parses the CLI shape grammar for the given group type. Throws InvalidLabel.
  static ShapeLabel parse(GroupType t, std::string_view text);

  /// Validates against the group type (weak decrease, split usage, and for D
  /// without split that alpha != beta). Throws InvalidLabel.
  void validate() const;
};

/// Complete label list for rank n, in canonical order. For G2, n is ignored.
std::vector<ShapeLabel> enum_shapes(GroupType t, int n);

} // namespace seminormal
