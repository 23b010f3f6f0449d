#pragma once

#include "seminormal/labels.hpp"
#include "seminormal/partition.hpp"

#include <optional>
#include <vector>

namespace seminormal {

/// Standard filling of a single or double Ferrers shape, stored as the growth
/// path: box_of(k) is the box added at step k, 1 <= k <= n. The filling is
/// standard iff every prefix is a shape, which enumeration guarantees.
class StandardTableau {
public:
  StandardTableau(Shape shape, std::vector<Box> boxes);

  const Shape& shape() const { return shape_; }
  int size() const { return static_cast<int>(boxes_.size()); }

  const Box& box_of(int k) const; ///< 1-based entry
  int content(int k) const { return box_of(k).content(); }
  int sign(int k) const { return box_of(k).sign(); }
  int entry_at(const Box& b) const; ///< inverse lookup

  /// Shape spanned by entries 1..k.
  Shape level_shape(int k) const;

  /// Row fillings of the requested component.
  std::vector<std::vector<int>> rows(Component c) const;

  /// Positions of i-1 and i exchanged when the result is standard.
  std::optional<StandardTableau> adjacent_swap(int i) const;

  /// Component swap (L^alpha, L^beta) -> (L^beta, L^alpha); double shapes only.
  StandardTableau sigma() const;

  /// Lexicographic key (component, row, col) of the boxes of 1..n.
  const std::vector<Box>& boxes() const { return boxes_; }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
    return a.boxes_ < b.boxes_;
  }

private:
  Shape shape_;
  std::vector<Box> boxes_;
};

/// All standard tableaux of the shape in canonical order (lex on box paths).
std::vector<StandardTableau> enum_standard_tableaux(const Shape& shape);

/// Position of L in the canonical order of its shape.
int canonical_index(const StandardTableau& L);

std::vector<int> contents_vector(const StandardTableau& L);
std::vector<int> signs_vector(const StandardTableau& L);
/// Type D reduced weight: (sgn(L(1))sgn(L(1)), ..., sgn(L(1))sgn(L(n))).
std::vector<int> dsign_vector(const StandardTableau& L);

/// Central-element eigenvalues of one level. Type A populates only c_l.
struct LevelConstants {
  long c_s = 0;
  long c_l = 0;
  long c_0 = 1;
  friend bool operator==(const LevelConstants&, const LevelConstants&) = default;
  friend auto operator<=>(const LevelConstants&, const LevelConstants&) = default;
};

/// weight_constants: the (c_s, c_l, c_0) tuple of a shape.
///  - A: c_l = sum of contents (c_s, c_0 unused),
///  - B: c_s = sum of signs, c_l = 2 * sum of contents, c_0 = product of signs.
/// Throws InvalidLabel for other group types (G2 constants are tabulated in
/// g2_level_constants).
LevelConstants weight_constants(GroupType t, const Shape& shape);

/// tableau_weight: per-level constants along the growth path.
std::vector<LevelConstants> tableau_weight(GroupType t, const StandardTableau& L);

} // namespace seminormal
