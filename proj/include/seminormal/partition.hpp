#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace seminormal {

/// Integer partition identified with its Ferrers diagram; rows are weakly
/// decreasing positive integers. The empty partition is allowed.
struct Partition {
  std::vector<int> rows;

  Partition() = default;
  explicit Partition(std::vector<int> r);

  int size() const;
  int num_rows() const { return static_cast<int>(rows.size()); }
  int row(int i) const { return i < num_rows() ? rows[static_cast<std::size_t>(i)] : 0; }
  bool empty() const { return rows.empty(); }
  bool contains(int r, int c) const { return r >= 0 && c >= 0 && c < row(r); }

  /// Positions (r, c), 0-based, where a box may be appended keeping a partition.
  std::vector<std::pair<int, int>> addable() const;
  /// Positions of removable corner boxes.
  std::vector<std::pair<int, int>> removable() const;

  Partition with_box(int r) const;    ///< one more box at the end of row r
  Partition without_box(int r) const; ///< one fewer box at the end of row r

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Total order: by size, then lexicographically on rows.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

  std::string str() const; ///< "2,1"; empty partition is ""
};

/// All partitions of n in descending lex order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// Parses "2,1" (or "" for the empty partition); throws InvalidLabel when the
/// entries are not weakly decreasing positive integers.
Partition parse_partition(std::string_view text);

enum class Component { first, second };

/// Box in a single or double Ferrers diagram, 0-based row and column.
struct Box {
  Component comp = Component::first;
  int row = 0;
  int col = 0;

  int content() const { return col - row; }
  int sign() const { return comp == Component::first ? 1 : -1; }

  friend bool operator==(const Box&, const Box&) = default;
  friend std::strong_ordering operator<=>(const Box&, const Box&) = default;
};

/// Single partition shape or an ordered double partition (alpha, beta).
struct Shape {
  bool is_double = false;
  Partition alpha;
  Partition beta; // empty and unused for single shapes

  static Shape single(Partition p) { return Shape{false, std::move(p), {}}; }
  static Shape double_shape(Partition a, Partition b) {
    return Shape{true, std::move(a), std::move(b)};
  }

  int size() const { return alpha.size() + beta.size(); }
  const Partition& part(Component c) const {
    return c == Component::first ? alpha : beta;
  }
  bool contains(const Box& b) const {
    if (!is_double && b.comp == Component::second) return false;
    return part(b.comp).contains(b.row, b.col);
  }
  Shape with_box(const Box& b) const;
  Shape without_box(const Box& b) const;
  std::vector<Box> addable_boxes() const;
  std::vector<Box> boxes() const; ///< row-major, alpha then beta

  friend bool operator==(const Shape&, const Shape&) = default;
  friend std::strong_ordering operator<=>(const Shape&, const Shape&) = default;

  std::string str() const; ///< "2,1" or "(2,1)|(1)"
};

} // namespace seminormal
