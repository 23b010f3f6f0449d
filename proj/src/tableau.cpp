#include "seminormal/tableau.hpp"

#include "seminormal/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace seminormal {

StandardTableau::StandardTableau(Shape shape, std::vector<Box> boxes)
    : shape_(std::move(shape)), boxes_(std::move(boxes)) {}

const Box& StandardTableau::box_of(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("tableau entry out of range");
  return boxes_[static_cast<std::size_t>(k - 1)];
}

int StandardTableau::entry_at(const Box& b) const {
  for (int k = 1; k <= size(); ++k)
    if (boxes_[static_cast<std::size_t>(k - 1)] == b) return k;
  throw std::out_of_range("box not in tableau");
}

Shape StandardTableau::level_shape(int k) const {
  Shape s;
  s.is_double = shape_.is_double;
  for (int i = 1; i <= k; ++i) s = s.with_box(box_of(i));
  return s;
}

std::vector<std::vector<int>> StandardTableau::rows(Component c) const {
  const Partition& part = shape_.part(c);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(part.num_rows()));
  for (int r = 0; r < part.num_rows(); ++r)
    out[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(part.row(r)));
  for (int k = 1; k <= size(); ++k) {
    const Box& b = box_of(k);
    if (b.comp == c) out[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] = k;
  }
  return out;
}

namespace {

// A filling is standard iff each entry's box has its left and up neighbours
// (within the same component) filled with smaller entries; with the path
// encoding this is: every prefix of boxes forms a valid shape.
bool path_is_standard(const Shape& shape, const std::vector<Box>& boxes) {
  Shape acc;
  acc.is_double = shape.is_double;
  for (const Box& b : boxes) {
    const Partition& part = acc.part(b.comp);
    if (b.col != part.row(b.row)) return false;
    if (b.row > 0 && part.row(b.row - 1) <= b.col) return false;
    acc = acc.with_box(b);
  }
  return acc == shape;
}

void gen_tableaux(const Shape& target, Shape& acc, std::vector<Box>& path,
                  std::vector<StandardTableau>& out) {
  if (static_cast<int>(path.size()) == target.size()) {
    out.emplace_back(target, path);
    return;
  }
  for (const Box& b : acc.addable_boxes()) {
    if (!target.contains(b)) continue;
    Shape next = acc.with_box(b);
    path.push_back(b);
    gen_tableaux(target, next, path, out);
    path.pop_back();
  }
}

} // namespace

std::vector<StandardTableau> enum_standard_tableaux(const Shape& shape) {
  std::vector<StandardTableau> out;
  Shape acc;
  acc.is_double = shape.is_double;
  std::vector<Box> path;
  gen_tableaux(shape, acc, path, out);
  std::sort(out.begin(), out.end());
  return out;
}

int canonical_index(const StandardTableau& L) {
  std::vector<StandardTableau> all = enum_standard_tableaux(L.shape());
  auto it = std::lower_bound(all.begin(), all.end(), L);
  if (it == all.end() || !(*it == L)) throw std::logic_error("tableau not standard");
  return static_cast<int>(it - all.begin());
}

std::optional<StandardTableau> StandardTableau::adjacent_swap(int i) const {
  if (i < 2 || i > size()) throw std::out_of_range("swap index out of range");
  std::vector<Box> swapped = boxes_;
  std::swap(swapped[static_cast<std::size_t>(i - 2)], swapped[static_cast<std::size_t>(i - 1)]);
  if (!path_is_standard(shape_, swapped)) return std::nullopt;
  return StandardTableau(shape_, std::move(swapped));
}

StandardTableau StandardTableau::sigma() const {
  if (!shape_.is_double) throw InvalidLabel("sigma applies to double shapes only");
  Shape flipped = Shape::double_shape(shape_.beta, shape_.alpha);
  std::vector<Box> boxes = boxes_;
  for (Box& b : boxes)
    b.comp = b.comp == Component::first ? Component::second : Component::first;
  return StandardTableau(std::move(flipped), std::move(boxes));
}

std::vector<int> contents_vector(const StandardTableau& L) {
  std::vector<int> out;
  for (int k = 1; k <= L.size(); ++k) out.push_back(L.content(k));
  return out;
}

std::vector<int> signs_vector(const StandardTableau& L) {
  std::vector<int> out;
  for (int k = 1; k <= L.size(); ++k) out.push_back(L.sign(k));
  return out;
}

std::vector<int> dsign_vector(const StandardTableau& L) {
  std::vector<int> out;
  for (int k = 1; k <= L.size(); ++k) out.push_back(L.sign(1) * L.sign(k));
  return out;
}

LevelConstants weight_constants(GroupType t, const Shape& shape) {
  LevelConstants c;
  long ct_sum = 0;
  long sgn_sum = 0;
  long sgn_prod = 1;
  for (const Box& b : shape.boxes()) {
    ct_sum += b.content();
    sgn_sum += b.sign();
    sgn_prod *= b.sign();
  }
  switch (t) {
    case GroupType::A:
      c.c_l = ct_sum;
      break;
    case GroupType::B:
    case GroupType::D:
      // Factor 2 on the long-root sum: z_{k,l} has two reflections per pair
      // of boxes on the same diagonal offset, cf. the trivial character count.
      c.c_s = sgn_sum;
      c.c_l = 2 * ct_sum;
      c.c_0 = sgn_prod;
      break;
    case GroupType::G2:
      throw InvalidLabel("G2 constants are tabulated, not shape-derived");
  }
  return c;
}

std::vector<LevelConstants> tableau_weight(GroupType t, const StandardTableau& L) {
  std::vector<LevelConstants> out;
  LevelConstants acc;
  acc.c_0 = 1;
  for (int k = 1; k <= L.size(); ++k) {
    acc.c_s += L.sign(k);
    acc.c_l += (t == GroupType::A ? 1 : 2) * L.content(k);
    acc.c_0 *= L.sign(k);
    out.push_back(acc);
  }
  return out;
}

} // namespace seminormal
