#include "seminormal/partition.hpp"

#include "seminormal/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace seminormal {

Partition::Partition(std::vector<int> r) : rows(std::move(r)) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw InvalidLabel("partition rows must be positive");
    if (i > 0 && rows[i] > rows[i - 1])
      throw InvalidLabel("partition rows must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::vector<std::pair<int, int>> Partition::addable() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r <= num_rows(); ++r) {
    int len = row(r);
    int above = r == 0 ? (len + 1) : row(r - 1); // unbounded first row
    if (r == 0 || len < above) out.emplace_back(r, len);
  }
  return out;
}

std::vector<std::pair<int, int>> Partition::removable() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < num_rows(); ++r) {
    if (row(r) > row(r + 1)) out.emplace_back(r, row(r) - 1);
  }
  return out;
}

Partition Partition::with_box(int r) const {
  Partition out = *this;
  if (r == out.num_rows()) {
    out.rows.push_back(1);
  } else {
    out.rows[static_cast<std::size_t>(r)] += 1;
  }
  return out;
}

Partition Partition::without_box(int r) const {
  Partition out = *this;
  out.rows[static_cast<std::size_t>(r)] -= 1;
  if (out.rows[static_cast<std::size_t>(r)] == 0) out.rows.pop_back();
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (int c = a.size() - b.size(); c != 0) return c <=> 0;
  return a.rows <=> b.rows;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ',';
    os << rows[i];
  }
  return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    acc.push_back(k);
    gen_partitions(n - k, k, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidLabel("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, acc, out);
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> rows;
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw InvalidLabel("bad partition: expected integer");
    rows.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw InvalidLabel("bad partition: expected ','");
      ++pos;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == text.size()) throw InvalidLabel("bad partition: trailing ','");
    }
  }
  return Partition(rows); // validates monotonicity
}

Shape Shape::with_box(const Box& b) const {
  Shape out = *this;
  (b.comp == Component::first ? out.alpha : out.beta) =
      part(b.comp).with_box(b.row);
  return out;
}

Shape Shape::without_box(const Box& b) const {
  Shape out = *this;
  (b.comp == Component::first ? out.alpha : out.beta) =
      part(b.comp).without_box(b.row);
  return out;
}

std::vector<Box> Shape::addable_boxes() const {
  std::vector<Box> out;
  for (auto [r, c] : alpha.addable()) out.push_back({Component::first, r, c});
  if (is_double)
    for (auto [r, c] : beta.addable()) out.push_back({Component::second, r, c});
  return out;
}

std::vector<Box> Shape::boxes() const {
  std::vector<Box> out;
  for (int r = 0; r < alpha.num_rows(); ++r)
    for (int c = 0; c < alpha.row(r); ++c) out.push_back({Component::first, r, c});
  if (is_double)
    for (int r = 0; r < beta.num_rows(); ++r)
      for (int c = 0; c < beta.row(r); ++c) out.push_back({Component::second, r, c});
  return out;
}

std::string Shape::str() const {
  if (!is_double) return alpha.str();
  return "(" + alpha.str() + ")|(" + beta.str() + ")";
}

} // namespace seminormal
