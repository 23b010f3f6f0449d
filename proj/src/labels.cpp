#include "seminormal/labels.hpp"

#include "seminormal/errors.hpp"

#include <algorithm>

namespace seminormal {

std::string group_type_str(GroupType t) {
  switch (t) {
    case GroupType::A: return "A";
    case GroupType::B: return "B";
    case GroupType::D: return "D";
    case GroupType::G2: return "G2";
  }
  return "?";
}

GroupType parse_group_type(std::string_view s) {
  if (s == "A" || s == "a") return GroupType::A;
  if (s == "B" || s == "b") return GroupType::B;
  if (s == "D" || s == "d") return GroupType::D;
  if (s == "G2" || s == "g2") return GroupType::G2;
  throw InvalidLabel("unknown group type: " + std::string(s));
}

std::string g2_label_str(G2Label l) {
  switch (l) {
    case G2Label::phi_1_0: return "phi_1_0";
    case G2Label::phi_1_6: return "phi_1_6";
    case G2Label::phi_1_3p: return "phi_1_3p";
    case G2Label::phi_1_3pp: return "phi_1_3pp";
    case G2Label::phi_2_1: return "phi_2_1";
    case G2Label::phi_2_2: return "phi_2_2";
  }
  return "?";
}

G2Label parse_g2_label(std::string_view s) {
  for (G2Label l : kG2Labels)
    if (g2_label_str(l) == s) return l;
  throw InvalidLabel("unknown G2 label: " + std::string(s));
}

ShapeLabel ShapeLabel::type_a(Partition p) {
  ShapeLabel l;
  l.group = GroupType::A;
  l.shape = Shape::single(std::move(p));
  return l;
}

ShapeLabel ShapeLabel::type_b(Shape s) {
  ShapeLabel l;
  l.group = GroupType::B;
  l.shape = std::move(s);
  l.shape.is_double = true;
  return l;
}

ShapeLabel ShapeLabel::type_d(Shape s, int split) {
  ShapeLabel l;
  l.group = GroupType::D;
  l.shape = std::move(s);
  l.shape.is_double = true;
  l.split = split;
  l.validate();
  return l;
}

ShapeLabel ShapeLabel::type_g2(G2Label g2) {
  ShapeLabel l;
  l.group = GroupType::G2;
  l.g2 = g2;
  return l;
}

int ShapeLabel::size() const {
  if (group == GroupType::G2) return 2;
  return shape.size();
}

void ShapeLabel::validate() const {
  switch (group) {
    case GroupType::A:
      if (shape.is_double) throw InvalidLabel("type A labels are single partitions");
      break;
    case GroupType::B:
      if (!shape.is_double) throw InvalidLabel("type B labels are double partitions");
      if (split != 0) throw InvalidLabel("split signs are type D only");
      break;
    case GroupType::D:
      if (!shape.is_double) throw InvalidLabel("type D labels are double partitions");
      if (split == 0 && shape.alpha == shape.beta)
        throw InvalidLabel("(alpha,alpha) labels need a +/- split sign");
      if (split != 0 && shape.alpha != shape.beta)
        throw InvalidLabel("split signs apply only to (alpha,alpha) labels");
      break;
    case GroupType::G2:
      break;
  }
}

std::string ShapeLabel::str() const {
  if (group == GroupType::G2) return g2_label_str(g2);
  std::string s = shape.str();
  if (split > 0) s += '+';
  if (split < 0) s += '-';
  return s;
}

ShapeLabel ShapeLabel::parse(GroupType t, std::string_view text) {
  ShapeLabel l;
  l.group = t;
  if (t == GroupType::G2) {
    l.g2 = parse_g2_label(text);
    return l;
  }
  std::string body(text);
  if (t == GroupType::D && !body.empty() && (body.back() == '+' || body.back() == '-')) {
    l.split = body.back() == '+' ? 1 : -1;
    body.pop_back();
  }
  if (!body.empty() && body.front() == '(') {
    auto mid = body.find(")|(");
    if (mid == std::string::npos || body.back() != ')')
      throw InvalidLabel("bad double shape, expected \"(..)|(..)\": " + std::string(text));
    l.shape = Shape::double_shape(parse_partition(body.substr(1, mid - 1)),
                                  parse_partition(body.substr(mid + 3, body.size() - mid - 4)));
  } else {
    l.shape = Shape::single(parse_partition(body));
  }
  if (t != GroupType::A && !l.shape.is_double)
    throw InvalidLabel("type " + group_type_str(t) + " needs a double shape \"(..)|(..)\"");
  l.validate();
  return l;
}

std::vector<ShapeLabel> enum_shapes(GroupType t, int n) {
  if (t != GroupType::G2 && n < 1) throw InvalidLabel("rank must be at least 1");
  std::vector<ShapeLabel> out;
  switch (t) {
    case GroupType::A:
      for (Partition& p : partitions_of(n)) out.push_back(ShapeLabel::type_a(std::move(p)));
      break;
    case GroupType::B:
      for (int a = n; a >= 0; --a)
        for (const Partition& alpha : partitions_of(a))
          for (const Partition& beta : partitions_of(n - a))
            out.push_back(ShapeLabel::type_b(Shape::double_shape(alpha, beta)));
      break;
    case GroupType::D:
      // Unordered pairs {alpha, beta}: representative has alpha > beta in the
      // (size, lex) partition order; equal pairs carry the +/- split labels.
      for (int a = n; 2 * a >= n; --a)
        for (const Partition& alpha : partitions_of(a))
          for (const Partition& beta : partitions_of(n - a)) {
            if (alpha < beta) continue;
            if (alpha == beta) {
              out.push_back(ShapeLabel::type_d(Shape::double_shape(alpha, beta), +1));
              out.push_back(ShapeLabel::type_d(Shape::double_shape(alpha, beta), -1));
            } else {
              out.push_back(ShapeLabel::type_d(Shape::double_shape(alpha, beta)));
            }
          }
      break;
    case GroupType::G2:
      for (G2Label l : kG2Labels) out.push_back(ShapeLabel::type_g2(l));
      break;
  }
  return out;
}

} // namespace seminormal
