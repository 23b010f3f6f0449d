#include "seminormal/json_io.hpp"

namespace seminormal {

namespace {

Json partition_json(const Partition& p) {
  Json arr = Json::array();
  for (int r : p.rows) arr.push_back(r);
  return arr;
}

Json rows_json(const std::vector<std::vector<int>>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json jr = Json::array();
    for (int v : row) jr.push_back(v);
    arr.push_back(jr);
  }
  return arr;
}

std::string entry_str(const Rational& r) { return rational_str(r); }
std::string entry_str(const RatFunc& f) { return f.str(); }

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class T>
Json rep_json_impl(const Rep<T>& rep) {
  Json j;
  j["group"] = group_type_str(rep.group);
  j["n"] = rep.n;
  j["shape"] = shape_json(rep.label);
  Json basis = Json::array();
  if (rep.group == GroupType::G2) {
    for (const G2Path& path : rep.g2_basis) basis.push_back(g2_path_json(path));
  } else {
    for (const StandardTableau& L : rep.basis) basis.push_back(tableau_json(L));
  }
  j["basis"] = basis;
  Json gens = Json::array();
  for (std::size_t g = 0; g < rep.gens.size(); ++g) {
    Json jg;
    jg["name"] = rep.gen_names[g];
    jg["matrix"] = matrix_json(rep.gens[g]);
    gens.push_back(jg);
  }
  j["generators"] = gens;
  return j;
}

} // namespace

Json tableau_json(const StandardTableau& L) {
  Json j;
  Json shape;
  shape["alpha"] = partition_json(L.shape().alpha);
  if (L.shape().is_double) shape["beta"] = partition_json(L.shape().beta);
  j["shape"] = shape;
  j["rows_alpha"] = rows_json(L.rows(Component::first));
  if (L.shape().is_double) j["rows_beta"] = rows_json(L.rows(Component::second));
  return j;
}

Json g2_path_json(const G2Path& path) {
  Json j;
  j["level1"] = path.level1 == 0 ? Json::array({2}) : Json::array({1, 1});
  j["label"] = g2_label_str(path.label);
  return j;
}

Json shape_json(const ShapeLabel& label) {
  Json j;
  if (label.group == GroupType::G2) {
    j["label"] = g2_label_str(label.g2);
    return j;
  }
  j["alpha"] = partition_json(label.shape.alpha);
  if (label.shape.is_double) j["beta"] = partition_json(label.shape.beta);
  if (label.split != 0) j["split"] = label.split > 0 ? "+" : "-";
  return j;
}

Json rep_json(const WeylRep& rep) { return rep_json_impl(rep); }
Json rep_json(const HeckeRep& rep) { return rep_json_impl(rep); }

Json report_json(const CheckReport& report) {
  Json j;
  j["check"] = report.check;
  Json subject;
  subject["group"] = group_type_str(report.subject.group);
  subject["n"] = report.subject.n;
  if (report.subject.shape) subject["shape"] = *report.subject.shape;
  if (report.subject.hecke) subject["algebra"] = "hecke";
  j["subject"] = subject;
  j["status"] = report.pass ? "pass" : "fail";
  if (report.witness) {
    Json w;
    w["description"] = report.witness->description;
    w["lhs"] = report.witness->lhs;
    w["rhs"] = report.witness->rhs;
    j["witness"] = w;
  }
  return j;
}

} // namespace seminormal
