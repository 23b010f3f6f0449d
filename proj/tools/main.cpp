#include "seminormal/hecke.hpp"
#include "seminormal/json_io.hpp"
#include "seminormal/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace {

using namespace seminormal;

// Exit codes: 2 flags, 3 shape, 4 cap, 5 pole, 1 failed verification.
constexpr int kExitBadFlags = 2;
constexpr int kExitBadShape = 3;
constexpr int kExitCap = 4;
constexpr int kExitPole = 5;

struct Options {
  std::string type = "A";
  int n = 0;
  std::string shape;
  std::string format = "json";
  bool all = false;
  bool hecke = false;
  std::string checks;
  std::string element;
  std::string p_value = "1";
  std::string q_value = "1";
  std::size_t cap = 1000000;
};

void ensure_within_cap(GroupType t, int n, std::size_t cap) {
  if (t == GroupType::G2) return;
  if (n > 20 || group_order(t, n) > static_cast<long long>(cap))
    throw CapError("rank " + std::to_string(n) + " exceeds the size cap");
}

std::vector<ShapeLabel> resolve_labels(GroupType t, const Options& opt) {
  if (opt.all) {
    if (t != GroupType::G2 && opt.n < 1)
      throw InvalidLabel("--all requires --n");
    ensure_within_cap(t, opt.n, opt.cap);
    return enum_shapes(t, opt.n);
  }
  if (opt.shape.empty()) throw InvalidLabel("missing --shape (or use --all with --n)");
  ShapeLabel label = ShapeLabel::parse(t, opt.shape);
  if (opt.n > 0 && label.size() != opt.n)
    throw InvalidLabel("--n does not match the shape size");
  ensure_within_cap(t, label.size(), opt.cap);
  return {label};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_tableaux(const Options& opt) {
  GroupType t = parse_group_type(opt.type);
  std::vector<ShapeLabel> labels = resolve_labels(t, opt);
  Json out = Json::array();
  for (const ShapeLabel& label : labels) {
    if (t == GroupType::G2) {
      for (const G2Path& path : g2_paths(label.g2)) {
        Json j = g2_path_json(path);
        LevelConstants c2 = g2_level2_constants(path.label);
        j["weight"] = Json::array({g2_c1(path.level1), c2.c_s, c2.c_l, c2.c_0});
        out.push_back(j);
      }
      continue;
    }
    std::vector<StandardTableau> tabs = enum_standard_tableaux(label.shape);
    for (std::size_t i = 0; i < tabs.size(); ++i) {
      const StandardTableau& L = tabs[i];
      Json j = tableau_json(L);
      j["index"] = i;
      j["contents"] = contents_vector(L);
      if (label.shape.is_double) j["signs"] = signs_vector(L);
      if (t == GroupType::D) j["relative_signs"] = dsign_vector(L);
      Json weights = Json::array();
      for (const LevelConstants& c : tableau_weight(t, L)) {
        if (t == GroupType::A) {
          weights.push_back(c.c_l);
        } else {
          weights.push_back(Json::array({c.c_s, c.c_l, c.c_0}));
        }
      }
      j["weights"] = weights;
      out.push_back(j);
    }
  }
  if (opt.format == "text") {
    for (const Json& j : out) std::cout << j.dump() << "\n";
  } else {
    emit(out);
  }
  return 0;
}

template <class RepT, class Builder>
int cmd_rep_generic(const Options& opt, Builder&& build) {
  GroupType t = parse_group_type(opt.type);
  std::vector<ShapeLabel> labels = resolve_labels(t, opt);
  if (labels.size() == 1 && !opt.all) {
    emit(rep_json(build(labels.front())));
    return 0;
  }
  Json out = Json::array();
  for (const ShapeLabel& label : labels) out.push_back(rep_json(build(label)));
  emit(out);
  return 0;
}

int cmd_murphy(const Options& opt) {
  GroupType t = parse_group_type(opt.type);
  std::vector<ShapeLabel> labels = resolve_labels(t, opt);
  Json out = Json::array();
  for (const ShapeLabel& label : labels) {
    Json j;
    j["group"] = group_type_str(t);
    j["shape"] = shape_json(label);
    Json ops = Json::array();
    auto add = [&](const std::string& name, const Json& matrix) {
      Json op;
      op["name"] = name;
      op["matrix"] = matrix;
      ops.push_back(op);
    };
    if (opt.hecke) {
      HeckeRep rep = build_hecke_rep(label);
      j["n"] = rep.n;
      auto matrix_rows = [&](const Matrix<RatFunc>& m) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
          rows.push_back(row);
        }
        return rows;
      };
      int start = t == GroupType::A ? 2 : 1;
      int stop = t == GroupType::G2 ? 2 : rep.n;
      std::string murphy_name = t == GroupType::D ? "Mt" : "M";
      for (int k = start; k <= stop; ++k)
        add(murphy_name + std::to_string(k), matrix_rows(murphy_matrix(rep, k)));
      for (int k = start; k <= stop; ++k)
        add("z" + std::to_string(k), matrix_rows(central_matrix(rep, k)));
    } else {
      WeylRep rep = build_weyl_rep(label);
      j["n"] = rep.n;
      auto matrix_rows = [&](const Matrix<Rational>& m) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (int c = 0; c < m.cols(); ++c) row.push_back(rational_str(m.at(i, c)));
          rows.push_back(row);
        }
        return rows;
      };
      switch (t) {
        case GroupType::A:
          for (int k = 2; k <= rep.n; ++k)
            add("m" + std::to_string(k),
                matrix_rows(apply_group_algebra(rep, jm_element(t, rep.n, k, Flavor::Long))));
          break;
        case GroupType::B:
          for (int k = 1; k <= rep.n; ++k)
            add("m" + std::to_string(k) + "s",
                matrix_rows(apply_group_algebra(rep, jm_element(t, rep.n, k, Flavor::Short))));
          for (int k = 2; k <= rep.n; ++k)
            add("m" + std::to_string(k) + "l",
                matrix_rows(apply_group_algebra(rep, jm_element(t, rep.n, k, Flavor::Long))));
          break;
        case GroupType::D:
          for (int k = 2; k <= rep.n; ++k) {
            add("mt" + std::to_string(k) + "1",
                matrix_rows(apply_group_algebra(rep, jm_element(t, rep.n, k, Flavor::One))));
            add("mt" + std::to_string(k) + "2",
                matrix_rows(apply_group_algebra(rep, jm_element(t, rep.n, k, Flavor::Two))));
          }
          break;
        case GroupType::G2:
          add("z10", matrix_rows(apply_group_algebra(rep, g2_central_sum(1, Flavor::Zero))));
          add("z2s", matrix_rows(apply_group_algebra(rep, g2_central_sum(2, Flavor::Short))));
          add("z2l", matrix_rows(apply_group_algebra(rep, g2_central_sum(2, Flavor::Long))));
          add("z20", matrix_rows(apply_group_algebra(rep, g2_central_sum(2, Flavor::Zero))));
          break;
      }
    }
    j["operators"] = ops;
    out.push_back(j);
  }
  emit(out.size() == 1 ? out[0] : out);
  return 0;
}

SignedPerm parse_element_sp(GroupType t, int n, const std::string& text) {
  if (text == "id" || text == "e") return SignedPerm::identity(n);
  if (!text.empty() && text.front() == '[') {
    SignedPerm w;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) w.img.push_back(std::stoi(tok));
    if (static_cast<int>(w.img.size()) != n)
      throw InvalidLabel("element image list has the wrong length");
    std::set<int> seen;
    for (int v : w.img) {
      if (v == 0 || std::abs(v) > n || !seen.insert(std::abs(v)).second)
        throw InvalidLabel("image list is not a signed permutation: " + text);
    }
    if (t == GroupType::D && w.negative_count() % 2 != 0)
      throw InvalidLabel("element has an odd number of sign flips, not in WD_n");
    return w;
  }
  // Word in the generators, e.g. "s1s2" or "st1st3".
  std::vector<SignedPerm> gens = group_generators(t, n);
  std::vector<std::string> names = generator_names(t, n, false);
  SignedPerm acc = SignedPerm::identity(n);
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool matched = false;
    for (std::size_t g = 0; g < names.size(); ++g) {
      const std::string& name = names[g];
      if (text.compare(pos, name.size(), name) == 0) {
        // Longest-match: "s1" must not shadow "s12" (no such name at our ranks).
        acc = acc * gens[g];
        pos += name.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw InvalidLabel("cannot parse element word: " + text);
  }
  return acc;
}

int cmd_characters(const Options& opt) {
  GroupType t = parse_group_type(opt.type);
  if (t == GroupType::G2 && opt.element.empty()) {
    // Full character table on the six class representatives.
    std::vector<std::pair<std::string, G2Elem>> classes = {
        {"e", G2Elem::identity()},
        {"s1", G2Elem::s1()},
        {"s2", G2Elem::s2()},
        {"s1s2", G2Elem::s1() * G2Elem::s2()},
        {"s1s2s1s2", G2Elem::from_word({0, 1, 0, 1})},
        {"s1s2s1s2s1s2", g2_longest_element()},
    };
    Json out;
    Json cols = Json::array();
    for (const auto& [name, w] : classes) cols.push_back(name);
    out["classes"] = cols;
    Json rows = Json::array();
    for (G2Label l : kG2Labels) {
      WeylRep rep = build_weyl_rep(ShapeLabel::type_g2(l));
      Json row;
      row["label"] = g2_label_str(l);
      Json values = Json::array();
      for (const auto& [name, w] : classes) values.push_back(rational_str(character(rep, w)));
      row["values"] = values;
      rows.push_back(row);
    }
    out["table"] = rows;
    emit(out);
    return 0;
  }
  std::vector<ShapeLabel> labels =
      opt.shape.empty() && !opt.all
          ? enum_shapes(t, t == GroupType::G2 ? 2 : opt.n)
          : resolve_labels(t, opt);
  Json out = Json::array();
  for (const ShapeLabel& label : labels) {
    WeylRep rep = build_weyl_rep(label);
    Json j;
    j["shape"] = shape_json(label);
    j["dimension"] = rep.dim();
    if (!opt.element.empty()) {
      Rational value;
      if (t == GroupType::G2) {
        std::vector<int> word;
        std::size_t pos = 0;
        while (pos + 1 < opt.element.size() && opt.element[pos] == 's') {
          word.push_back(opt.element[pos + 1] == '1' ? 0 : 1);
          pos += 2;
        }
        if (pos != opt.element.size() && opt.element != "e" && opt.element != "id")
          throw InvalidLabel("cannot parse G2 word: " + opt.element);
        value = character(rep, G2Elem::from_word(word));
      } else {
        value = character(rep, parse_element_sp(t, rep.n, opt.element));
      }
      j["element"] = opt.element;
      j["character"] = rational_str(value);
    }
    out.push_back(j);
  }
  emit(out);
  return 0;
}

int cmd_verify(const Options& opt) {
  GroupType t = parse_group_type(opt.type);
  SuiteOptions sopt;
  sopt.group_cap = opt.cap;
  if (!opt.checks.empty()) {
    std::istringstream is(opt.checks);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (std::find(kCheckNames.begin(), kCheckNames.end(), tok) == kCheckNames.end())
        throw InvalidLabel("unknown check name: " + tok);
      sopt.checks.insert(tok);
    }
  }
  int n = t == GroupType::G2 ? 2 : opt.n;
  if (t != GroupType::G2 && n < 1) throw InvalidLabel("verify requires --n");
  std::vector<CheckReport> reports = run_suite(t, n, sopt);
  bool all_pass = true;
  if (opt.format == "text") {
    for (const CheckReport& r : reports) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.check << " "
                << group_type_str(r.subject.group) << " n=" << r.subject.n;
      if (r.subject.shape) std::cout << " shape=" << *r.subject.shape;
      if (r.subject.hecke) std::cout << " [hecke]";
      std::cout << "\n";
      if (!r.pass && r.witness)
        std::cout << "  witness: " << r.witness->description << "\n    lhs: " << r.witness->lhs
                  << "\n    rhs: " << r.witness->rhs << "\n";
      all_pass = all_pass && r.pass;
    }
  } else {
    Json out = Json::array();
    for (const CheckReport& r : reports) {
      out.push_back(report_json(r));
      all_pass = all_pass && r.pass;
    }
    emit(out);
  }
  return all_pass ? 0 : 1;
}

int cmd_specialize(const Options& opt) {
  GroupType t = parse_group_type(opt.type);
  std::vector<ShapeLabel> labels = resolve_labels(t, opt);
  Rational p0 = parse_rational(opt.p_value);
  Rational q0 = parse_rational(opt.q_value);
  Json out = Json::array();
  for (const ShapeLabel& label : labels) {
    HeckeRep hecke = build_hecke_rep(label);
    WeylRep at_point = specialize_rep(hecke, p0, q0);
    Json j = rep_json(at_point);
    j["p"] = rational_str(p0);
    j["q"] = rational_str(q0);
    out.push_back(j);
  }
  emit(out.size() == 1 ? out[0] : out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seminormal representations of Weyl groups and Iwahori-Hecke algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_shape) {
    sub->add_option("--type", opt.type, "group type: A, B, D, G2")->required();
    sub->add_option("--n", opt.n, "rank");
    if (needs_shape) {
      sub->add_option("--shape", opt.shape,
                      "shape: \"3,1\" / \"(2,1)|(1)\" / \"(2)|(2)+\" / \"phi_2_1\"");
      sub->add_flag("--all", opt.all, "sweep every shape of size n");
    }
    sub->add_option("--format", opt.format, "output format: json or text");
  };

  CLI::App* tableaux = app.add_subcommand("tableaux", "list standard tableaux with weights");
  add_common(tableaux, true);
  CLI::App* rep = app.add_subcommand("rep", "Weyl group seminormal matrices");
  add_common(rep, true);
  CLI::App* hecke = app.add_subcommand("hecke-rep", "Iwahori-Hecke seminormal matrices");
  add_common(hecke, true);
  CLI::App* murphy = app.add_subcommand("murphy", "Jucys-Murphy / Murphy element matrices");
  add_common(murphy, true);
  murphy->add_flag("--hecke", opt.hecke, "Murphy elements of the Hecke algebra");
  CLI::App* characters = app.add_subcommand("characters", "character values");
  add_common(characters, true);
  characters->add_option("--element", opt.element,
                         "group element: word (\"s1s2\") or images (\"[2,-1,3]\")");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, false);
  verify->add_option("--checks", opt.checks, "comma-separated subset of checks");
  verify->add_option("--cap", opt.cap, "group-order cap for enumeration sweeps");
  CLI::App* specialize = app.add_subcommand("specialize", "evaluate Hecke matrices at (p, q)");
  add_common(specialize, true);
  specialize->add_option("--p", opt.p_value, "rational value for p");
  specialize->add_option("--q", opt.q_value, "rational value for q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  try {
    if (tableaux->parsed()) return cmd_tableaux(opt);
    if (rep->parsed())
      return cmd_rep_generic<WeylRep>(opt, [](const ShapeLabel& l) { return build_weyl_rep(l); });
    if (hecke->parsed())
      return cmd_rep_generic<HeckeRep>(opt,
                                       [](const ShapeLabel& l) { return build_hecke_rep(l); });
    if (murphy->parsed()) return cmd_murphy(opt);
    if (characters->parsed()) return cmd_characters(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (specialize->parsed()) return cmd_specialize(opt);
  } catch (const InvalidLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadShape;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPole;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadShape;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }
  return 0;
}
