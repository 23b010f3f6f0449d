#include "seminormal/group.hpp"

#include <deque>

namespace seminormal {

std::vector<SignedPerm> group_generators(GroupType t, int n) {
  std::vector<SignedPerm> gens;
  switch (t) {
    case GroupType::A:
      if (n < 1) throw InvalidLabel("type A needs n >= 1");
      for (int i = 2; i <= n; ++i) gens.push_back(sp_transposition(n, i - 1, i));
      break;
    case GroupType::B:
      if (n < 1) throw InvalidLabel("type B needs n >= 1");
      gens.push_back(sp_sign_flip(n, 1));
      for (int i = 2; i <= n; ++i) gens.push_back(sp_transposition(n, i - 1, i));
      break;
    case GroupType::D: {
      if (n < 2) throw InvalidLabel("type D needs n >= 2");
      SignedPerm s1 = sp_sign_flip(n, 1);
      SignedPerm s2 = sp_transposition(n, 1, 2);
      gens.push_back(s1 * s2 * s1); // (1,-2)(2,-1)
      for (int i = 2; i <= n; ++i) gens.push_back(sp_transposition(n, i - 1, i));
      break;
    }
    case GroupType::G2:
      throw InvalidLabel("G2 uses g2_generators()");
  }
  return gens;
}

std::vector<G2Elem> g2_generators() { return {G2Elem::s1(), G2Elem::s2()}; }

std::vector<std::string> generator_names(GroupType t, int n, bool hecke) {
  std::vector<std::string> names;
  auto name = [&](const std::string& base, int i) {
    return (hecke ? "T" : "s") + base + std::to_string(i);
  };
  switch (t) {
    case GroupType::A:
      for (int i = 2; i <= n; ++i) names.push_back(name("", i));
      break;
    case GroupType::B:
      for (int i = 1; i <= n; ++i) names.push_back(name("", i));
      break;
    case GroupType::D:
      for (int i = 1; i <= n; ++i) names.push_back(name("t", i));
      break;
    case GroupType::G2:
      names = {name("", 1), name("", 2)};
      break;
  }
  return names;
}

bool generator_uses_p(GroupType t, int gen_index) {
  return (t == GroupType::B || t == GroupType::G2) && gen_index == 0;
}

Presentation group_presentation(GroupType t, int n, bool hecke) {
  Presentation p;
  p.gen_names = generator_names(t, n, hecke);
  int m = static_cast<int>(p.gen_names.size());
  auto braid = [&](int a, int b, int len) {
    // s_a s_b s_a ... = s_b s_a s_b ... (len factors each)
    Relation r;
    for (int i = 0; i < len; ++i) {
      r.lhs.push_back(i % 2 == 0 ? a : b);
      r.rhs.push_back(i % 2 == 0 ? b : a);
    }
    p.relations.push_back(std::move(r));
  };
  switch (t) {
    case GroupType::A:
      // generator index i corresponds to s_{i+2}
      for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j) braid(i, j, 2);
      for (int i = 0; i + 1 < m; ++i) braid(i, i + 1, 3);
      break;
    case GroupType::B:
      for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j) braid(i, j, 2);
      if (m >= 2) braid(0, 1, 4);
      for (int i = 1; i + 1 < m; ++i) braid(i, i + 1, 3);
      break;
    case GroupType::D:
      // index 0 is st_1; indices i >= 1 are st_{i+1}
      for (int i = 1; i < m; ++i)
        for (int j = i + 2; j < m; ++j) braid(i, j, 2);
      for (int j = 1; j < m; ++j)
        if (j != 2) braid(0, j, 2); // st_1 commutes with st_j, j != 3
      if (m >= 3) braid(0, 2, 3);   // st_1 st_3 st_1 = st_3 st_1 st_3
      for (int i = 1; i + 1 < m; ++i) braid(i, i + 1, 3);
      break;
    case GroupType::G2:
      braid(0, 1, 6);
      break;
  }
  for (int i = 0; i < m; ++i) p.relations.push_back({{i, i}, {}});
  return p;
}

template <class E>
GroupData<E> GroupData<E>::enumerate(std::vector<E> gens, const E& id, std::size_t cap) {
  GroupData<E> data;
  data.gens = std::move(gens);
  data.elements.push_back(id);
  data.words.push_back({});
  data.index.emplace(id, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < data.gens.size(); ++g) {
      E next = data.elements[static_cast<std::size_t>(cur)] * data.gens[g];
      if (data.index.contains(next)) continue;
      if (data.elements.size() >= cap)
        throw CapError("group enumeration exceeds the configured cap");
      std::vector<int> w = data.words[static_cast<std::size_t>(cur)];
      w.push_back(static_cast<int>(g));
      data.index.emplace(next, static_cast<int>(data.elements.size()));
      data.elements.push_back(std::move(next));
      data.words.push_back(std::move(w));
      queue.push_back(data.size() - 1);
    }
  }
  return data;
}

template struct GroupData<SignedPerm>;
template struct GroupData<G2Elem>;

GroupData<SignedPerm> make_group_data(GroupType t, int n, std::size_t cap) {
  return GroupData<SignedPerm>::enumerate(group_generators(t, n), SignedPerm::identity(n), cap);
}

GroupData<G2Elem> make_g2_group_data() {
  return GroupData<G2Elem>::enumerate(g2_generators(), G2Elem::identity(), 16);
}

long long group_order(GroupType t, int n) {
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  switch (t) {
    case GroupType::A: return fact;
    case GroupType::B: return fact << n;
    case GroupType::D: return fact << (n - 1);
    case GroupType::G2: return 12;
  }
  return 0;
}

SignedPerm longest_element(GroupType t, int n) {
  switch (t) {
    case GroupType::A: {
      SignedPerm w = SignedPerm::identity(n);
      for (int k = 1; k <= n; ++k) w.img[static_cast<std::size_t>(k - 1)] = n + 1 - k;
      return w;
    }
    case GroupType::B: {
      SignedPerm w = SignedPerm::identity(n);
      for (int k = 1; k <= n; ++k) w.img[static_cast<std::size_t>(k - 1)] = -k;
      return w;
    }
    case GroupType::D: {
      // -1 when n is even; for odd n the first point keeps its sign.
      SignedPerm w = SignedPerm::identity(n);
      for (int k = 1; k <= n; ++k) w.img[static_cast<std::size_t>(k - 1)] = -k;
      if (n % 2 == 1) w.img[0] = 1;
      return w;
    }
    case GroupType::G2:
      throw InvalidLabel("G2 uses g2_longest_element()");
  }
  throw std::logic_error("unreachable");
}

G2Elem g2_longest_element() { return {false, 3}; } // (s1 s2)^3

std::string flavor_str(Flavor f) {
  switch (f) {
    case Flavor::Short: return "short";
    case Flavor::Long: return "long";
    case Flavor::Zero: return "zero";
    case Flavor::One: return "one";
    case Flavor::Two: return "two";
  }
  return "?";
}

Algebra<SignedPerm> jm_element(GroupType t, int n, int k, Flavor f) {
  if (k < 1 || k > n) throw std::out_of_range("jm level out of range");
  Algebra<SignedPerm> out;
  switch (t) {
    case GroupType::A:
      if (f != Flavor::Long) throw InvalidLabel("type A has only the long flavor");
      if (k < 2) throw std::out_of_range("type A JM elements start at k = 2");
      for (int i = 2; i <= k; ++i)
        alg_add_term(out, sp_transposition(n, i - 1, k), Rational(1));
      break;
    case GroupType::B:
      if (f == Flavor::Short) {
        alg_add_term(out, sp_sign_flip(n, k), Rational(1));
      } else if (f == Flavor::Long) {
        if (k < 2) throw std::out_of_range("long JM elements start at k = 2");
        for (int i = 2; i <= k; ++i) {
          alg_add_term(out, sp_transposition(n, i - 1, k), Rational(1));
          alg_add_term(out, sp_neg_transposition(n, i - 1, k), Rational(1));
        }
      } else {
        throw InvalidLabel("type B JM flavors are short and long");
      }
      break;
    case GroupType::D:
      if (f == Flavor::One) {
        if (k < 2) throw std::out_of_range("type D JM elements start at k = 2");
        alg_add_term(out, sp_sign_flip(n, 1) * sp_sign_flip(n, k), Rational(1));
      } else if (f == Flavor::Two) {
        return jm_element(GroupType::B, n, k, Flavor::Long);
      } else {
        throw InvalidLabel("type D JM flavors are one and two");
      }
      break;
    case GroupType::G2:
      throw InvalidLabel("G2 uses g2_central_sum()");
  }
  return out;
}

Algebra<SignedPerm> central_sum(GroupType t, int n, int k, Flavor f) {
  if (k < 0 || k > n) throw std::out_of_range("central sum level out of range");
  Algebra<SignedPerm> out;
  switch (t) {
    case GroupType::A:
      if (f != Flavor::Long) throw InvalidLabel("type A has only the long flavor");
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          alg_add_term(out, sp_transposition(n, i, j), Rational(1));
      break;
    case GroupType::B:
    case GroupType::D:
      if (f == Flavor::Short) {
        if (t == GroupType::D) throw InvalidLabel("type D has no short reflection sum");
        for (int i = 1; i <= k; ++i) alg_add_term(out, sp_sign_flip(n, i), Rational(1));
      } else if (f == Flavor::Long) {
        for (int i = 1; i <= k; ++i)
          for (int j = i + 1; j <= k; ++j) {
            alg_add_term(out, sp_transposition(n, i, j), Rational(1));
            alg_add_term(out, sp_neg_transposition(n, i, j), Rational(1));
          }
      } else if (f == Flavor::Zero) {
        if (t == GroupType::D) throw InvalidLabel("type D longest element is not -1 for odd ranks");
        SignedPerm w = SignedPerm::identity(n);
        for (int i = 1; i <= k; ++i) w.img[static_cast<std::size_t>(i - 1)] = -i;
        alg_add_term(out, w, Rational(1));
      } else {
        throw InvalidLabel("unknown flavor for reflection sums");
      }
      break;
    case GroupType::G2:
      throw InvalidLabel("G2 uses g2_central_sum()");
  }
  return out;
}

Algebra<G2Elem> g2_central_sum(int k, Flavor f) {
  Algebra<G2Elem> out;
  auto w = [](std::initializer_list<int> gens) { return G2Elem::from_word(gens); };
  if (k == 1) {
    if (f != Flavor::Zero) throw InvalidLabel("level 1 of the G2 chain has only z_{1,0}");
    alg_add_term(out, G2Elem::s1(), Rational(1));
    return out;
  }
  if (k != 2) throw std::out_of_range("G2 chain has levels 1 and 2");
  switch (f) {
    case Flavor::Short:
      alg_add_term(out, w({0}), Rational(1));
      alg_add_term(out, w({1, 0, 1}), Rational(1));
      alg_add_term(out, w({0, 1, 0, 1, 0}), Rational(1));
      break;
    case Flavor::Long:
      alg_add_term(out, w({1}), Rational(1));
      alg_add_term(out, w({0, 1, 0}), Rational(1));
      alg_add_term(out, w({1, 0, 1, 0, 1}), Rational(1));
      break;
    case Flavor::Zero:
      alg_add_term(out, g2_longest_element(), Rational(1));
      break;
    default:
      throw InvalidLabel("unknown flavor for G2 central sums");
  }
  return out;
}

} // namespace seminormal
