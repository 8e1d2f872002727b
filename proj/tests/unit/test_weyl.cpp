#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "nhk/context.hpp"
#include "nhk/poly.hpp"
#include "nhk/weyl.hpp"

using namespace nhk;

namespace {

std::pair<std::vector<long long>, IntMat> key_of(const ExtAffine& w) {
  return {w.translation_part(), w.finite_matrix()};
}

// Independent length oracle: breadth-first word search over the affine
// generators, using only the group product.
std::map<std::pair<std::vector<long long>, IntMat>, int> bfs_lengths(
    const RootDatum& d, int depth) {
  std::map<std::pair<std::vector<long long>, IntMat>, int> dist;
  std::vector<ExtAffine> frontier{ExtAffine::identity(d)};
  dist[key_of(frontier.front())] = 0;
  for (int k = 0; k < depth; ++k) {
    std::vector<ExtAffine> next;
    for (const auto& w : frontier)
      for (int i = 0; i <= d.rank(); ++i) {
        ExtAffine cand = w * ExtAffine::simple_reflection(d, i);
        if (dist.emplace(key_of(cand), k + 1).second) next.push_back(cand);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_CASE("simple reflections") {
  RootDatum d = RootDatum::build("A1");
  ExtAffine s1 = ExtAffine::simple_reflection(d, 1);
  CHECK(s1.is_finite());
  CHECK(s1.finite_matrix().at(0, 0) == -1);
  CHECK((s1 * s1).is_identity());

  // Affine node: t_delta s_delta, acting as x -> -x + 2h.
  ExtAffine s0 = ExtAffine::simple_reflection(d, 0);
  CHECK(s0.translation_part() == std::vector<long long>{2});
  auto pm = s0.inverse_point_map();
  SparsePoly x = SparsePoly::variable(2, 0);
  SparsePoly image = x.substitute_linear(pm.matrix, pm.hbar_shift, std::nullopt);
  SparsePoly expected =
      SparsePoly::linear(2, {-1}, Rational(2));  // -x + 2h
  CHECK(image == expected);
  CHECK((s0 * s0).is_identity());

  RootDatum a2 = RootDatum::build("A2");
  ExtAffine t0 = ExtAffine::simple_reflection(a2, 0);
  CHECK((t0 * t0).is_identity());
}

TEST_CASE("multiplication and canonical form") {
  RootDatum d = RootDatum::build("A1");
  Weight pi = d.fundamental_weight(0);
  ExtAffine tp = ExtAffine::translation(pi);
  CHECK((tp * tp).translation_part() == std::vector<long long>{2});
  CHECK((tp * tp).finite_matrix().is_identity());

  // s0 s1 is the translation by the simple root.
  ExtAffine s0 = ExtAffine::simple_reflection(d, 0);
  ExtAffine s1 = ExtAffine::simple_reflection(d, 1);
  ExtAffine t_alpha = ExtAffine::translation(d.simple_root(0));
  CHECK(s0 * s1 == t_alpha);

  CHECK((t_alpha * t_alpha.inverse()).is_identity());
  CHECK((s0 * s0.inverse()).is_identity());
}

TEST_CASE("product is associative") {
  RootDatum d = RootDatum::build("A2");
  std::vector<ExtAffine> pool;
  for (int i = 0; i <= 2; ++i) pool.push_back(ExtAffine::simple_reflection(d, i));
  pool.push_back(ExtAffine::translation(d.fundamental_weight(0)));
  pool.push_back(ExtAffine::translation(-d.fundamental_weight(1)));
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("length formula: examples and word-search oracle") {
  RootDatum d = RootDatum::build("A1");
  CHECK(ExtAffine::identity(d).length() == 0);
  ExtAffine t_alpha = ExtAffine::translation(d.simple_root(0));
  CHECK(t_alpha.length() == 2);
  CHECK(ExtAffine::translation(d.fundamental_weight(0)).length() == 1);

  // Exhaustive word search: t_alpha appears at word depth 2.
  auto dist = bfs_lengths(d, 3);
  CHECK(dist.at(key_of(t_alpha)) == 2);

  for (const std::string& label : {"A1", "A2"}) {
    RootDatum datum = RootDatum::build(label);
    auto lengths = bfs_lengths(datum, 5);
    for (const auto& [key, expected] : lengths) {
      ExtAffine w(datum, key.first, key.second);
      CHECK(w.length() == expected);
    }
  }
}

TEST_CASE("length changes by one under right multiplication") {
  RootDatum d = RootDatum::build("A2");
  for (const auto& w : affine_elements_up_to(d, 4))
    for (int i = 0; i <= d.rank(); ++i) {
      int diff = (w * ExtAffine::simple_reflection(d, i)).length() - w.length();
      CHECK((diff == 1 || diff == -1));
    }
}

TEST_CASE("length-zero elements form the fundamental group") {
  auto check_omega = [](const std::string& label, size_t expected) {
    RootDatum d = RootDatum::build(label);
    auto omegas = omega_group(d);
    CHECK(omegas.size() == expected);
    CHECK(static_cast<long long>(expected) == d.fundamental_group_order());
    // Closure under product and inverse.
    std::set<std::pair<std::vector<long long>, IntMat>> keys;
    for (const auto& o : omegas) keys.insert(key_of(o));
    for (const auto& a : omegas) {
      CHECK(keys.count(key_of(a.inverse())));
      for (const auto& b : omegas) CHECK(keys.count(key_of(a * b)));
    }
    // Twisting by omega preserves length.
    for (const auto& o : omegas)
      for (const auto& w : affine_elements_up_to(d, 3))
        CHECK((o * w).length() == w.length());
  };
  check_omega("A1", 2);
  check_omega("A2", 3);
  check_omega("G2", 1);
}

TEST_CASE("reduced words") {
  RootDatum d = RootDatum::build("A1");
  auto [oid, wid] = reduced_word(ExtAffine::identity(d));
  CHECK(oid.is_identity());
  CHECK(wid.empty());

  ExtAffine t_alpha = ExtAffine::translation(d.simple_root(0));
  auto [omega, word] = reduced_word(t_alpha);
  CHECK(omega.is_identity());
  CHECK(word == std::vector<int>{0, 1});

  ExtAffine t_pi = ExtAffine::translation(d.fundamental_weight(0));
  auto [omega2, word2] = reduced_word(t_pi);
  CHECK(word2 == std::vector<int>{1});
  CHECK(omega2.length() == 0);
  CHECK(!omega2.is_identity());

  // Reconstruction: w = omega * prod s_i, with |word| = length.
  RootDatum a2 = RootDatum::build("A2");
  for (const auto& w : affine_elements_up_to(a2, 5)) {
    auto [om, wd] = reduced_word(w);
    CHECK(static_cast<int>(wd.size()) == w.length());
    CHECK(om.length() == 0);
    ExtAffine prod = om;
    for (int i : wd) prod = prod * ExtAffine::simple_reflection(a2, i);
    CHECK(prod == w);
  }
}

TEST_CASE("Demazure product") {
  RootDatum d = RootDatum::build("A1");
  ExtAffine s1 = ExtAffine::simple_reflection(d, 1);
  CHECK(demazure_product(d, {1, 1}) == s1);
  CHECK(demazure_product(d, {}).is_identity());

  RootDatum a2 = RootDatum::build("A2");
  // Longest element oracle: brute force over the finite group.
  ExtAffine w0 = ExtAffine::identity(a2);
  for (const auto& w : enumerate_finite_weyl(a2))
    if (w.length() > w0.length()) w0 = w;
  CHECK(w0.length() == 3);
  CHECK(demazure_product(a2, {1, 2, 1}) == w0);
  CHECK(demazure_product(a2, {2, 1, 2}) == w0);
  // Repeating letters never lowers the result.
  CHECK(demazure_product(a2, {1, 1, 2, 2, 1, 1}) == w0);
}

TEST_CASE("exchange property spot-check via brute-force words") {
  for (const std::string& label : {"A2", "B2"}) {
    RootDatum d = RootDatum::build(label);
    for (const auto& w : enumerate_finite_weyl(d)) {
      if (w.length() == 0) continue;
      // All words of length l(w) in the finite alphabet, filtered by product.
      std::set<std::vector<int>> brute;
      std::vector<int> word(w.length());
      std::function<void(int)> rec = [&](int pos) {
        if (pos == w.length()) {
          ExtAffine prod = ExtAffine::identity(d);
          for (int i : word) prod = prod * ExtAffine::simple_reflection(d, i);
          if (prod == w) brute.insert(word);
          return;
        }
        for (int i = 1; i <= d.rank(); ++i) {
          word[pos] = i;
          rec(pos + 1);
        }
      };
      rec(0);
      auto listed = all_reduced_words(w);
      std::set<std::vector<int>> via_descents(listed.begin(), listed.end());
      CHECK(brute == via_descents);
      for (int i = 1; i <= d.rank(); ++i) {
        if (!is_right_descent(w, i)) continue;
        bool some_word_ends_in_i = false;
        for (const auto& wd : brute)
          if (wd.back() == i) some_word_ends_in_i = true;
        CHECK(some_word_ends_in_i);
      }
    }
  }
}

TEST_CASE("braid orders") {
  RootDatum a2 = RootDatum::build("A2");
  CHECK(braid_order(a2, 1, 2) == 3);
  CHECK(braid_order(a2, 0, 1) == 3);
  RootDatum a1 = RootDatum::build("A1");
  CHECK(braid_order(a1, 0, 1) == -1);  // infinite
  RootDatum b2 = RootDatum::build("B2");
  CHECK(braid_order(b2, 1, 2) == 4);
  RootDatum g2 = RootDatum::build("G2");
  CHECK(braid_order(g2, 1, 2) == 6);
}
