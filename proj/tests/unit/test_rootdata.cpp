#include <doctest.h>

#include <algorithm>
#include <set>

#include "nhk/rootdata.hpp"

using namespace nhk;

namespace {

// Independent oracle: reflection closure carried out purely in root
// coordinates from the Cartan matrix, with no shared code with the library's
// generation (which tracks weight and coroot coordinates).
std::set<std::vector<long long>> closure_oracle(const IntMat& cartan) {
  int r = cartan.n;
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> work;
  for (int j = 0; j < r; ++j) {
    std::vector<long long> e(r, 0);
    e[j] = 1;
    roots.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    auto rc = work.back();
    work.pop_back();
    for (int i = 0; i < r; ++i) {
      long long pairing = 0;
      for (int k = 0; k < r; ++k) pairing += cartan.at(i, k) * rc[k];
      auto img = rc;
      img[i] -= pairing;
      if (roots.insert(img).second) work.push_back(img);
    }
  }
  return roots;
}

}  // namespace

TEST_CASE("A1 datum") {
  RootDatum d = RootDatum::build("A1");
  CHECK(d.rank() == 1);
  CHECK(d.positive_roots().size() == 1);
  CHECK(d.highest_root().root_coords == std::vector<long long>{1});
  CHECK(d.fundamental_group_order() == 2);
}

TEST_CASE("A2 datum matches the closure oracle") {
  RootDatum d = RootDatum::build("A2");
  auto oracle = closure_oracle(d.cartan());
  CHECK(oracle.size() == 6);
  CHECK(d.positive_roots().size() == 3);
  for (const auto& root : d.positive_roots()) CHECK(oracle.count(root.root_coords));
  CHECK(d.highest_root().root_coords == std::vector<long long>{1, 1});
}

TEST_CASE("G2 datum: count, highest root, Cartan orientation") {
  RootDatum d = RootDatum::build("G2");
  auto oracle = closure_oracle(d.cartan());
  CHECK(oracle.size() == 12);
  CHECK(d.positive_roots().size() == 6);
  // alpha_1 short, so the highest (long) root is 3 alpha_1 + 2 alpha_2.
  CHECK(d.highest_root().root_coords == std::vector<long long>{3, 2});
  CHECK(d.cartan().at(0, 1) == -3);
  CHECK(d.cartan().at(1, 0) == -1);
  // Its coroot in simple-coroot coordinates.
  CHECK(d.highest_root().cv.c == std::vector<long long>{1, 2});
}

TEST_CASE("root counts across types") {
  auto count = [](const std::string& label) {
    return 2 * RootDatum::build(label).positive_roots().size();
  };
  CHECK(count("A3") == 12);
  CHECK(count("B2") == 8);
  CHECK(count("C2") == 8);
  CHECK(count("B3") == 18);
  CHECK(count("C4") == 32);
  CHECK(count("D4") == 24);
  CHECK(count("F4") == 48);
  CHECK(count("E6") == 72);
  CHECK(count("E7") == 126);
  CHECK(count("E8") == 240);
}

TEST_CASE("highest roots of the doubled-bond types") {
  CHECK(RootDatum::build("B2").highest_root().root_coords ==
        std::vector<long long>{1, 2});
  CHECK(RootDatum::build("C2").highest_root().root_coords ==
        std::vector<long long>{2, 1});
}

TEST_CASE("highest root maximizes height and cannot grow") {
  for (const std::string& label : {"A2", "B2", "C2", "G2", "A3", "D4", "F4"}) {
    RootDatum d = RootDatum::build(label);
    const Root& delta = d.highest_root();
    for (const auto& r : d.positive_roots())
      if (!(r.root_coords == delta.root_coords)) CHECK(r.height < delta.height);
    for (int i = 0; i < d.rank(); ++i) {
      Weight sum = delta.wt + d.simple_root(i);
      CHECK(!d.classify_root(sum.c).has_value());
    }
  }
}

TEST_CASE("pairing against the Cartan matrix") {
  RootDatum d = RootDatum::build("A2");
  CHECK(d.pairing(d.simple_root(0), d.simple_coroot(0)) == 2);
  CHECK(d.pairing(d.simple_root(0), d.simple_coroot(1)) == -1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(d.pairing(d.simple_root(j), d.simple_coroot(i)) == d.cartan().at(i, j));

  RootDatum a1 = RootDatum::build("A1");
  CHECK(a1.pairing(a1.fundamental_weight(0), a1.simple_coroot(0)) == 1);
}

TEST_CASE("pairing is bilinear") {
  RootDatum d = RootDatum::build("B2");
  Weight mu = d.weight({3, -2}), nu = d.weight({-1, 5});
  Coroot v = d.coroot({2, 7});
  CHECK(d.pairing(mu + nu, v) == d.pairing(mu, v) + d.pairing(nu, v));
  CHECK(d.pairing(mu * 4, v) == 4 * d.pairing(mu, v));
}

TEST_CASE("pairing rejects mismatched data") {
  RootDatum a = RootDatum::build("A2");
  RootDatum b = RootDatum::build("B2");
  CHECK_THROWS_AS(a.pairing(b.fundamental_weight(0), a.simple_coroot(0)),
                  std::invalid_argument);
}

TEST_CASE("find_weight_pairing_one") {
  RootDatum a1 = RootDatum::build("A1");
  Weight mu = a1.find_weight_pairing_one(a1.simple_coroot(0));
  CHECK(mu == a1.fundamental_weight(0));

  RootDatum a2 = RootDatum::build("A2");
  Weight mu2 = a2.find_weight_pairing_one(a2.highest_root().cv);
  CHECK(mu2 == a2.fundamental_weight(0));
  CHECK(a2.pairing(mu2, a2.highest_root().cv) == 1);

  RootDatum g2 = RootDatum::build("G2");
  Weight mu3 = g2.find_weight_pairing_one(g2.highest_root().cv);
  CHECK(g2.pairing(mu3, g2.highest_root().cv) == 1);

  // gcd obstruction is reported with its value.
  CHECK_THROWS_WITH_AS(a2.find_weight_pairing_one(a2.coroot({2, 0})),
                       doctest::Contains("gcd = 2"), std::invalid_argument);
}

TEST_CASE("unknown labels are rejected with a diagnostic") {
  CHECK_THROWS_AS(RootDatum::build("Z3"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("B1"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("D3"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("F5"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build(""), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("A0"), std::invalid_argument);
}

TEST_CASE("every root is in the reflection orbit of a simple root") {
  // The builder runs this check itself for rank <= 4; re-run it here
  // explicitly for one multiply-laced type.
  RootDatum d = RootDatum::build("G2");
  std::set<std::vector<long long>> orbit;
  std::vector<std::vector<long long>> work;
  for (int j = 0; j < d.rank(); ++j) {
    orbit.insert(d.simple_root(j).c);
    work.push_back(d.simple_root(j).c);
  }
  while (!work.empty()) {
    auto wc = work.back();
    work.pop_back();
    for (int i = 0; i < d.rank(); ++i) {
      auto img = wc;
      long long pi = wc[i];
      for (int k = 0; k < d.rank(); ++k) img[k] -= pi * d.cartan().at(k, i);
      if (orbit.insert(img).second) work.push_back(img);
    }
  }
  for (const auto& r : d.positive_roots()) CHECK(orbit.count(r.wt.c) == 1);
}
