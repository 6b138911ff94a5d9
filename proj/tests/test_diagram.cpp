#include <doctest.h>

#include <random>

#include "brauerkit/diagram.hpp"
#include "brauerkit/errors.hpp"

using namespace brauerkit;

namespace {

Diagram diag(int top, int bottom, std::vector<std::pair<int, int>> pairs) {
  return Diagram::from_pairs(top, bottom, std::move(pairs));
}

}  // namespace

TEST_CASE("generator diagrams") {
  CHECK(identity_diag() == diag(0, 0, {}));
  CHECK(cup_diag(1) == diag(2, 0, {{1, 2}}));
  CHECK(cup_diag(3) == diag(4, 2, {{1, -1}, {2, -2}, {3, 4}}));
  CHECK(cap_diag(1) == diag(0, 2, {{-1, -2}}));
  CHECK(cross_diag(1) == diag(2, 2, {{1, -2}, {2, -1}}));
  CHECK(mirror(cap_diag(4)) == cup_diag(4));
  CHECK(mirror(cross_diag(2)) == cross_diag(2));
  CHECK(mirror(identity_diag()) == identity_diag());
  CHECK_THROWS_AS(cup_diag(0), input_error);
  CHECK_THROWS_AS(cap_diag(-2), input_error);
}

TEST_CASE("canonicalization strips tail pairs") {
  CHECK(diag(1, 1, {{1, -1}}) == identity_diag());
  CHECK(diag(3, 3, {{1, -2}, {2, -1}, {3, -3}}) == cross_diag(1));
  // blocked after one strip: {2,-2} is not a tail pair once {3,-3} is gone
  Diagram d = diag(3, 3, {{1, -2}, {2, -1}, {3, -3}});
  CHECK(d.top() == 2);
  CHECK(d.bottom() == 2);
  // parity is preserved by construction
  CHECK((d.top() - d.bottom()) % 2 == 0);

  CHECK_THROWS_AS(diag(2, 0, {{1, 1}}), input_error);
  CHECK_THROWS_AS(diag(2, 2, {{1, -1}, {1, -2}}), input_error);
  CHECK_THROWS_AS(diag(1, 1, {{1, -2}}), input_error);
}

TEST_CASE("the worked composition example") {
  const Diagram d1 = diag(6, 8, {{1, -3}, {2, 3}, {4, -4}, {5, -1},
                                 {-2, -6}, {-5, -7}, {6, -8}});
  CHECK(d1.top() == 5);
  CHECK(d1.bottom() == 7);
  const Diagram d2 = diag(8, 4, {{1, -1}, {2, 7}, {3, -3}, {4, -2}, {5, 6}, {8, -4}});
  CHECK(d2.top() == 7);
  CHECK(d2.bottom() == 3);

  const Composite c = compose(d2, d1);
  CHECK(c.loops == 1);
  CHECK(c.diagram == diag(6, 4, {{1, -3}, {2, 3}, {4, -2}, {5, -1}, {6, -4}}));
  CHECK(c.diagram.top() == 5);
  CHECK(c.diagram.bottom() == 3);
}

TEST_CASE("unit laws and loop bookkeeping") {
  const Diagram d = compose(cross_diag(2), cup_diag(1)).diagram;
  CHECK(compose(identity_diag(), d).diagram == d);
  CHECK(compose(d, identity_diag()).diagram == d);
  CHECK(compose(identity_diag(), d).loops == 0);

  CHECK(compose(cup_diag(1), cap_diag(1)).loops == 1);
  CHECK(compose(cup_diag(1), cap_diag(1)).diagram == identity_diag());
  CHECK(compose(cross_diag(3), cross_diag(3)).diagram == identity_diag());
  CHECK(compose(cross_diag(3), cross_diag(3)).loops == 0);

  const SKDiagram a{identity_diag(), 2};
  const SKDiagram b{identity_diag(), 3};
  CHECK(compose_sk(a, b) == SKDiagram{identity_diag(), 5});
  CHECK(compose_sk(SKDiagram{identity_diag(), 0}, SKDiagram{d, 4}) ==
        SKDiagram{d, 4});
}

TEST_CASE("loop count is independent of padding") {
  const Diagram d1 = cap_diag(1);
  const Diagram d2 = cup_diag(1);
  for (int extra = 0; extra <= 4; ++extra) {
    const Composite c = compose(d2, d1, 2 + extra);
    CHECK(c.loops == 1);
    CHECK(c.diagram == identity_diag());
  }
  const Diagram e1 = compose(cross_diag(1), cap_diag(2)).diagram;
  const Composite base = compose(cup_diag(2), e1);
  for (int extra = 1; extra <= 3; ++extra) {
    const Composite padded = compose(cup_diag(2), e1, e1.bottom() + extra);
    CHECK(padded.loops == base.loops);
    CHECK(padded.diagram == base.diagram);
  }
}

namespace {

std::vector<Diagram> small_diagrams() {
  std::vector<Diagram> ds{identity_diag()};
  for (int k = 1; k <= 4; ++k) {
    ds.push_back(cup_diag(k));
    ds.push_back(cap_diag(k));
    ds.push_back(cross_diag(k));
  }
  return ds;
}

}  // namespace

TEST_CASE("associativity, exhaustively on generators and on random composites") {
  const std::vector<Diagram> ds = small_diagrams();
  auto sk = [](const Diagram& d) { return SKDiagram{d, 0}; };
  for (const Diagram& a : ds)
    for (const Diagram& b : ds)
      for (const Diagram& c : ds) {
        CHECK(compose_sk(compose_sk(sk(a), sk(b)), sk(c)) ==
              compose_sk(sk(a), compose_sk(sk(b), sk(c))));
      }

  std::mt19937_64 rng(11);
  auto random_diagram = [&] {
    SKDiagram acc{identity_diag(), 0};
    const int len = static_cast<int>(rng() % 6) + 1;
    for (int i = 0; i < len; ++i) {
      const int k = static_cast<int>(rng() % 4) + 1;
      Diagram g = rng() % 3 == 0 ? cup_diag(k) : rng() % 2 == 0 ? cap_diag(k)
                                                                : cross_diag(k);
      acc = compose_sk(acc, SKDiagram{g, 0});
    }
    return acc;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const SKDiagram a = random_diagram(), b = random_diagram(), c = random_diagram();
    CHECK(compose_sk(compose_sk(a, b), c) == compose_sk(a, compose_sk(b, c)));
    // parity invariant
    const SKDiagram ab = compose_sk(a, b);
    CHECK((ab.diagram.top() - ab.diagram.bottom()) % 2 == 0);
  }
}

TEST_CASE("mirror is an anti-homomorphism with equal loop counts") {
  std::mt19937_64 rng(13);
  auto rand_gen = [&] {
    const int k = static_cast<int>(rng() % 4) + 1;
    switch (rng() % 3) {
      case 0: return cup_diag(k);
      case 1: return cap_diag(k);
      default: return cross_diag(k);
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    Diagram d1 = rand_gen(), d2 = rand_gen();
    if (trial % 3 == 0) d1 = compose(d1, rand_gen()).diagram;
    const Composite c = compose(d2, d1);
    const Composite m = compose(mirror(d1), mirror(d2));
    CHECK(mirror(c.diagram) == m.diagram);
    CHECK(c.loops == m.loops);
    CHECK(mirror(mirror(d1)) == d1);
  }
}

TEST_CASE("JSON round trip is bit-exact") {
  const Diagram d = diag(6, 8, {{1, -3}, {2, 3}, {4, -4}, {5, -1},
                                {-2, -6}, {-5, -7}, {6, -8}});
  const std::string s = to_json(d);
  CHECK(diagram_from_json(s) == d);
  CHECK(to_json(diagram_from_json(s)) == s);

  const SKDiagram sk{d, 3};
  const std::string sks = to_json(sk);
  CHECK(sk_from_json(sks) == sk);
  CHECK(to_json(sk_from_json(sks)) == sks);

  CHECK(to_json(identity_diag()) == R"({"bottom":0,"pairs":[],"top":0})");
  CHECK_THROWS_AS(diagram_from_json(R"({"top":1,"bottom":1,"pairs":[]})"),
                  input_error);
}
