#include <doctest.h>

#include <random>

#include "brauerkit/errors.hpp"
#include "brauerkit/term.hpp"

using namespace brauerkit;

TEST_CASE("block expansion base cases and unrollings") {
  // cup block at lo == hi is the plain cup
  CHECK(expand_block({BlockKind::Cup, 3, 3}) == Term{{cup(3)}});
  // crossing block unrolls downward
  CHECK(expand_block({BlockKind::Cross, 2, 1}) == Term{{cross(2), cross(1)}});
  // cap block: crossings first, cap last
  CHECK(expand_block({BlockKind::Cap, 3, 1}) == Term{{cross(3), cross(2), cap(1)}});
  // cup block: cup first, crossings rising
  CHECK(expand_block({BlockKind::Cup, 3, 1}) == Term{{cup(1), cross(2), cross(3)}});

  CHECK_THROWS_AS(expand_block({BlockKind::Cup, 1, 2}), input_error);
  CHECK_THROWS_AS(expand_block({BlockKind::Cap, 3, 0}), input_error);
  CHECK_THROWS_AS(cup(0), input_error);
  CHECK_THROWS_AS(cross(-1), input_error);
}

TEST_CASE("normal forms expand to flat terms") {
  CHECK(nf_to_term(NormalForm{}) == Term{});
  CHECK(nf_to_term(NormalForm{1, {}, {}, {}}) == Term{{cup(1), cap(1)}});
  CHECK(nf_to_term(NormalForm{0, {}, {{1, 1}, {2, 1}}, {}}) ==
        Term{{cross(1), cross(2), cross(1)}});
  // caps render in decreasing-lo display order
  CHECK(nf_to_term(NormalForm{0, {{1, 1}, {2, 2}}, {}, {}}) ==
        Term{{cap(2), cap(1)}});

  CHECK_THROWS_AS(validate(NormalForm{0, {{1, 2}, {1, 1}}, {}, {}}), input_error);
  CHECK_THROWS_AS(validate(NormalForm{0, {}, {{2, 1}, {2, 2}}, {}}), input_error);
  CHECK_THROWS_AS(validate(NormalForm{0, {}, {}, {{3, 2}}}), input_error);
  CHECK_THROWS_AS(validate(NormalForm{-1, {}, {}, {}}), input_error);
}

TEST_CASE("dual_of mirrors terms") {
  CHECK(dual_of(Term{{cup(3)}}) == Term{{cap(3)}});
  CHECK(dual_of(Term{{cross(1), cap(2)}}) == Term{{cup(2), cross(1)}});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Term t;
    const int len = static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) {
      const int k = static_cast<int>(rng() % 5) + 1;
      switch (rng() % 3) {
        case 0: t.append(cup(k)); break;
        case 1: t.append(cap(k)); break;
        default: t.append(cross(k)); break;
      }
    }
    CHECK(dual_of(dual_of(t)) == t);
  }
}
