#include <doctest.h>

#include <random>

#include "brauerkit/enumerate.hpp"
#include "brauerkit/rewrite.hpp"
#include "brauerkit/semantics.hpp"
#include "brauerkit/textio.hpp"

using namespace brauerkit;

TEST_CASE("normalization of the small classics") {
  CHECK(normalize_rewrite(parse_term("s1 s1")) == NormalForm{});
  CHECK(normalize_rewrite(parse_term("u1 n2")) == NormalForm{});
  CHECK(normalize_rewrite(parse_term("u1 n1")) == NormalForm{1, {}, {}, {}});
  CHECK(normalize_rewrite(parse_term("u2 n2")) == NormalForm{1, {}, {}, {}});
  CHECK(normalize_rewrite(parse_term("s2 s1 s2")) ==
        NormalForm{0, {}, {{1, 1}, {2, 1}}, {}});
  CHECK(normalize_rewrite(parse_term("s1 s2 s1")) ==
        NormalForm{0, {}, {{1, 1}, {2, 1}}, {}});
  CHECK(normalize_rewrite(Term{}) == NormalForm{});
  CHECK(normalize_rewrite(parse_term("s1 n1")) == NormalForm{0, {{1, 1}}, {}, {}});
}

TEST_CASE("every catalogued equation is sound for the diagram semantics") {
  for (const EquationInstance& eq : equation_catalogue(4)) {
    REQUIRE_MESSAGE(eval_kappa(eq.lhs) == eval_kappa(eq.rhs),
                    eq.family << ": " << print_term(eq.lhs) << " = "
                              << print_term(eq.rhs));
  }
}

TEST_CASE("idempotence on enumerated and sampled normal forms") {
  // exhaustive: indices <= 4, at most 2 blocks per section
  std::vector<std::vector<std::pair<int, int>>> cap_lists{{}};  // increasing lo
  for (int lo = 1; lo <= 4; ++lo)
    for (int hi = lo; hi <= 4; ++hi) {
      cap_lists.push_back({{hi, lo}});
      for (int lo2 = lo + 1; lo2 <= 4; ++lo2)
        for (int hi2 = lo2; hi2 <= 4; ++hi2)
          cap_lists.push_back({{hi, lo}, {hi2, lo2}});
    }
  std::vector<std::vector<std::pair<int, int>>> cross_lists{{}};  // increasing hi
  for (int hi = 1; hi <= 4; ++hi)
    for (int lo = 1; lo <= hi; ++lo) {
      cross_lists.push_back({{hi, lo}});
      for (int hi2 = hi + 1; hi2 <= 4; ++hi2)
        for (int lo2 = 1; lo2 <= hi2; ++lo2)
          cross_lists.push_back({{hi, lo}, {hi2, lo2}});
    }
  long long cases = 0;
  for (long long circles = 0; circles <= 1; ++circles)
    for (const auto& caps : cap_lists)
      for (const auto& crossings : cross_lists)
        for (const auto& cups : cap_lists) {
          NormalForm nf;
          nf.circles = circles;
          nf.caps = caps;
          nf.crossings = crossings;
          for (const auto& [hi, lo] : cups) nf.cups.push_back({lo, hi});
          const NormalForm back = normalize_rewrite(nf_to_term(nf));
          ++cases;
          REQUIRE_MESSAGE(back == nf, print_normal_form(nf));
        }
  CHECK(cases > 100000);

  // sampled: indices <= 6, up to 3 blocks per section
  std::mt19937_64 rng(2024);
  auto random_blocks = [&](bool lo_first) {
    std::vector<std::pair<int, int>> blocks;
    const int count = static_cast<int>(rng() % 4);
    int lo = 0;
    for (int i = 0; i < count; ++i) {
      lo += 1 + static_cast<int>(rng() % 2);
      if (lo > 6) break;
      const int hi = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(7 - lo));
      blocks.push_back(lo_first ? std::pair{lo, hi} : std::pair{hi, lo});
    }
    return blocks;
  };
  for (int trial = 0; trial < 3000; ++trial) {
    NormalForm nf;
    nf.circles = static_cast<long long>(rng() % 3);
    nf.caps = random_blocks(false);
    nf.crossings.clear();
    // crossing blocks sort on hi; rebuild with strictly increasing hi
    int hi = 0;
    const int n_cross = static_cast<int>(rng() % 4);
    for (int i = 0; i < n_cross; ++i) {
      hi += 1 + static_cast<int>(rng() % 2);
      if (hi > 6) break;
      const int lo = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi));
      nf.crossings.push_back({hi, lo});
    }
    nf.cups = random_blocks(true);
    const NormalForm back = normalize_rewrite(nf_to_term(nf));
    REQUIRE_MESSAGE(back == nf, print_normal_form(nf));
  }
}

TEST_CASE("normalization is a congruence") {
  std::mt19937_64 rng(5150);
  const std::vector<Term> ts = random_terms(4, 8, 150, 4242);
  for (const Term& t : ts) {
    const Term u = nf_to_term(normalize_rewrite(t));
    const Term v = random_context(4, 4, rng());
    const Term w = random_context(4, 4, rng());
    const Term vtw = concat(v, concat(t, w));
    const Term vuw = concat(v, concat(u, w));
    REQUIRE(normalize_rewrite(vtw) == normalize_rewrite(vuw));
    REQUIRE(equal_sk(vtw, vuw));
  }
}

TEST_CASE("duality maps normal forms to mirrored normal forms") {
  for (const Term& t : random_terms(5, 10, 400, 777)) {
    const NormalForm nf = normalize_rewrite(t);
    const NormalForm dual_nf = normalize_rewrite(dual_of(t));
    // semantic statement: the dual normalizes to the mirror image
    REQUIRE(dual_nf == extract_normal_form(mirror_sk(eval_kappa(t))));
    // caps and cups swap as transposed lists
    std::vector<std::pair<int, int>> swapped;
    for (const auto& [lo, hi] : nf.cups) swapped.push_back({hi, lo});
    REQUIRE(dual_nf.caps == swapped);
    swapped.clear();
    for (const auto& [hi, lo] : nf.caps) swapped.push_back({lo, hi});
    REQUIRE(dual_nf.cups == swapped);
    REQUIRE(dual_nf.circles == nf.circles);
  }
}
