#include "brauerkit/enumerate.hpp"

#include <algorithm>
#include <random>

#include "brauerkit/errors.hpp"

namespace brauerkit {

namespace {

Generator nth_generator(int id, int max_index) {
  // Order: u1..u_max, n1..n_max, s1..s_max.
  const int k = id % max_index + 1;
  switch (id / max_index) {
    case 0: return cup(k);
    case 1: return cap(k);
    default: return cross(k);
  }
}

}  // namespace

std::vector<Term> all_terms(int max_index, int max_len) {
  const int g = 3 * max_index;
  std::vector<Term> out;
  std::size_t total = 0, pw = 1;
  for (int len = 0; len <= max_len; ++len) {
    total += pw;
    pw *= static_cast<std::size_t>(g);
  }
  out.reserve(total);
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    for (;;) {
      Term t;
      t.factors.reserve(static_cast<std::size_t>(len));
      for (int d : digits) t.append(nth_generator(d, max_index));
      out.push_back(std::move(t));
      int pos = len - 1;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == g - 1)
        digits[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

std::vector<Term> random_terms(int max_index, int max_len, int count,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t g = static_cast<std::uint64_t>(3 * max_index);
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len)) + 1;
    Term t;
    for (int j = 0; j < len; ++j)
      t.append(nth_generator(static_cast<int>(rng() % g), max_index));
    out.push_back(std::move(t));
  }
  return out;
}

Term random_context(int max_index, int max_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t g = static_cast<std::uint64_t>(3 * max_index);
  const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
  Term t;
  for (int j = 0; j < len; ++j)
    t.append(nth_generator(static_cast<int>(rng() % g), max_index));
  return t;
}

std::vector<ArrowPtr> all_arrows(int max_index, int max_size) {
  const int type_cap = max_index + 2;
  // max_type[i] tracks the largest object appearing anywhere inside
  // by_size[s][i]; Fap shifts it up, so it is needed for the bound.
  std::vector<std::vector<ArrowPtr>> by_size(static_cast<std::size_t>(max_size) + 1);
  std::vector<std::vector<int>> max_type(static_cast<std::size_t>(max_size) + 1);

  for (int n = 0; n <= max_index; ++n) {
    for (ArrowPtr a : {id_arrow(n), phi_arrow(n), gamma_arrow(n), chi_arrow(n)}) {
      const int mt = std::max(a->src, a->tgt);
      if (mt <= type_cap) {
        by_size[1].push_back(a);
        max_type[1].push_back(mt);
      }
    }
  }
  for (int s = 2; s <= max_size; ++s) {
    for (std::size_t i = 0; i < by_size[static_cast<std::size_t>(s - 1)].size(); ++i) {
      if (max_type[static_cast<std::size_t>(s - 1)][i] + 1 > type_cap) continue;
      by_size[static_cast<std::size_t>(s)].push_back(
          fap(by_size[static_cast<std::size_t>(s - 1)][i]));
      max_type[static_cast<std::size_t>(s)].push_back(
          max_type[static_cast<std::size_t>(s - 1)][i] + 1);
    }
    for (int a = 1; a + 1 + 1 <= s; ++a) {
      const int b = s - 1 - a;
      for (std::size_t gi = 0; gi < by_size[static_cast<std::size_t>(a)].size(); ++gi)
        for (std::size_t fi = 0; fi < by_size[static_cast<std::size_t>(b)].size();
             ++fi) {
          const ArrowPtr& g = by_size[static_cast<std::size_t>(a)][gi];
          const ArrowPtr& f = by_size[static_cast<std::size_t>(b)][fi];
          if (f->tgt != g->src) continue;
          by_size[static_cast<std::size_t>(s)].push_back(comp(g, f));
          max_type[static_cast<std::size_t>(s)].push_back(
              std::max(max_type[static_cast<std::size_t>(a)][gi],
                       max_type[static_cast<std::size_t>(b)][fi]));
        }
    }
  }
  std::vector<ArrowPtr> out;
  for (auto& bucket : by_size)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<Diagram> permutation_diagrams(int n) {
  if (n < 1) throw input_error("strand count must be >= 1");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Diagram> out;
  do {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      pairs.push_back({i, -perm[static_cast<std::size_t>(i - 1)]});
    out.push_back(Diagram::from_pairs(n, n, std::move(pairs)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace brauerkit
