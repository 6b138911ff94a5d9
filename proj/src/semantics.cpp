#include "brauerkit/semantics.hpp"

#include <algorithm>

#include "brauerkit/errors.hpp"

namespace brauerkit {

namespace {

Diagram generator_diagram(Generator g) {
  switch (g.kind) {
    case GenKind::Cup: return cup_diag(g.index);
    case GenKind::Cap: return cap_diag(g.index);
    case GenKind::Cross: return cross_diag(g.index);
  }
  throw internal_error("unknown generator kind");
}

}  // namespace

Diagram eval_iota(const Term& t) {
  Diagram acc = identity_diag();
  // The rightmost factor is applied first, i.e. ends up on top; folding
  // left-to-right keeps each new factor's diagram in the top slot.
  for (Generator g : t.factors) acc = compose(acc, generator_diagram(g)).diagram;
  return acc;
}

SKDiagram eval_kappa(const Term& t) {
  SKDiagram acc{identity_diag(), 0};
  for (Generator g : t.factors)
    acc = compose_sk(acc, SKDiagram{generator_diagram(g), 0});
  return acc;
}

namespace {

// Removes the cup {lo, hi} (lo < hi, both top points) and renumbers the
// remaining top points: x in (lo, hi) slides down by 1, x > hi by 2.
Diagram shrink_cup(const Diagram& d, int lo, int hi) {
  auto renum = [&](int p) {
    if (p < 0) return p;
    if (p > hi) return p - 2;
    if (p > lo) return p - 1;
    return p;
  };
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : d.pairs()) {
    if (a == lo && b == hi) continue;
    out.push_back({renum(a), renum(b)});
  }
  return Diagram::from_pairs(d.top() - 2, d.bottom(), std::move(out));
}

// Maximal cup = the cup with the largest left end point; unique because end
// points are distinct.  Returns {lo, hi} or nothing.
std::optional<std::pair<int, int>> maximal_cup(const Diagram& d) {
  std::optional<std::pair<int, int>> best;
  for (const auto& [a, b] : d.pairs())
    if (a > 0 && b > 0 && (!best || a > best->first)) best = {a, b};
  return best;
}

// Maximal falling thread {l,-k} with l < k: the one with the largest k.
std::optional<std::pair<int, int>> maximal_falling(const Diagram& d) {
  std::optional<std::pair<int, int>> best;  // (l, k)
  for (const auto& [a, b] : d.pairs())
    if (a > 0 && b < 0 && a < -b && (!best || -b > best->second)) best = {a, -b};
  return best;
}

// Removes the falling thread {l,-k}; top points in (l, k] slide down by 1
// and the straight thread {k,-k} is restored.
Diagram shrink_falling(const Diagram& d, int l, int k) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : d.pairs()) {
    if (a == l && b == -k) continue;
    int na = (a > l && a <= k) ? a - 1 : a;
    out.push_back({na, b});
  }
  out.push_back({k, -k});
  return Diagram::from_pairs(d.top(), d.bottom(), std::move(out));
}

}  // namespace

NormalForm extract_normal_form(const SKDiagram& sk) {
  NormalForm nf;
  nf.circles = sk.circles;

  // Cup phase: the maximal cup {m, n+1} peels off as the block-cup (m, n).
  Diagram d = sk.diagram;
  while (auto cup = maximal_cup(d)) {
    nf.cups.push_back({cup->first, cup->second - 1});
    d = shrink_cup(d, cup->first, cup->second);
  }

  // Cap phase is the mirror image of the cup phase; a mirrored cup (m, n+1)
  // is the cap {-m, -(n+1)}, recorded as the block-cap (n, m).
  Diagram md = mirror(d);
  while (auto cup = maximal_cup(md)) {
    nf.caps.push_back({cup->second - 1, cup->first});
    md = shrink_cup(md, cup->first, cup->second);
  }
  d = mirror(md);

  // Crossing phase on the remaining permutation diagram: the maximal
  // falling thread {l, -(k+1)} peels off as the block-crossing (k, l).
  while (auto fall = maximal_falling(d)) {
    nf.crossings.push_back({fall->second - 1, fall->first});
    d = shrink_falling(d, fall->first, fall->second);
  }
  if (!(d == identity_diag()))
    throw internal_error("extraction did not reduce to the unit diagram");

  // Each phase produces strictly decreasing low (resp. high) indices;
  // reverse into the normal-form order.
  std::reverse(nf.cups.begin(), nf.cups.end());
  std::reverse(nf.caps.begin(), nf.caps.end());
  std::reverse(nf.crossings.begin(), nf.crossings.end());
  validate(nf);
  return nf;
}

bool equal_sk(const Term& t, const Term& u) { return eval_kappa(t) == eval_kappa(u); }

bool equal_sj(const Term& t, const Term& u) { return eval_iota(t) == eval_iota(u); }

std::optional<std::pair<long long, long long>> circle_pad_witness(const Term& t,
                                                                  const Term& u) {
  SKDiagram kt = eval_kappa(t);
  SKDiagram ku = eval_kappa(u);
  if (!(kt.diagram == ku.diagram)) return std::nullopt;
  if (kt.circles >= ku.circles) return std::pair{0LL, kt.circles - ku.circles};
  return std::pair{ku.circles - kt.circles, 0LL};
}

}  // namespace brauerkit
