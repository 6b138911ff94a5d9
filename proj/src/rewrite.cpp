#include "brauerkit/rewrite.hpp"

#include <algorithm>
#include <optional>

#include "brauerkit/errors.hpp"

namespace brauerkit {

namespace {

// Working alphabet of the normalizer.  CapB(hi,lo) is a block-cap,
// CrossB(hi,lo) a block-crossing; Cup and Cross are plain generators
// (field a).  Circles live in a separate counter.
struct Atom {
  enum Kind : std::uint8_t { Cup, Cross, CapB, CrossB } kind;
  int a = 0;
  int b = 0;
};

struct Repl {
  std::vector<Atom> atoms;
  int circles = 0;
};

Atom mk_cup(int k) { return {Atom::Cup, k, 0}; }
Atom mk_cross(int k) { return {Atom::Cross, k, 0}; }
Atom mk_capb(int hi, int lo) { return {Atom::CapB, hi, lo}; }
Atom mk_crossb(int hi, int lo) { return {Atom::CrossB, hi, lo}; }

// cup-block-cap table: left is the cup u_k, right the block-cap n[i..j].
Repl cup_cap_rule(int k, int i, int j) {
  if (j >= k + 2) return {{mk_capb(i - 2, j - 2), mk_cup(k)}, 0};  // i
  if (j >= k) {                                                    // ii: j in {k, k+1}
    if (i >= k + 2) {                                              // ii.1
      Repl r;
      for (int x = i - 2; x >= k; --x) r.atoms.push_back(mk_cross(x));
      return r;
    }
    if (i == k + 1) return {{}, 0};  // ii.2
    return {{}, 1};                  // ii.3 (i == k): a circle
  }
  // iii: j <= k-1
  if (k <= i - 1) return {{mk_capb(i - 2, j), mk_cup(k - 1)}, 0};  // iii.1
  if (k <= i + 1) {                                                // iii.2
    if (j < k - 1) {                                               // iii.2.1
      Repl r;
      for (int x = j; x <= k - 2; ++x) r.atoms.push_back(mk_cross(x));
      return r;
    }
    return {{}, 0};  // iii.2.2 (j == k-1)
  }
  return {{mk_capb(i, j), mk_cup(k - 2)}, 0};  // iii.3 (k >= i+2)
}

// sigma-block-cap table: left is the crossing s_k, right the block-cap.
Repl cross_cap_rule(int k, int i, int j) {
  if (j >= k + 2) return {{mk_capb(i, j), mk_cross(k)}, 0};  // i
  if (j == k + 1) return {{mk_capb(i, j - 1)}, 0};           // ii
  if (j == k) {                                              // iii
    if (j < i) return {{mk_capb(i, j + 1)}, 0};              // iii.1
    return {{mk_capb(i, j)}, 0};                             // iii.2 (i == j)
  }
  // iv: j <= k-1
  if (i >= k + 1) return {{mk_capb(i, j), mk_cross(k - 1)}, 0};  // iv.1
  if (i == k) return {{mk_capb(i - 1, j)}, 0};                   // iv.2
  if (i == k - 1) return {{mk_capb(i + 1, j)}, 0};               // iv.3
  return {{mk_capb(i, j), mk_cross(k - 2)}, 0};                  // iv.4 (i <= k-2)
}

// double block-cap table: n[i..j] n[k..l], applicable only when j <= l.
std::optional<Repl> cap_cap_rule(int i, int j, int k, int l) {
  if (j > l) return std::nullopt;  // already ordered
  if (i <= l) return Repl{{mk_capb(k + 2, l + 2), mk_capb(i, j)}, 0};           // i
  if (i <= k + 1) return Repl{{mk_capb(k + 2, l + 1), mk_capb(i - 1, j)}, 0};   // ii
  return Repl{{mk_capb(k + 1, l + 1), mk_capb(i - 2, j)}, 0};                   // iii
}

// block-sigma table: x[i..j] x[k..l], applicable only when k <= i.
std::optional<Repl> cross_cross_rule(int i, int j, int k, int l) {
  if (k > i) return std::nullopt;  // already ordered
  if (j >= k + 2) return Repl{{mk_crossb(k, l), mk_crossb(i, j)}, 0};           // i
  if (j == k + 1) return Repl{{mk_crossb(i, l)}, 0};                            // ii
  if (j == k) {                                                                 // iii
    if (j < i && l < k) return Repl{{mk_crossb(k - 1, l), mk_crossb(i, j + 1)}, 0};
    if (j < i) return Repl{{mk_crossb(i, j + 1)}, 0};  // l == k
    if (l < k) return Repl{{mk_crossb(k - 1, l)}, 0};  // j == i
    return Repl{{}, 0};                                // j == i, l == k
  }
  // iv: j <= k-1
  if (l <= j) return Repl{{mk_crossb(k - 1, l), mk_crossb(i, j + 1)}, 0};  // iv.1
  return Repl{{mk_crossb(k - 1, l - 1), mk_crossb(i, j)}, 0};             // iv.2
}

std::optional<Repl> phase1_rule(const Atom& left, const Atom& right) {
  if (right.kind != Atom::CapB) return std::nullopt;
  switch (left.kind) {
    case Atom::Cup: return cup_cap_rule(left.a, right.a, right.b);
    case Atom::Cross: return cross_cap_rule(left.a, right.a, right.b);
    case Atom::CapB: return cap_cap_rule(left.a, left.b, right.a, right.b);
    default: return std::nullopt;
  }
}

std::optional<Repl> phase3_rule(const Atom& left, const Atom& right) {
  if (left.kind != Atom::CrossB || right.kind != Atom::CrossB) return std::nullopt;
  return cross_cross_rule(left.a, left.b, right.a, right.b);
}

constexpr long long kStepBudget = 10'000'000;

// Leftmost-first fixpoint loop.  After a replacement the scan backs up one
// position; everything further left is already irreducible.
template <class Rule>
void run_phase(std::vector<Atom>& seq, long long& circles, long long& budget,
               Rule&& rule) {
  std::size_t pos = 0;
  while (seq.size() >= 2 && pos + 1 < seq.size()) {
    auto r = rule(seq[pos], seq[pos + 1]);
    if (!r) {
      ++pos;
      continue;
    }
    if (--budget < 0) throw internal_error("rewrite step budget exceeded");
    circles += r->circles;
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(pos),
              seq.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), r->atoms.begin(),
               r->atoms.end());
    pos = pos > 0 ? pos - 1 : 0;
  }
}

// Phase 2 works on the cup/crossing segment through its mirror image: a
// mirrored cup is a cap, so the phase-1 machinery applies verbatim and the
// dual rule set never needs transcribing.  No rule used here can create a
// circle (and none may, since the segment is circle-free).
std::vector<Atom> mirror_atoms(const std::vector<Atom>& seq) {
  std::vector<Atom> out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    switch (it->kind) {
      case Atom::Cup: out.push_back(mk_capb(it->a, it->a)); break;
      case Atom::Cross: out.push_back(mk_cross(it->a)); break;
      default: throw internal_error("cap phase left a block behind");
    }
  }
  return out;
}

}  // namespace

NormalForm normalize_rewrite(const Term& t) {
  long long budget = kStepBudget;
  NormalForm nf;

  // Phase 1: blockify caps, push them left, sweep circles into the counter.
  std::vector<Atom> seq;
  seq.reserve(t.size());
  for (Generator g : t.factors) {
    switch (g.kind) {
      case GenKind::Cup: seq.push_back(mk_cup(g.index)); break;
      case GenKind::Cap: seq.push_back(mk_capb(g.index, g.index)); break;
      case GenKind::Cross: seq.push_back(mk_cross(g.index)); break;
    }
  }
  run_phase(seq, nf.circles, budget, [](const Atom& l, const Atom& r) {
    return phase1_rule(l, r);
  });

  std::size_t p = 0;
  while (p < seq.size() && seq[p].kind == Atom::CapB) {
    nf.caps.push_back({seq[p].a, seq[p].b});
    ++p;
  }
  std::reverse(nf.caps.begin(), nf.caps.end());

  // Phase 2: the same machinery on the mirrored remainder.
  std::vector<Atom> rest(seq.begin() + static_cast<std::ptrdiff_t>(p), seq.end());
  std::vector<Atom> mirrored = mirror_atoms(rest);
  long long no_circles = 0;
  run_phase(mirrored, no_circles, budget, [](const Atom& l, const Atom& r) {
    return phase1_rule(l, r);
  });
  if (no_circles != 0) throw internal_error("circle arose in the cup phase");

  std::size_t q = 0;
  while (q < mirrored.size() && mirrored[q].kind == Atom::CapB) {
    nf.cups.push_back({mirrored[q].b, mirrored[q].a});  // mirrored cap = cup
    ++q;
  }
  std::reverse(nf.cups.begin(), nf.cups.end());  // un-mirroring reverses order

  // Phase 3: blockify the remaining crossings and sort them.
  std::vector<Atom> crossings;
  for (std::size_t x = mirrored.size(); x > q; --x) {
    const Atom& a = mirrored[x - 1];  // un-mirror: reverse again
    if (a.kind != Atom::Cross) throw internal_error("cup phase left a stray atom");
    crossings.push_back(mk_crossb(a.a, a.a));
  }
  run_phase(crossings, no_circles, budget, [](const Atom& l, const Atom& r) {
    return phase3_rule(l, r);
  });
  for (const Atom& a : crossings) nf.crossings.push_back({a.a, a.b});

  validate(nf);
  return nf;
}

namespace {

Term atom_term(const Atom& a) {
  switch (a.kind) {
    case Atom::Cup: return Term{{cup(a.a)}};
    case Atom::Cross: return Term{{cross(a.a)}};
    case Atom::CapB: return expand_block({BlockKind::Cap, a.a, a.b});
    case Atom::CrossB: return expand_block({BlockKind::Cross, a.a, a.b});
  }
  throw internal_error("unknown atom kind");
}

Term atoms_term(const std::vector<Atom>& atoms, int circles) {
  Term t = circle_power(circles);
  for (const Atom& a : atoms) t.append(atom_term(a));
  return t;
}

void emit(std::vector<EquationInstance>& out, const std::string& family, Atom l,
          Atom r, const Repl& repl, bool also_dual) {
  Term lhs = atoms_term({l, r}, 0);
  Term rhs = atoms_term(repl.atoms, repl.circles);
  if (also_dual) out.push_back({"dual(" + family + ")", dual_of(lhs), dual_of(rhs)});
  out.push_back({family, std::move(lhs), std::move(rhs)});
}

}  // namespace

std::vector<EquationInstance> equation_catalogue(int max_index) {
  std::vector<EquationInstance> out;
  const int n = max_index;
  auto T = [](std::initializer_list<Generator> gs) { return Term{gs}; };

  // Monoid equations are definitional for flat sequences; keep one token
  // instance per shape so the family is represented.
  out.push_back({"monoid-1", T({cross(1)}), T({cross(1)})});
  out.push_back({"monoid-2", T({cup(1), cap(1), cross(1)}), T({cup(1), cap(1), cross(1)})});

  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k) {
      out.push_back({"cup", T({cup(k), cup(j)}), T({cup(j), cup(k + 2)})});
      out.push_back({"cap", T({cap(j), cap(k)}), T({cap(k + 2), cap(j)})});
      out.push_back({"cup-cap-1", T({cup(k + 2), cap(j)}), T({cap(j), cup(k)})});
      out.push_back({"cap-cup-1", T({cup(j), cap(k + 2)}), T({cap(k), cup(j)})});
      out.push_back({"sigma", T({cross(k + 2), cross(j)}), T({cross(j), cross(k + 2)})});
      out.push_back({"sigma-cup-1", T({cup(k + 2), cross(j)}), T({cross(j), cup(k + 2)})});
      out.push_back({"sigma-cup-2", T({cup(j), cross(k + 2)}), T({cross(k), cup(j)})});
      out.push_back({"sigma-cap-1", T({cross(j), cap(k + 2)}), T({cap(k + 2), cross(j)})});
      out.push_back({"sigma-cap-2", T({cross(k + 2), cap(j)}), T({cap(j), cross(k)})});
    }
  for (int i = 1; i <= n; ++i) {
    out.push_back({"cup-cap", T({cup(i), cap(i + 1)}), {}});
    out.push_back({"sigma-2", T({cross(i), cross(i)}), {}});
    out.push_back({"sigma-3", T({cross(i + 1), cross(i), cross(i + 1)}),
                   T({cross(i), cross(i + 1), cross(i)})});
    out.push_back({"sigma-cup-3", T({cup(i), cross(i)}), T({cup(i)})});
    out.push_back({"sigma-cup-4", T({cup(i + 1), cross(i)}), T({cup(i), cross(i + 1)})});
    out.push_back({"sigma-cap-3", T({cross(i), cap(i)}), T({cap(i)})});
    out.push_back({"sigma-cap-4", T({cross(i), cap(i + 1)}), T({cross(i + 1), cap(i)})});
    out.push_back({"circle-shift", T({cup(i), cap(i)}), T({cup(i + 1), cap(i + 1)})});
  }

  // Unit and circle equations.
  for (const Generator g : {cup(1), cap(2), cross(3)}) {
    out.push_back({"one", T({g}), T({g})});
    out.push_back({"circle-commute", concat(T({g}), circle_power(1)),
                   concat(circle_power(1), T({g}))});
  }

  // Block equations, generated by the rule tables themselves.  The phase-2
  // rules are emitted as duals of the sigma-block-cap and double block-cap
  // instances.
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j) {
        emit(out, "cup-block-cap", mk_cup(k), mk_capb(i, j), cup_cap_rule(k, i, j),
             false);
        emit(out, "sigma-block-cap", mk_cross(k), mk_capb(i, j),
             cross_cap_rule(k, i, j), true);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l) {
          if (auto r = cap_cap_rule(i, j, k, l))
            emit(out, "double-block-cap", mk_capb(i, j), mk_capb(k, l), *r, true);
          if (auto r = cross_cross_rule(i, j, k, l))
            emit(out, "block-sigma", mk_crossb(i, j), mk_crossb(k, l), *r, false);
        }

  return out;
}

}  // namespace brauerkit
