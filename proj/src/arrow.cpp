#include "brauerkit/arrow.hpp"

#include <string>

#include "brauerkit/errors.hpp"
#include "brauerkit/semantics.hpp"

namespace brauerkit {

namespace {

ArrowPtr leaf(Arrow::Kind kind, int n, int src, int tgt) {
  if (n < 0) throw input_error("object index must be >= 0");
  auto a = std::make_shared<Arrow>();
  a->kind = kind;
  a->index = n;
  a->src = src;
  a->tgt = tgt;
  return a;
}

}  // namespace

ArrowPtr id_arrow(int n) { return leaf(Arrow::Kind::Id, n, n, n); }
ArrowPtr phi_arrow(int n) { return leaf(Arrow::Kind::Phi, n, n + 2, n); }
ArrowPtr gamma_arrow(int n) { return leaf(Arrow::Kind::Gamma, n, n, n + 2); }
ArrowPtr chi_arrow(int n) { return leaf(Arrow::Kind::Chi, n, n + 2, n + 2); }

ArrowPtr fap(const ArrowPtr& f) {
  auto a = std::make_shared<Arrow>();
  a->kind = Arrow::Kind::Fap;
  a->left = f;
  a->src = f->src + 1;
  a->tgt = f->tgt + 1;
  return a;
}

ArrowPtr comp(const ArrowPtr& g, const ArrowPtr& f) {
  if (f->tgt != g->src)
    throw input_error("composition type mismatch: " + std::to_string(f->tgt) +
                      " vs " + std::to_string(g->src));
  auto a = std::make_shared<Arrow>();
  a->kind = Arrow::Kind::Comp;
  a->left = g;
  a->right = f;
  a->src = f->src;
  a->tgt = g->tgt;
  return a;
}

std::size_t arrow_size(const ArrowPtr& f) {
  switch (f->kind) {
    case Arrow::Kind::Fap: return 1 + arrow_size(f->left);
    case Arrow::Kind::Comp: return 1 + arrow_size(f->left) + arrow_size(f->right);
    default: return 1;
  }
}

bool same_tree(const ArrowPtr& f, const ArrowPtr& g) {
  if (f.get() == g.get()) return true;
  if (f->kind != g->kind || f->index != g->index) return false;
  switch (f->kind) {
    case Arrow::Kind::Fap: return same_tree(f->left, g->left);
    case Arrow::Kind::Comp:
      return same_tree(f->left, g->left) && same_tree(f->right, g->right);
    default: return true;
  }
}

namespace {

void psi_into(const ArrowPtr& f, Term& out) {
  switch (f->kind) {
    case Arrow::Kind::Id: break;
    case Arrow::Kind::Phi: out.append(cup(f->index + 1)); break;
    case Arrow::Kind::Gamma: out.append(cap(f->index + 1)); break;
    case Arrow::Kind::Chi: out.append(cross(f->index + 1)); break;
    case Arrow::Kind::Fap: psi_into(f->left, out); break;
    case Arrow::Kind::Comp:
      psi_into(f->left, out);
      psi_into(f->right, out);
      break;
  }
}

}  // namespace

Term psi(const ArrowPtr& f) {
  Term t;
  psi_into(f, t);
  return t;
}

ArrowPtr fpow(int k, const ArrowPtr& f) {
  ArrowPtr r = f;
  for (int i = 0; i < k; ++i) r = fap(r);
  return r;
}

ArrowPtr star(const ArrowPtr& g, const ArrowPtr& f) {
  if (f->tgt <= g->src) return comp(g, fpow(g->src - f->tgt, f));
  return comp(fpow(f->tgt - g->src, g), f);
}

ArrowPtr xi(const Term& t) {
  if (t.empty()) return id_arrow(0);
  ArrowPtr acc;
  for (Generator g : t.factors) {
    ArrowPtr leaf_arrow;
    switch (g.kind) {
      case GenKind::Cup: leaf_arrow = phi_arrow(g.index - 1); break;
      case GenKind::Cap: leaf_arrow = gamma_arrow(g.index - 1); break;
      case GenKind::Cross: leaf_arrow = chi_arrow(g.index - 1); break;
    }
    acc = acc ? star(acc, leaf_arrow) : leaf_arrow;
  }
  return acc;
}

bool equal_k(const ArrowPtr& f, const ArrowPtr& g) {
  return f->src == g->src && f->tgt == g->tgt &&
         eval_kappa(psi(f)) == eval_kappa(psi(g));
}

bool equal_j(const ArrowPtr& f, const ArrowPtr& g) {
  return f->src == g->src && f->tgt == g->tgt &&
         eval_iota(psi(f)) == eval_iota(psi(g));
}

namespace {

// f (x) id_k: shift every generator subscript up by k.
ArrowPtr shift_by(const ArrowPtr& f, int k) {
  if (k == 0) return f;
  switch (f->kind) {
    case Arrow::Kind::Id: return id_arrow(f->index + k);
    case Arrow::Kind::Phi: return phi_arrow(f->index + k);
    case Arrow::Kind::Gamma: return gamma_arrow(f->index + k);
    case Arrow::Kind::Chi: return chi_arrow(f->index + k);
    case Arrow::Kind::Fap: return fap(shift_by(f->left, k));
    case Arrow::Kind::Comp:
      return comp(shift_by(f->left, k), shift_by(f->right, k));
  }
  throw internal_error("unknown arrow kind");
}

}  // namespace

ArrowPtr tensor(const ArrowPtr& f, const ArrowPtr& g) {
  if (f->kind == Arrow::Kind::Id) return fpow(f->index, g);
  if (g->kind == Arrow::Kind::Id) return shift_by(f, g->index);
  return comp(fpow(f->tgt, g), shift_by(f, g->src));
}

ArrowPtr sym(int n, int m) {
  if (n < 0 || m < 0) throw input_error("negative object index");
  if (n == 0) return id_arrow(m);
  if (m == 0) return id_arrow(n);
  if (m == 1)
    return comp(tensor(sym(n - 1, 1), id_arrow(1)), tensor(id_arrow(n - 1), chi_arrow(0)));
  return comp(tensor(id_arrow(m - 1), sym(n, 1)), tensor(sym(n, m - 1), id_arrow(1)));
}

ArrowPtr epsilon(int m, int n) {
  if (m < 0 || n < 0) throw input_error("negative object index");
  if (m == 0) return id_arrow(n);
  ArrowPtr inner = tensor(tensor(id_arrow(1), epsilon(m - 1, n)), id_arrow(1));
  return comp(phi_arrow(n),
              comp(inner, tensor(sym(m - 1, 1), id_arrow(n + m))));
}

ArrowPtr eta(int m, int n) {
  if (m < 0 || n < 0) throw input_error("negative object index");
  if (m == 0) return id_arrow(n);
  ArrowPtr inner = tensor(tensor(id_arrow(1), eta(m - 1, n)), id_arrow(1));
  return comp(tensor(sym(1, m - 1), id_arrow(n + m)),
              comp(inner, gamma_arrow(n)));
}

ArrowPtr kappa_arrow(int n) { return comp(phi_arrow(n), gamma_arrow(n)); }

}  // namespace brauerkit
