// Typed arrow terms of the free symmetric self-adjunction on one object,
// the translations to and from the generator monoid, and the strict
// monoidal structure (tensor, symmetry, evaluation and coevaluation).
//
// Objects are natural numbers (iterates of the self-adjoint endofunctor
// applied to the generating object).  Generators:
//   id n    : n   -> n
//   phi n   : n+2 -> n      counit
//   gamma n : n   -> n+2    unit
//   chi n   : n+2 -> n+2    symmetry on the two outer strands
// closed under F(-) (functor application, shifting both ends by one) and
// composition g o f.
#pragma once

#include <memory>
#include <optional>

#include "brauerkit/diagram.hpp"
#include "brauerkit/term.hpp"

namespace brauerkit {

struct Arrow;
using ArrowPtr = std::shared_ptr<const Arrow>;

struct Arrow {
  enum class Kind : std::uint8_t { Id, Phi, Gamma, Chi, Fap, Comp };
  Kind kind;
  int index = 0;       // object subscript for the four leaf kinds
  ArrowPtr left;       // Fap child; Comp second factor g
  ArrowPtr right;      // Comp first factor f
  int src = 0;
  int tgt = 0;
};

ArrowPtr id_arrow(int n);
ArrowPtr phi_arrow(int n);
ArrowPtr gamma_arrow(int n);
ArrowPtr chi_arrow(int n);
ArrowPtr fap(const ArrowPtr& f);
// Throws input_error unless tgt(f) == src(g).
ArrowPtr comp(const ArrowPtr& g, const ArrowPtr& f);

std::size_t arrow_size(const ArrowPtr& f);  // node count
bool same_tree(const ArrowPtr& f, const ArrowPtr& g);

// phi_n / gamma_n / chi_n map to the cup / cap / crossing at strand n+1;
// F is erased and composition is concatenation.
Term psi(const ArrowPtr& f);

// Total composition: pads the smaller side with F until the types meet.
ArrowPtr star(const ArrowPtr& g, const ArrowPtr& f);

// Translates a term back into an arrow term, folding with star.
// psi(xi(t)) reproduces t exactly.
ArrowPtr xi(const Term& t);

// Arrow equality: matching types and equal diagram-with-circles images.
bool equal_k(const ArrowPtr& f, const ArrowPtr& g);
// Equality in the quotient where the circle is trivial.
bool equal_j(const ArrowPtr& f, const ArrowPtr& g);

ArrowPtr fpow(int k, const ArrowPtr& f);  // F applied k times

// Strict monoidal structure.  tensor(id k, f) is F^k f and
// tensor(f, id k) shifts every generator subscript by k.
ArrowPtr tensor(const ArrowPtr& f, const ArrowPtr& g);
ArrowPtr sym(int n, int m);               // n+m -> n+m
ArrowPtr epsilon(int m, int n);           // 2m+n -> n
ArrowPtr eta(int m, int n);               // n -> 2m+n
ArrowPtr kappa_arrow(int n);              // phi_n o gamma_n : n -> n

}  // namespace brauerkit
