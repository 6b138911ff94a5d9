// Terms of the cup/cap/crossing monoid, block generators, and normal forms.
//
// A term is a flat sequence of generators; juxtaposition is the monoid
// product and the empty sequence is the unit.  The circle is the concrete
// factor pair u1 n1 (all cup_k cap_k pairs are equal in the monoid, so a
// fixed representative is sound).
#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace brauerkit {

enum class GenKind : std::uint8_t { Cup, Cap, Cross };

struct Generator {
  GenKind kind;
  int index;  // strand index, >= 1
  auto operator<=>(const Generator&) const = default;
};

struct Term {
  std::vector<Generator> factors;

  bool empty() const { return factors.empty(); }
  std::size_t size() const { return factors.size(); }
  Term& append(Generator g) {
    factors.push_back(g);
    return *this;
  }
  Term& append(const Term& t) {
    factors.insert(factors.end(), t.factors.begin(), t.factors.end());
    return *this;
  }
  auto operator<=>(const Term&) const = default;
};

// Checked generator constructors (index >= 1).
Generator cup(int k);
Generator cap(int k);
Generator cross(int k);

Term concat(const Term& t, const Term& u);

// n copies of the circle u1 n1.
Term circle_power(long long n);

// Composite generators: block-cup u[j..i], block-cap n[i..j], block-crossing
// x[i..j], each parameterised by a high and a low strand index with lo <= hi.
enum class BlockKind : std::uint8_t { Cup, Cap, Cross };

struct BlockSpec {
  BlockKind kind;
  int hi;
  int lo;
  auto operator<=>(const BlockSpec&) const = default;
};

// Unrolls a block to its flat generator sequence:
//   cup  (lo,hi) -> u_lo s_{lo+1} ... s_hi
//   cap  (hi,lo) -> s_hi s_{hi-1} ... s_{lo+1} n_lo
//   cross(hi,lo) -> s_hi s_{hi-1} ... s_lo
// Throws input_error unless 1 <= lo <= hi.
Term expand_block(const BlockSpec& spec);

// The unique canonical shape  c^l  caps  1  crossings  cups.
//
// Pairs are stored in the subscript order of the block notation: caps and
// crossings as (hi, lo), cups as (lo, hi).  Caps are kept sorted by
// increasing lo (rendering reverses them into display order), crossings by
// increasing hi, cups by increasing lo.
struct NormalForm {
  long long circles = 0;
  std::vector<std::pair<int, int>> caps;       // (hi, lo), lo strictly increasing
  std::vector<std::pair<int, int>> crossings;  // (hi, lo), hi strictly increasing
  std::vector<std::pair<int, int>> cups;       // (lo, hi), lo strictly increasing

  auto operator<=>(const NormalForm&) const = default;
};

// Throws input_error if the block bounds or orderings above are violated.
void validate(const NormalForm& nf);

// Expands a normal form back into a flat term (circles first, then caps in
// decreasing-lo display order, then crossings, then cups).
Term nf_to_term(const NormalForm& nf);

// Mirror image: reverses the factor sequence and swaps cups with caps.
// An involution; crossings are fixed.
Term dual_of(const Term& t);

}  // namespace brauerkit
