// Canonical finite encodings of perfect-matching (Brauer-style) diagrams
// with an implicit shift-identity tail, and their composition with
// closed-loop counting.
//
// A diagram stores an explicit top boundary 1..top (positive points), an
// explicit bottom boundary -1..-bottom (negative points), and a perfect
// matching on those points.  Beyond the explicit part the diagram continues
// with the tail threads {top+k, -(bottom+k)} for every k >= 1.  The stored
// representative is minimal: the pair {top, -bottom} is never explicit
// (it would itself be a tail thread), which makes equality structural.
//
// Orientation: the top line is the source and the bottom line the target;
// in a term product t u the diagram of u sits on top, i.e. is applied
// first.  compose(d2, d1) stacks d1 above d2.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace brauerkit {

class Diagram {
 public:
  Diagram() = default;  // the unit diagram: all-tail, type (0,0)

  // Canonicalizes an explicit presentation: validates the matching, strips
  // tail pairs {top,-bottom}, orders pair members, sorts the pair list.
  // Throws input_error unless raw_pairs is a perfect matching on
  // {1..top} u {-1..-bottom}.
  static Diagram from_pairs(int top, int bottom,
                            std::vector<std::pair<int, int>> raw_pairs);

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  auto operator<=>(const Diagram&) const = default;

 private:
  int top_ = 0;
  int bottom_ = 0;
  // Cups (a,b) with 0<a<b, caps (-a,-b) with 0<a<b, transversals (a,-b);
  // sorted ascending as integer pairs.
  std::vector<std::pair<int, int>> pairs_;
};

// A diagram together with a count of closed circular components.
struct SKDiagram {
  Diagram diagram;
  long long circles = 0;
  auto operator<=>(const SKDiagram&) const = default;
};

Diagram identity_diag();
// Generator diagrams; throw input_error for k < 1.
Diagram cup_diag(int k);    // cup {k,k+1} on top, type (k+1, k-1)
Diagram cap_diag(int k);    // mirror of cup_diag(k), type (k-1, k+1)
Diagram cross_diag(int k);  // strands k, k+1 crossed, type (k+1, k+1)

struct Composite {
  Diagram diagram;
  long long loops = 0;  // closed components formed from middle points
};

// d1 stacked above d2; boundaries are padded with tail threads to the
// common middle size (at least min_middle, which only matters for testing
// padding independence).  Total, associative, unit identity_diag().
Composite compose(const Diagram& d2, const Diagram& d1, int min_middle = 0);

SKDiagram compose_sk(const SKDiagram& k2, const SKDiagram& k1);

// Vertical flip: swaps top and bottom.  Involutive anti-homomorphism.
Diagram mirror(const Diagram& d);
SKDiagram mirror_sk(const SKDiagram& sk);

// JSON serialization:  {"top": n, "bottom": m, "pairs": [[a,b],...]}
// plus "circles" for SK diagrams.  Round-trips bit-exactly.
std::string to_json(const Diagram& d);
std::string to_json(const SKDiagram& sk);
Diagram diagram_from_json(const std::string& text);
SKDiagram sk_from_json(const std::string& text);

}  // namespace brauerkit
