// Text grammars for terms, normal forms and arrow terms.
//
// Term grammar (whitespace-separated factors, product read left to right):
//   factor := 'u'INT | 'n'INT | 's'INT | '1' | 'c'
//           | 'u[' INT ',' INT ']' | 'n[' INT ',' INT ']' | 'x[' INT ',' INT ']'
//           | '(' term ')'
// 'u' is a cup, 'n' a cap, 's' a crossing; 'c' expands to u1 n1; the block
// forms u[lo,hi], n[hi,lo], x[hi,lo] expand to their generator sequences.
//
// Arrow grammar: 'id'INT | 'phi'INT | 'gamma'INT | 'chi'INT | 'F(' arrow ')'
// | arrow 'o' arrow (composition, target side left, left associative) with
// parentheses for grouping.
#pragma once

#include <string>

#include "brauerkit/arrow.hpp"
#include "brauerkit/term.hpp"

namespace brauerkit {

// Throws input_error with a byte position on bad syntax; index 0 rejected.
Term parse_term(const std::string& text);

// One token per generator; the empty term prints as "1".
// parse_term(print_term(t)) == t.
std::string print_term(const Term& t);

// The canonical shape: "c"s, cap blocks in display order, "1", crossing
// blocks, cup blocks.  Parses back to nf_to_term(nf).
std::string print_normal_form(const NormalForm& nf);

// {"circles": l, "caps": [[hi,lo],...], "crossings": [[hi,lo],...],
//  "cups": [[lo,hi],...]}
std::string normal_form_json(const NormalForm& nf);

ArrowPtr parse_arrow(const std::string& text);

// Round-trips the tree shape: parse_arrow(print_arrow(f)) == f.
std::string print_arrow(const ArrowPtr& f);

}  // namespace brauerkit
