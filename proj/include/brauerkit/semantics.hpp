// Interpretation of terms as diagrams, extraction of normal forms from
// diagrams, and the equality decision procedures.
#pragma once

#include <optional>
#include <utility>

#include "brauerkit/diagram.hpp"
#include "brauerkit/term.hpp"

namespace brauerkit {

// Folds a term into its diagram, discarding closed loops.
Diagram eval_iota(const Term& t);

// Folds a term into its diagram together with the loop count.
SKDiagram eval_kappa(const Term& t);

// Reads the unique normal form off a diagram by repeatedly pulling out the
// maximal cup, then the maximal cap, then the maximal falling thread of the
// remaining permutation part.  Satisfies
//   eval_kappa(nf_to_term(extract_normal_form(sk))) == sk.
NormalForm extract_normal_form(const SKDiagram& sk);

// Word problem with circles counted (loops distinguish terms).
bool equal_sk(const Term& t, const Term& u);

// Word problem with circles erased.
bool equal_sj(const Term& t, const Term& u);

// If t and u are sj-equal, the minimal (n, m) with
// eval_kappa(circle_power(n) t) == eval_kappa(circle_power(m) u);
// one of n, m is always 0.  Empty if the terms are not sj-equal.
std::optional<std::pair<long long, long long>> circle_pad_witness(const Term& t,
                                                                  const Term& u);

}  // namespace brauerkit
