// Exhaustive and seeded-random corpora of terms and arrow terms for the
// verification sweeps and property tests.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "brauerkit/arrow.hpp"
#include "brauerkit/term.hpp"

namespace brauerkit {

// All terms over {u_k, n_k, s_k | k <= max_index} of length <= max_len,
// shortest first, in a fixed generator order.
std::vector<Term> all_terms(int max_index, int max_len);

// Deterministic sample: `count` terms with generator indices <= max_index
// and lengths uniform in [1, max_len].
std::vector<Term> random_terms(int max_index, int max_len, int count,
                               std::uint64_t seed);

// Deterministic random context of length <= max_len (possibly empty).
Term random_context(int max_index, int max_len, std::uint64_t seed);

// All well-typed arrow terms of node count <= max_size built from the leaf
// generators with subscript <= max_index, where every subterm keeps both
// ends <= max_index + 2.
std::vector<ArrowPtr> all_arrows(int max_index, int max_size);

// All permutation diagrams on n strands (images of the symmetric group),
// in lexicographic order of the underlying permutation.
std::vector<Diagram> permutation_diagrams(int n);

}  // namespace brauerkit
