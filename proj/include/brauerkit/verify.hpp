// Verification sweeps: engine agreement, the equation catalogue, symmetric
// group normal forms, the adjunction axioms, the subsided equations in the
// matrix category, and representation faithfulness.
//
// Each sweep has a serial reference path and an OpenMP path over the same
// per-item bodies, selected by SweepOptions::parallel; reports are
// deterministic either way (failures are flagged per item and aggregated
// in index order).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerkit/term.hpp"

namespace brauerkit {

struct SweepOptions {
  bool parallel = true;
};

struct CheckReport {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> examples;  // first few failures, in index order

  bool ok() const { return failed == 0; }
  void note_failure(std::string what);
  std::string summary() const;
};

struct EngineAgreementOptions {
  int exhaustive_index = 3;
  int exhaustive_len = 5;
  int random_count = 2000;
  int random_index = 6;
  int random_len = 12;
  std::uint64_t seed = 12345;
};

struct EngineAgreementReport {
  long long terms = 0;
  CheckReport engines;      // normalize_rewrite vs diagram extraction
  CheckReport roundtrip;    // eval_kappa(nf_to_term(nf)) == eval_kappa(t)
  CheckReport psi_xi;       // psi(xi(t)) is t
  CheckReport sj_relation;  // sj-equal, sk-distinct pairs get witnesses n != m
  bool ok() const {
    return engines.ok() && roundtrip.ok() && psi_xi.ok() && sj_relation.ok();
  }
};

EngineAgreementReport engine_agreement_check(const EngineAgreementOptions& o,
                                             const SweepOptions& sweep);

// Every catalogued equation instance holds under eval_kappa.
CheckReport equation_catalogue_check(int max_index, const SweepOptions& sweep);

// For each n in [min_n, max_n]: the n! permutation diagrams yield n!
// distinct crossing-only normal forms that evaluate back to themselves.
CheckReport group_normal_forms_check(int min_n, int max_n);

// The symmetric self-adjunction axioms and their naturality instances for
// object indices 0..max_n, decided by equal_k.
CheckReport adjunction_axioms_check(int max_n);

// The strict monoidal / evaluation equations verified inside the arrow
// calculus for object indices up to max_n.
CheckReport subsided_arrow_check(int max_n);

// The same equations verified by exact matrix arithmetic, with random
// integer matrices for the naturality instances.
CheckReport subsided_mat_check(int max_dim, int trials, std::uint64_t seed,
                               const SweepOptions& sweep);

struct FaithfulnessReport {
  long long arrows = 0;
  CheckReport int_pairs;     // rep_k(f) == rep_k(g)  <=>  equal_k(f, g)
  CheckReport bool_pairs;    // rep_j(f) == rep_j(g)  <=>  equal_j(f, g)
  CheckReport circles;       // images of circle powers pairwise distinct
  CheckReport xi_psi;        // xi(psi(f)) equal to f up to F-padding
  CheckReport cancellation;  // equal_k(Ff, Fg) implies equal_k(f, g)
  bool ok() const {
    return int_pairs.ok() && bool_pairs.ok() && circles.ok() && xi_psi.ok() &&
           cancellation.ok();
  }
};

FaithfulnessReport faithfulness_check(int max_index, int max_size, int p,
                                      const SweepOptions& sweep);

}  // namespace brauerkit
