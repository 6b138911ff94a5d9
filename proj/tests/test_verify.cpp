#include <doctest.h>

#include "brauerkit/verify.hpp"

using namespace brauerkit;

namespace {

bool same_report(const CheckReport& a, const CheckReport& b) {
  return a.checked == b.checked && a.failed == b.failed && a.examples == b.examples;
}

}  // namespace

TEST_CASE("serial and parallel sweeps produce identical reports") {
  EngineAgreementOptions o;
  o.exhaustive_index = 2;
  o.exhaustive_len = 4;
  o.random_count = 200;
  const EngineAgreementReport serial = engine_agreement_check(o, {false});
  const EngineAgreementReport parallel = engine_agreement_check(o, {true});
  CHECK(serial.terms == parallel.terms);
  CHECK(same_report(serial.engines, parallel.engines));
  CHECK(same_report(serial.roundtrip, parallel.roundtrip));
  CHECK(same_report(serial.psi_xi, parallel.psi_xi));
  CHECK(same_report(serial.sj_relation, parallel.sj_relation));
  CHECK(serial.ok());

  const CheckReport cat_s = equation_catalogue_check(3, {false});
  const CheckReport cat_p = equation_catalogue_check(3, {true});
  CHECK(same_report(cat_s, cat_p));
  CHECK(cat_s.ok());

  const FaithfulnessReport f_s = faithfulness_check(1, 4, 2, {false});
  const FaithfulnessReport f_p = faithfulness_check(1, 4, 2, {true});
  CHECK(f_s.arrows == f_p.arrows);
  CHECK(same_report(f_s.int_pairs, f_p.int_pairs));
  CHECK(same_report(f_s.bool_pairs, f_p.bool_pairs));
  CHECK(f_s.ok());

  const CheckReport m_s = subsided_mat_check(3, 40, 7, {false});
  const CheckReport m_p = subsided_mat_check(3, 40, 7, {true});
  CHECK(same_report(m_s, m_p));
  CHECK(m_s.ok());
}

TEST_CASE("group suite counts factorials") {
  const CheckReport r = group_normal_forms_check(3, 4);
  CHECK(r.ok());
  CHECK(r.checked == 6 + 1 + 24 + 1 + 1);
}

TEST_CASE("adjunction and subsided arrow suites pass at small indices") {
  CHECK(adjunction_axioms_check(2).ok());
  CHECK(subsided_arrow_check(2).ok());
}
