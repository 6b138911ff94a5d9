// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure.  All checks are exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "brauerkit/arrow.hpp"
#include "brauerkit/enumerate.hpp"
#include "brauerkit/matrix.hpp"
#include "brauerkit/rewrite.hpp"
#include "brauerkit/semantics.hpp"
#include "brauerkit/textio.hpp"
#include "brauerkit/verify.hpp"

using namespace brauerkit;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("criterion %02d %-34s %s  (%s, %.0f ms)\n", number, name.c_str(),
              ok ? "PASS" : "FAIL", detail.c_str(), ms);
  if (!ok) ++g_failures;
}

std::pair<bool, std::string> counted(const CheckReport& r) {
  return {r.ok(), std::to_string(r.checked) + " checks, " +
                      std::to_string(r.failed) + " failures"};
}

}  // namespace

int main() {
  const SweepOptions sweep{true};

  criterion(1, "worked composition example", [] {
    const Diagram d1 = Diagram::from_pairs(
        6, 8, {{1, -3}, {2, 3}, {4, -4}, {5, -1}, {-2, -6}, {-5, -7}, {6, -8}});
    const Diagram d2 = Diagram::from_pairs(
        8, 4, {{1, -1}, {2, 7}, {3, -3}, {4, -2}, {5, 6}, {8, -4}});
    const Composite c = compose(d2, d1);
    const Diagram expected = Diagram::from_pairs(
        6, 4, {{1, -3}, {2, 3}, {4, -2}, {5, -1}, {6, -4}});
    const bool ok = c.diagram == expected && c.loops == 1;
    return std::pair{ok, "loops=" + std::to_string(c.loops)};
  });

  EngineAgreementOptions nf_opts;  // exhaustive (3,5) + 2000 random (6,12)
  EngineAgreementReport nf_report;
  criterion(2, "engine agreement", [&] {
    nf_report = engine_agreement_check(nf_opts, sweep);
    return std::pair{nf_report.engines.ok(),
                     std::to_string(nf_report.terms) + " terms, " +
                         std::to_string(nf_report.engines.failed) + " mismatches"};
  });

  criterion(3, "equation catalogue soundness",
            [&] { return counted(equation_catalogue_check(6, sweep)); });

  criterion(4, "symmetric group normal forms",
            [] { return counted(group_normal_forms_check(3, 5)); });

  criterion(5, "displayed matrices", [] {
    const char* s32 =
        R"({"cols":6,"entries":[["1","0","0","0","0","0"],["0","0","1","0","0","0"],["0","0","0","0","1","0"],["0","1","0","0","0","0"],["0","0","0","1","0","0"],["0","0","0","0","0","1"]],"rows":6})";
    const char* e22 =
        R"({"cols":8,"entries":[["1","0","0","0","0","0","1","0"],["0","1","0","0","0","0","0","1"]],"rows":2})";
    const bool ok = matrix_json(s_matrix(3, 2)) == s32 &&
                    matrix_json(e_matrix(2, 2)) == e22;
    return std::pair{ok, std::string("byte-exact")};
  });

  criterion(6, "adjunction axioms",
            [] { return counted(adjunction_axioms_check(3)); });

  criterion(7, "subsided equations in matrices",
            [&] { return counted(subsided_mat_check(4, 200, 20240601, sweep)); });

  FaithfulnessReport faithful;
  criterion(8, "representation faithfulness", [&] {
    faithful = faithfulness_check(2, 5, 2, sweep);
    const bool ok = faithful.int_pairs.ok() && faithful.bool_pairs.ok() &&
                    faithful.circles.ok();
    return std::pair{ok, std::to_string(faithful.arrows) + " arrows, " +
                             std::to_string(faithful.int_pairs.checked) +
                             " pairs, " +
                             std::to_string(faithful.int_pairs.failed +
                                            faithful.bool_pairs.failed +
                                            faithful.circles.failed) +
                             " mismatches"};
  });

  criterion(9, "psi/xi lemmas and cancellation", [&] {
    const bool ok = nf_report.psi_xi.ok() && faithful.xi_psi.ok() &&
                    faithful.cancellation.ok();
    return std::pair{ok, std::to_string(nf_report.psi_xi.checked) + " terms, " +
                             std::to_string(faithful.xi_psi.checked) + " arrows"};
  });

  criterion(10, "circle-pad witnesses", [&] { return counted(nf_report.sj_relation); });

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
