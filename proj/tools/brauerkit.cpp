// Command-line front end: normalization, equality, diagram and matrix
// output, the verification suites, and symmetric-group normal form listing.
//
// Exit codes: 0 success, 1 not equal (eq), 2 input error, 3 verification
// failure (including engine disagreement under --engine both), 4 resource
// cap refusal.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "brauerkit/enumerate.hpp"
#include "brauerkit/errors.hpp"
#include "brauerkit/matrix.hpp"
#include "brauerkit/render.hpp"
#include "brauerkit/rewrite.hpp"
#include "brauerkit/semantics.hpp"
#include "brauerkit/textio.hpp"
#include "brauerkit/verify.hpp"

namespace {

using namespace brauerkit;

constexpr int kExitNotEqual = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;
constexpr int kExitResource = 4;

int default_dim_cap() {
  if (const char* env = std::getenv("BRAUERKIT_DIM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    throw input_error("BRAUERKIT_DIM_CAP must be a positive integer");
  }
  return kDefaultDimCap;
}

int run_normalize(const std::string& text, const std::string& engine,
                  const std::string& format) {
  const Term t = parse_term(text);
  NormalForm nf;
  if (engine == "rewrite") {
    nf = normalize_rewrite(t);
  } else if (engine == "diagram") {
    nf = extract_normal_form(eval_kappa(t));
  } else {
    nf = normalize_rewrite(t);
    const NormalForm other = extract_normal_form(eval_kappa(t));
    if (!(nf == other)) {
      std::cerr << "engine disagreement: rewrite " << print_normal_form(nf)
                << " vs diagram " << print_normal_form(other) << "\n";
      return kExitVerify;
    }
  }
  std::cout << (format == "json" ? normal_form_json(nf) : print_normal_form(nf))
            << "\n";
  return 0;
}

int run_eq(const std::string& lhs, const std::string& rhs, const std::string& monoid) {
  const Term t = parse_term(lhs);
  const Term u = parse_term(rhs);
  const bool equal = monoid == "sj" ? equal_sj(t, u) : equal_sk(t, u);
  std::cout << (equal ? "equal" : "not equal") << "\n";
  return equal ? 0 : kExitNotEqual;
}

int run_diag(const std::string& text, const std::string& format, bool sk) {
  const Term t = parse_term(text);
  if (sk) {
    const SKDiagram d = eval_kappa(t);
    std::cout << (format == "json" ? to_json(d) + "\n" : render_ascii(d));
  } else {
    const Diagram d = eval_iota(t);
    std::cout << (format == "json" ? to_json(d) + "\n" : render_ascii(d));
  }
  return 0;
}

int run_matrix(const std::string& text, int p, const std::string& semiring,
               int dim_cap) {
  const ArrowPtr f = parse_arrow(text);
  if (semiring == "bool")
    std::cout << matrix_json(rep_j(f, p, dim_cap)) << "\n";
  else
    std::cout << matrix_json(rep_k(f, p, dim_cap)) << "\n";
  return 0;
}

int run_perm(int n) {
  for (const Diagram& d : permutation_diagrams(n))
    std::cout << print_normal_form(extract_normal_form({d, 0})) << "\n";
  return 0;
}

int run_verify(const std::string& suite, int max_len, int max_index,
               std::uint64_t seed, int trials, int p, bool serial) {
  const SweepOptions sweep{!serial};
  bool ok = true;
  auto show = [&](const CheckReport& r) {
    std::cout << r.summary() << "\n";
    ok = ok && r.ok();
  };
  if (suite == "nf") {
    EngineAgreementOptions o;
    o.exhaustive_index = max_index > 0 ? max_index : 3;
    o.exhaustive_len = max_len > 0 ? max_len : 5;
    o.seed = seed;
    const EngineAgreementReport r = engine_agreement_check(o, sweep);
    std::cout << "terms: " << r.terms << "\n";
    show(r.engines);
    show(r.roundtrip);
    show(r.psi_xi);
    show(r.sj_relation);
    show(equation_catalogue_check(6, sweep));
  } else if (suite == "group") {
    show(group_normal_forms_check(3, max_index > 0 ? max_index : 5));
  } else if (suite == "adjunction") {
    show(adjunction_axioms_check(max_index > 0 ? max_index : 3));
    show(subsided_arrow_check(3));
  } else if (suite == "subsided") {
    show(subsided_mat_check(max_index > 0 ? max_index : 4, trials, seed, sweep));
  } else if (suite == "faithful") {
    const FaithfulnessReport r = faithfulness_check(
        max_index > 0 ? max_index : 2, max_len > 0 ? max_len : 5, p, sweep);
    std::cout << "arrow terms: " << r.arrows << "\n";
    show(r.int_pairs);
    show(r.bool_pairs);
    show(r.circles);
    show(r.xi_psi);
    show(r.cancellation);
  } else {
    throw input_error("unknown suite: " + suite);
  }
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagram monoid and self-adjunction toolkit"};
  app.require_subcommand(1);

  std::string term_text, other_text, engine = "both", format = "text";
  std::string monoid = "sk", semiring = "int", suite;
  bool sk_mode = false, serial = false;
  int p = 2, dim_cap = 0, n_strands = 0;
  int max_len = 0, max_index = 0, trials = 200;
  std::uint64_t seed = 12345;

  auto* normalize = app.add_subcommand("normalize", "rewrite a term to normal form");
  normalize->add_option("term", term_text)->required();
  normalize->add_option("--engine", engine)
      ->check(CLI::IsMember({"rewrite", "diagram", "both"}));
  normalize->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* eq = app.add_subcommand("eq", "decide equality of two terms");
  eq->add_option("lhs", term_text)->required();
  eq->add_option("rhs", other_text)->required();
  eq->add_option("--monoid", monoid)->check(CLI::IsMember({"sk", "sj"}));

  auto* diag = app.add_subcommand("diag", "evaluate a term to its diagram");
  diag->add_option("term", term_text)->required();
  diag->add_option("--format", format)->check(CLI::IsMember({"ascii", "json"}));
  diag->add_flag("--sk", sk_mode, "keep the circle counter");

  auto* matrix = app.add_subcommand("matrix", "represent an arrow term as a matrix");
  matrix->add_option("arrow", term_text)->required();
  matrix->add_option("--p", p, "dimension parameter")->required();
  matrix->add_option("--semiring", semiring)->check(CLI::IsMember({"int", "bool"}));
  matrix->add_option("--dim-cap", dim_cap, "largest matrix dimension");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"nf", "group", "adjunction", "subsided", "faithful"}));
  verify->add_option("--max-len", max_len);
  verify->add_option("--max-index", max_index);
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials);
  verify->add_option("--p", p);
  verify->add_flag("--serial", serial, "use the serial reference sweeps");

  auto* perm = app.add_subcommand("perm", "list symmetric group normal forms");
  perm->add_option("--n", n_strands)->required()->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (normalize->parsed()) return run_normalize(term_text, engine, format);
    if (eq->parsed()) return run_eq(term_text, other_text, monoid);
    if (diag->parsed())
      return run_diag(term_text, format == "text" ? "ascii" : format, sk_mode);
    if (matrix->parsed())
      return run_matrix(term_text, p, semiring,
                        dim_cap > 0 ? dim_cap : default_dim_cap());
    if (verify->parsed())
      return run_verify(suite, max_len, max_index, seed, trials, p, serial);
    if (perm->parsed()) return run_perm(n_strands);
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitInput;
}
