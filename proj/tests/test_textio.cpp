#include <doctest.h>

#include "brauerkit/enumerate.hpp"
#include "brauerkit/errors.hpp"
#include "brauerkit/render.hpp"
#include "brauerkit/semantics.hpp"
#include "brauerkit/rewrite.hpp"
#include "brauerkit/textio.hpp"

using namespace brauerkit;

TEST_CASE("term grammar") {
  CHECK(parse_term("s1 s1") == Term{{cross(1), cross(1)}});
  CHECK(parse_term("c") == Term{{cup(1), cap(1)}});
  CHECK(parse_term("x[2,1]") == Term{{cross(2), cross(1)}});
  CHECK(parse_term("u[1,3]") == Term{{cup(1), cross(2), cross(3)}});
  CHECK(parse_term("n[3,1]") == Term{{cross(3), cross(2), cap(1)}});
  CHECK(parse_term("1") == Term{});
  CHECK(parse_term("(u1 n2) s3") == Term{{cup(1), cap(2), cross(3)}});
  CHECK(parse_term("  u12   ") == Term{{cup(12)}});

  CHECK_THROWS_AS(parse_term("u0"), input_error);
  CHECK_THROWS_AS(parse_term("q1"), input_error);
  CHECK_THROWS_AS(parse_term("u[3,1]"), input_error);   // cup blocks are u[lo,hi]
  CHECK_THROWS_AS(parse_term("n[1,3]"), input_error);   // cap blocks are n[hi,lo]
  CHECK_THROWS_AS(parse_term("s[2,1]"), input_error);   // crossing blocks use x
  CHECK_THROWS_AS(parse_term("(u1"), input_error);
  CHECK_THROWS_AS(parse_term("u1)"), input_error);
  CHECK_THROWS_AS(parse_term("x[2 1]"), input_error);

  // position is reported
  try {
    parse_term("u1 q");
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("parse inverts print on an enumerated corpus") {
  for (const Term& t : all_terms(3, 4)) CHECK(parse_term(print_term(t)) == t);
  CHECK(print_term(Term{}) == "1");
  CHECK(print_term(Term{{cup(1), cap(2), cross(3)}}) == "u1 n2 s3");
}

TEST_CASE("normal form rendering parses back to the same class") {
  for (const Term& raw : random_terms(4, 9, 200, 31337)) {
    const NormalForm nf = normalize_rewrite(raw);
    const std::string text = print_normal_form(nf);
    CHECK(parse_term(text) == nf_to_term(nf));
  }
  CHECK(print_normal_form(NormalForm{}) == "1");
  CHECK(print_normal_form(NormalForm{2, {{2, 1}}, {{3, 1}}, {{1, 2}}}) ==
        "c c n[2,1] 1 x[3,1] u[1,2]");
  CHECK(normal_form_json(NormalForm{1, {}, {{2, 1}}, {}}) ==
        R"({"caps":[],"circles":1,"crossings":[[2,1]],"cups":[]})");
}

TEST_CASE("arrow grammar") {
  CHECK(same_tree(parse_arrow("phi0"), phi_arrow(0)));
  CHECK(same_tree(parse_arrow("F(gamma2)"), fap(gamma_arrow(2))));
  CHECK(same_tree(parse_arrow("phi1 o F(gamma0)"),
                  comp(phi_arrow(1), fap(gamma_arrow(0)))));
  CHECK(same_tree(parse_arrow("chi0 o chi0 o id2"),
                  comp(comp(chi_arrow(0), chi_arrow(0)), id_arrow(2))));
  CHECK(same_tree(parse_arrow("chi0 o (chi0 o id2)"),
                  comp(chi_arrow(0), comp(chi_arrow(0), id_arrow(2)))));
  CHECK(same_tree(parse_arrow("id0"), id_arrow(0)));

  CHECK_THROWS_AS(parse_arrow("phi0 o phi0"), input_error);  // type mismatch
  CHECK_THROWS_AS(parse_arrow("phi"), input_error);
  CHECK_THROWS_AS(parse_arrow("F(phi0"), input_error);
  CHECK_THROWS_AS(parse_arrow("zeta1"), input_error);

  for (const ArrowPtr& f : all_arrows(2, 4))
    CHECK(same_tree(parse_arrow(print_arrow(f)), f));
}

TEST_CASE("ascii rendering shapes") {
  const std::string id_render = render_ascii(identity_diag());
  CHECK(id_render.find("⋯") != std::string::npos);
  CHECK(id_render.find('|') == std::string::npos);
  CHECK(id_render.find('\\') == std::string::npos);

  const std::string x = render_ascii(cross_diag(1));
  CHECK(x.find('\\') != std::string::npos);
  CHECK(x.find('/') != std::string::npos);
  CHECK(x.find('1') != std::string::npos);
  CHECK(x.find("-2") != std::string::npos);

  const std::string cup_cap = render_ascii(SKDiagram{cup_diag(1), 2});
  CHECK(cup_cap.find("circles: 2") != std::string::npos);
  CHECK(cup_cap.find('_') != std::string::npos);

  // deterministic
  CHECK(render_ascii(cross_diag(2)) == render_ascii(cross_diag(2)));
}
