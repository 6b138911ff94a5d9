#include "brauerkit/textio.hpp"

#include <cctype>
#include <json.hpp>

#include "brauerkit/errors.hpp"

namespace brauerkit {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error(what + " at position " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer(int min_value) {
    skip_ws();
    std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) fail("index too large");
      ++pos;
    }
    if (pos == start) fail("expected an integer");
    if (v < min_value) fail("index below " + std::to_string(min_value));
    return static_cast<int>(v);
  }
};

void parse_factors(Cursor& c, Term& out) {
  while (!c.done()) {
    if (c.peek() == ')') return;
    if (c.eat('(')) {
      parse_factors(c, out);
      c.expect(')');
      continue;
    }
    char h = c.peek();
    ++c.pos;
    switch (h) {
      case '1': break;
      case 'c':
        out.append(cup(1));
        out.append(cap(1));
        break;
      case 'u':
      case 'n':
      case 's': {
        if (c.pos < c.text.size() && c.text[c.pos] == '[') {
          if (h == 's') c.fail("crossing blocks are written x[hi,lo]");
          ++c.pos;
          int first = c.integer(1);
          c.expect(',');
          int second = c.integer(1);
          c.expect(']');
          // u[lo,hi] but n[hi,lo], in subscript order.
          BlockSpec spec = h == 'u' ? BlockSpec{BlockKind::Cup, second, first}
                                    : BlockSpec{BlockKind::Cap, first, second};
          out.append(expand_block(spec));
        } else {
          int k = c.integer(1);
          out.append(h == 'u' ? cup(k) : h == 'n' ? cap(k) : cross(k));
        }
        break;
      }
      case 'x': {
        c.expect('[');
        int hi = c.integer(1);
        c.expect(',');
        int lo = c.integer(1);
        c.expect(']');
        out.append(expand_block({BlockKind::Cross, hi, lo}));
        break;
      }
      default:
        --c.pos;
        c.fail("unexpected character");
    }
  }
}

}  // namespace

Term parse_term(const std::string& text) {
  Cursor c{text};
  Term t;
  parse_factors(c, t);
  if (!c.done()) c.fail("unbalanced ')'");
  return t;
}

std::string print_term(const Term& t) {
  if (t.empty()) return "1";
  std::string out;
  for (Generator g : t.factors) {
    if (!out.empty()) out += ' ';
    switch (g.kind) {
      case GenKind::Cup: out += 'u'; break;
      case GenKind::Cap: out += 'n'; break;
      case GenKind::Cross: out += 's'; break;
    }
    out += std::to_string(g.index);
  }
  return out;
}

std::string print_normal_form(const NormalForm& nf) {
  validate(nf);
  if (nf.circles == 0 && nf.caps.empty() && nf.crossings.empty() && nf.cups.empty())
    return "1";
  std::string out;
  auto push = [&](const std::string& tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  };
  for (long long i = 0; i < nf.circles; ++i) push("c");
  for (auto it = nf.caps.rbegin(); it != nf.caps.rend(); ++it)
    push("n[" + std::to_string(it->first) + "," + std::to_string(it->second) + "]");
  push("1");
  for (const auto& [hi, lo] : nf.crossings)
    push("x[" + std::to_string(hi) + "," + std::to_string(lo) + "]");
  for (const auto& [lo, hi] : nf.cups)
    push("u[" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  return out;
}

std::string normal_form_json(const NormalForm& nf) {
  nlohmann::json j;
  j["circles"] = nf.circles;
  auto pairs = [](const std::vector<std::pair<int, int>>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [x, y] : v) a.push_back({x, y});
    return a;
  };
  j["caps"] = pairs(nf.caps);
  j["crossings"] = pairs(nf.crossings);
  j["cups"] = pairs(nf.cups);
  return j.dump();
}

namespace {

bool starts_with(const std::string& s, std::size_t pos, const char* word) {
  for (const char* w = word; *w; ++w, ++pos)
    if (pos >= s.size() || s[pos] != *w) return false;
  return true;
}

// arrow := atom ('o' atom)*          (left associative)
// atom  := 'id'INT | 'phi'INT | 'gamma'INT | 'chi'INT | 'F(' arrow ')'
//        | '(' arrow ')'
ArrowPtr parse_arrow_expr(Cursor& c);

ArrowPtr parse_arrow_atom(Cursor& c) {
  c.skip_ws();
  if (c.pos >= c.text.size()) c.fail("expected an arrow term");
  if (c.eat('(')) {
    ArrowPtr a = parse_arrow_expr(c);
    c.expect(')');
    return a;
  }
  if (c.peek() == 'F') {
    ++c.pos;
    c.expect('(');
    ArrowPtr a = parse_arrow_expr(c);
    c.expect(')');
    return fap(a);
  }
  struct {
    const char* word;
    ArrowPtr (*make)(int);
  } leaves[] = {{"id", id_arrow},
                {"phi", phi_arrow},
                {"gamma", gamma_arrow},
                {"chi", chi_arrow}};
  for (const auto& l : leaves) {
    if (starts_with(c.text, c.pos, l.word)) {
      c.pos += std::string(l.word).size();
      return l.make(c.integer(0));
    }
  }
  c.fail("expected id, phi, gamma, chi, F(...) or '('");
}

ArrowPtr parse_arrow_expr(Cursor& c) {
  ArrowPtr acc = parse_arrow_atom(c);
  for (;;) {
    c.skip_ws();
    if (c.pos < c.text.size() && c.text[c.pos] == 'o' &&
        (c.pos + 1 >= c.text.size() || !std::isalnum(static_cast<unsigned char>(
                                           c.text[c.pos + 1])))) {
      ++c.pos;
      ArrowPtr f = parse_arrow_atom(c);
      acc = comp(acc, f);
      continue;
    }
    return acc;
  }
}

}  // namespace

ArrowPtr parse_arrow(const std::string& text) {
  Cursor c{text};
  ArrowPtr a = parse_arrow_expr(c);
  if (!c.done()) c.fail("trailing input");
  return a;
}

std::string print_arrow(const ArrowPtr& f) {
  switch (f->kind) {
    case Arrow::Kind::Id: return "id" + std::to_string(f->index);
    case Arrow::Kind::Phi: return "phi" + std::to_string(f->index);
    case Arrow::Kind::Gamma: return "gamma" + std::to_string(f->index);
    case Arrow::Kind::Chi: return "chi" + std::to_string(f->index);
    case Arrow::Kind::Fap: return "F(" + print_arrow(f->left) + ")";
    case Arrow::Kind::Comp: {
      // Left association is implicit; a composite right factor needs parens.
      std::string rhs = f->right->kind == Arrow::Kind::Comp
                            ? "(" + print_arrow(f->right) + ")"
                            : print_arrow(f->right);
      return print_arrow(f->left) + " o " + rhs;
    }
  }
  throw internal_error("unknown arrow kind");
}

}  // namespace brauerkit
