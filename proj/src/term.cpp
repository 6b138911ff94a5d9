#include "brauerkit/term.hpp"

#include <algorithm>
#include <string>

#include "brauerkit/errors.hpp"

namespace brauerkit {

namespace {

int checked_index(int k, const char* what) {
  if (k < 1) throw input_error(std::string(what) + " index must be >= 1");
  return k;
}

}  // namespace

Generator cup(int k) { return {GenKind::Cup, checked_index(k, "cup")}; }
Generator cap(int k) { return {GenKind::Cap, checked_index(k, "cap")}; }
Generator cross(int k) { return {GenKind::Cross, checked_index(k, "crossing")}; }

Term concat(const Term& t, const Term& u) {
  Term r = t;
  r.append(u);
  return r;
}

Term circle_power(long long n) {
  Term r;
  r.factors.reserve(static_cast<std::size_t>(2 * n));
  for (long long i = 0; i < n; ++i) {
    r.append(cup(1));
    r.append(cap(1));
  }
  return r;
}

Term expand_block(const BlockSpec& spec) {
  if (spec.lo < 1 || spec.lo > spec.hi)
    throw input_error("block indices must satisfy 1 <= lo <= hi");
  Term r;
  switch (spec.kind) {
    case BlockKind::Cup:
      r.append(cup(spec.lo));
      for (int k = spec.lo + 1; k <= spec.hi; ++k) r.append(cross(k));
      break;
    case BlockKind::Cap:
      for (int k = spec.hi; k > spec.lo; --k) r.append(cross(k));
      r.append(cap(spec.lo));
      break;
    case BlockKind::Cross:
      for (int k = spec.hi; k >= spec.lo; --k) r.append(cross(k));
      break;
  }
  return r;
}

void validate(const NormalForm& nf) {
  if (nf.circles < 0) throw input_error("negative circle count");
  auto check_blocks = [](const std::vector<std::pair<int, int>>& blocks, bool lo_first,
                         bool sort_on_first, const char* what) {
    int prev = 0;
    for (const auto& [a, b] : blocks) {
      const int lo = lo_first ? a : b;
      const int hi = lo_first ? b : a;
      if (lo < 1 || lo > hi) throw input_error(std::string(what) + " block out of range");
      const int key = sort_on_first ? a : b;
      if (key <= prev) throw input_error(std::string(what) + " blocks out of order");
      prev = key;
    }
  };
  check_blocks(nf.caps, false, false, "cap");        // (hi,lo), increasing lo
  check_blocks(nf.crossings, false, true, "crossing");  // (hi,lo), increasing hi
  check_blocks(nf.cups, true, true, "cup");          // (lo,hi), increasing lo
}

Term nf_to_term(const NormalForm& nf) {
  validate(nf);
  Term r = circle_power(nf.circles);
  for (auto it = nf.caps.rbegin(); it != nf.caps.rend(); ++it)
    r.append(expand_block({BlockKind::Cap, it->first, it->second}));
  for (const auto& [hi, lo] : nf.crossings)
    r.append(expand_block({BlockKind::Cross, hi, lo}));
  for (const auto& [lo, hi] : nf.cups)
    r.append(expand_block({BlockKind::Cup, hi, lo}));
  return r;
}

Term dual_of(const Term& t) {
  Term r;
  r.factors.reserve(t.size());
  for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
    Generator g = *it;
    if (g.kind == GenKind::Cup)
      g.kind = GenKind::Cap;
    else if (g.kind == GenKind::Cap)
      g.kind = GenKind::Cup;
    r.factors.push_back(g);
  }
  return r;
}

}  // namespace brauerkit
