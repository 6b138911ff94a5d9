#include "brauerkit/diagram.hpp"

#include <algorithm>
#include <json.hpp>

#include "brauerkit/errors.hpp"

namespace brauerkit {

namespace {

std::pair<int, int> orient_pair(int a, int b) {
  // Cups smallest first, caps smallest absolute value first, transversals
  // positive first.
  if (a > 0 && b > 0) return {std::min(a, b), std::max(a, b)};
  if (a < 0 && b < 0) return {std::max(a, b), std::min(a, b)};
  return a > 0 ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

Diagram Diagram::from_pairs(int top, int bottom,
                            std::vector<std::pair<int, int>> raw_pairs) {
  if (top < 0 || bottom < 0) throw input_error("negative boundary size");
  if ((top + bottom) % 2 != 0 ||
      raw_pairs.size() != static_cast<std::size_t>(top + bottom) / 2)
    throw input_error("pair count does not match boundary");

  // partner[] over encoded points: +i -> i, -j -> top + j.
  auto enc = [&](int p) -> int {
    if (p >= 1 && p <= top) return p;
    if (p <= -1 && p >= -bottom) return top - p;
    throw input_error("point outside boundary");
  };
  std::vector<int> partner(static_cast<std::size_t>(top + bottom) + 1, 0);
  for (const auto& [a, b] : raw_pairs) {
    if (a == b) throw input_error("degenerate pair");
    int ea = enc(a), eb = enc(b);
    if (partner[ea] != 0 || partner[eb] != 0)
      throw input_error("point matched twice");
    partner[ea] = b;
    partner[eb] = a;
  }

  // Strip tail pairs {top, -bottom} down to the minimal representative.
  while (top >= 1 && bottom >= 1 && partner[top] == -bottom) {
    partner[top] = 0;
    --top;
    --bottom;
  }

  Diagram d;
  d.top_ = top;
  d.bottom_ = bottom;
  for (const auto& [a, b] : raw_pairs) {
    bool a_in = (a > 0) ? a <= top : -a <= bottom;
    bool b_in = (b > 0) ? b <= top : -b <= bottom;
    if (a_in != b_in) throw internal_error("tail strip split a pair");
    if (a_in) d.pairs_.push_back(orient_pair(a, b));
  }
  std::sort(d.pairs_.begin(), d.pairs_.end());
  return d;
}

Diagram identity_diag() { return {}; }

Diagram cup_diag(int k) {
  if (k < 1) throw input_error("cup index must be >= 1");
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= k - 1; ++i) p.push_back({i, -i});
  p.push_back({k, k + 1});
  return Diagram::from_pairs(k + 1, k - 1, std::move(p));
}

Diagram cap_diag(int k) { return mirror(cup_diag(k)); }

Diagram cross_diag(int k) {
  if (k < 1) throw input_error("crossing index must be >= 1");
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= k - 1; ++i) p.push_back({i, -i});
  p.push_back({k, -(k + 1)});
  p.push_back({k + 1, -k});
  return Diagram::from_pairs(k + 1, k + 1, std::move(p));
}

Composite compose(const Diagram& d2, const Diagram& d1, int min_middle) {
  const int s = std::max({d1.bottom(), d2.top(), min_middle});
  const int pad1 = s - d1.bottom();
  const int pad2 = s - d2.top();
  const int n = d1.top() + pad1;     // composite top
  const int m = d2.bottom() + pad2;  // composite bottom

  // Involutions of the padded diagrams.  Encoding: positive points 1..size
  // map to themselves, bottom point -j maps to offset+j.
  auto build = [](const Diagram& d, int new_top, int new_bottom, int pad) {
    std::vector<int> match(static_cast<std::size_t>(new_top + new_bottom) + 1, 0);
    auto enc = [&](int p) { return p > 0 ? p : new_top - p; };
    for (const auto& [a, b] : d.pairs()) {
      match[enc(a)] = b;
      match[enc(b)] = a;
    }
    for (int k = 1; k <= pad; ++k) {
      int a = d.top() + k, b = -(d.bottom() + k);
      match[enc(a)] = b;
      match[enc(b)] = a;
    }
    return match;
  };
  const std::vector<int> m1 = build(d1, n, s, pad1);
  const std::vector<int> m2 = build(d2, s, m, pad2);
  auto enc1 = [&](int p) { return p > 0 ? p : n - p; };
  auto enc2 = [&](int p) { return p > 0 ? p : s - p; };

  std::vector<bool> top_seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> bot_seen(static_cast<std::size_t>(m) + 1, false);
  std::vector<bool> mid_seen(static_cast<std::size_t>(s) + 1, false);
  std::vector<std::pair<int, int>> out;

  // Walks from a boundary point to the other end of its composite thread.
  // side 1 = inside d1 (bottom points are middles), side 2 = inside d2
  // (top points are middles).
  auto walk = [&](int start, int side) -> int {
    int cur = start;
    for (;;) {
      if (side == 1) {
        int nxt = m1[static_cast<std::size_t>(enc1(cur))];
        if (nxt > 0) return nxt;  // composite top point
        mid_seen[static_cast<std::size_t>(-nxt)] = true;
        cur = -nxt;  // enter d2 at its top point
        side = 2;
      } else {
        int nxt = m2[static_cast<std::size_t>(enc2(cur))];
        if (nxt < 0) return nxt;  // composite bottom point
        mid_seen[static_cast<std::size_t>(nxt)] = true;
        cur = -nxt;  // enter d1 at its bottom point
        side = 1;
      }
    }
  };

  for (int a = 1; a <= n; ++a) {
    if (top_seen[static_cast<std::size_t>(a)]) continue;
    top_seen[static_cast<std::size_t>(a)] = true;
    int end = walk(a, 1);
    if (end > 0)
      top_seen[static_cast<std::size_t>(end)] = true;
    else
      bot_seen[static_cast<std::size_t>(-end)] = true;
    out.push_back({a, end});
  }
  for (int b = 1; b <= m; ++b) {
    if (bot_seen[static_cast<std::size_t>(b)]) continue;
    bot_seen[static_cast<std::size_t>(b)] = true;
    int end = walk(-b, 2);
    if (end >= 0) throw internal_error("bottom-started thread ended on top");
    bot_seen[static_cast<std::size_t>(-end)] = true;
    out.push_back({-b, end});
  }

  // Remaining middle points lie on closed loops alternating d2 cups and
  // d1 caps.
  long long loops = 0;
  for (int j = 1; j <= s; ++j) {
    if (mid_seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int cur = j;
    do {
      mid_seen[static_cast<std::size_t>(cur)] = true;
      int via2 = m2[static_cast<std::size_t>(enc2(cur))];
      if (via2 <= 0) throw internal_error("loop trace left the middle line");
      mid_seen[static_cast<std::size_t>(via2)] = true;
      int via1 = m1[static_cast<std::size_t>(enc1(-via2))];
      if (via1 >= 0) throw internal_error("loop trace left the middle line");
      cur = -via1;
    } while (cur != j);
  }

  return {Diagram::from_pairs(n, m, std::move(out)), loops};
}

SKDiagram compose_sk(const SKDiagram& k2, const SKDiagram& k1) {
  Composite c = compose(k2.diagram, k1.diagram);
  return {std::move(c.diagram), k1.circles + k2.circles + c.loops};
}

Diagram mirror(const Diagram& d) {
  std::vector<std::pair<int, int>> p;
  p.reserve(d.pairs().size());
  for (const auto& [a, b] : d.pairs()) p.push_back({-a, -b});
  return Diagram::from_pairs(d.bottom(), d.top(), std::move(p));
}

SKDiagram mirror_sk(const SKDiagram& sk) { return {mirror(sk.diagram), sk.circles}; }

namespace {

nlohmann::json diagram_json(const Diagram& d) {
  nlohmann::json j;
  j["top"] = d.top();
  j["bottom"] = d.bottom();
  auto& pairs = j["pairs"] = nlohmann::json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back({a, b});
  return j;
}

Diagram diagram_from(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("top") || !j.contains("bottom") ||
      !j.contains("pairs"))
    throw input_error("diagram JSON needs top, bottom and pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("pairs")) {
    if (!e.is_array() || e.size() != 2) throw input_error("malformed pair");
    pairs.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  return Diagram::from_pairs(j.at("top").get<int>(), j.at("bottom").get<int>(),
                             std::move(pairs));
}

}  // namespace

std::string to_json(const Diagram& d) { return diagram_json(d).dump(); }

std::string to_json(const SKDiagram& sk) {
  nlohmann::json j = diagram_json(sk.diagram);
  j["circles"] = sk.circles;
  return j.dump();
}

Diagram diagram_from_json(const std::string& text) {
  return diagram_from(nlohmann::json::parse(text));
}

SKDiagram sk_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SKDiagram sk{diagram_from(j), 0};
  if (j.contains("circles")) sk.circles = j.at("circles").get<long long>();
  if (sk.circles < 0) throw input_error("negative circle count");
  return sk;
}

}  // namespace brauerkit
