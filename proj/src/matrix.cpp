#include "brauerkit/matrix.hpp"

#include <json.hpp>

namespace brauerkit {

int checked_power(int p, int n, int dim_cap) {
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    v *= p;
    if (v > dim_cap)
      throw resource_error("dimension " + std::to_string(p) + "^" +
                           std::to_string(n) + " exceeds the cap " +
                           std::to_string(dim_cap));
  }
  return static_cast<int>(v);
}

namespace {

template <class M, class ToString>
std::string json_of(const M& m, ToString&& str) {
  nlohmann::json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  auto& entries = j["entries"] = nlohmann::json::array();
  for (int r = 0; r < m.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(str(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  return j.dump();
}

}  // namespace

std::string matrix_json(const IntMatrix& m) {
  return json_of(m, [](const mpz_class& v) { return v.get_str(); });
}

std::string matrix_json(const BoolMatrix& m) {
  return json_of(m, [](std::uint8_t v) { return std::string(v ? "1" : "0"); });
}

}  // namespace brauerkit
