#include "brauerkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace brauerkit {

namespace {

constexpr int kColWidth = 4;
constexpr int kBodyRows = 5;

int col_of(int point) { return (std::abs(point) - 1) * kColWidth; }

void put(std::vector<std::string>& canvas, int row, int col, char ch,
         bool force = false) {
  auto& line = canvas[static_cast<std::size_t>(row)];
  if (static_cast<std::size_t>(col) >= line.size()) return;
  char& cell = line[static_cast<std::size_t>(col)];
  const bool crossing = (cell == '\\' && ch == '/') || (cell == '/' && ch == '\\');
  if (crossing)
    cell = 'X';
  else if (force || cell == ' ')
    cell = ch;
}

void place_label(std::string& line, int col, const std::string& label) {
  if (line.size() < static_cast<std::size_t>(col) + label.size())
    line.resize(static_cast<std::size_t>(col) + label.size(), ' ');
  for (std::size_t i = 0; i < label.size(); ++i)
    line[static_cast<std::size_t>(col) + i] = label[i];
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  const int points = std::max(d.top(), d.bottom());
  const int width = (points + 1) * kColWidth + 2;

  std::string top_line, bottom_line;
  for (int i = 1; i <= d.top(); ++i)
    place_label(top_line, col_of(i), std::to_string(i));
  for (int j = 1; j <= d.bottom(); ++j)
    place_label(bottom_line, col_of(j), std::to_string(-j));
  place_label(top_line, points * kColWidth, "⋯");
  place_label(bottom_line, points * kColWidth, "⋯");

  std::vector<std::string> body(kBodyRows,
                                std::string(static_cast<std::size_t>(width), ' '));
  for (const auto& [a, b] : d.pairs()) {
    if (a > 0 && b < 0) {
      const int c0 = col_of(a), c1 = col_of(b);
      for (int r = 0; r < kBodyRows; ++r) {
        const double t = (r + 0.5) / kBodyRows;
        const int x = c0 + static_cast<int>(std::lround((c1 - c0) * t));
        put(body, r, x, c1 == c0 ? '|' : (c1 > c0 ? '\\' : '/'), true);
      }
    } else if (a > 0 && b > 0) {
      const int c0 = col_of(a), c1 = col_of(b);
      put(body, 0, c0, '\\', true);
      put(body, 0, c1, '/', true);
      for (int x = c0 + 1; x < c1; ++x) put(body, 0, x, '_');
    } else {
      const int c0 = col_of(a), c1 = col_of(b);
      put(body, kBodyRows - 1, c0, '/', true);
      put(body, kBodyRows - 1, c1, '\\', true);
      for (int x = c0 + 1; x < c1; ++x) put(body, kBodyRows - 1, x, '-');
    }
  }

  std::string out = top_line + "\n";
  for (auto& line : body) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (!line.empty()) out += line + "\n";
  }
  out += bottom_line + "\n";
  return out;
}

std::string render_ascii(const SKDiagram& sk) {
  return render_ascii(sk.diagram) + "circles: " + std::to_string(sk.circles) + "\n";
}

}  // namespace brauerkit
