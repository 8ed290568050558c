#include "permband/render.hpp"

#include <algorithm>
#include <iomanip>
#include <locale>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "permband/hook.hpp"

namespace permband {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::ostringstream make_stream() {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  return os;
}

// Deterministic label placement: nudge straight up until the box is clear.
class LabelPlacer {
 public:
  explicit LabelPlacer(double scale) : scale_(scale) {}

  std::pair<double, double> place(double x, double y, size_t chars) {
    const double halfw = 0.28 * scale_ * static_cast<double>(chars);
    while (collides(x, y, halfw)) y -= 0.4 * scale_;
    boxes_.push_back({x, y, halfw});
    return {x, y};
  }

 private:
  struct Box {
    double x, y, halfw;
  };

  bool collides(double x, double y, double halfw) const {
    for (const Box& b : boxes_)
      if (std::abs(b.x - x) < b.halfw + halfw && std::abs(b.y - y) < 0.45 * scale_)
        return true;
    return false;
  }

  double scale_;
  std::vector<Box> boxes_;
};

std::string svg_open(double width, double height) {
  auto os = make_stream();
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
     << fmt(height) << "\">\n";
  return os.str();
}

std::string svg_hook(const Permutation& p, const RenderOptions& o) {
  const int n = p.size();
  const double s = o.scale;
  const double margin = 1.5 * s;
  const double side = 2 * margin + n * s;
  auto X = [&](double c) { return margin + c * s; };
  auto Y = [&](double r) { return margin + r * s; };
  auto os = make_stream();
  os << svg_open(side, side);

  const double font = 0.45 * s;
  for (int i = 1; i <= n; ++i) {
    os << "<text class=\"axis\" x=\"" << fmt(X(i)) << "\" y=\"" << fmt(Y(0) - 0.4 * s)
       << "\" font-size=\"" << fmt(font) << "\" text-anchor=\"middle\">" << i
       << "</text>\n";
    os << "<text class=\"axis\" x=\"" << fmt(X(0) - 0.4 * s) << "\" y=\""
       << fmt(Y(i) + 0.15 * s) << "\" font-size=\"" << fmt(font)
       << "\" text-anchor=\"end\">" << i << "</text>\n";
  }

  if (o.show_diagonals) {
    for (int k : mset(p)) {
      const double r0 = std::max(0, -k);
      const double r1 = std::min(n, n - k);
      os << "<line class=\"diagonal\" x1=\"" << fmt(X(r0 + k)) << "\" y1=\""
         << fmt(Y(r0)) << "\" x2=\"" << fmt(X(r1 + k)) << "\" y2=\"" << fmt(Y(r1))
         << "\" stroke=\"gray\" stroke-dasharray=\"" << fmt(0.25 * s) << " "
         << fmt(0.2 * s) << "\"/>\n";
    }
  }

  for (int i = 1; i <= n; ++i) {
    const int pi = p(i);
    os << "<path class=\"hook\" d=\"M " << fmt(X(0)) << " " << fmt(Y(i)) << " L "
       << fmt(X(pi)) << " " << fmt(Y(i)) << " L " << fmt(X(pi)) << " " << fmt(Y(0))
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<circle class=\"corner\" cx=\"" << fmt(X(pi)) << "\" cy=\"" << fmt(Y(i))
       << "\" r=\"" << fmt(0.12 * s) << "\" fill=\"black\"/>\n";
  }

  const HookDiagram diagram = build_hook_diagram(p);
  for (const auto& [k, crossings] : diagram.diagonals()) {
    (void)k;
    for (const Crossing& c : crossings)
      os << "<circle class=\"crossing\" cx=\"" << fmt(X(c.col)) << "\" cy=\""
         << fmt(Y(c.row)) << "\" r=\"" << fmt(0.16 * s)
         << "\" fill=\"white\" stroke=\"black\"/>\n";
  }

  if (o.show_indices) {
    LabelPlacer placer(s);
    for (const auto& [k, crossings] : diagram.diagonals()) {
      (void)k;
      for (const Crossing& c : crossings) {
        const std::string text = std::to_string(crossing_index(p, c));
        const auto [lx, ly] =
            placer.place(X(c.col) - 0.25 * s, Y(c.row) - 0.25 * s, text.size());
        os << "<text class=\"index\" x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
           << "\" font-size=\"" << fmt(font) << "\" text-anchor=\"end\">" << text
           << "</text>\n";
      }
    }
  }

  os << "</svg>\n";
  return os.str();
}

std::string ascii_hook(const Permutation& p, const RenderOptions& o) {
  const int n = p.size();
  std::vector<std::string> grid(static_cast<size_t>(n) + 1,
                                std::string(static_cast<size_t>(n) + 1, ' '));
  if (o.show_diagonals)
    for (int k : mset(p))
      for (int r = std::max(0, -k); r <= std::min(n, n - k); ++r)
        grid[r][r + k] = '\\';
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c <= p(i); ++c) grid[i][c] = '-';
  for (int i = 1; i <= n; ++i) {
    const int pi = p(i);
    for (int r = 0; r <= i; ++r) grid[r][pi] = grid[r][pi] == '-' ? '+' : '|';
  }
  for (int i = 1; i <= n; ++i) grid[i][p(i)] = 'o';

  if (o.show_indices) {
    const HookDiagram diagram = build_hook_diagram(p);
    std::set<std::pair<int, int>> taken;
    struct Pending {
      int row, col;
      std::string text;
    };
    std::vector<Pending> pending;
    auto free_cell = [&](int r, int c) {
      return taken.find({r, c}) == taken.end() && grid[r][c] != '+' && grid[r][c] != 'o';
    };
    for (const auto& [k, crossings] : diagram.diagonals()) {
      (void)k;
      for (const Crossing& c : crossings) {
        const std::string text = std::to_string(crossing_index(p, c));
        const int len = static_cast<int>(text.size());
        int prow = std::max(0, c.row - 1);
        int pcol = std::max(len - 1, c.col - 1);
        bool placed = false;
        for (int r = c.row - 1; r >= 0 && !placed; --r)
          for (int e = c.col - 1; e >= len - 1 && !placed; --e) {
            bool ok = true;
            for (int t = 0; t < len; ++t)
              if (!free_cell(r, e - t)) ok = false;
            if (ok) {
              prow = r;
              pcol = e;
              placed = true;
            }
          }
        for (int t = 0; t < len; ++t) taken.insert({prow, pcol - t});
        pending.push_back({prow, pcol, text});
      }
    }
    for (const Pending& l : pending)
      for (int t = 0; t < static_cast<int>(l.text.size()); ++t)
        grid[l.row][l.col - t] = l.text[l.text.size() - 1 - t];
  }

  std::string out;
  for (const std::string& row : grid) {
    out += row;
    out += '\n';
  }
  return out;
}

// Snapshot of strand positions before each letter and after the last one.
std::vector<std::vector<int>> strand_tracks(const Word& w) {
  std::vector<int> pos(static_cast<size_t>(w.n));  // pos[strand-1] = row
  std::vector<int> at(static_cast<size_t>(w.n));   // at[row-1] = strand
  std::iota(pos.begin(), pos.end(), 1);
  std::iota(at.begin(), at.end(), 1);
  std::vector<std::vector<int>> tracks;
  tracks.push_back(pos);
  for (int l : w.letters) {
    const int u = at[l - 1], v = at[l];
    std::swap(at[l - 1], at[l]);
    pos[u - 1] = l + 1;
    pos[v - 1] = l;
    tracks.push_back(pos);
  }
  return tracks;
}

bool word_is_reduced(const Word& w) {
  std::vector<int> at(static_cast<size_t>(w.n));
  std::iota(at.begin(), at.end(), 1);
  std::set<std::pair<int, int>> crossed;
  for (int l : w.letters) {
    const std::pair<int, int> key{std::min(at[l - 1], at[l]), std::max(at[l - 1], at[l])};
    if (!crossed.insert(key).second) return false;
    std::swap(at[l - 1], at[l]);
  }
  return true;
}

std::string svg_wiring(const Word& w, const RenderOptions& o) {
  const int n = w.n;
  const int l = static_cast<int>(w.letters.size());
  const double s = o.scale;
  const double margin = 1.5 * s;
  const double width = 2 * margin + std::max(1, l) * s;
  const double height = 2 * margin + n * s;
  auto X = [&](double t) { return margin + t * s; };
  auto Y = [&](double p) { return margin + p * s; };
  auto os = make_stream();
  os << svg_open(width, height);

  const double font = 0.45 * s;
  const bool reduced = word_is_reduced(w);
  const auto tracks = strand_tracks(w);
  for (int i = 1; i <= n; ++i) {
    os << "<polyline class=\"strand\" points=\"";
    for (int t = 0; t <= l; ++t) {
      if (t) os << " ";
      os << fmt(X(t)) << "," << fmt(Y(tracks[t][i - 1]));
    }
    if (l == 0) os << " " << fmt(X(1)) << "," << fmt(Y(i));
    os << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text class=\"axis\" x=\"" << fmt(X(0) - 0.4 * s) << "\" y=\""
       << fmt(Y(i) + 0.15 * s) << "\" font-size=\"" << fmt(font)
       << "\" text-anchor=\"end\">" << i << "</text>\n";
    os << "<text class=\"axis\" x=\"" << fmt(X(l == 0 ? 1 : l) + 0.4 * s) << "\" y=\""
       << fmt(Y(i) + 0.15 * s) << "\" font-size=\"" << fmt(font)
       << "\" text-anchor=\"start\">" << i << "</text>\n";
  }

  LabelPlacer placer(s);
  for (int t = 0; t < l; ++t) {
    const int a = w.letters[t];
    const double cx = X(t + 0.5), cy = Y(a + 0.5);
    os << "<circle class=\"crossing\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
       << "\" r=\"" << fmt(0.14 * s) << "\" fill=\"white\" stroke=\"black\"/>\n";
    if (o.show_indices) {
      const std::string text = std::to_string(a);
      const auto [lx, ly] = placer.place(cx - 0.2 * s, cy - 0.25 * s, text.size());
      os << "<text class=\"index\" x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
         << "\" font-size=\"" << fmt(font) << "\" text-anchor=\"end\">" << text
         << "</text>\n";
    }
  }

  if (!reduced)
    os << "<text class=\"warning\" x=\"" << fmt(margin) << "\" y=\""
       << fmt(height - 0.3 * s) << "\" font-size=\"" << fmt(font)
       << "\" fill=\"red\">warning: word is not reduced (two strands cross twice)"
       << "</text>\n";

  os << "</svg>\n";
  return os.str();
}

std::string ascii_wiring(const Word& w, const RenderOptions& o) {
  const int n = w.n;
  const int l = static_cast<int>(w.letters.size());
  size_t digits = 1;
  for (int a : w.letters) digits = std::max(digits, std::to_string(a).size());
  const int block = o.show_indices ? static_cast<int>(digits) + 2 : 3;
  const int lwidth = static_cast<int>(std::to_string(std::max(n, 1)).size());
  const int area = 1 + l * block + 1;
  const int rows = std::max(0, 2 * n - 1);
  std::vector<std::string> grid(static_cast<size_t>(rows),
                                std::string(static_cast<size_t>(lwidth + 1 + area + 1 + lwidth), ' '));

  auto label = [&](int value) {
    std::string s = std::to_string(value);
    return std::string(static_cast<size_t>(lwidth) - s.size(), ' ') + s;
  };
  for (int p = 1; p <= n; ++p) {
    std::string& row = grid[2 * (p - 1)];
    row.replace(0, static_cast<size_t>(lwidth), label(p));
    for (int c = 0; c < area; ++c) row[lwidth + 1 + c] = '-';
    row.replace(static_cast<size_t>(lwidth + 1 + area + 1), static_cast<size_t>(lwidth), label(p));
  }

  for (int t = 0; t < l; ++t) {
    const int a = w.letters[t];
    const int start = lwidth + 1 + 1 + t * block;
    std::string& upper = grid[2 * (a - 1)];
    std::string& lower = grid[2 * a];
    upper[start] = '\\';
    for (int c = 1; c < block - 1; ++c) upper[start + c] = ' ';
    upper[start + block - 1] = '/';
    lower[start] = '/';
    for (int c = 1; c < block - 1; ++c) lower[start + c] = ' ';
    lower[start + block - 1] = '\\';
    std::string& mid = grid[2 * a - 1];
    if (o.show_indices) {
      const std::string text = std::to_string(a);
      const int off = (block - static_cast<int>(text.size())) / 2;
      mid.replace(static_cast<size_t>(start + off), text.size(), text);
    } else {
      mid[start + block / 2] = 'X';
    }
  }

  std::string out;
  for (const std::string& row : grid) {
    out += row;
    out += '\n';
  }
  if (!word_is_reduced(w))
    out += "warning: word is not reduced (two strands cross twice)\n";
  return out;
}

}  // namespace

std::string render_hook(const Permutation& p, const RenderOptions& opts) {
  if (opts.scale <= 0) throw std::invalid_argument("render: scale must be positive");
  return opts.format == RenderFormat::svg ? svg_hook(p, opts) : ascii_hook(p, opts);
}

std::string render_wiring(const Word& w, const RenderOptions& opts) {
  if (opts.scale <= 0) throw std::invalid_argument("render: scale must be positive");
  for (int l : w.letters)
    if (l < 1 || l > w.n - 1)
      throw std::invalid_argument("word letter " + std::to_string(l) +
                                  " out of range 1.." + std::to_string(w.n - 1));
  return opts.format == RenderFormat::svg ? svg_wiring(w, opts) : ascii_wiring(w, opts);
}

}  // namespace permband
