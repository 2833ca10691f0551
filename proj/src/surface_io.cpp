#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "flatgrid/surface.hpp"

namespace flatgrid {

std::string write_tsurf(const TranslationSurface& s) {
  std::string out = "TSURF 1\n";
  out += "polygons " + std::to_string(s.polygon_count()) + "\n";
  for (int p = 0; p < s.polygon_count(); ++p) {
    out += "poly " + std::to_string(p) + " " + std::to_string(s.edge_count(p));
    for (const Vec2& v : s.polygons[p])
      out += " " + format_double(v.x) + " " + format_double(v.y);
    out += "\n";
  }
  std::vector<std::pair<EdgeRef, EdgeRef>> glues;
  for (int p = 0; p < s.polygon_count(); ++p)
    for (int e = 0; e < s.edge_count(p); ++e) {
      EdgeRef a{p, e}, b = s.pairing[p][e];
      if (a < b) glues.push_back({a, b});
    }
  std::sort(glues.begin(), glues.end());
  for (const auto& [a, b] : glues)
    out += "glue " + std::to_string(a.poly) + " " + std::to_string(a.edge) + " " +
           std::to_string(b.poly) + " " + std::to_string(b.edge) + "\n";
  return out;
}

namespace {

struct Tokenizer {
  std::istringstream in;
  int line = 0;
  std::istringstream cur;

  explicit Tokenizer(const std::string& text) : in(text) {}

  bool next_line() {
    std::string l;
    while (std::getline(in, l)) {
      ++line;
      if (!l.empty()) {
        cur = std::istringstream(l);
        return true;
      }
    }
    return false;
  }
  std::string word() {
    std::string w;
    if (!(cur >> w)) throw TsurfParseError(line, "unexpected end of line");
    return w;
  }
  long integer() {
    std::string w = word();
    long v = 0;
    auto res = std::from_chars(w.data(), w.data() + w.size(), v);
    if (res.ec != std::errc() || res.ptr != w.data() + w.size())
      throw TsurfParseError(line, "expected integer, got '" + w + "'");
    return v;
  }
  double real() {
    std::string w = word();
    double v = 0;
    auto res = std::from_chars(w.data(), w.data() + w.size(), v);
    if (res.ec != std::errc() || res.ptr != w.data() + w.size())
      throw TsurfParseError(line, "expected number, got '" + w + "'");
    return v;
  }
  void done() {
    std::string w;
    if (cur >> w) throw TsurfParseError(line, "trailing token '" + w + "'");
  }
};

}  // namespace

TranslationSurface read_tsurf(const std::string& text) {
  Tokenizer tk(text);
  if (!tk.next_line()) throw TsurfParseError(1, "empty input");
  if (tk.word() != "TSURF" || tk.integer() != 1)
    throw TsurfParseError(tk.line, "missing TSURF 1 header");
  tk.done();
  if (!tk.next_line() || tk.word() != "polygons")
    throw TsurfParseError(tk.line, "expected polygons line");
  long np = tk.integer();
  tk.done();
  if (np < 0) throw TsurfParseError(tk.line, "negative polygon count");

  TranslationSurface s;
  s.polygons.resize(np);
  s.pairing.resize(np);
  for (long i = 0; i < np; ++i) {
    if (!tk.next_line()) throw TsurfParseError(tk.line, "missing poly line");
    if (tk.word() != "poly") throw TsurfParseError(tk.line, "expected poly line");
    long id = tk.integer();
    if (id != i) throw TsurfParseError(tk.line, "polygon ids must be 0..n-1 in order");
    long k = tk.integer();
    if (k < 3) throw TsurfParseError(tk.line, "polygon needs at least 3 vertices");
    s.polygons[i].resize(k);
    for (long v = 0; v < k; ++v) {
      s.polygons[i][v].x = tk.real();
      s.polygons[i][v].y = tk.real();
    }
    tk.done();
    s.pairing[i].assign(k, EdgeRef{});
  }
  while (tk.next_line()) {
    std::string w = tk.word();
    if (w != "glue") throw TsurfParseError(tk.line, "expected glue line, got '" + w + "'");
    long p1 = tk.integer(), e1 = tk.integer(), p2 = tk.integer(), e2 = tk.integer();
    tk.done();
    auto check = [&](long p, long e) {
      if (p < 0 || p >= np || e < 0 || e >= static_cast<long>(s.polygons[p].size()))
        throw TsurfParseError(tk.line, "glue reference out of range");
    };
    check(p1, e1);
    check(p2, e2);
    if (s.pairing[p1][e1].valid() || s.pairing[p2][e2].valid())
      throw TsurfParseError(tk.line, "edge glued twice");
    s.pairing[p1][e1] = {static_cast<int>(p2), static_cast<int>(e2)};
    s.pairing[p2][e2] = {static_cast<int>(p1), static_cast<int>(e1)};
  }
  for (long p = 0; p < np; ++p)
    for (size_t e = 0; e < s.pairing[p].size(); ++e)
      if (!s.pairing[p][e].valid())
        throw TsurfParseError(tk.line, "polygon " + std::to_string(p) + " edge " +
                                           std::to_string(e) + " left unglued");
  return s;
}

namespace {

std::string hsv_color(int index) {
  double h = std::fmod(index * 137.508, 360.0) / 60.0;
  double s = 0.65, v = 0.85;
  int i = static_cast<int>(h) % 6;
  double f = h - std::floor(h);
  double p = v * (1 - s), q = v * (1 - f * s), t = v * (1 - (1 - f) * s);
  double r, g, b;
  switch (i) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(r * 255),
                static_cast<int>(g * 255), static_cast<int>(b * 255));
  return buf;
}

}  // namespace

std::string render_svg(const TranslationSurface& s, double tol) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& loop : s.polygons)
    for (const Vec2& v : loop) {
      xmin = std::min(xmin, v.x);
      xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, v.y);
      ymax = std::max(ymax, v.y);
    }
  if (s.polygon_count() == 0) xmin = xmax = ymin = ymax = 0;
  double margin = 0.08 * std::max(xmax - xmin, ymax - ymin) + 0.1;

  // SVG y axis points down; flip.
  auto X = [&](double x) { return format_double(x); };
  auto Y = [&](double y) { return format_double(-y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         format_double(xmin - margin) + " " + format_double(-ymax - margin) + " " +
         format_double(xmax - xmin + 2 * margin) + " " +
         format_double(ymax - ymin + 2 * margin) + "\">\n";
  for (int p = 0; p < s.polygon_count(); ++p) {
    out += "<polygon fill=\"#f0f0f0\" stroke=\"none\" points=\"";
    for (const Vec2& v : s.polygons[p]) out += X(v.x) + "," + Y(v.y) + " ";
    out += "\"/>\n";
  }
  // one color per glue pair
  int color = 0;
  for (int p = 0; p < s.polygon_count(); ++p)
    for (int e = 0; e < s.edge_count(p); ++e) {
      EdgeRef q = s.pairing[p][e];
      if (q < EdgeRef{p, e}) continue;
      std::string col = hsv_color(color++);
      for (EdgeRef r : {EdgeRef{p, e}, q}) {
        Vec2 a = s.polygons[r.poly][r.edge];
        Vec2 b = s.polygons[r.poly][(r.edge + 1) % s.edge_count(r.poly)];
        out += "<line x1=\"" + X(a.x) + "\" y1=\"" + Y(a.y) + "\" x2=\"" + X(b.x) +
               "\" y2=\"" + Y(b.y) + "\" stroke=\"" + col +
               "\" stroke-width=\"0.03\"/>\n";
      }
    }
  // vertices colored by cone class
  auto classes = vertex_cycles(s, tol);
  for (size_t c = 0; c < classes.size(); ++c) {
    std::string col = hsv_color(static_cast<int>(c) + 7);
    for (const Corner& corner : classes[c].corners) {
      Vec2 v = s.polygons[corner.poly][corner.vertex];
      out += "<circle cx=\"" + X(v.x) + "\" cy=\"" + Y(v.y) +
             "\" r=\"0.05\" fill=\"" + col + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace flatgrid
