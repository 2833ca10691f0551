#include "flatgrid/semiregular.hpp"

#include <cmath>
#include <stdexcept>

namespace flatgrid {

SemiregularPolygon semiregular_polygon(int n, double a, double b) {
  if (n < 2) throw std::invalid_argument("semiregular_polygon: need n >= 2");
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw std::invalid_argument("semiregular_polygon: need a, b >= 0, not both zero");
  SemiregularPolygon p;
  p.n = n;
  p.a = a;
  p.b = b;
  p.loop.resize(2 * n);
  Vec2 pos{0, 0};
  for (int i = 0; i < 2 * n; ++i) {
    p.loop[i] = pos;
    double len = (i % 2 == 0) ? a : b;
    pos = pos + len * Vec2{std::cos(i * kPi / n), std::sin(i * kPi / n)};
  }
  if (pos.norm() > 1e-12 * (a + b) * n)
    throw std::runtime_error("semiregular_polygon: loop failed to close");
  return p;
}

SemiregularPolygon surface_polygon(int m, int n, int k) {
  if (k < 0 || k > m - 1) throw std::invalid_argument("surface_polygon: k out of range");
  double sk = std::sin(k * kPi / m);
  double sk1 = std::sin((k + 1) * kPi / m);
  if (n % 2 == 0 && k % 2 == 0) return semiregular_polygon(n, sk, sk1);
  return semiregular_polygon(n, sk1, sk);
}

SemiregularBuild semiregular_surface_build(int m, int n) {
  if (m < 2 || n < 2 || m * n < 6)
    throw std::invalid_argument("semiregular_surface: need m, n >= 2 and mn >= 6");
  SurfaceBuilder builder;
  std::vector<SemiregularPolygon> raw;
  for (int k = 0; k < m; ++k) {
    raw.push_back(surface_polygon(m, n, k));
    builder.add_polygon(raw.back().loop);
  }
  int sides = 2 * n;
  for (int k = 1; k < m; k += 2) {
    for (int i = 0; i < sides; i += 2)
      if (k + 1 <= m - 1) builder.glue(k, i, k + 1, (i + n) % sides);
    for (int i = 1; i < sides; i += 2) builder.glue(k, i, k - 1, (i + n) % sides);
  }
  // Position each polygon so one glued side coincides with its partner.
  for (int k = 1; k < m; ++k) {
    int e_prev, e_cur;  // edge of P(k-1) glued to edge of P(k)
    if (k % 2 == 1) {
      e_cur = 1;  // odd side of P(k), length sin(k pi/m) > 0
      e_prev = (1 + n) % sides;
    } else {
      e_prev = 0;  // even side of P(k-1), k-1 odd, length sin(k pi/m) > 0
      e_cur = n % sides;
    }
    Vec2 head_prev = builder.loop(k - 1)[(e_prev + 1) % sides];
    Vec2 tail_cur = builder.loop(k)[e_cur];
    builder.translate_polygon(k, head_prev - tail_cur);
  }
  SurfaceBuilder::Result res = builder.finish();
  SemiregularBuild out;
  out.m = m;
  out.n = n;
  out.surface = std::move(res.surface);
  out.poly_of_k = std::move(res.poly_index);
  return out;
}

TranslationSurface semiregular_surface(int m, int n) {
  return semiregular_surface_build(m, n).surface;
}

SemiregularQuotientBuild semiregular_quotient_build(int m, int n) {
  if (m % 2 != 0 || n % 2 != 0)
    throw std::invalid_argument("semiregular_quotient: m and n must be even");
  SemiregularBuild y = semiregular_surface_build(m, n);
  std::vector<int> sigma(y.surface.polygon_count(), -1);
  for (int k = 0; k < m; ++k) {
    int p = y.poly_of_k[k];
    int q = y.poly_of_k[m - 1 - k];
    if ((p < 0) != (q < 0))
      throw std::runtime_error("semiregular_quotient: asymmetric degeneracy");
    if (p >= 0) sigma[p] = q;
  }
  QuotientResult qr = quotient_by_involution(y.surface, sigma);
  SemiregularQuotientBuild out;
  out.m = m;
  out.n = n;
  out.surface = std::move(qr.surface);
  out.poly_of_k.assign(m / 2, -1);
  for (int k = 0; k < m / 2; ++k)
    if (y.poly_of_k[k] >= 0) out.poly_of_k[k] = qr.kept[y.poly_of_k[k]];
  return out;
}

TranslationSurface semiregular_quotient(int m, int n) {
  return semiregular_quotient_build(m, n).surface;
}

double even_radius(int n, double a, double b) {
  return (b + a * std::cos(kPi / n)) / (2 * std::sin(kPi / n));
}

double odd_radius(int n, double a, double b) { return even_radius(n, b, a); }

double center_distance(int m, int n, int k) {
  if (k < 1 || k > m - 1) throw std::invalid_argument("center_distance: k out of range");
  double kappa = (std::cos(kPi / m) + std::cos(kPi / n)) / std::sin(kPi / n);
  return kappa * std::sin(k * kPi / m);
}

}  // namespace flatgrid
