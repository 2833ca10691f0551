#include "flatgrid/geometry.hpp"

#include <charconv>
#include <numeric>

namespace flatgrid {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

double polygon_area(const std::vector<Vec2>& loop) {
  double s = 0.0;
  size_t k = loop.size();
  for (size_t i = 0; i < k; ++i) s += cross(loop[i], loop[(i + 1) % k]);
  return 0.5 * s;
}

double polygon_perimeter(const std::vector<Vec2>& loop) {
  double s = 0.0;
  size_t k = loop.size();
  for (size_t i = 0; i < k; ++i) s += (loop[(i + 1) % k] - loop[i]).norm();
  return s;
}

Vec2 polygon_centroid(const std::vector<Vec2>& loop) {
  Vec2 c;
  for (const Vec2& v : loop) c = c + v;
  return c * (1.0 / static_cast<double>(loop.size()));
}

std::vector<Vec2> edge_vectors(const std::vector<Vec2>& loop) {
  size_t k = loop.size();
  std::vector<Vec2> e(k);
  for (size_t i = 0; i < k; ++i) e[i] = loop[(i + 1) % k] - loop[i];
  return e;
}

std::vector<int> cyclic_match_offsets(const std::vector<Vec2>& a,
                                      const std::vector<Vec2>& b, double tol) {
  std::vector<int> out;
  if (a.size() != b.size()) return out;
  int k = static_cast<int>(a.size());
  for (int o = 0; o < k; ++o) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = b[(i + o) % k].approx(a[i], tol);
    if (ok) out.push_back(o);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace flatgrid
