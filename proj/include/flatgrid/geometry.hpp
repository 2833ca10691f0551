#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatgrid {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

inline bool near(double a, double b, double tol = kDefaultTol) {
  return std::fabs(a - b) <= tol;
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
  bool approx(Vec2 o, double tol = kDefaultTol) const {
    return near(x, o.x, tol) && near(y, o.y, tol);
  }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// 2x2 real matrix acting on column vectors.
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  static Mat2 identity() { return {}; }
  static Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }

  Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Mat2 inverse() const {
    double dt = det();
    if (std::fabs(dt) < 1e-14) throw std::invalid_argument("Mat2: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
  Mat2 pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Mat2 r = identity();
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }
  bool approx(const Mat2& o, double tol = kDefaultTol) const {
    return near(a, o.a, tol) && near(b, o.b, tol) && near(c, o.c, tol) &&
           near(d, o.d, tol);
  }
  double max_abs_diff(const Mat2& o) const {
    return std::max(std::max(std::fabs(a - o.a), std::fabs(b - o.b)),
                    std::max(std::fabs(c - o.c), std::fabs(d - o.d)));
  }
};

/// Exact rational, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool negative() const { return num < 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

// Vertex-loop (polygon) helpers.  Loops are closed: edge i joins vertex i to
// vertex (i+1) mod k.
double polygon_area(const std::vector<Vec2>& loop);
double polygon_perimeter(const std::vector<Vec2>& loop);
Vec2 polygon_centroid(const std::vector<Vec2>& loop);
std::vector<Vec2> edge_vectors(const std::vector<Vec2>& loop);

/// All cyclic offsets o with b[(i+o) mod k] == a[i] for every i.
std::vector<int> cyclic_match_offsets(const std::vector<Vec2>& a,
                                      const std::vector<Vec2>& b, double tol);

/// Shortest decimal representation that round-trips through from_chars.
std::string format_double(double v);

}  // namespace flatgrid
