#include "flatgrid/obstruction.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace flatgrid {

long long euler_phi(long long k) {
  if (k < 1) throw std::invalid_argument("euler_phi: need k >= 1");
  long long result = k;
  for (long long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

bool excluded_triangle_group(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("excluded_triangle_group: need m, n >= 2");
  if (m % 2 != 0 || n % 2 != 0) return false;
  int g = std::gcd(m, n);
  return g == 2 || ((m / g) % 2 == 1 && (n / g) % 2 == 1);
}

bool trace_fields_equal(int m, int n) {
  if (m > n) std::swap(m, n);
  if (m < 2 || n < 3) throw std::invalid_argument("trace_fields_equal: need 2 <= m <= n, n >= 3");
  if (m == 2) return euler_phi(2LL * n) / euler_phi(n) == 1;
  if (m % 2 == 1 || n % 2 == 1) return true;
  // even case: the fields differ exactly when some eps in {-2,0,2} solves
  // m - n + eps = 0 mod 2 gcd(m,n)
  int g = std::gcd(m, n);
  for (int eps : {-2, 0, 2}) {
    long long v = static_cast<long long>(m) - n + eps;
    if (((v % (2 * g)) + 2 * g) % (2 * g) == 0) return false;
  }
  return true;
}

std::optional<long long> galois_witness(int m, int n) {
  if (m % 2 != 0 || n % 2 != 0)
    throw std::invalid_argument("galois_witness: m and n must be even");
  long long x = std::lcm(static_cast<long long>(m), static_cast<long long>(n));
  auto hits = [](long long k, long long p) {
    long long r = k % (2 * p);
    return r == p - 1 || r == p + 1;
  };
  for (long long k = 1; k < 2 * x; ++k) {
    if (std::gcd(k, 2 * x) != 1) continue;
    if (hits(k, m) && hits(k, n)) return k;
  }
  return std::nullopt;
}

TraceFieldDescriptor trace_field_generators(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("trace_field_generators: need m, n >= 2");
  TraceFieldDescriptor d;
  d.m = m;
  d.n = n;
  d.gamma = std::gcd(m, n);
  d.x = std::lcm(static_cast<long long>(m), static_cast<long long>(n));
  auto cos_str = [](int num, int den) {
    return "cos(" + std::to_string(num) + "pi/" + std::to_string(den) + ")";
  };
  if (m == 2) {
    d.trace_field = {cos_str(1, n)};
    d.trace_field_values = {std::cos(kPi / n)};
    d.invariant_field = {cos_str(2, n)};
    d.invariant_field_values = {std::cos(2 * kPi / n)};
  } else {
    d.trace_field = {cos_str(1, m), cos_str(1, n)};
    d.trace_field_values = {std::cos(kPi / m), std::cos(kPi / n)};
    d.invariant_field = {cos_str(2, m), cos_str(2, n),
                         cos_str(1, m) + "*" + cos_str(1, n)};
    d.invariant_field_values = {std::cos(2 * kPi / m), std::cos(2 * kPi / n),
                                std::cos(kPi / m) * std::cos(kPi / n)};
  }
  d.gen_x = Mat2{0, -1, 1, 2 * std::cos(kPi / m)};
  d.gen_y = Mat2{-2 * std::cos(kPi / n), 1, -1, 0};
  Mat2 neg_i = -Mat2::identity();
  // X^m = -I; tr(Y) = -2 cos(pi/n) puts Y^n on (-1)^n I, projectively the
  // same relation.
  Mat2 y_target = n % 2 == 0 ? neg_i : Mat2::identity();
  d.relation_deviation = std::max(d.gen_x.pow(m).max_abs_diff(neg_i),
                                  d.gen_y.pow(n).max_abs_diff(y_target));
  d.xy_trace = (d.gen_x * d.gen_y).trace();
  return d;
}

}  // namespace flatgrid
