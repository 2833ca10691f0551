#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatgrid/geometry.hpp"

namespace flatgrid {

long long euler_phi(long long k);

/// Exclusion predicate for the (m,n,infinity) triangle group as a Veech
/// group: m and n both even and (gcd = 2, or m/gcd and n/gcd both odd).
bool excluded_triangle_group(int m, int n);

/// Whether the trace field of the (m,n,infinity) triangle group equals its
/// invariant trace field, following the case analysis: m = 2 through the
/// phi(2n)/phi(n) ratio, an odd side forces equality, and the even case runs
/// the congruence m - n + eps = 0 mod 2 gcd for eps in {-2, 0, 2}.
bool trace_fields_equal(int m, int n);

/// Brute-force search for a Galois automorphism index k (1 <= k < 2x,
/// gcd(k, 2x) = 1, x = lcm(m,n)) negating both cos(pi/m) and cos(pi/n);
/// requires m, n even.  The congruence conditions are k = m +- 1 mod 2m and
/// k = n +- 1 mod 2n.
std::optional<long long> galois_witness(int m, int n);

struct TraceFieldDescriptor {
  int m = 0, n = 0, gamma = 0;
  long long x = 0;                          // lcm(m, n)
  std::vector<std::string> trace_field;     // generators of Q(tr Gamma)
  std::vector<double> trace_field_values;
  std::vector<std::string> invariant_field; // generators of k Gamma
  std::vector<double> invariant_field_values;
  Mat2 gen_x, gen_y;                // X^m = -I, Y^n = (-1)^n I, XY parabolic
  double relation_deviation = 0.0;  // worst deviation from those relations
  double xy_trace = 0.0;
};

TraceFieldDescriptor trace_field_generators(int m, int n);

}  // namespace flatgrid
