#include "tropskel/bounds.hpp"

#include <algorithm>
#include <string>

#include "tropskel/error.hpp"

namespace tropskel {

namespace {

// Ceiling of a / b for b > 0, exact.
long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

long t_of_g(long g) {
  if (g < 0) throw InvalidArgument("t(g) needs g >= 0, got " + std::to_string(g));
  if (g == 0) return 1;
  if (g == 1) return 3;
  return 3 * g - 1;
}

long d_bound(long d, long n, bool planar) {
  if (d < 1) throw InvalidArgument("D(d, N) needs d >= 1, got " + std::to_string(d));
  if (n < 1) throw InvalidArgument("D(d, N) needs N >= 1, got " + std::to_string(n));
  if (n <= 2 || planar) return std::max(ceil_div(3 * d * d - 9 * d + 4, 2 * d), 1L);
  return std::max(d - 2, 1L);
}

Castelnuovo castelnuovo(long d, long n) {
  if (n < 3) throw InvalidArgument("Castelnuovo's number needs N >= 3, got " + std::to_string(n));
  if (d < n) throw InvalidArgument("Castelnuovo's number needs d >= N, got d = " + std::to_string(d));
  Castelnuovo c;
  c.m0 = (d - 1) / (n - 1);
  c.eps0 = (d - 1) % (n - 1);
  long twice = (c.m0 + 1) * (c.eps0 + d - 1) - 2 * (d - 1);
  if (twice % 2 != 0) throw Error("Castelnuovo's number is not an integer");
  c.pi = twice / 2;
  return c;
}

long ell_bound(long g, long d, long n) {
  if (d < 1) throw InvalidArgument("ell bound needs d >= 1, got " + std::to_string(d));
  long l = ceil_div(t_of_g(g), d);
  if (n >= 3) l = std::max(l, d + 1 - n);
  return l;
}

bool check_bound_consistency(long d, long n) {
  if (n < 3 || d < n) throw InvalidArgument("consistency check needs 3 <= N <= d");
  return d_bound(d, n, false) >= ell_bound(castelnuovo(d, n).pi, d, n);
}

long plane_genus(long d) {
  if (d < 1) throw InvalidArgument("plane genus needs d >= 1");
  return (d - 1) * (d - 2) / 2;
}

BoundReport bound_report(std::optional<long> g, std::optional<long> d, std::optional<long> n, bool planar) {
  BoundReport r;
  r.g = g;
  r.d = d;
  r.n = n;
  r.planar = planar;
  if (g) r.t_g = t_of_g(*g);
  if (d && n) {
    r.d_bound = d_bound(*d, *n, planar);
    if (*n >= 3 && *d >= *n) r.castelnuovo = castelnuovo(*d, *n);
    std::optional<long> genus = g;
    if (!genus) genus = r.castelnuovo ? r.castelnuovo->pi : plane_genus(*d);
    r.ell_bound = ell_bound(*genus, *d, *n);
    if (!r.g) r.g = genus;
    if (!r.t_g) r.t_g = t_of_g(*genus);
  }
  return r;
}

}  // namespace tropskel
