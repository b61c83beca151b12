#pragma once

#include <optional>

namespace tropskel {

/// 1, 3, 3g-1 for g = 0, 1, >= 2.
long t_of_g(long g);

/// max(ceil((3d^2 - 9d + 4) / 2d), 1) when N <= 2 or planar, else max(d - 2, 1).
long d_bound(long d, long n, bool planar);

struct Castelnuovo {
  long m0 = 0;
  long eps0 = 0;  // d - 1 = m0 (N - 1) + eps0
  long pi = 0;
};

/// Requires N >= 3 and d >= N.
Castelnuovo castelnuovo(long d, long n);

/// ceil(t(g)/d) for N <= 2, max(ceil(t(g)/d), d + 1 - N) otherwise.
long ell_bound(long g, long d, long n);

/// d_bound(d, N, false) >= ell_bound(pi(d, N), d, N), for 3 <= N <= d.
bool check_bound_consistency(long d, long n);

/// Genus of a smooth plane curve of degree d.
long plane_genus(long d);

struct BoundReport {
  std::optional<long> g, d, n;
  std::optional<long> t_g, d_bound, ell_bound;
  std::optional<Castelnuovo> castelnuovo;
  bool planar = false;
};

/// Fills whatever the given parameters determine: t(g) from g; D and the
/// Castelnuovo data from (d, N); the ell-bound from (g, d, N), with g
/// defaulting to pi(d, N) for N >= 3 and to the plane genus for N <= 2.
BoundReport bound_report(std::optional<long> g, std::optional<long> d, std::optional<long> n, bool planar);

}  // namespace tropskel
