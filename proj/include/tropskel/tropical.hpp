#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropskel/divisor.hpp"
#include "tropskel/pl_function.hpp"

namespace tropskel {

/// Point of tropical projective space: coordinates in Q or +inf (nullopt),
/// not all infinite, up to a common additive shift.
class TropPoint {
 public:
  explicit TropPoint(std::vector<std::optional<Rational>> coords);

  const std::vector<std::optional<Rational>>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size() - 1; }

  /// Affine coordinates in chart i (subtract coordinate i, drop it).
  /// Throws InvalidArgument if coordinate i is infinite.
  std::vector<Rational> chart(std::size_t i) const;

  friend bool operator==(const TropPoint& a, const TropPoint& b);

 private:
  std::vector<std::optional<Rational>> coords_;
};

/// Lattice length of a segment with integer direction `v` traversed for
/// parameter length `len`: len * gcd(v).
Rational lattice_length(const std::vector<long>& v, const Rational& len);
/// Direction vector in chart i of a chart-0 direction (0, v_1, ..., v_N).
std::vector<long> chart_direction(const std::vector<long>& v, std::size_t i);
long gcd_of(const std::vector<long>& v);

/// Base divisor D0 plus functions f_1..f_N (f_0 = 0 implied). Every
/// D_i = D0 + div(f_i) is effective, including the orders at the ends.
class TropMap {
 public:
  /// Throws InvalidArgument when D0 or some D_i is not effective.
  static TropMap assemble(const MetricGraph& g, Divisor base, std::vector<PLFunction> functions);

  const MetricGraph& graph() const { return graph_; }
  const Divisor& base() const { return base_; }
  const std::vector<PLFunction>& functions() const { return functions_; }
  std::size_t dimension() const { return functions_.size(); }
  long degree() const { return base_.degree(); }
  /// Finite part of D_i and its per-ray end orders, for i = 1..N (index i-1).
  const std::vector<Divisor>& induced() const { return induced_; }
  const std::vector<std::vector<long>>& induced_ends() const { return induced_ends_; }

  TropPoint evaluate(const GraphPoint& p) const;
  /// Chart-0 coordinates (f_1(p), ..., f_N(p)).
  std::vector<Rational> evaluate_affine(const GraphPoint& p) const;

 private:
  TropMap(const MetricGraph& g) : graph_(g) {}

  MetricGraph graph_;
  Divisor base_;
  std::vector<PLFunction> functions_;
  std::vector<Divisor> induced_;
  std::vector<std::vector<long>> induced_ends_;
};

struct Cell {
  GraphPoint::Kind kind;  // Edge or Ray
  std::size_t index;
  Rational from;
  std::optional<Rational> to;  // nullopt: unbounded ray cell
  std::vector<long> vector;    // slope of each f_i on the cell
  std::vector<Rational> start_image;
  bool primitive = false;
};

/// Common refinement of all breakpoints, edges in index order then rays.
std::vector<Cell> cell_decomposition(const TropMap& m);

struct UnimodularReport {
  std::vector<Cell> cells;
  bool unimodular = false;
  std::optional<std::size_t> first_failure;
};

UnimodularReport verify_unimodular(const TropMap& m);

struct Collision {
  GraphPoint x, y;
  std::vector<Rational> image;  // chart-0 image shared by x and y
  std::size_t cell_a, cell_b;
};

struct InjectivityReport {
  bool injective = false;
  std::optional<Collision> witness;  // lexicographically first colliding cell pair
  std::size_t cells = 0;
};

/// Exact pairwise test of cell images. The parallel version uses OpenMP
/// (thread count capped by TROPSKEL_THREADS) and returns the same witness as
/// the serial reference.
InjectivityReport verify_injective(const TropMap& m);
InjectivityReport verify_injective_serial(const TropMap& m);
InjectivityReport verify_injective(const MetricGraph& g, const std::vector<Cell>& cells, bool parallel);
int injectivity_threads();

enum class Verdict { Faithful, UnimodularOnly, Fails };
const char* to_string(Verdict v);

struct FaithfulnessCertificate {
  UnimodularReport unimodular;
  InjectivityReport injectivity;
  Verdict verdict = Verdict::Fails;
};

/// faithful: unimodular and injective; unimodular-only: unimodular with a
/// collision witness; fails: some cell vector is not primitive.
FaithfulnessCertificate certify_faithful(const TropMap& m);

struct Polyline {
  std::string owner;  // edge or ray id
  bool unbounded = false;
  std::vector<std::vector<Rational>> points;
};

/// Chart-0 image of every edge and ray as polylines; rays are drawn one
/// unit past their last breakpoint.
std::vector<Polyline> plot_data(const TropMap& m);

}  // namespace tropskel
