#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "tropskel/graph.hpp"

namespace tropskel {

/// Finite formal integer sum of graph points. Zero coefficients are never stored.
class Divisor {
 public:
  using Map = std::map<GraphPoint, long>;

  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const GraphPoint, long>> terms);

  static Divisor point(const GraphPoint& p, long coeff = 1);

  long operator[](const GraphPoint& p) const;
  void add(const GraphPoint& p, long coeff);

  long degree() const;
  /// Sum of coefficients over support points satisfying `in_set`.
  long restrict_degree(const std::function<bool(const GraphPoint&)>& in_set) const;
  bool is_effective() const;
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  std::vector<GraphPoint> support() const;

  Divisor positive_part() const;
  /// Effective divisor N with self = positive_part() - N.
  Divisor negative_part() const;

  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(long k, const Divisor& d);
  Divisor operator-() const { return -1 * *this; }

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  Map terms_;
};

/// Index-based rendering for diagnostics, e.g. "{v0:2, e1@1/2:-1}".
std::ostream& operator<<(std::ostream& os, const Divisor& d);

/// Human-readable "2[v0] - 1[e0@1/2]" rendering.
std::string to_string(const MetricGraph& g, const Divisor& d);

}  // namespace tropskel
