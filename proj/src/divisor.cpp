#include "tropskel/divisor.hpp"

namespace tropskel {

Divisor::Divisor(std::initializer_list<std::pair<const GraphPoint, long>> terms) {
  for (auto& [p, c] : terms) add(p, c);
}

Divisor Divisor::point(const GraphPoint& p, long coeff) {
  Divisor d;
  d.add(p, coeff);
  return d;
}

long Divisor::operator[](const GraphPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::add(const GraphPoint& p, long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

long Divisor::degree() const {
  long d = 0;
  for (auto& [p, c] : terms_) d += c;
  return d;
}

long Divisor::restrict_degree(const std::function<bool(const GraphPoint&)>& in_set) const {
  long d = 0;
  for (auto& [p, c] : terms_) {
    if (in_set(p)) d += c;
  }
  return d;
}

bool Divisor::is_effective() const {
  for (auto& [p, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

std::vector<GraphPoint> Divisor::support() const {
  std::vector<GraphPoint> s;
  s.reserve(terms_.size());
  for (auto& [p, c] : terms_) s.push_back(p);
  return s;
}

Divisor Divisor::positive_part() const {
  Divisor d;
  for (auto& [p, c] : terms_) {
    if (c > 0) d.terms_.emplace(p, c);
  }
  return d;
}

Divisor Divisor::negative_part() const {
  Divisor d;
  for (auto& [p, c] : terms_) {
    if (c < 0) d.terms_.emplace(p, -c);
  }
  return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

Divisor operator*(long k, const Divisor& d) {
  Divisor out;
  if (k == 0) return out;
  for (auto& [p, c] : d.terms_) out.terms_.emplace(p, k * c);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Divisor& d) {
  os << "{";
  bool first = true;
  for (auto& [p, c] : d) {
    if (!first) os << ", ";
    first = false;
    static const char* tag[] = {"v", "e", "r"};
    os << tag[static_cast<int>(p.kind)] << p.index;
    if (!p.is_vertex()) os << "@" << p.offset;
    os << ":" << c;
  }
  return os << "}";
}

std::string to_string(const MetricGraph& g, const Divisor& d) {
  if (d.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [p, c] : d) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += "[" + g.point_label(p) + "]";
  }
  return s;
}

}  // namespace tropskel
