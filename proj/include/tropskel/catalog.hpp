#pragma once

#include <string>
#include <vector>

#include "tropskel/graph.hpp"

namespace tropskel {

struct CatalogEntry {
  std::string name;
  std::string notes;
  GraphDescription description;
};

const std::vector<CatalogEntry>& catalog();
/// Looks up a catalog graph by name ("circle4" is accepted for "circle-4").
/// Throws InvalidArgument for unknown names.
MetricGraph catalog_graph(const std::string& name);
bool in_catalog(const std::string& name);

}  // namespace tropskel
