#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gqt/geometry.hpp"

namespace gqt {

// A built-in quadrangle with the parameters needed to rebuild it.
struct Construction {
  std::string name;
  bool dual = false;
  PartialLinearSpace gq;
  std::vector<std::pair<std::string, std::string>> provenance;
};

// w2, w3, q5_2, q5_3, t2star, payne.
const std::vector<std::string>& construction_names();

// Throws GraphError for an unknown name.
Construction build_construction(const std::string& name, bool dual);

}  // namespace gqt
