#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hornup/basis.hpp"
#include "hornup/io.hpp"
#include "hornup/universe.hpp"

namespace hornup::test {

inline Universe labels(const std::string& text) {
  std::vector<std::string> names;
  std::istringstream in(text);
  for (std::string l; in >> l;) names.push_back(l);
  return Universe(std::move(names));
}

inline Basis basis(const std::string& universe, const std::string& text) {
  return parse_implications(text, labels(universe));
}

inline Implication imp(const Universe& u, const std::string& body, const std::string& head) {
  return {u.parse_set(body), *u.index_of(head)};
}

}  // namespace hornup::test
