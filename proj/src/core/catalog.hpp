#pragma once
#include <string>
#include <vector>

#include "core/odo.hpp"

namespace spectral {

// Built-in worked examples, constructed with exact coefficients.  The
// session_text is an equivalent input for the session parser; a test pins
// the two routes against each other.
struct CatalogExample {
  std::string name;
  DiffField::Ptr field;
  DiffOperator L;
  std::vector<DiffOperator> gens;  // includes the leading 1
  std::string session_text;
};

const std::vector<std::string>& catalog_names();
// Throws UnknownSymbol for a name outside the catalog.
const CatalogExample& catalog_example(const std::string& name);

}  // namespace spectral
