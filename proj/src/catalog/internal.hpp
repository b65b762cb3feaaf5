#pragma once
// Helpers shared between the catalog data tables and the catalog logic.

#include "catalog/catalog.hpp"

namespace catalog::detail {

// Derives Entry::uses_a / uses_b from the variables occurring in the
// triple's components and in the constraints.
void scan_uses(Entry& e);

}  // namespace catalog::detail
