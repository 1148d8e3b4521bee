#ifndef FUSIONLOC_CATALOG_H_
#define FUSIONLOC_CATALOG_H_

#include <map>
#include <string>
#include <vector>

#include "fusionloc/group_file.h"
#include "fusionloc/perm.h"

namespace fusionloc {

// Small permutation groups used by tests, the acceptance suite and the
// bundled data files. Named subgroups follow the group-file convention.
struct NamedGroup {
  std::string name;
  GroupFile file;
};

NamedGroup CatalogSym3();
NamedGroup CatalogSym4();    // S = D8 = <(1 2 3 4),(1 3)>, V4, Z
NamedGroup CatalogAlt4();
NamedGroup CatalogAlt5();
NamedGroup CatalogD8();
NamedGroup CatalogQ8();      // regular representation, degree 8
NamedGroup CatalogSL32();    // degree-7 action on the Fano plane
NamedGroup CatalogSym4xC3(); // degree 7, C3 on points 5..7
NamedGroup CatalogD8xC3();   // degree 7
NamedGroup CatalogGL23();    // GL_2(3) on the 8 nonzero vectors

std::vector<NamedGroup> Catalog();
// Throws InputError for an unknown name.
NamedGroup CatalogByName(const std::string& name);

}  // namespace fusionloc

#endif  // FUSIONLOC_CATALOG_H_
