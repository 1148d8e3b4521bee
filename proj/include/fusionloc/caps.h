#ifndef FUSIONLOC_CAPS_H_
#define FUSIONLOC_CAPS_H_

#include <cstdint>
#include <string>

namespace fusionloc {

// Search and enumeration limits. Defaults suit groups up to a few thousand
// elements. The FUSIONLOC_CAPS environment variable raises them: either a
// single integer factor applied to every cap, or a comma-separated list of
// name=value pairs (element, table, aut, lattice, nodes).
struct Caps {
  uint64_t element_cap = 100000;   // largest group enumerated element-wise
  uint64_t table_cap = 4096;       // largest group given a product table
  uint64_t aut_cap = 4096;         // automorphism / isomorphism search
  uint64_t lattice_cap = 60000;    // number of subgroups in one lattice
  uint64_t node_cap = 200000000;   // backtrack nodes in one search

  std::string Describe() const;
};

// Process-wide caps, initialized from FUSIONLOC_CAPS on first use.
Caps& GlobalCaps();

// Parses a FUSIONLOC_CAPS value on top of `base`; throws InputError.
Caps ParseCaps(const std::string& spec, Caps base = Caps());

}  // namespace fusionloc

#endif  // FUSIONLOC_CAPS_H_
