#ifndef FUSIONLOC_AUTOMORPHISM_H_
#define FUSIONLOC_AUTOMORPHISM_H_

#include <optional>
#include <utility>
#include <vector>

#include "fusionloc/group.h"

namespace fusionloc {

// Aut(H) for a subgroup H of some universe. Automorphisms are recorded as
// permutations of H's sorted element list (`points`).
struct Automorphisms {
  Subgroup source;
  std::vector<Elem> points;
  std::vector<std::vector<Elem>> maps;  // maps[k][i] = image of points[i]
  PermGroup group;                      // acts on positions in `points`

  uint64_t order() const { return maps.size(); }
  // Position of universe element x in `points`.
  size_t position(Elem x) const;
};

// Backtracking over images of a greedy generating sequence, pruned by
// element order, class size and square-root counts. Throws ResourceError
// when |H| exceeds Caps::aut_cap.
Automorphisms AutomorphismsOf(const Subgroup& h);

// Generator-image pairs (a_i, b_i) of an isomorphism A -> B, or nullopt.
// A and B may live in different universes.
using GeneratorMap = std::vector<std::pair<Elem, Elem>>;
std::optional<GeneratorMap> FindIsomorphism(const Subgroup& a,
                                            const Subgroup& b);
// Extends a generator map to a full element map (indexed by A's universe).
std::vector<Elem> ExtendGeneratorMap(const Subgroup& a, const Subgroup& b,
                                     const GeneratorMap& m);

bool IsCharacteristicSubgroup(const Subgroup& g, const Subgroup& q);
bool IsCharacteristicSubgroup(const Automorphisms& aut, const Subgroup& q);
// All Aut(Q)-invariant subgroups of Q, ascending.
std::vector<Subgroup> CharacteristicSubgroups(const Subgroup& q);

// For G = <x> semidirect H and z in Z(H) with o(x) = o(xz): the map
// x^i h -> (xz)^i h. Returned as an element map over the universe.
// Throws PreconditionError naming the failed hypothesis.
std::vector<Elem> ExtendAutomorphismSemidirect(const Subgroup& g, Elem x,
                                               const Subgroup& h, Elem z);

}  // namespace fusionloc

#endif  // FUSIONLOC_AUTOMORPHISM_H_
