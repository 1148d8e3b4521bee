#ifndef FUSIONLOC_PERM_GROUP_H_
#define FUSIONLOC_PERM_GROUP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fusionloc/perm.h"

namespace fusionloc {

// Permutation group with a stabilizer chain built by deterministic
// Schreier-Sims. Base points are always the smallest point moved by the
// element that forces a new level, so repeated builds give identical chains.
class PermGroup {
 public:
  PermGroup() = default;
  // Throws InputError when a generator has the wrong degree.
  PermGroup(size_t degree, std::vector<Perm> generators);

  size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Point>& base() const { return base_; }
  // Fundamental orbit lengths, one per base point.
  std::vector<size_t> basic_orbit_lengths() const;

  uint64_t order() const;
  bool contains(const Perm& g) const;

  // All elements; throws ResourceError when the order exceeds `cap`.
  std::vector<Perm> Elements(uint64_t cap) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::optional<Perm>> transversal;  // indexed by point
  };

  // Returns the residue and the level where sifting stopped.
  std::pair<Perm, size_t> Strip(const Perm& g, size_t from_level) const;
  void RebuildOrbit(Level& level) const;
  void Build();

  size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

}  // namespace fusionloc

#endif  // FUSIONLOC_PERM_GROUP_H_
