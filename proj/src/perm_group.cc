#include "fusionloc/perm_group.h"

#include <limits>

#include "fusionloc/errors.h"

namespace fusionloc {

namespace {

std::optional<Point> SmallestMovedPoint(const Perm& g) {
  for (Point x = 0; x < g.degree(); ++x) {
    if (g[x] != x) return x;
  }
  return std::nullopt;
}

}  // namespace

PermGroup::PermGroup(size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Perm& g : generators_) {
    if (g.degree() != degree_) {
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " differs from group degree " + std::to_string(degree_));
    }
  }
  Build();
}

void PermGroup::RebuildOrbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base_point] = Perm(degree_);
  for (size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (const Perm& s : level.gens) {
      Point y = s[x];
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::Strip(const Perm& g,
                                         size_t from_level) const {
  Perm h = g;
  for (size_t i = from_level; i < levels_.size(); ++i) {
    Point x = h[levels_[i].base_point];
    const auto& u = levels_[i].transversal[x];
    if (!u) return {h, i};
    h = h * u->inverse();
  }
  return {h, levels_.size()};
}

void PermGroup::Build() {
  levels_.clear();
  for (const Perm& g : generators_) {
    if (g.is_identity()) continue;
    bool fixes_base = true;
    for (const Level& l : levels_) {
      if (g[l.base_point] != l.base_point) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) {
      Level l;
      l.base_point = *SmallestMovedPoint(g);
      levels_.push_back(std::move(l));
    }
  }
  for (size_t i = 0; i < levels_.size(); ++i) {
    for (const Perm& g : generators_) {
      if (g.is_identity()) continue;
      bool fixes = true;
      for (size_t j = 0; j < i; ++j) {
        if (g[levels_[j].base_point] != levels_[j].base_point) fixes = false;
      }
      if (fixes) levels_[i].gens.push_back(g);
    }
    RebuildOrbit(levels_[i]);
  }

  // Holt's incremental Schreier-Sims.
  size_t i = levels_.size();
  while (i > 0) {
    size_t lvl = i - 1;
    bool restarted = false;
    for (size_t k = 0; k < levels_[lvl].orbit.size() && !restarted; ++k) {
      Point x = levels_[lvl].orbit[k];
      for (size_t s_idx = 0; s_idx < levels_[lvl].gens.size(); ++s_idx) {
        const Perm s = levels_[lvl].gens[s_idx];
        const Perm& ux = *levels_[lvl].transversal[x];
        const Perm& uxs = *levels_[lvl].transversal[s[x]];
        Perm schreier = ux * s * uxs.inverse();
        auto [residue, j] = Strip(schreier, lvl + 1);
        bool nontrivial = j < levels_.size() || !residue.is_identity();
        if (!nontrivial) continue;
        if (j == levels_.size()) {
          Level l;
          l.base_point = *SmallestMovedPoint(residue);
          levels_.push_back(std::move(l));
        }
        for (size_t l = lvl + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          RebuildOrbit(levels_[l]);
        }
        i = j + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  base_.clear();
  for (const Level& l : levels_) base_.push_back(l.base_point);
}

std::vector<size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<size_t> r;
  for (const Level& l : levels_) r.push_back(l.orbit.size());
  return r;
}

uint64_t PermGroup::order() const {
  uint64_t n = 1;
  for (const Level& l : levels_) {
    if (n > std::numeric_limits<uint64_t>::max() / l.orbit.size()) {
      throw ResourceError("group order overflows 64 bits");
    }
    n *= l.orbit.size();
  }
  return n;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) throw InputError("degree mismatch");
  auto [residue, j] = Strip(g, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<Perm> PermGroup::Elements(uint64_t cap) const {
  if (order() > cap) {
    throw ResourceError("group order " + std::to_string(order()) +
                        " exceeds element cap " + std::to_string(cap));
  }
  std::vector<Perm> current{Perm(degree_)};
  // g = u_k ... u_1, built from the deepest level upwards.
  for (size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(current.size() * levels_[i].orbit.size());
    for (const Perm& h : current) {
      for (Point x : levels_[i].orbit) {
        next.push_back(h * *levels_[i].transversal[x]);
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace fusionloc
