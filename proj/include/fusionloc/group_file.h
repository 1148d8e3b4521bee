#ifndef FUSIONLOC_GROUP_FILE_H_
#define FUSIONLOC_GROUP_FILE_H_

#include <map>
#include <string>
#include <vector>

#include "fusionloc/group.h"
#include "fusionloc/perm.h"

namespace fusionloc {

// Plain-text group definition:
//
//   degree N
//   <N space-separated 1-based images>    one generator per line
//   subgroup NAME
//   <generator lines of NAME>
//
// '#' starts a comment. Generators before the first subgroup block belong
// to the ambient group.
struct GroupFile {
  size_t degree = 0;
  std::vector<Perm> generators;
  std::map<std::string, std::vector<Perm>> subgroups;
  std::vector<std::string> subgroup_order;  // names in file order
};

// Throws InputError with a "line K:" prefix on malformed input.
GroupFile ParseGroupFile(const std::string& text);
GroupFile ReadGroupFile(const std::string& path);
std::string FormatGroupFile(const GroupFile& f);

// An enumerated group together with its named subgroups.
struct LoadedGroup {
  std::shared_ptr<const Group> universe;
  Subgroup whole;
  std::map<std::string, Subgroup> named;

  // Throws InputError when `name` is not defined.
  const Subgroup& operator[](const std::string& name) const;
  Elem elem(const std::string& cycles) const;
  Subgroup sub(std::initializer_list<std::string> cycles) const;
};

// Enumerates the group; every named subgroup must lie inside it.
LoadedGroup LoadGroup(const GroupFile& f);

}  // namespace fusionloc

#endif  // FUSIONLOC_GROUP_FILE_H_
