#include "fusionloc/caps.h"

#include <cstdlib>
#include <sstream>

#include "fusionloc/errors.h"

namespace fusionloc {

namespace {

uint64_t ParseNumber(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("FUSIONLOC_CAPS: expected a positive integer, got '" +
                     s + "'");
  }
  return std::stoull(s);
}

}  // namespace

std::string Caps::Describe() const {
  std::ostringstream out;
  out << "element=" << element_cap << ",table=" << table_cap
      << ",aut=" << aut_cap << ",lattice=" << lattice_cap
      << ",nodes=" << node_cap;
  return out.str();
}

Caps ParseCaps(const std::string& spec, Caps base) {
  if (spec.empty()) return base;
  if (spec.find('=') == std::string::npos) {
    uint64_t f = ParseNumber(spec);
    if (f == 0) throw InputError("FUSIONLOC_CAPS: factor must be positive");
    base.element_cap *= f;
    base.table_cap *= f;
    base.aut_cap *= f;
    base.lattice_cap *= f;
    base.node_cap *= f;
    return base;
  }
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("FUSIONLOC_CAPS: malformed entry '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    uint64_t v = ParseNumber(item.substr(eq + 1));
    if (key == "element") {
      base.element_cap = v;
    } else if (key == "table") {
      base.table_cap = v;
    } else if (key == "aut") {
      base.aut_cap = v;
    } else if (key == "lattice") {
      base.lattice_cap = v;
    } else if (key == "nodes") {
      base.node_cap = v;
    } else {
      throw InputError("FUSIONLOC_CAPS: unknown cap '" + key + "'");
    }
  }
  return base;
}

Caps& GlobalCaps() {
  static Caps caps = [] {
    const char* env = std::getenv("FUSIONLOC_CAPS");
    return env ? ParseCaps(env) : Caps();
  }();
  return caps;
}

}  // namespace fusionloc
