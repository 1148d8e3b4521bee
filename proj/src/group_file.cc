#include "fusionloc/group_file.h"

#include <fstream>
#include <sstream>

#include "fusionloc/errors.h"

namespace fusionloc {

GroupFile ParseGroupFile(const std::string& text) {
  GroupFile f;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool have_degree = false;
  std::vector<Perm>* target = &f.generators;
  auto fail = [&](const std::string& msg) {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (!have_degree) {
      long n = 0;
      std::string extra;
      if (first != "degree" || !(words >> n) || n < 1 || (words >> extra)) {
        fail("expected 'degree N' with N >= 1");
      }
      f.degree = static_cast<size_t>(n);
      have_degree = true;
      continue;
    }
    if (first == "subgroup") {
      std::string name, extra;
      if (!(words >> name) || (words >> extra)) fail("expected 'subgroup NAME'");
      if (f.subgroups.count(name)) fail("duplicate subgroup '" + name + "'");
      f.subgroup_order.push_back(name);
      target = &f.subgroups[name];
      continue;
    }
    std::vector<long> images;
    std::istringstream nums(line);
    std::string tok;
    while (nums >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        fail("non-numeric token '" + tok + "'");
      }
      images.push_back(std::stol(tok));
    }
    if (images.size() != f.degree) {
      fail("generator has " + std::to_string(images.size()) +
           " images, expected " + std::to_string(f.degree));
    }
    try {
      target->push_back(Perm::FromOneBased(images));
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
  if (!have_degree) throw InputError("line 1: missing 'degree N' header");
  return f;
}

GroupFile ReadGroupFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseGroupFile(buf.str());
}

std::string FormatGroupFile(const GroupFile& f) {
  std::ostringstream out;
  out << "degree " << f.degree << '\n';
  auto emit = [&](const std::vector<Perm>& gens) {
    for (const Perm& g : gens) {
      auto imgs = g.OneBased();
      for (size_t i = 0; i < imgs.size(); ++i) out << (i ? " " : "") << imgs[i];
      out << '\n';
    }
  };
  emit(f.generators);
  for (const auto& name : f.subgroup_order) {
    out << "subgroup " << name << '\n';
    emit(f.subgroups.at(name));
  }
  return out.str();
}

const Subgroup& LoadedGroup::operator[](const std::string& name) const {
  auto it = named.find(name);
  if (it == named.end()) throw InputError("no subgroup named '" + name + "'");
  return it->second;
}

Elem LoadedGroup::elem(const std::string& cycles) const {
  return universe->index(Perm::FromCycles(universe->degree(), cycles));
}

Subgroup LoadedGroup::sub(std::initializer_list<std::string> cycles) const {
  std::vector<Elem> gens;
  for (const auto& c : cycles) gens.push_back(elem(c));
  return Generate(*universe, gens);
}

LoadedGroup LoadGroup(const GroupFile& f) {
  LoadedGroup g;
  g.universe = Group::Create(PermGroup(f.degree, f.generators));
  g.whole = g.universe->whole();
  for (const auto& name : f.subgroup_order) {
    std::vector<Elem> gens;
    for (const Perm& p : f.subgroups.at(name)) {
      auto e = g.universe->find(p);
      if (!e) {
        throw InputError("subgroup " + name + ": generator " + p.ToCycles() +
                         " is not in the group");
      }
      gens.push_back(*e);
    }
    g.named.emplace(name, Generate(*g.universe, gens));
  }
  return g;
}

}  // namespace fusionloc
