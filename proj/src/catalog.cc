#include "fusionloc/catalog.h"

#include "fusionloc/errors.h"

namespace fusionloc {

namespace {

NamedGroup Make(std::string name, size_t degree,
                std::vector<std::string> gens,
                std::vector<std::pair<std::string, std::vector<std::string>>>
                    subgroups = {}) {
  NamedGroup g;
  g.name = std::move(name);
  g.file.degree = degree;
  for (const auto& c : gens) g.file.generators.push_back(Perm::FromCycles(degree, c));
  for (auto& [sub, sg] : subgroups) {
    g.file.subgroup_order.push_back(sub);
    auto& list = g.file.subgroups[sub];
    for (const auto& c : sg) list.push_back(Perm::FromCycles(degree, c));
  }
  return g;
}

}  // namespace

NamedGroup CatalogSym3() {
  return Make("sym3", 3, {"(1 2 3)", "(1 2)"}, {{"S", {"(1 2)"}}});
}

NamedGroup CatalogSym4() {
  return Make("sym4", 4, {"(1 2)", "(1 2 3 4)"},
              {{"S", {"(1 2 3 4)", "(1 3)"}},
               {"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}},
               {"Z", {"(1 3)(2 4)"}},
               {"C4", {"(1 2 3 4)"}},
               {"W", {"(1 3)", "(2 4)"}}});
}

NamedGroup CatalogAlt4() {
  return Make("alt4", 4, {"(1 2 3)", "(1 2)(3 4)"},
              {{"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}}});
}

NamedGroup CatalogAlt5() {
  return Make("alt5", 5, {"(1 2 3 4 5)", "(1 2 3)"},
              {{"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}}});
}

NamedGroup CatalogD8() {
  return Make("d8", 4, {"(1 2 3 4)", "(1 3)"},
              {{"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}},
               {"Z", {"(1 3)(2 4)"}}});
}

NamedGroup CatalogQ8() {
  // Left-regular action of Q8 = {1,i,j,k,-1,-i,-j,-k} labelled 1..8.
  return Make("q8", 8, {"(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"});
}

NamedGroup CatalogSL32() {
  return Make("sl32", 7, {"(1 2 3 4 5 6 7)", "(3 5)(6 7)"});
}

NamedGroup CatalogSym4xC3() {
  return Make("sym4xc3", 7, {"(1 2)", "(1 2 3 4)", "(5 6 7)"},
              {{"S", {"(1 2 3 4)", "(1 3)"}},
               {"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}}});
}

NamedGroup CatalogD8xC3() {
  return Make("d8xc3", 7, {"(1 2 3 4)", "(1 3)", "(5 6 7)"},
              {{"S", {"(1 2 3 4)", "(1 3)"}}});
}

NamedGroup CatalogGL23() {
  // Nonzero vectors of F_3^2 as 1..8: (1,0) (2,0) (0,1) (0,2) (1,1) (2,2)
  // (1,2) (2,1). Generators: [[1,1],[0,1]] and [[0,1],[2,0]] acting on rows,
  // plus the diagonal [[2,0],[0,1]].
  return Make("gl23", 8,
              {"(1 5 7)(2 6 8)", "(1 3 2 4)(5 8 6 7)", "(1 2)(5 8)(6 7)"});
}

std::vector<NamedGroup> Catalog() {
  return {CatalogSym3(),    CatalogSym4(),  CatalogAlt4(), CatalogAlt5(),
          CatalogD8(),      CatalogQ8(),    CatalogSL32(), CatalogSym4xC3(),
          CatalogD8xC3(),   CatalogGL23()};
}

NamedGroup CatalogByName(const std::string& name) {
  for (auto& g : Catalog()) {
    if (g.name == name) return g;
  }
  throw InputError("unknown catalog group '" + name + "'");
}

}  // namespace fusionloc
