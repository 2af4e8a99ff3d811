#include "burnside/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "burnside/error.hpp"

namespace burnside {

namespace {

// <gens>, given as a generating list; BFS over right multiplication.
ElementSet closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  ElementSet members(g.order());
  members.insert(kIdentity);
  std::vector<Element> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto s : gens) {
      const Element next = g.mul(queue[head], s);
      if (!members.contains(next)) {
        members.insert(next);
        queue.push_back(next);
      }
    }
  }
  return members;
}

}  // namespace

std::size_t SubgroupLattice::subgroup_index(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) throw DomainError("set is not a subgroup of " + group_->name());
  return it->second;
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& group, std::size_t order_cap) {
  return enumerate_subgroups(std::make_shared<const FiniteGroup>(group), order_cap);
}

SubgroupLattice enumerate_subgroups(std::shared_ptr<const FiniteGroup> group, std::size_t order_cap) {
  const FiniteGroup& g = *group;
  if (g.order() > order_cap) {
    throw DomainError("group " + g.name() + " has order " + std::to_string(g.order()) +
                      ", above the subgroup enumeration cap of " + std::to_string(order_cap));
  }

  std::vector<ElementSet> sets;
  std::vector<std::vector<Element>> generators;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto add = [&](ElementSet s, std::vector<Element> gens) {
    if (index.contains(s)) return;
    index.emplace(s, sets.size());
    sets.push_back(std::move(s));
    generators.push_back(std::move(gens));
  };

  // Layer 0: cyclic subgroups, remembering one generator per distinct one.
  std::vector<Element> cyclic_generators;
  for (Element x = 0; x < g.order(); ++x) {
    ElementSet s = closure(g, {x});
    if (!index.contains(s)) cyclic_generators.push_back(x);
    add(std::move(s), x == kIdentity ? std::vector<Element>{} : std::vector<Element>{x});
  }

  // Joins with cyclic subgroups until nothing new appears.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto x : cyclic_generators) {
      if (sets[i].contains(x)) continue;
      std::vector<Element> gens = generators[i];
      gens.push_back(x);
      ElementSet joined = closure(g, gens);
      add(std::move(joined), std::move(gens));
    }
  }

  SubgroupLattice lattice;
  lattice.group_ = group;

  // Conjugacy orbits.
  const std::size_t n = sets.size();
  std::vector<std::size_t> orbit_of(n, n);
  struct Orbit {
    std::vector<std::size_t> members;
    ElementSet normalizer;
  };
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of[i] != n) continue;
    Orbit orbit;
    orbit.normalizer = ElementSet(g.order());
    if (g.is_abelian()) {
      orbit.members.push_back(i);
      for (Element x = 0; x < g.order(); ++x) orbit.normalizer.insert(x);
    } else {
      const auto elems = sets[i].to_vector();
      for (Element x = 0; x < g.order(); ++x) {
        ElementSet conj(g.order());
        for (auto u : elems) conj.insert(g.conjugate(x, u));
        const std::size_t j = index.at(conj);
        if (j == i) orbit.normalizer.insert(x);
        if (orbit_of[j] == n) {
          orbit_of[j] = orbits.size();
          orbit.members.push_back(j);
        }
      }
    }
    orbit_of[i] = orbits.size();
    if (orbit.members.empty()) orbit.members.push_back(i);
    orbits.push_back(std::move(orbit));
  }

  for (const auto& s : sets) lattice.subgroups_.emplace_back(s);

  std::vector<SubgroupClass> classes;
  for (auto& orbit : orbits) {
    std::sort(orbit.members.begin(), orbit.members.end(),
              [&](std::size_t a, std::size_t b) { return lattice.subgroups_[a] < lattice.subgroups_[b]; });
    SubgroupClass c{0, lattice.subgroups_[orbit.members.front()], orbit.members, Subgroup(orbit.normalizer)};
    c.is_cyclic = is_cyclic(g, c.representative);
    c.is_elementary_abelian = is_elementary_abelian(g, c.representative);
    c.is_normal = c.members.size() == 1;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.size() != b.size()) return a.size() > b.size();
    return a.representative < b.representative;
  });

  lattice.subgroup_class_.assign(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    classes[c].class_index = c;
    for (auto m : classes[c].members) lattice.subgroup_class_[m] = c;
  }
  lattice.classes_ = std::move(classes);
  lattice.index_ = std::move(index);

  lattice.cyclic_class_.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) lattice.cyclic_class_[x] = lattice.class_of(closure(g, {x}));
  return lattice;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& u) {
  ElementSet out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool stable = true;
    for (auto e : u.elements()) {
      if (!u.contains(g.conjugate(x, e))) {
        stable = false;
        break;
      }
    }
    if (stable) out.insert(x);
  }
  return Subgroup(out);
}

bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& u) {
  if (u.order() == 1) return true;
  const auto pp = prime_power(u.order());
  if (pp.prime == 0) return false;
  for (auto x : u.elements()) {
    if (x != kIdentity && g.element_order(x) != pp.prime) return false;
  }
  return is_abelian(g, u);
}

Subgroup maximal_elementary_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw DomainError("maximal elementary abelian subgroup needs an abelian group");
  const auto pp = prime_power(g.order());
  if (pp.prime == 0) throw DomainError("maximal elementary abelian subgroup needs a p-group");
  ElementSet out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (g.power(x, pp.prime) == kIdentity) out.insert(x);
  }
  return Subgroup(out);
}

std::string_view to_string(FamilyKind f) {
  switch (f) {
    case FamilyKind::ElementaryAbelian: return "ea";
    case FamilyKind::Cyclic: return "cyclic";
    case FamilyKind::AllSubgroups: return "all";
  }
  return "?";
}

FamilyKind parse_family(std::string_view text) {
  if (text == "ea") return FamilyKind::ElementaryAbelian;
  if (text == "cyclic") return FamilyKind::Cyclic;
  if (text == "all") return FamilyKind::AllSubgroups;
  throw DomainError("unknown family '" + std::string(text) + "' (expected ea, cyclic or all)");
}

std::vector<std::size_t> select_family(const SubgroupLattice& lattice, FamilyKind family) {
  std::vector<std::size_t> out;
  for (const auto& c : lattice.classes()) {
    const bool in = family == FamilyKind::AllSubgroups || (family == FamilyKind::Cyclic && c.is_cyclic) ||
                    (family == FamilyKind::ElementaryAbelian && c.is_elementary_abelian);
    if (in) out.push_back(c.class_index);
  }
  return out;
}

}  // namespace burnside
