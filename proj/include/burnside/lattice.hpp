#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

inline constexpr std::size_t kDefaultLatticeOrderCap = 256;

/// One conjugacy class of subgroups. `representative` is the
/// lexicographically smallest member; `members` are sorted lexicographically.
struct SubgroupClass {
  std::size_t class_index = 0;
  Subgroup representative;
  std::vector<std::size_t> members;  // indices into SubgroupLattice::subgroups()
  Subgroup normalizer;
  bool is_cyclic = false;
  bool is_elementary_abelian = false;
  bool is_normal = false;

  std::size_t order() const { return representative.order(); }
  std::size_t size() const { return members.size(); }
};

/// All subgroups of a group, grouped into conjugacy classes.
///
/// Class order: ascending subgroup order, then descending class size, then
/// the sorted element list of the representative. Class 0 is the trivial
/// subgroup and the last class is the whole group.
class SubgroupLattice {
 public:
  const FiniteGroup& group() const { return *group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }

  /// Class index of `subgroups()[i]`.
  std::size_t class_of_subgroup(std::size_t i) const { return subgroup_class_[i]; }
  /// Index into `subgroups()` of an arbitrary subgroup of the group; throws if
  /// `members` is not one.
  std::size_t subgroup_index(const ElementSet& members) const;
  std::size_t class_of(const ElementSet& members) const { return class_of_subgroup(subgroup_index(members)); }
  /// Class of the cyclic subgroup generated by each element.
  std::size_t class_of_cyclic(Element g) const { return cyclic_class_[g]; }

 private:
  friend SubgroupLattice enumerate_subgroups(std::shared_ptr<const FiniteGroup>, std::size_t);

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::size_t> subgroup_class_;
  std::vector<std::size_t> cyclic_class_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Throws DomainError if the group order exceeds `order_cap`.
SubgroupLattice enumerate_subgroups(std::shared_ptr<const FiniteGroup> group,
                                    std::size_t order_cap = kDefaultLatticeOrderCap);
SubgroupLattice enumerate_subgroups(const FiniteGroup& group, std::size_t order_cap = kDefaultLatticeOrderCap);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& u);

/// Abelian of prime exponent. The trivial subgroup counts; subgroups of
/// non-prime-power order do not.
bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& u);

/// {x : x^p = 1} for an abelian p-group. Throws DomainError otherwise.
Subgroup maximal_elementary_abelian(const FiniteGroup& g);

enum class FamilyKind { ElementaryAbelian, Cyclic, AllSubgroups };

std::string_view to_string(FamilyKind f);
FamilyKind parse_family(std::string_view text);

/// Class indices (ascending) whose representatives belong to the family.
std::vector<std::size_t> select_family(const SubgroupLattice& lattice, FamilyKind family);

}  // namespace burnside
