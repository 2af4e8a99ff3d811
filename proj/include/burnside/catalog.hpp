#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// Named group families. Orders for the 2-group families are the full
/// group order 2^n, so `Dihedral` with order 8 is the symmetry group of a square.
enum class GroupKind {
  Cyclic,                // base^exponent; `Cm` is Cyclic(m, 1)
  ElementaryAbelian,     // (C_p)^k
  AbelianProduct,        // C_{m1} x C_{m2} x ...
  Dihedral,              // order 2^n, n >= 3
  Quaternion,            // order 2^n, n >= 3
  Semidihedral,          // order 2^n, n >= 4
  ModularMaximalCyclic,  // order 2^n, n >= 4
  ExtraspecialPlus,      // order p^3, exponent p, p odd
  ExtraspecialMinus,     // order p^3, exponent p^2, p odd
  DirectProduct,
  PermutationFile,
};

class GroupSpec {
 public:
  static GroupSpec cyclic(std::uint64_t p, unsigned n);
  static GroupSpec cyclic_of_order(std::uint64_t m);
  static GroupSpec elementary_abelian(std::uint64_t p, unsigned k);
  static GroupSpec abelian_product(std::vector<std::uint64_t> factors);
  static GroupSpec dihedral(std::uint64_t order);
  static GroupSpec quaternion(std::uint64_t order);
  static GroupSpec semidihedral(std::uint64_t order);
  static GroupSpec modular_maximal_cyclic(std::uint64_t order);
  static GroupSpec extraspecial_plus(std::uint64_t p);
  static GroupSpec extraspecial_minus(std::uint64_t p);
  static GroupSpec direct_product(GroupSpec a, GroupSpec b);
  static GroupSpec permutation_file(std::string path);

  GroupKind kind() const { return kind_; }
  /// Prime (or cyclic base) for parametrized kinds; nominal order for 2-group families.
  std::uint64_t base() const { return base_; }
  unsigned exponent() const { return exponent_; }
  const std::vector<std::uint64_t>& factors() const { return factors_; }
  const GroupSpec& left() const { return *operands_.at(0); }
  const GroupSpec& right() const { return *operands_.at(1); }
  const std::string& path() const { return path_; }

  /// Nominal order; 0 for permutation files (unknown until built).
  std::uint64_t order() const;
  /// Canonical textual form, accepted back by `parse_group_spec`.
  std::string to_string() const;

  bool operator==(const GroupSpec& other) const;

 private:
  GroupSpec(GroupKind kind) : kind_(kind) {}

  GroupKind kind_;
  std::uint64_t base_ = 0;
  unsigned exponent_ = 0;
  std::vector<std::uint64_t> factors_;
  std::vector<std::shared_ptr<const GroupSpec>> operands_;
  std::string path_;
};

/// Realizes `spec` as a Cayley table. Throws DomainError for invalid
/// parameters or orders above `order_cap`.
FiniteGroup build(const GroupSpec& spec, std::size_t order_cap = kDefaultGroupOrderCap);

/// Grammar: `C(p^n)` | `Cm` | `C(m)` | `EA(p,k)` | `D(2^n)` | `Q(2^n)` | `SD(2^n)` |
/// `M(2^n)` | `ES+(p)` | `ES-(p)` | `perm:<path>`, joined with `x` for direct
/// products. Family names also take a bare order: `D8`, `Q16`, `SD(16)`.
GroupSpec parse_group_spec(std::string_view text);

enum class MaximalCyclicType {
  QuaternionType,
  DihedralType,
  ModularType,
  SemidihedralType,
  CyclicType,
  NotMaximalCyclic,
};

std::string_view to_string(MaximalCyclicType t);

/// Classifies a 2-group with a cyclic subgroup of index 2 by searching for
/// (g, h) pairs satisfying one of the four defining presentations.
MaximalCyclicType classify_maximal_cyclic_2group(const FiniteGroup& g);

struct CatalogEntry {
  std::string label;
  GroupSpec spec;
};

/// The built-in list of groups used by the verification harness, sorted by
/// order. All entries up to order 128 are p-groups, except a handful of
/// small non-p-group sanity inputs.
const std::vector<CatalogEntry>& catalog();

}  // namespace burnside
