#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/catalog.hpp"

namespace burnside {

/// Indicator of the family: 1 on member classes, 0 elsewhere.
GhostVector indicator_vector(const SubgroupLattice& lattice, FamilyKind family);

struct DivisorCertificate {
  std::uint64_t divisor = 0;
  CongruenceViolation violation;
};

struct ExponentResult {
  std::uint64_t exponent = 0;  // lcm of coefficient denominators
  std::uint64_t dress_exponent = 0;  // ascending divisor search with the Dress test
  FamilyKind family = FamilyKind::ElementaryAbelian;
  std::vector<std::size_t> family_classes;
  /// One violated congruence for each proper divisor of `exponent`.
  std::vector<DivisorCertificate> certificates;

  bool routes_agree() const { return exponent == dress_exponent; }
};

ExponentResult artin_exponent(const BurnsideRing& ring, FamilyKind family);

/// Minimal e for which e*(1, 1, 0, ..., 0) satisfies the cyclic-group
/// congruences p^i x_i + sum_{j>i} (p^j - p^{j-1}) x_j = 0 mod p^n.
std::uint64_t cyclic_exponent_via_congruences(const FiniteGroup& g);

/// |G : {g : g^p = 1}| for an abelian p-group.
std::uint64_t abelian_exponent_formula(const FiniteGroup& g);

enum class ClosedFormCase { Abelian, Exceptional, Generic };
std::string_view to_string(ClosedFormCase c);

struct ClosedForm {
  std::uint64_t exponent = 0;
  ClosedFormCase which = ClosedFormCase::Abelian;
  std::string detail;  // e.g. "abelian", "quaternion", "semidihedral", "generic"
};

/// The conjectured closed form for a p-group: |G : Ubar| when abelian,
/// 2 for quaternion and dihedral, 4 for semidihedral, |G|/p otherwise.
ClosedForm closed_form_exponent(const FiniteGroup& g);

/// For e = 1: U in the family iff V in it, over every U normal in V with
/// prime-power index. Vacuously true when e != 1.
bool check_family_closure(const BurnsideRing& ring, FamilyKind family);

struct TheoremRow {
  std::string label;
  std::uint64_t order = 0;
  std::size_t num_classes = 0;
  std::uint64_t marks_exponent = 0;
  std::uint64_t dress_exponent = 0;
  ClosedForm closed_form;

  bool routes_agree() const { return marks_exponent == dress_exponent; }
  bool agree() const { return routes_agree() && marks_exponent == closed_form.exponent; }
};

struct TheoremReport {
  std::vector<TheoremRow> rows;

  bool all_agree() const;
};

/// Every catalog p-group of order <= max_order, in catalog order.
TheoremReport verify_main_theorem(std::uint64_t max_order, std::size_t lattice_cap = kDefaultLatticeOrderCap);
TheoremRow theorem_row(const CatalogEntry& entry, std::size_t lattice_cap = kDefaultLatticeOrderCap);

}  // namespace burnside
