#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/element_set.hpp"

namespace burnside {

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultGroupOrderCap = 1024;

/// A finite group stored as a complete Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates that `table` (row-major, order x order) is a group table with
  /// identity 0 and builds the inverse and element-order maps.
  /// Associativity is not checked here; see `check_associativity`.
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inverse_[g]); }
  Element power(Element g, std::uint64_t k) const;

  std::size_t element_order(Element g) const { return element_orders_[g]; }
  bool is_abelian() const { return abelian_; }
  bool check_associativity() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_orders_;
  bool abelian_ = true;
};

/// A subgroup as a sorted element list with a bitset for membership.
class Subgroup {
 public:
  /// `members` must be a subgroup;
  /// closure is the caller's responsibility (see `is_subgroup`).
  explicit Subgroup(const ElementSet& members);

  std::size_t order() const { return elements_.size(); }
  std::span<const Element> elements() const { return elements_; }
  const ElementSet& members() const { return members_; }
  bool contains(Element x) const { return members_.contains(x); }
  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }
  /// Lexicographic on the sorted element lists.
  bool operator<(const Subgroup& other) const { return elements_ < other.elements_; }

 private:
  ElementSet members_;
  std::vector<Element> elements_;
};

using Permutation = std::vector<std::uint32_t>;

FiniteGroup group_from_perm_generators(std::size_t degree, std::span<const Permutation> generators,
                                       std::size_t order_cap = kDefaultGroupOrderCap,
                                       std::string name = "perm");

/// Parses a generator file: `degree n` followed by one generator per line in
/// zero-based disjoint-cycle notation such as `(0 1 2)(3 4)`.
struct PermGeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};
PermGeneratorFile parse_perm_generators(std::string_view text);
/// Parses a single generator in cycle notation on `degree` points.
Permutation parse_cycles(std::string_view text, std::size_t degree);

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> seed);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& u, Element by);

/// True if `set` contains the identity and is closed under products.
bool is_subgroup(const FiniteGroup& g, const ElementSet& set);
bool is_abelian(const FiniteGroup& g, const Subgroup& u);
bool is_cyclic(const FiniteGroup& g, const Subgroup& u);

/// Returns (p, k) with n = p^k, p prime, or (0, 0) if n is not a prime power.
/// n = 1 yields (1, 0).
struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
};
PrimePower prime_power(std::uint64_t n);

}  // namespace burnside
