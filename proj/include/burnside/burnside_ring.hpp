#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "burnside/lattice.hpp"

namespace burnside {

/// Element of the ghost ring: one integer per subgroup class, in canonical class order.
struct GhostVector {
  std::vector<std::int64_t> values;

  bool operator==(const GhostVector&) const = default;
};

/// Element of the Burnside ring in the basis of transitive G-sets [G/U].
struct BurnsideElement {
  std::vector<std::int64_t> coefficients;

  bool operator==(const BurnsideElement&) const = default;
};

/// entries(i, j) = number of fixed points of a class-i subgroup on G/U_j.
class TableOfMarks {
 public:
  TableOfMarks(std::size_t size, std::vector<std::int64_t> entries)
      : size_(size), entries_(std::move(entries)) {}

  std::size_t size() const { return size_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

 private:
  std::size_t size_;
  std::vector<std::int64_t> entries_;
};

std::int64_t mark(const SubgroupLattice& lattice, std::size_t i, std::size_t j);
TableOfMarks table_of_marks(const SubgroupLattice& lattice);

/// One congruence: for U normal in V with (V:U) a prime power > 1,
/// sum over vU in V/U of x(<v, U>) = 0 mod (V:U). The coset sum is stored as
/// (class, number of cosets landing in that class) terms.
struct DressCongruence {
  std::size_t u_subgroup = 0;
  std::size_t v_subgroup = 0;
  std::size_t u_class = 0;
  std::size_t v_class = 0;
  std::int64_t index = 0;
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
};

struct CongruenceViolation {
  std::size_t u_class = 0;
  std::size_t v_class = 0;
  std::int64_t index = 0;
  std::int64_t sum = 0;
  std::int64_t residue = 0;
};

struct CongruenceCertificate {
  bool holds = true;
  std::vector<CongruenceViolation> violations;
};

struct MarksSolution {
  bool integral = true;
  std::vector<mpq_class> coefficients;
};

/// Pairs (U, V) up to simultaneous conjugation: V runs over class
/// representatives and U over N_G(V)-orbits of its qualifying normal subgroups.
/// Sorted by (V class, U class, U elements).
std::vector<DressCongruence> dress_congruences(const SubgroupLattice& lattice);

/// Burnside ring of one group: its lattice, table of marks and the full Dress
/// congruence system, with both membership tests.
class BurnsideRing {
 public:
  explicit BurnsideRing(std::shared_ptr<const SubgroupLattice> lattice);

  const SubgroupLattice& lattice() const { return *lattice_; }
  const FiniteGroup& group() const { return lattice_->group(); }
  const TableOfMarks& marks() const { return marks_; }
  const std::vector<DressCongruence>& congruences() const { return congruences_; }
  std::size_t num_classes() const { return marks_.size(); }

  GhostVector ghost_of(const BurnsideElement& x) const;

  /// With `first_only`, stops at the first violated congruence.
  CongruenceCertificate dress_membership(const GhostVector& x, bool first_only = false) const;
  MarksSolution marks_membership(const GhostVector& x) const;
  bool cfb_check(const GhostVector& x) const;

  /// Least n >= 1 with n*x in the Burnside ring, from the marks route.
  std::uint64_t minimal_multiplier(const GhostVector& x) const;
  /// Same quantity by ascending search over divisors of |G| with the Dress test.
  std::uint64_t minimal_multiplier_by_dress(const GhostVector& x) const;

  GhostVector unit_vector(std::size_t k) const;

 private:
  void check_dimension(std::size_t n) const;

  std::shared_ptr<const SubgroupLattice> lattice_;
  TableOfMarks marks_;
  std::vector<DressCongruence> congruences_;
};

std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace burnside
