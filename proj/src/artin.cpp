#include "burnside/artin.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "burnside/error.hpp"

namespace burnside {

GhostVector indicator_vector(const SubgroupLattice& lattice, FamilyKind family) {
  GhostVector b{std::vector<std::int64_t>(lattice.num_classes(), 0)};
  for (auto c : select_family(lattice, family)) b.values[c] = 1;
  return b;
}

ExponentResult artin_exponent(const BurnsideRing& ring, FamilyKind family) {
  ExponentResult r;
  r.family = family;
  r.family_classes = select_family(ring.lattice(), family);
  const GhostVector b = indicator_vector(ring.lattice(), family);

  r.exponent = ring.minimal_multiplier(b);

  for (auto d : divisors(ring.group().order())) {
    GhostVector scaled = b;
    for (auto& v : scaled.values) v *= static_cast<std::int64_t>(d);
    const auto cert = ring.dress_membership(scaled, true);
    if (cert.holds) {
      if (r.dress_exponent == 0) r.dress_exponent = d;
      if (d >= r.exponent) break;
    } else if (d < r.exponent && r.exponent % d == 0) {
      r.certificates.push_back({d, cert.violations.front()});
    }
  }
  return r;
}

namespace {

PrimePower require_p_group(const FiniteGroup& g, const char* what) {
  const auto pp = prime_power(g.order());
  if (pp.prime == 0) {
    throw DomainError(std::string(what) + " needs a p-group, " + g.name() + " has order " +
                      std::to_string(g.order()));
  }
  return pp;
}

}  // namespace

std::uint64_t cyclic_exponent_via_congruences(const FiniteGroup& g) {
  const auto pp = require_p_group(g, "cyclic congruence formula");
  bool cyclic = false;
  for (Element x = 0; x < g.order() && !cyclic; ++x) cyclic = g.element_order(x) == g.order();
  if (!cyclic) throw DomainError("cyclic congruence formula needs a cyclic group, got " + g.name());

  const std::uint64_t p = pp.prime;
  const unsigned n = pp.exponent;
  std::vector<std::uint64_t> p_pow(n + 1, 1);
  for (unsigned i = 1; i <= n; ++i) p_pow[i] = p_pow[i - 1] * p;

  for (std::uint64_t e = 1;; ++e) {
    // x(U_0) = x(U_1) = e, zero above.
    auto x = [&](unsigned j) -> std::uint64_t { return j <= 1 ? e : 0; };
    bool ok = true;
    for (unsigned i = 0; i <= n && ok; ++i) {
      std::uint64_t lhs = p_pow[i] * x(i);
      for (unsigned j = i + 1; j <= n; ++j) lhs += (p_pow[j] - p_pow[j - 1]) * x(j);
      ok = lhs % p_pow[n] == 0;
    }
    if (ok) return e;
  }
}

std::uint64_t abelian_exponent_formula(const FiniteGroup& g) {
  require_p_group(g, "abelian exponent formula");
  if (!g.is_abelian()) throw DomainError("abelian exponent formula needs an abelian group, got " + g.name());
  return g.order() / maximal_elementary_abelian(g).order();
}

std::string_view to_string(ClosedFormCase c) {
  switch (c) {
    case ClosedFormCase::Abelian: return "a";
    case ClosedFormCase::Exceptional: return "b";
    case ClosedFormCase::Generic: return "c";
  }
  return "?";
}

ClosedForm closed_form_exponent(const FiniteGroup& g) {
  const auto pp = require_p_group(g, "closed-form exponent");
  if (g.is_abelian()) return {abelian_exponent_formula(g), ClosedFormCase::Abelian, "abelian"};
  if (pp.prime == 2) {
    switch (classify_maximal_cyclic_2group(g)) {
      case MaximalCyclicType::QuaternionType: return {2, ClosedFormCase::Exceptional, "quaternion"};
      case MaximalCyclicType::DihedralType: return {2, ClosedFormCase::Exceptional, "dihedral"};
      case MaximalCyclicType::SemidihedralType: return {4, ClosedFormCase::Exceptional, "semidihedral"};
      default: break;
    }
  }
  return {g.order() / pp.prime, ClosedFormCase::Generic, "generic"};
}

bool check_family_closure(const BurnsideRing& ring, FamilyKind family) {
  if (artin_exponent(ring, family).exponent != 1) return true;
  const auto& lattice = ring.lattice();
  std::vector<bool> in(lattice.num_classes(), false);
  for (auto c : select_family(lattice, family)) in[c] = true;
  // Index-1 pairs are trivially fine; the congruence list holds every other
  // qualifying pair up to conjugacy.
  return std::all_of(ring.congruences().begin(), ring.congruences().end(),
                     [&](const DressCongruence& c) { return in[c.u_class] == in[c.v_class]; });
}

bool TheoremReport::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.agree(); });
}

TheoremRow theorem_row(const CatalogEntry& entry, std::size_t lattice_cap) {
  auto group = std::make_shared<const FiniteGroup>(build(entry.spec));
  auto lattice = std::make_shared<const SubgroupLattice>(enumerate_subgroups(group, lattice_cap));
  const BurnsideRing ring(lattice);
  const auto result = artin_exponent(ring, FamilyKind::ElementaryAbelian);

  TheoremRow row;
  row.label = entry.label;
  row.order = group->order();
  row.num_classes = lattice->num_classes();
  row.marks_exponent = result.exponent;
  row.dress_exponent = result.dress_exponent;
  row.closed_form = closed_form_exponent(*group);
  return row;
}

TheoremReport verify_main_theorem(std::uint64_t max_order, std::size_t lattice_cap) {
  std::vector<const CatalogEntry*> selected;
  for (const auto& entry : catalog()) {
    const auto order = entry.spec.order();
    if (order <= max_order && prime_power(order).prime != 0) selected.push_back(&entry);
  }

  // Rows are filled by index so the report keeps catalog order.
  TheoremReport report;
  report.rows.resize(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        report.rows[i] = theorem_row(*selected[i], lattice_cap);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), selected.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

}  // namespace burnside
