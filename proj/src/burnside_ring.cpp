#include "burnside/burnside_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "burnside/error.hpp"

namespace burnside {

namespace {

// Left coset representatives of `v`, in ascending element order.
std::vector<Element> coset_representatives(const FiniteGroup& g, const Subgroup& v) {
  std::vector<Element> reps;
  std::vector<bool> seen(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto e : v.elements()) seen[g.mul(x, e)] = true;
  }
  return reps;
}

// The stabilizing conjugates x V x^-1 of the cosets xV, with the number of
// cosets that share each conjugate.
std::vector<std::pair<ElementSet, std::int64_t>> coset_conjugates(const FiniteGroup& g, const Subgroup& v) {
  std::vector<std::pair<ElementSet, std::int64_t>> out;
  for (auto x : coset_representatives(g, v)) {
    ElementSet conj(g.order());
    for (auto e : v.elements()) conj.insert(g.conjugate(x, e));
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == conj; });
    if (it == out.end()) {
      out.emplace_back(std::move(conj), 1);
    } else {
      ++it->second;
    }
  }
  return out;
}

bool is_prime_power_above_one(std::uint64_t n) {
  const auto pp = prime_power(n);
  return pp.prime > 1 && pp.exponent >= 1;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t mark(const SubgroupLattice& lattice, std::size_t i, std::size_t j) {
  const auto& g = lattice.group();
  const auto& u = lattice.classes().at(i).representative;
  const auto& v = lattice.classes().at(j).representative;
  if (v.order() % u.order() != 0) return 0;
  std::int64_t fixed = 0;
  for (const auto& [conj, cosets] : coset_conjugates(g, v)) {
    if (u.members().is_subset_of(conj)) fixed += cosets;
  }
  return fixed;
}

TableOfMarks table_of_marks(const SubgroupLattice& lattice) {
  const std::size_t n = lattice.num_classes();
  const auto& g = lattice.group();
  std::vector<std::int64_t> entries(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = lattice.classes()[j].representative;
    const auto conjugates = coset_conjugates(g, v);
    for (std::size_t i = 0; i <= j; ++i) {
      const auto& u = lattice.classes()[i].representative;
      if (v.order() % u.order() != 0) continue;
      std::int64_t fixed = 0;
      for (const auto& [conj, cosets] : conjugates) {
        if (u.members().is_subset_of(conj)) fixed += cosets;
      }
      entries[i * n + j] = fixed;
    }
  }
  return TableOfMarks(n, std::move(entries));
}

std::vector<DressCongruence> dress_congruences(const SubgroupLattice& lattice) {
  const auto& g = lattice.group();
  const auto& subgroups = lattice.subgroups();

  // Candidate U's in (class, elements) order so the first of each orbit is canonical.
  std::vector<std::size_t> by_class(subgroups.size());
  std::iota(by_class.begin(), by_class.end(), 0);
  std::sort(by_class.begin(), by_class.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = lattice.class_of_subgroup(a), cb = lattice.class_of_subgroup(b);
    if (ca != cb) return ca < cb;
    return subgroups[a] < subgroups[b];
  });

  std::vector<DressCongruence> out;
  for (const auto& vclass : lattice.classes()) {
    const Subgroup& v = vclass.representative;
    const std::size_t v_index = vclass.members.front();
    std::vector<bool> visited(subgroups.size(), false);

    for (auto ui : by_class) {
      const Subgroup& u = subgroups[ui];
      if (visited[ui] || u.order() >= v.order() || !u.is_subset_of(v)) continue;
      if (!is_prime_power_above_one(v.order() / u.order())) continue;
      bool normal = true;
      for (auto x : v.elements()) {
        for (auto e : u.elements()) {
          if (!u.contains(g.conjugate(x, e))) {
            normal = false;
            break;
          }
        }
        if (!normal) break;
      }
      if (!normal) continue;

      for (auto x : vclass.normalizer.elements()) visited[lattice.subgroup_index(conjugate_subgroup(g, u, x).members())] = true;

      DressCongruence c;
      c.u_subgroup = ui;
      c.v_subgroup = v_index;
      c.u_class = lattice.class_of_subgroup(ui);
      c.v_class = vclass.class_index;
      c.index = static_cast<std::int64_t>(v.order() / u.order());

      std::map<std::size_t, std::int64_t> counts;
      std::vector<bool> covered(g.order(), false);
      for (auto rep : v.elements()) {
        if (covered[rep]) continue;
        for (auto e : u.elements()) covered[g.mul(rep, e)] = true;
        // <rep, U> is the union of the cosets rep^k U since U is normal in V.
        ElementSet generated = u.members();
        for (Element power = rep; !u.contains(power); power = g.mul(power, rep)) {
          for (auto e : u.elements()) generated.insert(g.mul(power, e));
        }
        ++counts[lattice.class_of(generated)];
      }
      c.terms.assign(counts.begin(), counts.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

BurnsideRing::BurnsideRing(std::shared_ptr<const SubgroupLattice> lattice)
    : lattice_(std::move(lattice)),
      marks_(table_of_marks(*lattice_)),
      congruences_(dress_congruences(*lattice_)) {}

void BurnsideRing::check_dimension(std::size_t n) const {
  if (n != num_classes()) {
    throw DomainError("vector has " + std::to_string(n) + " entries but " + group().name() + " has " +
                      std::to_string(num_classes()) + " subgroup classes");
  }
}

GhostVector BurnsideRing::ghost_of(const BurnsideElement& x) const {
  check_dimension(x.coefficients.size());
  const std::size_t n = num_classes();
  GhostVector out{std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.values[i] += marks_(i, j) * x.coefficients[j];
  return out;
}

CongruenceCertificate BurnsideRing::dress_membership(const GhostVector& x, bool first_only) const {
  check_dimension(x.values.size());
  CongruenceCertificate cert;
  for (const auto& c : congruences_) {
    std::int64_t sum = 0;
    for (const auto& [cls, count] : c.terms) sum += count * x.values[cls];
    const std::int64_t residue = floor_mod(sum, c.index);
    if (residue != 0) {
      cert.holds = false;
      cert.violations.push_back({c.u_class, c.v_class, c.index, sum, residue});
      if (first_only) break;
    }
  }
  return cert;
}

MarksSolution BurnsideRing::marks_membership(const GhostVector& x) const {
  check_dimension(x.values.size());
  const std::size_t n = num_classes();
  MarksSolution sol;
  sol.coefficients.assign(n, mpq_class(0));
  // Row i only involves columns j >= i.
  for (std::size_t i = n; i-- > 0;) {
    mpq_class rhs(static_cast<long>(x.values[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto m = marks_(i, j);
      if (m != 0 && sol.coefficients[j] != 0) rhs -= mpq_class(static_cast<long>(m)) * sol.coefficients[j];
    }
    rhs /= mpq_class(static_cast<long>(marks_(i, i)));
    rhs.canonicalize();
    if (rhs.get_den() != 1) sol.integral = false;
    sol.coefficients[i] = std::move(rhs);
  }
  return sol;
}

bool BurnsideRing::cfb_check(const GhostVector& x) const {
  check_dimension(x.values.size());
  const auto& g = group();
  std::int64_t sum = 0;
  for (Element e = 0; e < g.order(); ++e) sum += x.values[lattice_->class_of_cyclic(e)];
  return floor_mod(sum, static_cast<std::int64_t>(g.order())) == 0;
}

std::uint64_t BurnsideRing::minimal_multiplier(const GhostVector& x) const {
  if (std::all_of(x.values.begin(), x.values.end(), [](auto v) { return v == 0; })) {
    throw DomainError("minimal multiplier is undefined for the zero vector");
  }
  const auto sol = marks_membership(x);
  mpz_class l = 1;
  for (const auto& c : sol.coefficients) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l.get_ui();
}

std::uint64_t BurnsideRing::minimal_multiplier_by_dress(const GhostVector& x) const {
  if (std::all_of(x.values.begin(), x.values.end(), [](auto v) { return v == 0; })) {
    throw DomainError("minimal multiplier is undefined for the zero vector");
  }
  for (auto d : divisors(group().order())) {
    GhostVector scaled = x;
    for (auto& v : scaled.values) v *= static_cast<std::int64_t>(d);
    if (dress_membership(scaled, true).holds) return d;
  }
  throw DomainError("no divisor of |G| multiplies the vector into the Burnside ring");
}

GhostVector BurnsideRing::unit_vector(std::size_t k) const {
  GhostVector v{std::vector<std::int64_t>(num_classes(), 0)};
  v.values.at(k) = 1;
  return v;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace burnside
