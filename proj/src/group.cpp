#include "burnside/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

#include "burnside/error.hpp"

namespace burnside {

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ == 0) throw DomainError("group order must be positive");
  if (table_.size() != order_ * order_) throw DomainError("multiplication table has wrong size");
  for (auto x : table_) {
    if (x >= order_) throw DomainError("multiplication table entry out of range");
  }
  for (Element x = 0; x < order_; ++x) {
    if (mul(kIdentity, x) != x || mul(x, kIdentity) != x) {
      throw DomainError("element 0 is not the identity");
    }
  }

  inverse_.assign(order_, kIdentity);
  for (Element a = 0; a < order_; ++a) {
    std::vector<bool> row_seen(order_, false);
    bool found = false;
    for (Element b = 0; b < order_; ++b) {
      const Element ab = mul(a, b);
      if (row_seen[ab]) throw DomainError("multiplication table is not a Latin square");
      row_seen[ab] = true;
      if (ab == kIdentity) {
        inverse_[a] = b;
        found = true;
      }
      if (abelian_ && ab != mul(b, a)) abelian_ = false;
    }
    if (!found || mul(inverse_[a], a) != kIdentity) throw DomainError("element has no two-sided inverse");
  }

  element_orders_.assign(order_, 1);
  for (Element g = 0; g < order_; ++g) {
    std::size_t n = 1;
    for (Element x = g; x != kIdentity; x = mul(x, g)) ++n;
    element_orders_[g] = n;
  }
}

Element FiniteGroup::power(Element g, std::uint64_t k) const {
  Element result = kIdentity;
  Element base = g;
  while (k) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

bool FiniteGroup::check_associativity() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  return true;
}

Subgroup::Subgroup(const ElementSet& members) : members_(members), elements_(members.to_vector()) {}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 0;
    for (auto x : p) h = h * 1000003U + x;
    return h;
  }
};

// (a * b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

void require_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) throw DomainError("generator has wrong degree");
  std::vector<bool> seen(degree, false);
  for (auto x : p) {
    if (x >= degree || seen[x]) throw DomainError("generator is not a bijection");
    seen[x] = true;
  }
}

}  // namespace

FiniteGroup group_from_perm_generators(std::size_t degree, std::span<const Permutation> generators,
                                       std::size_t order_cap, std::string name) {
  if (degree == 0) throw DomainError("degree must be positive");
  for (const auto& gen : generators) require_bijection(gen, degree);

  Permutation identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elements{identity};
  std::unordered_map<Permutation, Element, PermHash> index{{identity, kIdentity}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(elements[head], gen);
      if (index.contains(next)) continue;
      if (elements.size() >= order_cap) {
        throw DomainError("permutation group exceeds the order cap of " + std::to_string(order_cap));
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  return FiniteGroup(std::move(name), n, std::move(table));
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::uint32_t point = 0;
      auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), point);
      if (ec != std::errc{}) throw ParseError("expected a point", pos);
      if (point >= degree) throw ParseError("point out of range", pos);
      if (used[point]) throw ParseError("point repeated across cycles", pos);
      used[point] = true;
      cycle.push_back(point);
      pos = static_cast<std::size_t>(end - text.data());
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

PermGeneratorFile parse_perm_generators(std::string_view text) {
  PermGeneratorFile out;
  bool have_degree = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      line = line.substr(first);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
      if (!have_degree) {
        if (!line.starts_with("degree")) throw ParseError("expected 'degree n'", line_start + first);
        std::string_view rest = line.substr(6);
        const std::size_t d = rest.find_first_not_of(" \t");
        if (d == std::string_view::npos) throw ParseError("missing degree", line_start + first + 6);
        rest = rest.substr(d);
        auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out.degree);
        if (ec != std::errc{} || end != rest.data() + rest.size() || out.degree == 0) {
          throw ParseError("invalid degree", line_start + first + 6 + d);
        }
        have_degree = true;
      } else {
        try {
          out.generators.push_back(parse_cycles(line, out.degree));
        } catch (const ParseError& e) {
          throw ParseError(std::string("invalid generator '") + std::string(line) + "'",
                           line_start + first + e.position());
        }
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!have_degree) throw ParseError("empty generator file", 0);
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> seed) {
  ElementSet members(g.order());
  members.insert(kIdentity);
  std::vector<Element> queue{kIdentity};
  std::vector<Element> gens;
  for (auto s : seed) {
    if (s >= g.order()) throw DomainError("seed element out of range");
    if (s != kIdentity) gens.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto s : gens) {
      const Element next = g.mul(queue[head], s);
      if (!members.contains(next)) {
        members.insert(next);
        queue.push_back(next);
      }
    }
  }
  return Subgroup(members);
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(kIdentity);
  return Subgroup(s);
}

Subgroup whole_group(const FiniteGroup& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) s.insert(x);
  return Subgroup(s);
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& u, Element by) {
  ElementSet s(g.order());
  for (auto x : u.elements()) s.insert(g.conjugate(by, x));
  return Subgroup(s);
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& set) {
  if (!set.contains(kIdentity)) return false;
  const auto elems = set.to_vector();
  for (auto a : elems)
    for (auto b : elems)
      if (!set.contains(g.mul(a, b))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& u) {
  for (auto a : u.elements())
    for (auto b : u.elements())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& u) {
  return std::any_of(u.elements().begin(), u.elements().end(),
                     [&](Element x) { return g.element_order(x) == u.order(); });
}

PrimePower prime_power(std::uint64_t n) {
  if (n == 0) return {};
  if (n == 1) return {1, 0};
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {};
  return {p, k};
}

}  // namespace burnside
