#include "burnside/catalog.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_prime(std::uint64_t p) { return prime_power(p).exponent == 1; }

// Exponent n of order = 2^n, validated against the family's lower bound.
unsigned two_group_exponent(std::uint64_t order, unsigned min_n, const char* family) {
  const auto pp = prime_power(order);
  if (pp.prime != 2 || pp.exponent < min_n) {
    throw DomainError(std::string(family) + " group needs order 2^n with n >= " + std::to_string(min_n) +
                      ", got " + std::to_string(order));
  }
  return pp.exponent;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t p, unsigned n) {
  if (p == 0) throw DomainError("cyclic group base must be positive");
  if (n > 0 && p > 1 && !is_prime(p)) throw DomainError("C(p^n) needs a prime p, got " + std::to_string(p));
  if (p == 1) n = 0;
  GroupSpec s(GroupKind::Cyclic);
  s.base_ = n == 0 ? 1 : p;
  s.exponent_ = n;
  return s;
}

GroupSpec GroupSpec::cyclic_of_order(std::uint64_t m) {
  if (m == 0) throw DomainError("cyclic group order must be positive");
  const auto pp = prime_power(m);
  if (pp.prime != 0) return cyclic(pp.prime, pp.exponent);
  GroupSpec s(GroupKind::Cyclic);
  s.base_ = m;
  s.exponent_ = 1;
  return s;
}

GroupSpec GroupSpec::elementary_abelian(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError("EA(p,k) needs a prime p, got " + std::to_string(p));
  if (k == 0) throw DomainError("EA(p,k) needs k >= 1");
  GroupSpec s(GroupKind::ElementaryAbelian);
  s.base_ = p;
  s.exponent_ = k;
  return s;
}

GroupSpec GroupSpec::abelian_product(std::vector<std::uint64_t> factors) {
  if (factors.empty()) throw DomainError("abelian product needs at least one factor");
  for (auto f : factors) {
    if (f == 0) throw DomainError("cyclic factor order must be positive");
  }
  GroupSpec s(GroupKind::AbelianProduct);
  s.factors_ = std::move(factors);
  return s;
}

GroupSpec GroupSpec::dihedral(std::uint64_t order) {
  GroupSpec s(GroupKind::Dihedral);
  s.base_ = order;
  s.exponent_ = two_group_exponent(order, 3, "dihedral");
  return s;
}

GroupSpec GroupSpec::quaternion(std::uint64_t order) {
  GroupSpec s(GroupKind::Quaternion);
  s.base_ = order;
  s.exponent_ = two_group_exponent(order, 3, "quaternion");
  return s;
}

GroupSpec GroupSpec::semidihedral(std::uint64_t order) {
  GroupSpec s(GroupKind::Semidihedral);
  s.base_ = order;
  s.exponent_ = two_group_exponent(order, 4, "semidihedral");
  return s;
}

GroupSpec GroupSpec::modular_maximal_cyclic(std::uint64_t order) {
  GroupSpec s(GroupKind::ModularMaximalCyclic);
  s.base_ = order;
  s.exponent_ = two_group_exponent(order, 4, "modular maximal-cyclic");
  return s;
}

GroupSpec GroupSpec::extraspecial_plus(std::uint64_t p) {
  if (!is_prime(p) || p == 2) throw DomainError("ES+(p) needs an odd prime p, got " + std::to_string(p));
  GroupSpec s(GroupKind::ExtraspecialPlus);
  s.base_ = p;
  s.exponent_ = 3;
  return s;
}

GroupSpec GroupSpec::extraspecial_minus(std::uint64_t p) {
  if (!is_prime(p) || p == 2) throw DomainError("ES-(p) needs an odd prime p, got " + std::to_string(p));
  GroupSpec s(GroupKind::ExtraspecialMinus);
  s.base_ = p;
  s.exponent_ = 3;
  return s;
}

GroupSpec GroupSpec::direct_product(GroupSpec a, GroupSpec b) {
  GroupSpec s(GroupKind::DirectProduct);
  s.operands_.push_back(std::make_shared<const GroupSpec>(std::move(a)));
  s.operands_.push_back(std::make_shared<const GroupSpec>(std::move(b)));
  return s;
}

GroupSpec GroupSpec::permutation_file(std::string path) {
  if (path.empty()) throw DomainError("perm: needs a file path");
  GroupSpec s(GroupKind::PermutationFile);
  s.path_ = std::move(path);
  return s;
}

std::uint64_t GroupSpec::order() const {
  switch (kind_) {
    case GroupKind::Cyclic:
    case GroupKind::ElementaryAbelian:
    case GroupKind::ExtraspecialPlus:
    case GroupKind::ExtraspecialMinus:
      return ipow(base_, exponent_);
    case GroupKind::AbelianProduct: {
      std::uint64_t r = 1;
      for (auto f : factors_) r *= f;
      return r;
    }
    case GroupKind::Dihedral:
    case GroupKind::Quaternion:
    case GroupKind::Semidihedral:
    case GroupKind::ModularMaximalCyclic:
      return base_;
    case GroupKind::DirectProduct: {
      const auto a = left().order();
      const auto b = right().order();
      return a == 0 || b == 0 ? 0 : a * b;
    }
    case GroupKind::PermutationFile:
      return 0;
  }
  return 0;
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case GroupKind::Cyclic:
      return "C" + std::to_string(order());
    case GroupKind::ElementaryAbelian:
      return "EA(" + std::to_string(base_) + "," + std::to_string(exponent_) + ")";
    case GroupKind::AbelianProduct: {
      std::string s;
      for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "xC" : "C") + std::to_string(factors_[i]);
      return s;
    }
    case GroupKind::Dihedral:
      return "D" + std::to_string(base_);
    case GroupKind::Quaternion:
      return "Q" + std::to_string(base_);
    case GroupKind::Semidihedral:
      return "SD" + std::to_string(base_);
    case GroupKind::ModularMaximalCyclic:
      return "M" + std::to_string(base_);
    case GroupKind::ExtraspecialPlus:
      return "ES+(" + std::to_string(base_) + ")";
    case GroupKind::ExtraspecialMinus:
      return "ES-(" + std::to_string(base_) + ")";
    case GroupKind::DirectProduct:
      return left().to_string() + "x" + right().to_string();
    case GroupKind::PermutationFile:
      return "perm:" + path_;
  }
  return {};
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  if (kind_ != other.kind_ || base_ != other.base_ || exponent_ != other.exponent_ ||
      factors_ != other.factors_ || path_ != other.path_ || operands_.size() != other.operands_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < operands_.size(); ++i) {
    if (!(*operands_[i] == *other.operands_[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

FiniteGroup cyclic_group(std::string name, std::uint64_t m) {
  std::vector<Element> table(m * m);
  for (std::uint64_t a = 0; a < m; ++a)
    for (std::uint64_t b = 0; b < m; ++b) table[a * m + b] = static_cast<Element>((a + b) % m);
  return FiniteGroup(std::move(name), m, std::move(table));
}

// Mixed radix digits, first factor most significant.
FiniteGroup abelian_group(std::string name, const std::vector<std::uint64_t>& factors) {
  std::uint64_t n = 1;
  for (auto f : factors) n *= f;
  std::vector<std::uint64_t> stride(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;) stride[i - 1] = stride[i] * factors[i];

  std::vector<Element> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto da = (a / stride[i]) % factors[i];
        const auto db = (b / stride[i]) % factors[i];
        c += ((da + db) % factors[i]) * stride[i];
      }
      table[a * n + b] = static_cast<Element>(c);
    }
  return FiniteGroup(std::move(name), n, std::move(table));
}

// Metacyclic normal form g^a h^b with g^m = 1, h^k = g^hk_power, h g h^-1 = g^twist.
// Element id = a + m*b, so the identity is 0.
FiniteGroup metacyclic_group(std::string name, std::uint64_t m, std::uint64_t k, std::uint64_t twist,
                             std::uint64_t hk_power) {
  const std::uint64_t n = m * k;
  // twist^b mod m
  std::vector<std::uint64_t> twist_pow(k, 1);
  for (std::uint64_t b = 1; b < k; ++b) twist_pow[b] = (twist_pow[b - 1] * twist) % m;

  std::vector<Element> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t a = x % m, b = x / m;
      const std::uint64_t c = y % m, d = y / m;
      // h^b g^c = g^{c * twist^b} h^b
      std::uint64_t ga = (a + c * twist_pow[b]) % m;
      std::uint64_t hb = b + d;
      if (hb >= k) {
        hb -= k;
        ga = (ga + hk_power) % m;
      }
      table[x * n + y] = static_cast<Element>(ga + m * hb);
    }
  return FiniteGroup(std::move(name), n, std::move(table));
}

// Heisenberg group mod p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
FiniteGroup heisenberg_group(std::string name, std::uint64_t p) {
  const std::uint64_t n = p * p * p;
  std::vector<Element> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t a = x / (p * p), b = (x / p) % p, c = x % p;
      const std::uint64_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const std::uint64_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      table[x * n + y] = static_cast<Element>(ra * p * p + rb * p + rc);
    }
  return FiniteGroup(std::move(name), n, std::move(table));
}

FiniteGroup product_group(std::string name, const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      table[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  return FiniteGroup(std::move(name), n, std::move(table));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open generator file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FiniteGroup build(const GroupSpec& spec, std::size_t order_cap) {
  const auto nominal = spec.order();
  if (nominal > order_cap) {
    throw DomainError("group " + spec.to_string() + " has order " + std::to_string(nominal) +
                      ", above the order cap of " + std::to_string(order_cap));
  }
  std::string name = spec.to_string();
  const std::uint64_t b = spec.base();
  switch (spec.kind()) {
    case GroupKind::Cyclic:
      return cyclic_group(std::move(name), nominal);
    case GroupKind::ElementaryAbelian:
      return abelian_group(std::move(name), std::vector<std::uint64_t>(spec.exponent(), b));
    case GroupKind::AbelianProduct:
      return abelian_group(std::move(name), spec.factors());
    case GroupKind::Quaternion:
      return metacyclic_group(std::move(name), b / 2, 2, b / 2 - 1, b / 4);
    case GroupKind::Dihedral:
      return metacyclic_group(std::move(name), b / 2, 2, b / 2 - 1, 0);
    case GroupKind::ModularMaximalCyclic:
      return metacyclic_group(std::move(name), b / 2, 2, 1 + b / 4, 0);
    case GroupKind::Semidihedral:
      return metacyclic_group(std::move(name), b / 2, 2, b / 2 - 1 + b / 4, 0);
    case GroupKind::ExtraspecialPlus:
      return heisenberg_group(std::move(name), b);
    case GroupKind::ExtraspecialMinus:
      // g^{p^2} = 1, h^p = 1, h g h^-1 = g^{1+p}
      return metacyclic_group(std::move(name), b * b, b, 1 + b, 0);
    case GroupKind::DirectProduct: {
      const auto a = build(spec.left(), order_cap);
      const auto c = build(spec.right(), order_cap);
      if (a.order() * c.order() > order_cap) {
        throw DomainError("group " + name + " exceeds the order cap of " + std::to_string(order_cap));
      }
      return product_group(std::move(name), a, c);
    }
    case GroupKind::PermutationFile: {
      const auto file = parse_perm_generators(read_file(spec.path()));
      return group_from_perm_generators(file.degree, file.generators, order_cap, std::move(name));
    }
  }
  throw DomainError("unknown group kind");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    skip_ws();
    if (text_.substr(pos_).starts_with("perm:")) {
      std::string_view path = text_.substr(pos_ + 5);
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.remove_suffix(1);
      return GroupSpec::permutation_file(std::string(path));
    }
    std::vector<GroupSpec> factors;
    factors.push_back(factor());
    skip_ws();
    while (pos_ < text_.size()) {
      expect('x');
      factors.push_back(factor());
      skip_ws();
    }
    if (factors.size() == 1) return factors.front();

    bool all_cyclic = true;
    for (const auto& f : factors) all_cyclic = all_cyclic && f.kind() == GroupKind::Cyclic;
    if (all_cyclic) {
      std::vector<std::uint64_t> orders;
      for (const auto& f : factors) orders.push_back(f.order());
      return GroupSpec::abelian_product(std::move(orders));
    }
    GroupSpec acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = GroupSpec::direct_product(std::move(acc), factors[i]);
    return acc;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) throw ParseError("expected a number", pos_);
    pos_ = static_cast<std::size_t>(end - text_.data());
    return v;
  }

  // `m` or `p^n`; returns (base, exponent) with exponent 1 when no caret.
  std::pair<std::uint64_t, unsigned> power() {
    const std::uint64_t b = number();
    if (accept("^")) {
      const auto e = number();
      if (e > 63) throw ParseError("exponent too large", pos_);
      return {b, static_cast<unsigned>(e)};
    }
    return {b, 1};
  }

  // Either `(expr)` or a bare number directly after the family name.
  std::pair<std::uint64_t, unsigned> argument() {
    if (accept("(")) {
      auto v = power();
      expect(')');
      return v;
    }
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return {number(), 1};
    throw ParseError("expected an order", pos_);
  }

  std::uint64_t order_argument() {
    const auto [b, e] = argument();
    return ipow(b, e);
  }

  GroupSpec factor() {
    skip_ws();
    const std::size_t start = pos_;
    try {
      if (accept("EA")) {
        expect('(');
        const auto p = number();
        expect(',');
        const auto k = number();
        expect(')');
        return GroupSpec::elementary_abelian(p, static_cast<unsigned>(k));
      }
      if (accept("ES+")) {
        expect('(');
        const auto p = number();
        expect(')');
        return GroupSpec::extraspecial_plus(p);
      }
      if (accept("ES-")) {
        expect('(');
        const auto p = number();
        expect(')');
        return GroupSpec::extraspecial_minus(p);
      }
      if (accept("SD")) return GroupSpec::semidihedral(order_argument());
      if (accept("C")) {
        const auto [b, e] = argument();
        if (e == 1) return GroupSpec::cyclic_of_order(b);
        return GroupSpec::cyclic(b, e);
      }
      if (accept("D")) return GroupSpec::dihedral(order_argument());
      if (accept("Q")) return GroupSpec::quaternion(order_argument());
      if (accept("M")) return GroupSpec::modular_maximal_cyclic(order_argument());
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " (in group spec at position " + std::to_string(start) + ")");
    }
    throw ParseError("unknown group family", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(MaximalCyclicType t) {
  switch (t) {
    case MaximalCyclicType::QuaternionType: return "quaternion";
    case MaximalCyclicType::DihedralType: return "dihedral";
    case MaximalCyclicType::ModularType: return "modular";
    case MaximalCyclicType::SemidihedralType: return "semidihedral";
    case MaximalCyclicType::CyclicType: return "cyclic";
    case MaximalCyclicType::NotMaximalCyclic: return "not-maximal-cyclic";
  }
  return "?";
}

MaximalCyclicType classify_maximal_cyclic_2group(const FiniteGroup& g) {
  const auto pp = prime_power(g.order());
  if (g.order() != 1 && pp.prime != 2) {
    throw DomainError("maximal-cyclic classification needs a 2-group, got order " + std::to_string(g.order()));
  }
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return MaximalCyclicType::CyclicType;
  }
  if (g.is_abelian()) return MaximalCyclicType::NotMaximalCyclic;

  const unsigned n = pp.exponent;
  const std::uint64_t half = g.order() / 2;     // 2^{n-1}
  const std::uint64_t quarter = g.order() / 4;  // 2^{n-2}
  for (Element gen = 0; gen < g.order(); ++gen) {
    if (g.element_order(gen) != half) continue;
    const Element g_inv = g.inv(gen);
    const Element g_quarter = g.power(gen, quarter);
    const Element g_plus = g.power(gen, 1 + quarter);
    const Element g_minus = g.power(gen, half - 1 + quarter);
    for (Element h = 0; h < g.order(); ++h) {
      const Element hh = g.mul(h, h);
      const Element conj = g.conjugate(h, gen);
      if (conj == g_inv) {
        if (hh == g_quarter) return MaximalCyclicType::QuaternionType;
        if (hh == kIdentity) return MaximalCyclicType::DihedralType;
      }
      if (n >= 4 && hh == kIdentity) {
        if (conj == g_plus) return MaximalCyclicType::ModularType;
        if (conj == g_minus) return MaximalCyclicType::SemidihedralType;
      }
    }
  }
  return MaximalCyclicType::NotMaximalCyclic;
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const char* specs[] = {
        // order <= 8
        "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "C7", "C8", "C4xC2", "EA(2,3)", "D8", "Q8",
        // 9 - 16
        "C9", "C3xC3", "C11", "C12", "C13", "C16", "C8xC2", "C4xC4", "C4xC2xC2", "EA(2,4)", "D16", "Q16", "SD16",
        "M16", "D8xC2", "Q8xC2",
        // 25 - 32
        "C25", "C5xC5", "C27", "C9xC3", "EA(3,3)", "ES+(3)", "ES-(3)", "C32", "C16xC2", "C8xC4", "C8xC2xC2",
        "C4xC4xC2", "C4xC2xC2xC2", "EA(2,5)", "D32", "Q32", "SD32", "M32", "D8xC4", "D8xC2xC2", "Q8xC4",
        "D16xC2", "Q16xC2",
        // 49 - 64
        "C49", "C7xC7", "C64", "C32xC2", "C8xC8", "C16xC4", "C8xC4xC2", "C4xC4xC4", "C4xC2xC2xC2xC2",
        "EA(2,6)", "D64", "Q64", "SD64", "M64", "D8xD8", "Q8xQ8",
        "D8xQ8",
        // 81 - 128
        "C81", "C9xC9", "EA(3,4)", "ES+(3)xC3", "ES-(3)xC3", "C125", "ES+(5)", "ES-(5)", "D128", "Q128",
        "SD128", "M128",
    };
    std::vector<CatalogEntry> out;
    for (const char* s : specs) {
      auto spec = parse_group_spec(s);
      out.push_back({spec.to_string(), std::move(spec)});
    }
    return out;
  }();
  return entries;
}

}  // namespace burnside
