#include "burnside/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <sstream>

#include "burnside/artin.hpp"
#include "burnside/error.hpp"

namespace burnside::cli {

namespace {

using nlohmann::json;

std::size_t lattice_cap_from_env() {
  const char* raw = std::getenv(kLatticeCapEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultLatticeOrderCap;
  std::size_t cap = 0;
  const std::string_view s(raw);
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc{} || end != s.data() + s.size() || cap == 0) {
    throw DomainError(std::string(kLatticeCapEnv) + " must be a positive integer, got '" + raw + "'");
  }
  return cap;
}

struct Context {
  GroupSpec spec;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const SubgroupLattice> lattice;
};

Context load(const std::string& text) {
  auto spec = parse_group_spec(text);
  auto group = std::make_shared<const FiniteGroup>(build(spec));
  auto lattice = std::make_shared<const SubgroupLattice>(enumerate_subgroups(group, lattice_cap_from_env()));
  return {std::move(spec), std::move(group), std::move(lattice)};
}

json envelope(const std::string& command, const std::string& group_spec, json payload) {
  return json{{"command", command}, {"group_spec", group_spec}, {"payload", std::move(payload)},
              {"tool_version", kToolVersion}};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json violation_json(const CongruenceViolation& v) {
  return json{{"u_class", v.u_class}, {"v_class", v.v_class}, {"index", v.index}, {"sum", v.sum},
              {"residue", v.residue}};
}

std::string describe(const CongruenceViolation& v) {
  std::ostringstream s;
  s << "U-class " << v.u_class << " in V-class " << v.v_class << ", index " << v.index << ", sum " << v.sum
    << ", residue " << v.residue;
  return s.str();
}

GhostVector parse_vector(const std::string& text) {
  GhostVector x;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view item(text.data() + pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || p != item.data() + item.size()) {
      throw ParseError("invalid vector entry '" + std::string(item) + "'", pos);
    }
    x.values.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return x;
}

// ---------------------------------------------------------------------------

int cmd_catalog(std::uint64_t max_order, bool as_json, std::ostream& out) {
  json rows = json::array();
  for (const auto& e : catalog()) {
    const auto order = e.spec.order();
    if (max_order != 0 && order > max_order) continue;
    const bool p_group = prime_power(order).prime != 0;
    if (as_json) {
      rows.push_back(json{{"label", e.label}, {"order", order}, {"p_group", p_group}});
    } else {
      out << std::left << std::setw(14) << e.label << std::right << std::setw(6) << order
          << (p_group ? "" : "  (not a p-group)") << '\n';
    }
  }
  if (as_json) out << envelope("catalog", "", rows).dump(2) << '\n';
  return 0;
}

int cmd_lattice(const std::string& spec_text, bool as_json, std::ostream& out) {
  const auto ctx = load(spec_text);
  const auto& lat = *ctx.lattice;
  if (as_json) {
    json classes = json::array();
    for (const auto& c : lat.classes()) {
      classes.push_back(json{{"class_index", c.class_index},
                             {"order", c.order()},
                             {"class_size", c.size()},
                             {"normal", c.is_normal},
                             {"cyclic", c.is_cyclic},
                             {"elementary_abelian", c.is_elementary_abelian},
                             {"normalizer_order", c.normalizer.order()},
                             {"representative", std::vector<Element>(c.representative.elements().begin(),
                                                                     c.representative.elements().end())}});
    }
    out << envelope("lattice", ctx.spec.to_string(), classes).dump(2) << '\n';
    return 0;
  }
  out << "group " << ctx.group->name() << ", order " << ctx.group->order() << ", " << lat.subgroups().size()
      << " subgroups in " << lat.num_classes() << " classes\n";
  out << "class  order  size  normal  cyclic  elem-ab\n";
  for (const auto& c : lat.classes()) {
    out << std::setw(5) << c.class_index << std::setw(7) << c.order() << std::setw(6) << c.size() << std::setw(8)
        << yes_no(c.is_normal) << std::setw(8) << yes_no(c.is_cyclic) << std::setw(9)
        << yes_no(c.is_elementary_abelian) << '\n';
  }
  return 0;
}

int cmd_marks(const std::string& spec_text, bool as_json, std::ostream& out) {
  const auto ctx = load(spec_text);
  const auto marks = table_of_marks(*ctx.lattice);
  const std::size_t n = marks.size();
  if (as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = marks(i, j);
      rows.push_back(row);
    }
    json orders = json::array();
    for (const auto& c : ctx.lattice->classes()) orders.push_back(c.order());
    out << envelope("marks", ctx.spec.to_string(), json{{"class_orders", orders}, {"marks", rows}}).dump(2)
        << '\n';
    return 0;
  }
  std::int64_t widest = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) widest = std::max(widest, marks(i, j));
  const int w = static_cast<int>(std::to_string(widest).size()) + 1;
  out << "table of marks of " << ctx.group->name() << " (" << n << " classes; row i = subgroup class i, column j = G/U_j)\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << std::setw(w) << marks(i, j);
    out << '\n';
  }
  return 0;
}

int cmd_member(const std::string& spec_text, const std::string& vector_text, bool as_json, std::ostream& out) {
  const auto ctx = load(spec_text);
  const BurnsideRing ring(ctx.lattice);
  const auto x = parse_vector(vector_text);
  const auto dress = ring.dress_membership(x);
  const auto marks = ring.marks_membership(x);
  const bool cfb = ring.cfb_check(x);

  std::vector<std::string> coeffs;
  for (const auto& c : marks.coefficients) coeffs.push_back(c.get_str());

  if (as_json) {
    json payload{{"vector", x.values},
                 {"dress_member", dress.holds},
                 {"marks_member", marks.integral},
                 {"cfb", cfb},
                 {"coefficients", coeffs},
                 {"first_violation", dress.holds ? json(nullptr) : violation_json(dress.violations.front())},
                 {"violation_count", dress.violations.size()}};
    out << envelope("member", ctx.spec.to_string(), payload).dump(2) << '\n';
    return 0;
  }
  out << "group " << ctx.group->name() << ", " << ring.num_classes() << " classes\n";
  out << "dress congruences: " << (dress.holds ? "member" : "not a member") << '\n';
  out << "marks inversion:   " << (marks.integral ? "member" : "not a member") << '\n';
  out << "cfb relation:      " << (cfb ? "holds" : "fails") << '\n';
  out << "coefficients:";
  for (const auto& c : coeffs) out << ' ' << c;
  out << '\n';
  if (!dress.holds) {
    out << "first violated congruence: " << describe(dress.violations.front()) << '\n';
  }
  return 0;
}

int cmd_exponent(const std::string& spec_text, const std::string& family_text, bool certify, bool as_json,
                 std::ostream& out) {
  const auto family = parse_family(family_text);
  const auto ctx = load(spec_text);
  const BurnsideRing ring(ctx.lattice);
  const auto r = artin_exponent(ring, family);
  const bool p_group = prime_power(ctx.group->order()).prime != 0;
  std::optional<ClosedForm> closed;
  if (p_group && family == FamilyKind::ElementaryAbelian) closed = closed_form_exponent(*ctx.group);

  if (as_json) {
    json payload{{"exponent", r.exponent},
                 {"dress_exponent", r.dress_exponent},
                 {"routes_agree", r.routes_agree()},
                 {"family", std::string(to_string(family))},
                 {"family_classes", r.family_classes},
                 {"order", ctx.group->order()}};
    if (closed) {
      payload["closed_form"] = json{{"exponent", closed->exponent},
                                    {"case", std::string(to_string(closed->which))},
                                    {"detail", closed->detail}};
    }
    if (certify) {
      json certs = json::array();
      for (const auto& c : r.certificates) {
        certs.push_back(json{{"divisor", c.divisor}, {"violation", violation_json(c.violation)}});
      }
      payload["certificates"] = certs;
    }
    out << envelope("exponent", ctx.spec.to_string(), payload).dump(2) << '\n';
    return 0;
  }
  out << "group " << ctx.group->name() << " (order " << ctx.group->order() << "), family " << to_string(family)
      << ", classes " << join(r.family_classes) << '\n';
  out << "e = " << r.exponent << '\n';
  out << "routes: marks " << r.exponent << ", dress " << r.dress_exponent
      << (r.routes_agree() ? " (agree)" : " (DISAGREE)") << '\n';
  if (closed) {
    out << "closed form: " << closed->exponent << " (case " << to_string(closed->which) << ", " << closed->detail
        << ")" << (closed->exponent == r.exponent ? "" : " differs from computed value") << '\n';
  }
  if (certify) {
    for (const auto& c : r.certificates) {
      out << "divisor " << c.divisor << ": violated " << describe(c.violation) << '\n';
    }
  }
  return 0;
}

int cmd_verify(std::uint64_t max_order, bool as_json, std::ostream& out) {
  const auto report = verify_main_theorem(max_order, lattice_cap_from_env());
  std::size_t disagreements = 0;
  for (const auto& row : report.rows) disagreements += row.agree() ? 0 : 1;

  if (as_json) {
    json rows = json::array();
    for (const auto& row : report.rows) {
      rows.push_back(json{{"group", row.label},
                          {"order", row.order},
                          {"classes", row.num_classes},
                          {"marks_exponent", row.marks_exponent},
                          {"dress_exponent", row.dress_exponent},
                          {"closed_form", row.closed_form.exponent},
                          {"case", std::string(to_string(row.closed_form.which))},
                          {"detail", row.closed_form.detail},
                          {"routes_agree", row.routes_agree()},
                          {"agree", row.agree()}});
    }
    out << envelope("verify-main-theorem", "",
                    json{{"max_order", max_order}, {"rows", rows}, {"disagreements", disagreements}})
               .dump(2)
        << '\n';
  } else {
    out << std::left << std::setw(14) << "group" << std::right << std::setw(6) << "order" << std::setw(9)
        << "classes" << std::setw(10) << "e(marks)" << std::setw(10) << "e(dress)" << std::setw(8) << "closed"
        << "  case              agree\n";
    for (const auto& row : report.rows) {
      const std::string kase = std::string(to_string(row.closed_form.which)) + " (" + row.closed_form.detail + ")";
      out << std::left << std::setw(14) << row.label << std::right << std::setw(6) << row.order << std::setw(9)
          << row.num_classes << std::setw(10) << row.marks_exponent << std::setw(10) << row.dress_exponent
          << std::setw(8) << row.closed_form.exponent << "  " << std::left << std::setw(18) << kase
          << (row.agree() ? "yes" : "NO") << std::right << '\n';
    }
    out << report.rows.size() << " groups, " << disagreements << " disagreement"
        << (disagreements == 1 ? "" : "s") << '\n';
  }
  return disagreements == 0 ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burnside rings, tables of marks and Artin exponents of finite groups", "burnside"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string spec_text, vector_text, family_text = "ea";
  std::uint64_t max_order = 0;
  bool as_json = false, certify = false;

  auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in group catalog");
  catalog_cmd->add_option("--max-order", max_order, "Only groups up to this order");
  catalog_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* lattice_cmd = app.add_subcommand("lattice", "Census of subgroup conjugacy classes");
  lattice_cmd->add_option("group", spec_text, "Group spec, e.g. D8, C(2^3), C4xC2")->required();
  lattice_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* marks_cmd = app.add_subcommand("marks", "Table of marks in canonical class order");
  marks_cmd->add_option("group", spec_text, "Group spec")->required();
  marks_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* member_cmd = app.add_subcommand("member", "Decide membership of a ghost vector in the Burnside ring");
  member_cmd->add_option("group", spec_text, "Group spec")->required();
  member_cmd->add_option("--vector", vector_text, "Comma-separated ghost values, one per class")->required();
  member_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* exponent_cmd = app.add_subcommand("exponent", "Artin exponent relative to a subgroup family");
  exponent_cmd->add_option("group", spec_text, "Group spec")->required();
  exponent_cmd->add_option("--family", family_text, "ea | cyclic | all")
      ->check(CLI::IsMember({"ea", "cyclic", "all"}));
  exponent_cmd->add_flag("--certify", certify, "Print a violated congruence for every proper divisor");
  exponent_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* verify_cmd =
      app.add_subcommand("verify-main-theorem", "Compare brute-force exponents with the closed form over the catalog");
  verify_cmd->add_option("--max-order", max_order, "Largest group order to include")->required();
  verify_cmd->add_flag("--json", as_json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(max_order, as_json, out);
    if (*lattice_cmd) return cmd_lattice(spec_text, as_json, out);
    if (*marks_cmd) return cmd_marks(spec_text, as_json, out);
    if (*member_cmd) return cmd_member(spec_text, vector_text, as_json, out);
    if (*exponent_cmd) return cmd_exponent(spec_text, family_text, certify, as_json, out);
    if (*verify_cmd) return cmd_verify(max_order, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace burnside::cli
