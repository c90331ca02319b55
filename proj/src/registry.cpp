#include "k3inv/registry.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "k3inv/curves.hpp"
#include "k3inv/moduli.hpp"
#include "k3inv/mukai.hpp"
#include "k3inv/series.hpp"
#include "k3inv/surfaces.hpp"
#include "k3inv/wps.hpp"

namespace k3inv::registry {

namespace {

using nlohmann::json;

long long arg_int(const json& args, const char* name) {
  if (!args.contains(name) || !args[name].is_number_integer())
    throw std::invalid_argument(std::string("registry: recipe needs integer argument '") + name +
                                "'");
  return args[name].get<long long>();
}

long long arg_int_or(const json& args, const char* name, long long fallback) {
  return args.contains(name) ? arg_int(args, name) : fallback;
}

std::string arg_string(const json& args, const char* name) {
  if (!args.contains(name) || !args[name].is_string())
    throw std::invalid_argument(std::string("registry: recipe needs string argument '") + name +
                                "'");
  return args[name].get<std::string>();
}

std::vector<int> arg_int_list(const json& args, const char* name) {
  if (!args.contains(name) || !args[name].is_array())
    throw std::invalid_argument(std::string("registry: recipe needs list argument '") + name +
                                "'");
  std::vector<int> out;
  for (const auto& v : args[name]) {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string("registry: list argument '") + name +
                                  "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

json to_json(const Integer& v) { return v.to_int64(); }

moduli::LocusDescriptor parse_locus(const json& args) {
  std::string family = arg_string(args, "family");
  long long g = arg_int(args, "g");
  if (family == "gonal") return moduli::LocusDescriptor::gonal(g, arg_int(args, "k"));
  if (family == "elliptic_cover")
    return moduli::LocusDescriptor::elliptic_cover(g, arg_int(args, "k"));
  if (family == "genus_h_cover")
    return moduli::LocusDescriptor::genus_h_cover(g, arg_int(args, "k"), arg_int(args, "h"));
  if (family == "hyperelliptic_H")
    return moduli::LocusDescriptor::hyperelliptic(g, arg_int_or(args, "a", 0),
                                                  arg_int_or(args, "h", 0));
  if (family == "bielliptic_E") return moduli::LocusDescriptor::bielliptic(g, arg_int(args, "k"));
  if (family == "genus2_D") return moduli::LocusDescriptor::genus2_cover(g, arg_int(args, "k"));
  if (family == "moduli_M") return moduli::LocusDescriptor::moduli_space(g);
  if (family == "K3_pairs") return moduli::LocusDescriptor::k3_pairs(g);
  throw std::invalid_argument("registry: unknown locus family '" + family + "'");
}

using Recipe = std::function<json(const json&)>;

const std::map<std::string, Recipe>& recipe_table() {
  static const std::map<std::string, Recipe> table = {
      {"binomial",
       [](const json& a) { return to_json(series::binomial(arg_int(a, "n"), arg_int(a, "k"))); }},
      {"h_proj",
       [](const json& a) {
         return to_json(series::h_proj(static_cast<int>(arg_int(a, "n")), arg_int(a, "k")));
       }},
      {"series_coeff",
       [](const json& a) {
         auto degrees = arg_int_list(a, "degrees");
         auto weights = arg_int_list(a, "weights");
         int d = static_cast<int>(arg_int(a, "d"));
         return to_json(series::ratio(degrees, weights, d + 1).coefficient(d));
       }},
      {"section_count",
       [](const json& a) {
         wps::WeightedCompleteIntersection x(arg_int_list(a, "weights"),
                                             arg_int_list(a, "degrees"));
         return to_json(wps::section_count(x, static_cast<int>(arg_int(a, "m"))));
       }},
      {"canonical_weight",
       [](const json& a) {
         wps::WeightedCompleteIntersection x(arg_int_list(a, "weights"),
                                             arg_int_list(a, "degrees"));
         return json(wps::canonical_weight(x));
       }},
      {"fano_index",
       [](const json& a) {
         wps::WeightedCompleteIntersection x(arg_int_list(a, "weights"),
                                             arg_int_list(a, "degrees"));
         return json(wps::fano_index(x, static_cast<int>(arg_int(a, "m"))));
       }},
      {"universal_extension",
       [](const json& a) {
         const auto& c = wps::extension_case(static_cast<int>(arg_int(a, "g1")),
                                             static_cast<int>(arg_int(a, "k")));
         auto s = wps::universal_extension_check(c);
         return json::array({s.dimension, s.index, s.target});
       }},
      {"k3_curve_genus",
       [](const json& a) {
         return to_json(curves::k3_curve_genus(arg_int(a, "g1"), arg_int(a, "k")));
       }},
      {"ci_curve_genus",
       [](const json& a) {
         return to_json(curves::ci_curve_genus(static_cast<int>(arg_int(a, "n")),
                                               arg_int_list(a, "degrees")));
       }},
      {"clifford_general",
       [](const json& a) {
         return to_json(curves::clifford_general(arg_int(a, "g1"), arg_int(a, "k")));
       }},
      {"clifford_restriction",
       [](const json& a) {
         return to_json(
             curves::clifford_restriction(arg_int(a, "g1"), arg_int(a, "k"), arg_int(a, "l")));
       }},
      {"exceptional_low",
       [](const json& a) {
         return json(curves::exceptional_low(arg_int(a, "g1"), arg_int(a, "k")) ? 1 : 0);
       }},
      {"max_k_for_genus",
       [](const json& a) {
         return json(curves::max_k_for_genus(arg_int(a, "g1"), arg_int(a, "bound")));
       }},
      {"rr_h0",
       [](const json& a) {
         return to_json(curves::rr_h0(arg_int(a, "deg"), arg_int(a, "g"), arg_int(a, "h1")));
       }},
      {"serre_h1",
       [](const json& a) {
         return to_json(curves::serre_h1(arg_int(a, "deg"), arg_int(a, "g"), arg_int(a, "h0")));
       }},
      {"h0_nonspecial",
       [](const json& a) {
         return to_json(curves::h0_nonspecial(arg_int(a, "deg"), arg_int(a, "g")));
       }},
      {"clifford_h0_bound",
       [](const json& a) { return to_json(curves::clifford_h0_bound(arg_int(a, "deg"))); }},
      {"castelnuovo_genus",
       [](const json& a) {
         return to_json(curves::castelnuovo_genus(arg_int(a, "d"), arg_int(a, "r")));
       }},
      {"theta_degree",
       [](const json& a) { return to_json(curves::theta_degree(arg_int(a, "g"), arg_int(a, "k"))); }},
      {"expected_theta_codim",
       [](const json& a) { return to_json(curves::expected_theta_codim(arg_int(a, "g1"))); }},
      {"hirzebruch_intersect",
       [](const json& a) {
         int n = static_cast<int>(arg_int(a, "n"));
         surfaces::HirzebruchDivisor d1{arg_int(a, "a1"), arg_int(a, "b1"), n};
         surfaces::HirzebruchDivisor d2{arg_int(a, "a2"), arg_int(a, "b2"), n};
         return json(surfaces::intersect(d1, d2));
       }},
      {"hirzebruch_h0",
       [](const json& a) {
         surfaces::HirzebruchDivisor d{arg_int(a, "a"), arg_int(a, "b"),
                                       static_cast<int>(arg_int(a, "n"))};
         return to_json(surfaces::h0(d));
       }},
      {"hirzebruch_pa",
       [](const json& a) {
         surfaces::HirzebruchDivisor d{arg_int(a, "a"), arg_int(a, "b"),
                                       static_cast<int>(arg_int(a, "n"))};
         return to_json(surfaces::arithmetic_genus(d));
       }},
      {"quadric_h0",
       [](const json& a) { return to_json(surfaces::quadric_h0(arg_int(a, "a"), arg_int(a, "b"))); }},
      {"quadric_pa",
       [](const json& a) {
         return to_json(surfaces::quadric_genus(arg_int(a, "a"), arg_int(a, "b")));
       }},
      {"delpezzo_h0",
       [](const json& a) {
         return to_json(
             surfaces::del_pezzo_h0(static_cast<int>(arg_int(a, "degree")), arg_int(a, "m")));
       }},
      {"geometric_genus",
       [](const json& a) {
         surfaces::SingularityBudget sing{arg_int_or(a, "nodes", 0), arg_int_or(a, "cusps", 0),
                                          arg_int_or(a, "triple_points", 0)};
         return to_json(surfaces::geometric_genus(Integer(arg_int(a, "pa")), sing));
       }},
      {"aut_dim", [](const json& a) { return json(surfaces::aut_dim(arg_string(a, "kind"))); }},
      {"locus_dim", [](const json& a) { return json(moduli::locus_dim(parse_locus(a))); }},
      {"remarkable_difference",
       [](const json& a) { return json(moduli::remarkable_difference(arg_int(a, "g1"))); }},
      {"fibre_dim_ci",
       [](const json& a) {
         return json(moduli::fibre_dim_ci(static_cast<int>(arg_int(a, "g1")),
                                          static_cast<int>(arg_int(a, "k")))
                         .value);
       }},
      {"ideal_sheaf_h0",
       [](const json& a) {
         return to_json(moduli::ideal_sheaf_h0(static_cast<int>(arg_int(a, "n")),
                                               arg_int_list(a, "degrees"),
                                               static_cast<int>(arg_int(a, "h"))));
       }},
      {"scenario_moduli",
       [](const json& a) {
         if (!a.contains("parts") || !a["parts"].is_array())
           throw std::invalid_argument("registry: scenario_moduli needs a 'parts' list");
         std::vector<moduli::LabeledValue> parts;
         for (const auto& p : a["parts"])
           parts.push_back({p.at("label").get<std::string>(), p.at("value").get<long long>()});
         return json(moduli::scenario_moduli(parts));
       }},
      {"mukai_record",
       [](const json& a) {
         const auto& r = mukai::record(static_cast<int>(arg_int(a, "g1")));
         return json::array({r.dim_group, r.dim_rep, r.dim_variety, r.stabilizer_threshold,
                             r.dim_lines_through_point});
       }},
      {"grassmann_dim",
       [](const json& a) { return json(mukai::grassmann_dim(arg_int(a, "k"), arg_int(a, "n"))); }},
      {"moduli_map_check",
       [](const json& a) {
         auto c = mukai::moduli_map_check(static_cast<int>(arg_int(a, "g1")));
         return json::array({c.source_dim, c.target_dim, c.defect});
       }},
      {"ic_family_check",
       [](const json& a) {
         auto c = mukai::ic_family_check(static_cast<int>(arg_int(a, "g1")));
         return json::array({c.ic_dim, c.kc_dim});
       }},
      {"cork_general",
       [](const json& a) { return json(mukai::cork_general(static_cast<int>(arg_int(a, "g1")))); }},
      {"ribbon_space_dim",
       [](const json& a) {
         return json(mukai::ribbon_space_dim(static_cast<int>(arg_int(a, "g1"))));
       }},
      // registry-level arithmetic for the linear inequalities of the cone
      // cases (largest m with den * m <= num)
      {"floor_div",
       [](const json& a) {
         long long den = arg_int(a, "den");
         if (den <= 0) throw std::invalid_argument("registry: floor_div needs den > 0");
         long long num = arg_int(a, "num");
         if (num < 0) throw std::invalid_argument("registry: floor_div needs num >= 0");
         return json(num / den);
       }},
      {"stored",
       [](const json&) -> json {
         throw std::logic_error("registry: stored claims are echoed, not evaluated");
       }},
  };
  return table;
}

json normalize_expected(const json& value, const std::string& id) {
  if (value.is_number_integer()) return value.get<long long>();
  if (value.is_array()) {
    json out = json::array();
    for (const auto& v : value) {
      if (!v.is_number_integer())
        throw std::invalid_argument("registry: claim '" + id + "' has a non-integer expectation");
      out.push_back(v.get<long long>());
    }
    return out;
  }
  throw std::invalid_argument("registry: claim '" + id +
                              "' must expect an integer or a list of integers");
}

// display width as code-point count, so UTF-8 section marks align
std::size_t display_width(const std::string& text) {
  std::size_t width = 0;
  for (unsigned char c : text)
    if ((c & 0xc0) != 0x80) ++width;
  return width;
}

std::string render_value(const json& value) {
  if (value.is_null()) return "-";
  if (value.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) out += ", ";
      out += value[i].dump();
    }
    return out + "]";
  }
  return value.dump();
}

}  // namespace

const std::vector<std::string>& known_operations() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : recipe_table()) out.push_back(name);
    return out;
  }();
  return names;
}

nlohmann::json evaluate_recipe(const std::string& op, const nlohmann::json& args) {
  auto it = recipe_table().find(op);
  if (it == recipe_table().end())
    throw std::invalid_argument("registry: unknown operation '" + op + "'");
  return it->second(args);
}

Manifest Manifest::parse(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("claims") || !doc["claims"].is_array())
    throw std::invalid_argument("registry: manifest must be an object with a 'claims' list");
  Manifest manifest;
  std::set<std::string> seen;
  for (const auto& entry : doc["claims"]) {
    Claim claim;
    claim.id = entry.at("id").get<std::string>();
    if (claim.id.empty()) throw std::invalid_argument("registry: claim with empty id");
    if (!seen.insert(claim.id).second)
      throw std::invalid_argument("registry: duplicate claim id '" + claim.id + "'");
    claim.where = entry.value("where", std::string{});
    claim.quote = entry.value("quote", std::string{});
    claim.note = entry.value("note", std::string{});
    claim.status_override = entry.value("status", std::string{});
    if (!claim.status_override.empty() && claim.status_override != "STORED" &&
        claim.status_override != "DISPUTED")
      throw std::invalid_argument("registry: claim '" + claim.id + "' has unknown status '" +
                                  claim.status_override + "'");
    claim.op = entry.value("op", std::string{});
    if (claim.status_override == "STORED") {
      if (claim.op.empty()) claim.op = "stored";
    } else if (claim.op.empty() || claim.op == "stored" ||
               recipe_table().find(claim.op) == recipe_table().end()) {
      throw std::invalid_argument("registry: claim '" + claim.id +
                                  "' needs a computable operation, got '" + claim.op + "'");
    }
    claim.args = entry.value("args", json::object());
    if (!entry.contains("expected"))
      throw std::invalid_argument("registry: claim '" + claim.id + "' has no expected value");
    claim.expected = normalize_expected(entry["expected"], claim.id);
    manifest.claims_.push_back(std::move(claim));
  }
  std::sort(manifest.claims_.begin(), manifest.claims_.end(),
            [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return manifest;
}

Manifest Manifest::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("registry: cannot open manifest '" + path + "'");
  json doc;
  in >> doc;
  return parse(doc);
}

Report run_claims(const Manifest& manifest, std::span<const std::string> prefixes) {
  std::vector<const Claim*> selected;
  if (prefixes.empty()) {
    for (const Claim& c : manifest.claims()) selected.push_back(&c);
  } else {
    for (const std::string& prefix : prefixes) {
      bool matched = false;
      for (const Claim& c : manifest.claims()) {
        if (c.id.rfind(prefix, 0) == 0) matched = true;
      }
      if (!matched) {
        std::string valid;
        for (const Claim& c : manifest.claims()) {
          if (!valid.empty()) valid += ", ";
          valid += c.id;
        }
        throw std::invalid_argument("registry: no claim matches '" + prefix + "'; valid ids: " +
                                    valid);
      }
    }
    for (const Claim& c : manifest.claims()) {
      for (const std::string& prefix : prefixes) {
        if (c.id.rfind(prefix, 0) == 0) {
          selected.push_back(&c);
          break;
        }
      }
    }
  }

  Report report;
  for (const Claim* claim : selected) {
    ClaimResult result;
    result.id = claim->id;
    result.where = claim->where;
    result.quote = claim->quote;
    result.note = claim->note;
    result.expected = claim->expected;
    if (claim->status_override == "STORED") {
      result.computed = nullptr;
      result.status = "STORED";
      ++report.stored;
    } else {
      try {
        result.computed = evaluate_recipe(claim->op, claim->args);
      } catch (const std::exception& e) {
        throw std::runtime_error("registry: claim '" + claim->id + "' failed to evaluate: " +
                                 e.what());
      }
      if (claim->status_override == "DISPUTED") {
        result.status = "DISPUTED";
        ++report.disputed;
      } else if (result.computed == result.expected) {
        result.status = "PASS";
        ++report.pass;
      } else {
        result.status = "FAIL";
        ++report.fail;
      }
    }
    report.records.push_back(std::move(result));
  }
  return report;
}

bool has_failures(const Report& report) { return report.fail > 0; }

std::string emit_text(const Report& report) {
  std::size_t id_width = 0;
  std::size_t where_width = 0;
  std::size_t expected_width = 0;
  std::size_t computed_width = 0;
  for (const ClaimResult& r : report.records) {
    id_width = std::max(id_width, display_width(r.id));
    where_width = std::max(where_width, display_width(r.where));
    expected_width = std::max(expected_width, display_width(render_value(r.expected)));
    computed_width = std::max(computed_width, display_width(render_value(r.computed)));
  }
  std::ostringstream out;
  for (const ClaimResult& r : report.records) {
    std::string expected = render_value(r.expected);
    std::string computed = render_value(r.computed);
    out << r.id << std::string(id_width - display_width(r.id) + 2, ' ');
    out << r.where << std::string(where_width - display_width(r.where) + 2, ' ');
    out << "expected " << expected << std::string(expected_width - display_width(expected) + 2, ' ');
    out << "computed " << computed << std::string(computed_width - display_width(computed) + 2, ' ');
    out << r.status;
    if (!r.note.empty()) out << "  note: " << r.note;
    out << '\n';
  }
  out << '\n'
      << report.pass << " pass, " << report.fail << " fail, " << report.stored << " stored, "
      << report.disputed << " disputed\n";
  return out.str();
}

std::string emit_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["claims"] = nlohmann::ordered_json::array();
  for (const ClaimResult& r : report.records) {
    nlohmann::ordered_json record;
    record["id"] = r.id;
    std::string ref = r.where;
    if (!r.quote.empty()) ref += " — \"" + r.quote + "\"";
    record["paper_ref"] = ref;
    record["expected"] = r.expected;
    record["computed"] = r.computed;
    record["status"] = r.status;
    if (!r.note.empty()) record["note"] = r.note;
    doc["claims"].push_back(std::move(record));
  }
  doc["summary"] = {{"pass", report.pass},
                    {"fail", report.fail},
                    {"stored", report.stored},
                    {"disputed", report.disputed}};
  return doc.dump(2) + "\n";
}

std::string default_manifest_path(const std::string& explicit_path) {
  namespace fs = std::filesystem;
  if (!explicit_path.empty()) return explicit_path;
  if (fs::exists("data/claims.json")) return "data/claims.json";
#ifdef K3INV_REPO_ROOT
  fs::path configured = fs::path(K3INV_REPO_ROOT) / "data" / "claims.json";
  if (fs::exists(configured)) return configured.string();
#endif
  return "data/claims.json";
}

}  // namespace k3inv::registry
