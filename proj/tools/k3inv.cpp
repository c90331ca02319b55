#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k3inv/moduli.hpp"
#include "k3inv/registry.hpp"
#include "k3inv/series.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& option) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(option, "expected a comma-separated list of integers");
    }
  }
  return out;
}

int run_hilbert(const std::string& weights_text, const std::string& degrees_text, int upto) {
  std::vector<int> weights = parse_int_list(weights_text, "--weights");
  std::vector<int> degrees = parse_int_list(degrees_text, "--degrees");
  auto series = k3inv::series::ratio(degrees, weights, upto);
  for (int d = 0; d <= upto; ++d)
    std::cout << d << '\t' << series.coefficient(d) << '\n';
  return 0;
}

int run_fibre(int g1, int k, bool explain) {
  auto fibre = k3inv::moduli::fibre_dim_ci(g1, k);
  if (explain) {
    for (const auto& part : fibre.parts)
      std::cout << part.label << '\t' << part.value << '\n';
  }
  std::cout << fibre.value << '\n';
  return 0;
}

int run_verify(const std::string& manifest_path, const std::string& claims_csv,
               const std::string& format, const std::string& out_path) {
  auto manifest =
      k3inv::registry::Manifest::load_file(k3inv::registry::default_manifest_path(manifest_path));
  std::vector<std::string> prefixes;
  std::stringstream ss(claims_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) prefixes.push_back(item);
  auto report = k3inv::registry::run_claims(manifest, prefixes);
  std::string rendered = format == "json" ? k3inv::registry::emit_json(report)
                                          : k3inv::registry::emit_text(report);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << rendered;
  }
  return k3inv::registry::has_failures(report) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integer invariants of K3 curves, weighted complete "
               "intersections and scroll geometry, with a verified claims registry"};
  app.require_subcommand(1);

  std::string weights_text;
  std::string degrees_text;
  int upto = 0;
  auto* hilbert = app.add_subcommand(
      "hilbert", "print coefficients of prod(1 - t^d) / prod(1 - t^w), one per line");
  hilbert->add_option("--weights", weights_text, "comma-separated ambient weights")->required();
  hilbert->add_option("--degrees", degrees_text, "comma-separated hypersurface degrees");
  hilbert->add_option("--upto", upto, "highest degree to print")
      ->required()
      ->check(CLI::NonNegativeNumber);

  int g1 = 0;
  int k = 0;
  bool explain = false;
  auto* fibre = app.add_subcommand(
      "fibre", "dimension of the general fibre of the forgetful map, complete intersection range");
  fibre->add_option("--g1", g1, "primitive genus (2..5)")->required();
  fibre->add_option("--k", k, "divisibility index")->required();
  fibre->add_flag("--explain", explain, "print the labelled summand breakdown");

  std::string manifest_path;
  std::string claims_csv;
  std::string format = "text";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "recompute the claims manifest and report");
  verify->add_option("--claims", claims_csv, "comma-separated claim id prefixes");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to a file instead of stdout");
  verify->add_option("--manifest", manifest_path, "path to the claims manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hilbert->parsed()) return run_hilbert(weights_text, degrees_text, upto);
    if (fibre->parsed()) return run_fibre(g1, k, explain);
    return run_verify(manifest_path, claims_csv, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
