// symcat: catalog of compact irreducible symmetric spaces with Poincaré
// polynomials and curvature-operator spectra.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "symcat/catalog.hpp"
#include "symcat/errors.hpp"
#include "symcat/oracle.hpp"
#include "symcat/render.hpp"
#include "symcat/verify.hpp"

namespace {

using namespace symcat;

constexpr int kUsage = 2;
constexpr int kFailure = 1;

int default_max_dim() {
  if (const char* env = std::getenv("SYMCAT_MAX_DIM")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring SYMCAT_MAX_DIM='" << env << "'\n";
    }
  }
  return 32;
}

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("bad --params item '" + item + "' (want key=value)");
    out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  return out;
}

bool is_s3s3(const std::string& id) {
  std::string s;
  for (char c : id) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s == "s3xs3" || s == "s3s3" || s == "nearly-kahler";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symcat: compact irreducible symmetric spaces, their Poincaré polynomials and curvature spectra"};
  app.require_subcommand(1);
  app.footer(
      "Space ids: group-A3, group-E8, sphere-7, cp-4, hp-2, A4-III-p2, C5-II-p2, B-grass-k2-l3,\n"
      "Dodd-grass-k1-l2, Deven-grass-k2-l2, A3-I, A5-II, C3-I, D5-III, E6-I ... G2-I (see SPACES.md).\n"
      "Exit codes: 0 ok, 1 verification failure, 2 usage error. SYMCAT_MAX_DIM sets the default bound.");

  int max_dim = default_max_dim();
  std::string format = "markdown";
  std::string klass;
  std::string params;
  std::string id;
  std::string suite = "all";
  double tolerance = 1e-8;
  int max_dim_p = 60;

  auto* list = app.add_subcommand("list", "List catalog spaces with 2 <= dim <= max-dim");
  list->add_option("--max-dim", max_dim, "Largest dimension")->check(CLI::Range(1, 100000));
  list->add_option("--class", klass, "groups, grassmannians, simple-isotropy, hermitian or wolf");
  list->add_option("--format", format, "markdown, csv, json or plain");

  auto* show = app.add_subcommand("show", "Full report for one space");
  show->add_option("id", id, "Space id")->required();
  show->add_option("--format", format, "markdown, csv, json or plain");

  auto* table = app.add_subcommand("table", "Render one of the five class tables");
  table->add_option("class", klass, "groups, grassmannians, simple-isotropy, hermitian or wolf")->required();
  table->add_option("--format", format, "markdown, csv, json or plain");
  table->add_option("--max-dim", max_dim, "Bound for parametric rows")->check(CLI::Range(1, 100000));
  table->add_option("--params", params, "Keep rows with these parameters, e.g. k=2,l=3 or n=4");

  auto* verify = app.add_subcommand("verify", "Run invariant suites over the catalog");
  verify->add_option("suite", suite, "all, poincare, curvature or oracle");
  verify->add_option("--max-dim", max_dim, "Largest dimension")->check(CLI::Range(1, 100000));
  verify->add_option("--tolerance", tolerance, "Float tolerance for the oracle");
  verify->add_option("--max-dim-p", max_dim_p, "Oracle size cap on dim p");

  auto* orc = app.add_subcommand("oracle", "Numerical curvature spectrum for one space (or s3xs3)");
  orc->add_option("id", id, "Space id, or s3xs3 for the nearly-Kähler S³×S³")->required();
  orc->add_option("--tolerance", tolerance, "Float tolerance");
  orc->add_option("--max-dim-p", max_dim_p, "Size cap on dim p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const render::Format fmt = render::parse_format(format);
    if (*list) {
      auto spaces = enumerate(max_dim);
      if (!klass.empty()) {
        const TableClass c = parse_table_class(klass);
        std::erase_if(spaces, [&](const SpaceDescriptor& s) { return !in_table(s, c); });
      }
      std::cout << render::listing(spaces, fmt);
      return 0;
    }
    if (*show) {
      std::cout << render::show(parse_space_id(id), fmt);
      return 0;
    }
    if (*table) {
      render::TableOptions opts;
      opts.max_dim = max_dim;
      opts.params = parse_params(params);
      std::cout << render::table(parse_table_class(klass), fmt, opts);
      return 0;
    }
    if (*verify) {
      const auto reports = verify::run(verify::parse_suite(suite), max_dim, tolerance, max_dim_p);
      std::cout << verify::summary(reports);
      for (const auto& r : reports)
        if (!r.ok()) return kFailure;
      return 0;
    }
    if (*orc) {
      if (is_s3s3(id)) {
        const auto r = oracle::nearly_kahler_s3s3(tolerance);
        std::cout << render::nearly_kahler_json(r).dump(2) << "\n";
        return r.match ? 0 : kFailure;
      }
      const auto r = oracle::compare(parse_space_id(id), tolerance, max_dim_p, false);
      std::cout << render::oracle_report_json(r).dump(2) << "\n";
      return r.match ? 0 : kFailure;
    }
  } catch (const UnknownSpace& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidDescriptor& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return 0;
}
