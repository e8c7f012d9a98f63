#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "symcat/catalog.hpp"
#include "symcat/curvature.hpp"
#include "symcat/oracle.hpp"
#include "symcat/poincare.hpp"
#include "symcat/qpoly.hpp"

namespace symcat::render {

using json = nlohmann::ordered_json;

enum class Format { markdown, csv, json, plain };

Format parse_format(const std::string& name);  // md|markdown, csv, json, plain|text
std::string format_name(Format f);

// QPoly: array of coefficient strings, index = degree.
json qpoly_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

// {id, family, params, dim, class_flags, isotropy: [{kind, dim}]}
json catalog_entry_json(const SpaceDescriptor& s);

// {space, entries: [{value, mult, factor}], zero_mult}
json spectrum_json(const Spectrum& sp);
Spectrum spectrum_from_json(const json& j);

// {space, float_spectrum, recognized, closed_form, max_dev, status}
json oracle_report_json(const oracle::CompareReport& r);
json nearly_kahler_json(const oracle::NearlyKahlerReport& r);

json poincare_json(const PoincareResult& r);

/// "1 + t^{4} + t^{5} + t^{9}".
std::string latex(const QPoly& p);

/// One cell per factor, e.g. "su(2): 3/10, su(3): 1/5". Unreduced values are
/// shown next to the reduced ones: "so(4)+: 9/24 = 3/8".
std::string eigenvalue_text(const Spectrum& sp);

struct TableOptions {
  int max_dim = 32;                   // bound for parametric rows
  std::map<std::string, int> params;  // keep only rows whose named parameters match
};

/// Errata notes printed under a table.
std::vector<std::string> errata(TableClass c);

/// Columns: Type/Space, dim, eigenvalues, χ(t), χ. Exceptional rows are
/// always present; parametric rows follow options.
std::string table(TableClass c, Format f, const TableOptions& options);

std::vector<SpaceDescriptor> table_rows(TableClass c, const TableOptions& options);

std::string listing(const std::vector<SpaceDescriptor>& spaces, Format f);

std::string show(const SpaceDescriptor& s, Format f);

std::string flags_text(const ClassFlags& f);

}  // namespace symcat::render
