#include "symcat/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symcat::render {

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string tabulate(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                     const std::vector<std::string>& notes, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::markdown: {
      auto line = [&](const std::vector<std::string>& cells) {
        out << "|";
        for (const auto& c : cells) out << " " << md_cell(c) << " |";
        out << "\n";
      };
      line(header);
      out << "|";
      for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& r : rows) line(r);
      if (!notes.empty()) out << "\n";
      for (std::size_t i = 0; i < notes.size(); ++i) out << "[" << i + 1 << "] " << notes[i] << "\n";
      break;
    }
    case Format::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      for (const auto& n : notes) out << "# " << n << "\n";
      break;
    }
    case Format::plain: {
      std::vector<std::size_t> w(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) w[i] = display_width(header[i]);
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], display_width(r[i]));
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(w[i] - display_width(cells[i]) + 2, ' ');
        }
        out << s << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      if (!notes.empty()) out << "\n";
      for (std::size_t i = 0; i < notes.size(); ++i) out << "[" << i + 1 << "] " << notes[i] << "\n";
      break;
    }
    case Format::json: throw std::logic_error("tabulate: json is rendered separately");
  }
  return out.str();
}

std::string kind_text(FactorKind k) { return k == FactorKind::center_u1 ? "center" : "simple"; }

std::string betti_text(const PoincareResult& r) {
  std::string s;
  for (std::size_t i = 0; i < r.betti.size(); ++i) s += (i ? " " : "") + std::to_string(r.betti[i]);
  return s;
}

std::string type_space(const SpaceDescriptor& s) {
  const std::string label = cartan_label(s);
  const std::string name = display_name(s);
  return label.empty() || label == name ? name : label + " " + name;
}

bool matches(const SpaceDescriptor& s, const std::map<std::string, int>& wanted) {
  if (wanted.empty() || is_exceptional(s.family)) return true;
  const auto have = parameters(s);
  for (const auto& [key, value] : wanted)
    for (const auto& [k, v] : have)
      if (k == key && v != value) return false;
  return true;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "md" || name == "markdown") return Format::markdown;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "plain" || name == "text") return Format::plain;
  throw std::invalid_argument("unknown format '" + name + "' (expected markdown, csv, json, plain)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::markdown: return "markdown";
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::plain: return "plain";
  }
  return "?";
}

json qpoly_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

QPoly qpoly_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
  return QPoly(std::move(c));
}

std::string flags_text(const ClassFlags& f) {
  std::vector<std::string> on;
  if (f.is_type_ii) on.push_back("type-II");
  if (f.is_grassmannian) on.push_back("grassmannian");
  if (f.is_hermitian) on.push_back("hermitian");
  if (f.is_wolf) on.push_back("wolf");
  if (f.is_simple_isotropy) on.push_back("simple-isotropy");
  if (!f.is_semisimple) on.push_back("non-semisimple");
  std::string s;
  for (const auto& x : on) s += (s.empty() ? "" : ",") + x;
  return s.empty() ? "-" : s;
}

json catalog_entry_json(const SpaceDescriptor& s) {
  json params = json::object();
  for (const auto& [k, v] : parameters(s)) params[k] = v;
  if (s.family == Family::TypeII) params["group"] = cartan_name(s.group);
  const auto f = classify(s);
  json iso = json::array();
  for (const auto& x : isotropy(s).factors) iso.push_back({{"kind", kind_text(x.kind)}, {"dim", x.dim}, {"name", x.name}});
  return {{"id", space_id(s)},
          {"family", family_tag(s.family)},
          {"params", params},
          {"dim", dimension(s)},
          {"class_flags",
           {{"type_ii", f.is_type_ii},
            {"hermitian", f.is_hermitian},
            {"wolf", f.is_wolf},
            {"simple_isotropy", f.is_simple_isotropy},
            {"grassmannian", f.is_grassmannian},
            {"semisimple", f.is_semisimple}}},
          {"isotropy", iso}};
}

json spectrum_json(const Spectrum& sp) {
  json entries = json::array();
  for (const auto& e : sp.entries)
    entries.push_back({{"value", to_string(e.value)}, {"mult", e.mult}, {"factor", e.factor}, {"raw", e.raw()}});
  return {{"space", space_id(sp.space)}, {"entries", entries}, {"zero_mult", sp.zero_multiplicity}};
}

Spectrum spectrum_from_json(const json& j) {
  Spectrum sp;
  sp.space = parse_space_id(j.at("space").get<std::string>());
  for (const auto& e : j.at("entries")) {
    SpectrumEntry x;
    x.value = parse_rational(e.at("value").get<std::string>());
    x.mult = e.at("mult").get<int>();
    x.factor = e.at("factor").get<std::string>();
    if (e.contains("raw")) {
      const Rational raw(e.at("raw").get<std::string>());
      x.raw_num = raw.get_num().get_si();
      x.raw_den = raw.get_den().get_si();
    } else {
      x.raw_num = x.value.get_num().get_si();
      x.raw_den = x.value.get_den().get_si();
    }
    sp.entries.push_back(std::move(x));
  }
  sp.zero_multiplicity = j.at("zero_mult").get<long>();
  return sp;
}

json oracle_report_json(const oracle::CompareReport& r) {
  json floats = json::array();
  for (double x : r.numeric.eigenvalues) floats.push_back(x);
  json recognized = json::array();
  for (const auto& g : r.numeric.recognized)
    recognized.push_back({{"value", to_string(g.value)}, {"mult", g.mult}, {"max_dev", g.max_dev}});
  json closed = json::array();
  for (const auto& [v, m] : r.closed_form) closed.push_back({{"value", to_string(v)}, {"mult", m}});
  json out = {{"space", space_id(r.space)},
              {"float_spectrum", {{"nonzero", floats}, {"zero_count", r.numeric.zero_count}}},
              {"recognized", recognized},
              {"closed_form", closed},
              {"max_dev", r.numeric.max_dev},
              {"status", r.match ? "match" : "mismatch"}};
  if (!r.match) out["diff"] = r.diff;
  return out;
}

json nearly_kahler_json(const oracle::NearlyKahlerReport& r) {
  json recognized = json::array();
  for (const auto& g : r.recognized) recognized.push_back({{"value", to_string(g.value)}, {"mult", g.mult}});
  return {{"space", "S3xS3-nearly-kahler"},
          {"float_spectrum", r.eigenvalues},
          {"recognized", recognized},
          {"max_dev", r.max_dev},
          {"symmetry_residual", r.symmetry_residual},
          {"matrix_trace", r.matrix_trace},
          {"recognized_trace", to_string(r.recognized_trace)},
          {"ricci", r.ricci},
          {"einstein_constant", "5/12"},
          {"status", r.match ? "match" : "mismatch"}};
}

json poincare_json(const PoincareResult& r) {
  return {{"chi_t", qpoly_json(r.chi_t)},
          {"factored", r.factored},
          {"betti", r.betti},
          {"euler", r.euler},
          {"total_betti", r.total_betti}};
}

std::string latex(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Rational mag = abs(c[i]);
    if (!out.empty()) out += sgn(c[i]) < 0 ? " - " : " + ";
    else if (sgn(c[i]) < 0) out += "-";
    std::string coef = mag.get_den() == 1 ? to_string(mag)
                                          : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    if (i == 0) out += coef;
    else {
      if (mag != 1) out += coef;
      out += i == 1 ? "t" : "t^{" + std::to_string(i) + "}";
    }
  }
  return out;
}

std::string eigenvalue_text(const Spectrum& sp) {
  std::string out;
  for (const auto& e : sp.entries) {
    if (!out.empty()) out += ", ";
    const std::string reduced = to_string(e.value);
    const std::string raw = e.raw();
    out += e.factor + ": ";
    out += raw == reduced || e.raw_den == 1 ? reduced : raw + " = " + reduced;
  }
  return out.empty() ? "-" : out;
}

std::vector<std::string> errata(TableClass c) {
  switch (c) {
    case TableClass::grassmannians:
      return {"For CP^n the printed su(n) eigenvalue ½·n/(n+1) disagrees with the general complex "
              "Grassmannian formula at p = 1; the value shown is ½·1/(n+1).",
              "In the real Grassmannian row the eigenvalue formulas are labelled sp(p); the factors are so(p) "
              "and so(q)."};
    case TableClass::simple_isotropy:
      return {"For SU(2m+1)/SO(2m+1) the printed row uses dim (m-1)(2m+1) and χ(t) = ∏_{i=1}^{m-1}(1+t^{4i+1}); "
              "the correct values are dim m(2m+3) and ∏_{i=1}^{m}(1+t^{4i+1})."};
    default: return {};
  }
}

std::vector<SpaceDescriptor> table_rows(TableClass c, const TableOptions& options) {
  std::vector<SpaceDescriptor> rows;
  for (const auto& s : enumerate(std::max(options.max_dim, 1)))
    if (!is_exceptional(s.family) && in_table(s, c) && matches(s, options.params)) rows.push_back(s);
  // Fixed rows regardless of the bound.
  std::vector<SpaceDescriptor> fixed;
  if (c == TableClass::groups) {
    for (Series x : {Series::E6, Series::E7, Series::E8, Series::F4, Series::G2}) fixed.push_back(type_ii(make_group(x)));
  } else {
    for (int f = static_cast<int>(Family::E6I); f <= static_cast<int>(Family::G2I); ++f) {
      const auto fam = static_cast<Family>(f);
      if (is_exceptional(fam) && in_table(exceptional(fam), c)) fixed.push_back(exceptional(fam));
    }
  }
  for (const auto& s : fixed) rows.push_back(s);
  return rows;
}

std::string table(TableClass c, Format f, const TableOptions& options) {
  const auto rows = table_rows(c, options);
  const auto notes = errata(c);
  if (f == Format::json) {
    json out = {{"class", table_class_name(c)}, {"rows", json::array()}, {"errata", notes}};
    for (const auto& s : rows) {
      const auto sp = spectrum(s);
      const auto pr = poincare(s);
      json eig = json::array();
      for (const auto& e : sp.entries)
        eig.push_back({{"factor", e.factor}, {"value", to_string(e.value)}, {"raw", e.raw()}, {"mult", e.mult}});
      out["rows"].push_back({{"id", space_id(s)},
                             {"space", type_space(s)},
                             {"dim", dimension(s)},
                             {"eigenvalues", eig},
                             {"chi_t", qpoly_json(pr.chi_t)},
                             {"factored", pr.factored},
                             {"euler", pr.euler}});
    }
    return out.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& s : rows) {
    const auto pr = poincare(s);
    cells.push_back({type_space(s), std::to_string(dimension(s)), eigenvalue_text(spectrum(s)), pr.factored,
                     std::to_string(pr.euler)});
  }
  return tabulate({"Type/Space", "dim", "eigenvalues", "χ(t)", "χ"}, cells, notes, f);
}

std::string listing(const std::vector<SpaceDescriptor>& spaces, Format f) {
  if (f == Format::json) {
    json out = json::array();
    for (const auto& s : spaces) out.push_back(catalog_entry_json(s));
    return out.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& s : spaces)
    cells.push_back({space_id(s), type_space(s), std::to_string(dimension(s)), flags_text(classify(s))});
  return tabulate({"id", "space", "dim", "class"}, cells, {}, f);
}

std::string show(const SpaceDescriptor& s, Format f) {
  const auto pr = poincare(s);
  const auto sp = spectrum(s);
  const auto [euler, wang] = euler_both_ways(s);
  const auto t1 = theorem1_check(s);
  const bool trace = trace_check(s), t2 = theorem2_check(s), t3 = theorem3_check(s);
  const auto overlap = overlap_discrepancies(s);
  const auto iso = isotropy(s);

  if (f == Format::json) {
    json out = catalog_entry_json(s);
    out["name"] = type_space(s);
    out["poincare"] = poincare_json(pr);
    out["poincare"]["expanded"] = to_string(pr.chi_t);
    out["poincare"]["latex"] = latex(pr.chi_t);
    out["wang_ratio"] = wang ? json(*wang) : json(nullptr);
    out["spectrum"] = spectrum_json(sp);
    out["checks"] = {{"trace", trace},
                     {"theorem1", t1.ok},
                     {"distinct_nonzero", t1.distinct_nonzero},
                     {"theorem2", t2},
                     {"theorem3", t3},
                     {"overlap_discrepancies", overlap}};
    return out.dump(2) + "\n";
  }

  std::string isotext;
  for (const auto& x : iso.factors) isotext += (isotext.empty() ? "" : " ⊕ ") + x.name + " [" + std::to_string(x.dim) + "]";
  std::string spec;
  for (const auto& e : sp.entries) {
    const std::string reduced = to_string(e.value);
    spec += (spec.empty() ? "" : "; ") + e.factor + " " + (e.raw() == reduced || e.raw_den == 1 ? reduced : e.raw() + " = " + reduced) +
            " ×" + std::to_string(e.mult);
  }
  spec += (spec.empty() ? "" : "; ") + std::string("zero ×") + std::to_string(sp.zero_multiplicity);
  auto yes = [](bool b) { return std::string(b ? "ok" : "FAIL"); };

  std::vector<std::pair<std::string, std::string>> lines{
      {"id", space_id(s)},
      {"space", type_space(s)},
      {"dim", std::to_string(dimension(s))},
      {"isotropy", isotext.empty() ? "0" : isotext},
      {"subgroup", iso.subgroup},
      {"class", flags_text(classify(s))},
      {"χ(t) factored", pr.factored},
      {"χ(t) expanded", to_string(pr.chi_t)},
      {"betti", betti_text(pr)},
      {"χ", std::to_string(euler) + (wang ? " (degree ratio " + std::to_string(*wang) + ")" : "")},
      {"spectrum", spec},
      {"checks", "trace " + yes(trace) + ", theorem 1 " + yes(t1.ok) + " (" + std::to_string(t1.distinct_nonzero) +
                     " distinct), theorem 2 " + yes(t2) + ", theorem 3 " + yes(t3) +
                     (overlap.empty() ? "" : ", overlap FAIL")}};
  std::ostringstream out;
  for (const auto& [k, v] : lines) {
    if (f == Format::markdown) out << "- **" << k << "**: " << v << "\n";
    else if (f == Format::csv) out << csv_field(k) << "," << csv_field(v) << "\n";
    else out << k << ": " << v << "\n";
  }
  for (const auto& o : overlap) out << (f == Format::markdown ? "- " : "") << o << "\n";
  return out.str();
}

}  // namespace symcat::render
