#include "wondercheck/tables.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wondercheck/bounds.hpp"
#include "wondercheck/error.hpp"
#include "wondercheck/printed.hpp"
#include "wondercheck/repdim.hpp"
#include "wondercheck/wonderful.hpp"

namespace wondercheck {

using nlohmann::json;

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<BigInt> to_big(const IntVector& v) { return {v.begin(), v.end()}; }

template <typename T>
std::string join(const std::vector<T>& values, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

template <typename T>
std::vector<T> arrange(const std::vector<T>& values, const std::vector<std::size_t>& slot) {
  std::vector<T> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[slot[i]] = values[i];
  return out;
}

std::vector<std::size_t> identity_slots(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

}  // namespace

TableKind parse_table_kind(const std::string& text) {
  const auto s = lower(text);
  if (s == "rootcurves") return TableKind::RootCurves;
  if (s == "dims") return TableKind::Dims;
  throw Error(ErrorKind::BadArgs, "unknown table '" + text + "' (expected rootcurves or dims)");
}

OutputFormat parse_output_format(const std::string& text) {
  const auto s = lower(text);
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "latex") return OutputFormat::Latex;
  throw Error(ErrorKind::BadArgs, "unknown format '" + text + "'");
}

CellOrder parse_cell_order(const std::string& text) {
  const auto s = lower(text);
  if (s == "printed") return CellOrder::Printed;
  if (s == "bourbaki") return CellOrder::Bourbaki;
  throw Error(ErrorKind::BadArgs, "unknown cell order '" + text + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Latex: return "latex";
  }
  return "";
}

std::string to_string(TableKind k) { return k == TableKind::RootCurves ? "rootcurves" : "dims"; }

std::string to_string(MatchKind m) {
  switch (m) {
    case MatchKind::Exact: return "exact";
    case MatchKind::Permuted: return "permuted";
    case MatchKind::Differs: return "differs";
  }
  return "";
}

MatchKind compare_lists(const std::vector<BigInt>& computed, const std::vector<BigInt>& printed) {
  if (computed == printed) return MatchKind::Exact;
  auto a = computed;
  auto b = printed;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b ? MatchKind::Permuted : MatchKind::Differs;
}

std::vector<std::size_t> align_to_printed(const std::vector<BigInt>& computed, const std::vector<BigInt>& printed) {
  if (computed.size() != printed.size()) throw Error(ErrorKind::DimensionMismatch, "cannot align lists of different length");
  const std::size_t n = computed.size();
  std::vector<std::size_t> slot(n, n);
  std::vector<bool> slot_used(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (slot[i] == n && computed[i] == printed[s]) {
        slot[i] = s;
        slot_used[s] = true;
        break;
      }
    }
  }
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (slot[i] != n) continue;
    while (slot_used[next]) ++next;
    slot[i] = next;
    slot_used[next] = true;
  }
  return slot;
}

RootCurveRow compute_root_curve_row(const SimpleType& t) {
  const RootSystem rs = build_root_system(t);
  const std::int64_t dim = dim_X(rs);
  RootCurveRow row{t, comarks(rs), {}, {}, {}, MatchKind::Exact, MatchKind::Exact};
  for (auto d : row.comarks) {
    row.binomials.push_back(table_binomial_value(dim, d));
    row.header_values.push_back(header_binomial_value(dim, d));
  }
  const auto printed_comarks = to_big(printed::comarks(t));
  row.printed_slot = align_to_printed(to_big(row.comarks), printed_comarks);
  row.comark_match = compare_lists(to_big(row.comarks), printed_comarks);
  row.binomial_match = compare_lists(row.binomials, printed::curve_binomials(t));
  return row;
}

DimsRow compute_dims_row(const SimpleType& t) {
  const RootSystem rs = build_root_system(t);
  DimsRow row{t, dim_X(rs), printed::dim_x(t), {}, {}, MatchKind::Exact};
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    row.fundamental_dims.push_back(weyl_dim(rs, DominantWeight::fundamental(rs.rank(), i)));
  }
  const auto printed_dims = printed::fundamental_dims(t);
  row.printed_slot = align_to_printed(row.fundamental_dims, printed_dims);
  row.dims_match = compare_lists(row.fundamental_dims, printed_dims);
  return row;
}

std::vector<Discrepancy> root_curve_discrepancies(const RootCurveRow& row) {
  std::vector<Discrepancy> out;
  const std::string label = row.type.label();
  const auto printed_comarks = printed::comarks(row.type);
  const auto printed_binomials = printed::curve_binomials(row.type);
  if (row.comark_match == MatchKind::Permuted) {
    out.push_back({label, "rootcurves", "D.C_theta order", join(printed_comarks, ", "), join(row.comarks, ", "),
                   "same multiset; the printed order is not the Bourbaki order"});
  }
  for (std::size_t i = 0; i < row.comarks.size(); ++i) {
    const std::size_t s = row.printed_slot[i];
    if (BigInt(row.comarks[i]) != BigInt(printed_comarks[s])) {
      out.push_back({label, "rootcurves", "D.C_theta[" + std::to_string(s + 1) + "]", std::to_string(printed_comarks[s]),
                     std::to_string(row.comarks[i]), "comark differs"});
    }
    if (row.binomials[i] != printed_binomials[s]) {
      out.push_back({label, "rootcurves", "binomial[" + std::to_string(s + 1) + "]", printed_binomials[s].str(),
                     row.binomials[i].str(), "C(dimX+d-2, d-1) differs from the printed cell"});
    }
  }
  if (row.header_values != row.binomials) {
    out.push_back({label, "rootcurves", "binomial header", join(printed_binomials, ", "),
                   join(arrange(row.header_values, row.printed_slot), ", "),
                   "printed cells equal C(dimX+d-2, d-1); the header formula C(dimX-1+d, dimX) gives the computed values"});
  }
  return out;
}

std::optional<std::string> dims_note(const DimsRow& row, std::size_t index) {
  const auto printed_dims = printed::fundamental_dims(row.type);
  const auto s = row.printed_slot.at(index);
  if (printed_dims[s] == row.fundamental_dims[index]) return std::nullopt;
  return "dims table prints " + printed_dims[s].str() + "^2 for omega_" + std::to_string(index + 1) +
         ", Weyl dimension is " + row.fundamental_dims[index].str() + "^2";
}

std::vector<Discrepancy> dims_discrepancies(const DimsRow& row) {
  std::vector<Discrepancy> out;
  const std::string label = row.type.label();
  if (row.dim_x != row.printed_dim_x) {
    out.push_back({label, "dims", "dim X", std::to_string(row.printed_dim_x), std::to_string(row.dim_x), "dim X differs"});
  }
  const auto printed_dims = printed::fundamental_dims(row.type);
  for (std::size_t i = 0; i < row.fundamental_dims.size(); ++i) {
    const auto s = row.printed_slot[i];
    if (printed_dims[s] == row.fundamental_dims[i]) continue;
    out.push_back({label, "dims", "End(V_omega)[" + std::to_string(s + 1) + "]", printed_dims[s].str() + "^2",
                   row.fundamental_dims[i].str() + "^2", *dims_note(row, i)});
  }
  return out;
}

std::vector<SimpleType> select_types(const std::string& selector, int rank_max) {
  std::vector<SimpleType> out;
  auto add = [&](const SimpleType& t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  };
  std::stringstream ss(selector);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                token.end());
    if (token.empty()) continue;
    const auto s = lower(token);
    if (s == "all") {
      for (const auto& t : all_simple_types(rank_max)) add(t);
    } else if (s == "exceptional" || s == "exceptionals") {
      for (const auto& t : exceptional_types()) add(t);
    } else if (s == "classical") {
      for (const auto& t : all_simple_types(rank_max)) {
        if (!t.is_exceptional()) add(t);
      }
    } else if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'g') {
      const auto f = static_cast<Family>(std::toupper(static_cast<unsigned char>(s[0])));
      for (const auto& t : all_simple_types(rank_max)) {
        if (t.family() == f) add(t);
      }
    } else {
      add(SimpleType::parse(token));
    }
  }
  if (out.empty()) throw Error(ErrorKind::BadArgs, "no types selected by '" + selector + "'");
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Cells {
  std::string type;
  std::vector<std::string> values;  // one per column after the type
};

struct Rendered {
  std::vector<std::string> header;
  std::vector<Cells> rows;
  std::vector<Discrepancy> discrepancies;
  json json_rows = json::array();
  json json_forms = json::array();
};

std::string squares(const std::vector<BigInt>& bases) {
  std::ostringstream os;
  for (std::size_t i = 0; i < bases.size(); ++i) os << (i ? ", " : "") << bases[i] << "^2";
  return os.str();
}

bool family_first(const std::vector<SimpleType>& types, std::size_t i) {
  return !types[i].is_exceptional() && (i == 0 || types[i - 1].family() != types[i].family());
}

Rendered build_root_curves(const TableRequest& req) {
  Rendered r;
  r.header = {"type", "D.C_theta", "C(dimX+d-2, d-1)", "match"};
  for (std::size_t i = 0; i < req.types.size(); ++i) {
    const auto& t = req.types[i];
    if (family_first(req.types, i)) {
      const std::string fam = std::string(1, static_cast<char>(t.family())) + "_n";
      r.rows.push_back({fam, {printed::comark_form(t.family()), printed::curve_binomial_form(t.family()), "closed form"}});
      r.json_forms.push_back({{"family", fam},
                              {"comarks", printed::comark_form(t.family())},
                              {"binomials", printed::curve_binomial_form(t.family())}});
    }
    const RootCurveRow row = compute_root_curve_row(t);
    const auto slots = req.order == CellOrder::Printed ? row.printed_slot : identity_slots(row.comarks.size());
    const auto comark_cells = arrange(row.comarks, slots);
    const auto binomial_cells = arrange(row.binomials, slots);
    const std::string match = row.binomial_match == MatchKind::Differs || row.comark_match == MatchKind::Differs
                                  ? "differs"
                                  : to_string(row.comark_match);
    r.rows.push_back({t.label(), {join(comark_cells, ", "), join(binomial_cells, ", "), match}});
    json jb = json::array();
    for (const auto& b : binomial_cells) jb.push_back(b.str());
    r.json_rows.push_back({{"type", t.label()}, {"comarks", comark_cells}, {"binomials", jb}, {"match", match}});
    for (auto& d : root_curve_discrepancies(row)) r.discrepancies.push_back(std::move(d));
  }
  return r;
}

Rendered build_dims(const TableRequest& req) {
  Rendered r;
  r.header = {"type", "dim X", "dim End(V_omega)", "match"};
  for (std::size_t i = 0; i < req.types.size(); ++i) {
    const auto& t = req.types[i];
    if (family_first(req.types, i)) {
      const std::string fam = std::string(1, static_cast<char>(t.family())) + "_n";
      r.rows.push_back({fam, {printed::dim_x_form(t.family()), printed::fundamental_dims_form(t.family()), "closed form"}});
      r.json_forms.push_back({{"family", fam},
                              {"dim_x", printed::dim_x_form(t.family())},
                              {"end_dims", printed::fundamental_dims_form(t.family())}});
    }
    const DimsRow row = compute_dims_row(t);
    const auto slots = req.order == CellOrder::Printed ? row.printed_slot : identity_slots(row.fundamental_dims.size());
    const auto cells = arrange(row.fundamental_dims, slots);
    const std::string match = row.dim_x != row.printed_dim_x ? "differs" : to_string(row.dims_match);
    r.rows.push_back({t.label(), {std::to_string(row.dim_x), squares(cells), match}});
    json jd = json::array();
    for (const auto& b : cells) jd.push_back(b.str());
    r.json_rows.push_back({{"type", t.label()}, {"dim_x", row.dim_x}, {"fundamental_dims", jd}, {"match", match}});
    for (auto& d : dims_discrepancies(row)) r.discrepancies.push_back(std::move(d));
  }
  return r;
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

std::string render_text(const TableRequest& req, const Rendered& r) {
  std::vector<std::size_t> width(r.header.size());
  for (std::size_t c = 0; c < r.header.size(); ++c) width[c] = r.header[c].size();
  for (const auto& row : r.rows) {
    width[0] = std::max(width[0], row.type.size());
    for (std::size_t c = 0; c < row.values.size(); ++c) width[c + 1] = std::max(width[c + 1], row.values[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += " | ";
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
    }
    os << s << '\n';
  };
  os << "# " << (req.kind == TableKind::RootCurves ? "intersection numbers of the root curve" : "dimension counts")
     << ", cell order: " << (req.order == CellOrder::Printed ? "printed" : "bourbaki") << '\n';
  line(r.header);
  for (const auto& row : r.rows) {
    std::vector<std::string> cells{row.type};
    cells.insert(cells.end(), row.values.begin(), row.values.end());
    line(cells);
  }
  os << "#\n# discrepancies against the printed table: " << r.discrepancies.size() << '\n';
  for (const auto& d : r.discrepancies) {
    os << "# - " << d.type << " " << d.column << ": printed " << d.printed << " | computed " << d.computed << " | "
       << d.note << '\n';
  }
  return os.str();
}

std::string render_csv(const Rendered& r) {
  std::ostringstream os;
  for (std::size_t c = 0; c < r.header.size(); ++c) os << (c ? "," : "") << csv_field(r.header[c]);
  os << '\n';
  for (const auto& row : r.rows) {
    os << csv_field(row.type);
    for (const auto& v : row.values) os << ',' << csv_field(v);
    os << '\n';
  }
  os << "\ntype,table,column,printed,computed,note\n";
  for (const auto& d : r.discrepancies) {
    os << csv_field(d.type) << ',' << csv_field(d.table) << ',' << csv_field(d.column) << ',' << csv_field(d.printed)
       << ',' << csv_field(d.computed) << ',' << csv_field(d.note) << '\n';
  }
  return os.str();
}

std::string render_json(const TableRequest& req, const Rendered& r) {
  json j;
  j["table"] = to_string(req.kind);
  j["order"] = req.order == CellOrder::Printed ? "printed" : "bourbaki";
  j["closed_forms"] = r.json_forms;
  j["rows"] = r.json_rows;
  json disc = json::array();
  for (const auto& d : r.discrepancies) {
    disc.push_back({{"type", d.type},
                    {"table", d.table},
                    {"column", d.column},
                    {"printed", d.printed},
                    {"computed", d.computed},
                    {"note", d.note}});
  }
  j["discrepancies"] = disc;
  return j.dump(2) + "\n";
}

std::string latex_closed_form(std::string s) {
  static const std::regex binom(R"(C\(([^,()]+),([^()]+)\))");
  s = std::regex_replace(s, binom, R"(\binom{$1}{$2})");
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "...") == 0) {
      out += "\\ldots";
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

// Cells longer than four entries on E8 wrap onto a second line.
std::vector<std::string> split_list(const std::string& cell, bool wrap) {
  if (!wrap) return {cell};
  std::vector<std::string> items;
  std::stringstream ss(cell);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    items.push_back(item);
  }
  if (items.size() <= 4) return {cell};
  std::vector<std::string> first(items.begin(), items.begin() + 4);
  std::vector<std::string> second(items.begin() + 4, items.end());
  return {join(first, ", ") + ",", join(second, ", ")};
}

std::string render_latex(const TableRequest& req, const Rendered& r) {
  std::ostringstream os;
  const bool curves = req.kind == TableKind::RootCurves;
  os << "\\begin{tabular}{ |c|c|c| } \\hline\n";
  if (curves) {
    os << "$G$ & $D_\\omega \\cdot C_\\theta = \\langle \\omega, \\theta^\\vee \\rangle$ & "
          "$\\binom{\\dim(X) - 1 + D_\\omega \\cdot C_\\theta}{\\dim(X)}$ \\\\\n";
  } else {
    os << "$G$ & $\\dim(X)$ & $\\dim\\textup{End}(V_\\omega) \\leq h^0(X, D_\\omega)$ \\\\\n";
  }
  os << "\\hline\n";
  for (const auto& row : r.rows) {
    const bool form = row.values.back() == "closed form";
    std::string label;
    if (form) {
      label = "$" + std::string(1, row.type[0]) + "_n$";
    } else {
      label = SimpleType::parse(row.type).latex_label();
    }
    auto cell = [&](const std::string& v, bool math) {
      const std::string body = form ? latex_closed_form(v) : v;
      return math ? "$" + body + "$" : body;
    };
    const bool wrap = row.type == "E8";
    const auto second = split_list(row.values[1], wrap);
    if (curves) {
      os << label << " & " << cell(row.values[0], false) << " & " << cell(second[0], form) << " \\\\\n";
    } else {
      os << label << " & " << cell(row.values[0], form) << " & $" << (form ? latex_closed_form(second[0]) : second[0])
         << "$ \\\\\n";
    }
    if (second.size() > 1) os << " & & " << (curves ? second[1] : "$" + second[1] + "$") << " \\\\\n";
    os << "\\hline\n";
  }
  os << "\\end{tabular}\n";
  if (!r.discrepancies.empty()) {
    os << "% discrepancies against the printed table: " << r.discrepancies.size() << '\n';
    for (const auto& d : r.discrepancies) {
      os << "% " << d.type << " " << d.column << ": printed " << d.printed << " | computed " << d.computed << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string render_table(const TableRequest& request) {
  if (request.types.empty()) throw Error(ErrorKind::BadArgs, "no types to render");
  const Rendered r = request.kind == TableKind::RootCurves ? build_root_curves(request) : build_dims(request);
  switch (request.format) {
    case OutputFormat::Text: return render_text(request, r);
    case OutputFormat::Csv: return render_csv(r);
    case OutputFormat::Json: return render_json(request, r);
    case OutputFormat::Latex: return render_latex(request, r);
  }
  return {};
}

}  // namespace wondercheck
