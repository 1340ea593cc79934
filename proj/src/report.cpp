#include "wondercheck/report.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "wondercheck/error.hpp"
#include "wondercheck/repdim.hpp"
#include "wondercheck/wonderful.hpp"

namespace wondercheck {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Sweep

namespace {

struct TypeContext {
  RootSystem rs;
  DimsRow dims;
};

ReportRow evaluate(const TypeContext& ctx, std::size_t index, SectionMode mode) {
  const RootSystem& rs = ctx.rs;
  const DominantWeight omega = DominantWeight::fundamental(rs.rank(), index);
  const Verdict v = verify_colour(rs, index, mode);

  ReportRow row;
  row.type = rs.type().label();
  row.weight_index = index + 1;
  row.comark = v.curve_constant;
  row.table_binomial = table_binomial_value(dim_X(rs), v.curve_constant);
  row.required_count = v.required_count;
  row.end_dim = mode == SectionMode::End ? v.available_sections : end_dim(rs, omega);
  if (mode == SectionMode::H0) row.h0_dim = v.available_sections;
  row.dense_lower_bound = v.dense_lower_bound;
  row.pass = v.pass;
  if (auto note = dims_note(ctx.dims, index)) row.notes.push_back(*note);
  return row;
}

}  // namespace

std::vector<ReportRow> run_sweep(const std::vector<SimpleType>& types, const SweepOptions& options) {
  std::vector<TypeContext> contexts;
  contexts.reserve(types.size());
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t t = 0; t < types.size(); ++t) {
    contexts.push_back({build_root_system(types[t]), compute_dims_row(types[t])});
    for (std::size_t i = 0; i < contexts.back().rs.rank(); ++i) tasks.emplace_back(t, i);
  }

  std::vector<ReportRow> rows(tasks.size());
  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        rows[k] = evaluate(contexts[tasks[k].first], tasks[k].second, options.mode);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

bool all_pass(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

const std::vector<std::string> kColumns = {"type",     "weight",  "comark", "table_binomial", "required_count",
                                           "end_dim",  "h0_dim",  "dense_lower_bound", "pass", "notes"};

// Notes are joined with ';'; '\', ';', '|' and newlines are escaped so the
// joined cell splits back unambiguously.
std::string escape_note(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case ';': out += "\\;"; break;
      case '|': out += "\\|"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) out += (i ? "; " : "") + escape_note(notes[i]);
  return out;
}

std::vector<std::string> split_notes(const std::string& cell) {
  std::vector<std::string> out;
  if (cell.empty()) return out;
  std::string cur;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    const char c = cell[i];
    if (c == '\\' && i + 1 < cell.size()) {
      const char e = cell[++i];
      cur += e == 'n' ? '\n' : e;
    } else if (c == ';') {
      out.push_back(cur);
      cur.clear();
      if (i + 1 < cell.size() && cell[i + 1] == ' ') ++i;
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> row_cells(const ReportRow& r) {
  return {r.type,
          std::to_string(r.weight_index),
          std::to_string(r.comark),
          r.table_binomial.str(),
          r.required_count.str(),
          r.end_dim.str(),
          r.h0_dim ? r.h0_dim->str() : "-",
          std::to_string(r.dense_lower_bound),
          r.pass ? "pass" : "FAIL",
          join_notes(r.notes)};
}

std::int64_t parse_int(const std::string& s) {
  const BigInt v = parse_big(s);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::ParseError, "integer out of range: " + s);
  return static_cast<std::int64_t>(v);
}

ReportRow row_from_cells(const std::vector<std::string>& c) {
  if (c.size() != kColumns.size())
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(kColumns.size()) + " cells, got " + std::to_string(c.size()));
  ReportRow r;
  r.type = c[0];
  r.weight_index = static_cast<std::size_t>(parse_int(c[1]));
  r.comark = parse_int(c[2]);
  r.table_binomial = parse_big(c[3]);
  r.required_count = parse_big(c[4]);
  r.end_dim = parse_big(c[5]);
  if (c[6] != "-" && !c[6].empty()) r.h0_dim = parse_big(c[6]);
  r.dense_lower_bound = parse_int(c[7]);
  if (c[8] != "pass" && c[8] != "FAIL") throw Error(ErrorKind::ParseError, "bad pass flag '" + c[8] + "'");
  r.pass = c[8] == "pass";
  r.notes = split_notes(c[9]);
  return r;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(' ');
  return s.substr(b, e - b + 1);
}

// Splits on '|' not preceded by a backslash escape.
std::vector<std::string> split_unescaped_bars(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && i + 1 < line.size()) {
      cur += line[i];
      cur += line[++i];
    } else if (line[i] == '|') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += line[i];
    }
  }
  out.push_back(cur);
  return out;
}

std::string to_text(const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> table{kColumns};
  for (const auto& r : rows) table.push_back(row_cells(r));
  std::vector<std::size_t> width(kColumns.size(), 0);
  for (const auto& cells : table)
    for (std::size_t c = 0; c + 1 < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
  std::ostringstream os;
  for (const auto& cells : table) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << " | ";
      os << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size(), ' ');
    }
    os << '\n';
  }
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; });
  os << "# " << rows.size() << " rows, " << failed << " failed\n";
  return os.str();
}

std::vector<ReportRow> from_text(const std::string& text) {
  std::vector<ReportRow> rows;
  std::istringstream is(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      auto head = split_unescaped_bars(line);
      for (auto& h : head) h = trim(h);
      if (head != kColumns) throw Error(ErrorKind::ParseError, "unexpected text header: " + line);
      header_seen = true;
      continue;
    }
    auto cells = split_unescaped_bars(line);
    if (cells.size() != kColumns.size()) throw Error(ErrorKind::ParseError, "malformed text row: " + line);
    for (std::size_t c = 0; c + 1 < cells.size(); ++c) cells[c] = trim(cells[c]);
    // The notes cell follows the separator " | " and is otherwise verbatim.
    std::string& notes = cells.back();
    if (!notes.empty() && notes.front() == ' ') notes.erase(notes.begin());
    rows.push_back(row_from_cells(cells));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  for (std::size_t c = 0; c < kColumns.size(); ++c) os << (c ? "," : "") << kColumns[c];
  os << '\n';
  for (const auto& r : rows) {
    const auto cells = row_cells(r);
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      record.push_back(field);
      field.clear();
      any = true;
    } else if (c == '\n') {
      if (any || !field.empty()) {
        record.push_back(field);
        records.push_back(record);
      }
      record.clear();
      field.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quoted CSV field");
  if (any || !field.empty()) {
    record.push_back(field);
    records.push_back(record);
  }
  return records;
}

std::vector<ReportRow> from_csv(const std::string& text) {
  auto records = parse_csv(text);
  if (records.empty()) return {};
  if (records.front() != kColumns) throw Error(ErrorKind::ParseError, "unexpected CSV header");
  std::vector<ReportRow> rows;
  for (std::size_t i = 1; i < records.size(); ++i) rows.push_back(row_from_cells(records[i]));
  return rows;
}

std::string to_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"type", r.type},
                   {"weight", r.weight_index},
                   {"comark", r.comark},
                   {"table_binomial", r.table_binomial.str()},
                   {"required_count", r.required_count.str()},
                   {"end_dim", r.end_dim.str()},
                   {"h0_dim", r.h0_dim ? json(r.h0_dim->str()) : json(nullptr)},
                   {"dense_lower_bound", r.dense_lower_bound},
                   {"pass", r.pass},
                   {"notes", r.notes}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ReportRow> from_json(const std::string& text) {
  std::vector<ReportRow> rows;
  try {
    const json arr = json::parse(text);
    for (const auto& o : arr) {
      ReportRow r;
      r.type = o.at("type").get<std::string>();
      r.weight_index = o.at("weight").get<std::size_t>();
      r.comark = o.at("comark").get<std::int64_t>();
      r.table_binomial = parse_big(o.at("table_binomial").get<std::string>());
      r.required_count = parse_big(o.at("required_count").get<std::string>());
      r.end_dim = parse_big(o.at("end_dim").get<std::string>());
      if (!o.at("h0_dim").is_null()) r.h0_dim = parse_big(o.at("h0_dim").get<std::string>());
      r.dense_lower_bound = o.at("dense_lower_bound").get<std::int64_t>();
      r.pass = o.at("pass").get<bool>();
      r.notes = o.at("notes").get<std::vector<std::string>>();
      rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return rows;
}

}  // namespace

std::string rows_to_string(const std::vector<ReportRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return to_text(rows);
    case OutputFormat::Csv: return to_csv(rows);
    case OutputFormat::Json: return to_json(rows);
    case OutputFormat::Latex: break;
  }
  throw Error(ErrorKind::BadArgs, "report rows have no LaTeX encoding");
}

std::vector<ReportRow> rows_from_string(const std::string& text, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return from_text(text);
    case OutputFormat::Csv: return from_csv(text);
    case OutputFormat::Json: return from_json(text);
    case OutputFormat::Latex: break;
  }
  throw Error(ErrorKind::BadArgs, "report rows have no LaTeX encoding");
}

}  // namespace wondercheck
