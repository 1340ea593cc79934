// wondercheck: reproduce the root-curve and dimension tables, run the colour
// verification sweep, query nef bounds and drive the approximation lab.
//
// Exit codes: 0 success / all pass, 1 verification or golden-file failure,
// 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wondercheck/bounds.hpp"
#include "wondercheck/dioph.hpp"
#include "wondercheck/error.hpp"
#include "wondercheck/report.hpp"
#include "wondercheck/tables.hpp"
#include "wondercheck/wonderful.hpp"

namespace wc = wondercheck;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_rank_max() {
  if (const char* env = std::getenv("WONDERCHECK_RANK_MAX")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring WONDERCHECK_RANK_MAX='" << env << "'\n";
  }
  return wc::kDefaultRankCeiling;
}

wc::IntVector parse_int_list(const std::string& text) {
  wc::IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const wc::BigInt v = wc::parse_big(item);
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

std::string extension(wc::OutputFormat f) {
  switch (f) {
    case wc::OutputFormat::Text: return "txt";
    case wc::OutputFormat::Csv: return "csv";
    case wc::OutputFormat::Json: return "json";
    case wc::OutputFormat::Latex: return "tex";
  }
  return "out";
}

std::string sanitize(std::string s) {
  for (auto& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '-';
  }
  return s;
}

// ---------------------------------------------------------------------------

struct TablesArgs {
  std::string which;
  std::string types = "all";
  int rank_max = 0;
  std::string format = "text";
  std::string order = "printed";
  std::string golden_dir;
  bool write_golden = false;
};

int cmd_tables(const TablesArgs& a) {
  wc::TableRequest req;
  req.kind = wc::parse_table_kind(a.which);
  req.format = wc::parse_output_format(a.format);
  req.order = wc::parse_cell_order(a.order);
  req.types = wc::select_types(a.types, a.rank_max);
  const std::string out = wc::render_table(req);

  if (a.golden_dir.empty()) {
    std::cout << out;
    return 0;
  }
  const std::filesystem::path file = std::filesystem::path(a.golden_dir) /
                                     (wc::to_string(req.kind) + "_" + sanitize(a.types) + "_r" +
                                      std::to_string(a.rank_max) + "_" + a.order + "." + extension(req.format));
  if (a.write_golden) {
    std::filesystem::create_directories(a.golden_dir);
    std::ofstream(file, std::ios::binary) << out;
    std::cout << "wrote " << file.string() << '\n';
    return 0;
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "golden file missing: " << file.string() << '\n';
    return kExitFail;
  }
  std::stringstream expected;
  expected << in.rdbuf();
  if (expected.str() != out) {
    std::cerr << "golden mismatch: " << file.string() << '\n';
    return kExitFail;
  }
  std::cout << "golden ok: " << file.string() << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> types;
  int rank_max = 0;
  std::string mode = "end";
  std::string format = "text";
  unsigned jobs = 0;
};

int cmd_verify(const VerifyArgs& a) {
  std::string selector;
  for (const auto& t : a.types) selector += (selector.empty() ? "" : ",") + t;
  if (selector.empty()) selector = "all";
  if (a.mode != "end" && a.mode != "h0") throw wc::Error(wc::ErrorKind::BadArgs, "mode must be end or h0");
  const auto format = wc::parse_output_format(a.format);
  const auto types = wc::select_types(selector, a.rank_max);
  wc::SweepOptions opt;
  opt.mode = a.mode == "h0" ? wc::SectionMode::H0 : wc::SectionMode::End;
  opt.jobs = a.jobs;
  const auto rows = wc::run_sweep(types, opt);
  std::cout << wc::rows_to_string(rows, format);
  return wc::all_pass(rows) ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

json verdict_json(const wc::Verdict& v) {
  return {{"curve_constant", v.curve_constant},
          {"dense_lower_bound", v.dense_lower_bound},
          {"required_count", v.required_count.str()},
          {"available_sections", v.available_sections.str()},
          {"pass", v.pass},
          {"full_conjecture", v.full_conjecture}};
}

void print_verdict(std::ostream& os, const std::string& prefix, const wc::Verdict& v) {
  os << prefix << "curve constant D.C_theta = " << v.curve_constant << '\n'
     << prefix << "available sections        = " << v.available_sections << '\n'
     << prefix << "required (strict) count   = " << v.required_count << '\n'
     << prefix << "dense lower bound         = " << v.dense_lower_bound << '\n'
     << prefix << "verdict                   = " << (v.pass ? "pass" : "FAIL") << '\n';
}

struct BoundArgs {
  std::string type;
  std::string divisor;
  std::string format = "text";
};

int cmd_bound(const BoundArgs& a) {
  const auto type = wc::SemisimpleType::parse(a.type);
  const auto divisor = wc::NefDivisor::from_flat(type, parse_int_list(a.divisor));
  const wc::SemisimpleData data(type);
  const wc::NefVerdict nv = wc::verify_nef(data, divisor);
  const bool ok = nv.trivial || (!nv.degenerate && nv.structural_pass && nv.direct.pass);

  const auto format = wc::parse_output_format(a.format);
  if (format == wc::OutputFormat::Json) {
    json colours = json::array();
    for (const auto& c : nv.colours) {
      json j = verdict_json(c.verdict);
      j["factor"] = c.factor + 1;
      j["weight"] = c.weight_index + 1;
      colours.push_back(j);
    }
    json out{{"type", type.label()},
             {"divisor", a.divisor},
             {"dim_x", wc::dim_X(type)},
             {"trivial", nv.trivial},
             {"degenerate", nv.degenerate},
             {"factor_supported", nv.factor_supported},
             {"structural", {{"pass", nv.structural_pass}, {"colours", colours}}},
             {"direct", verdict_json(nv.direct)},
             {"selected_factor", nv.selected_factor + 1}};
    std::cout << out.dump(2) << '\n';
  } else if (format == wc::OutputFormat::Text) {
    std::cout << "type " << type.label() << ", divisor " << a.divisor << ", dim X = " << wc::dim_X(type) << '\n';
    if (nv.trivial) std::cout << "note: zero divisor, nothing to certify\n";
    if (nv.degenerate && !nv.trivial) std::cout << "note: degree zero on the selected root curve; not certified\n";
    if (nv.factor_supported) {
      std::cout << "note: divisor supported on a proper subset of factors; using the root curve of factor "
                << nv.selected_factor + 1 << " (" << type.factors()[nv.selected_factor].label() << ")\n";
    }
    std::cout << "structural: " << (nv.structural_pass ? "pass" : "FAIL") << " (" << nv.colours.size()
              << " colours)\n";
    for (const auto& c : nv.colours) {
      std::cout << "  " << type.factors()[c.factor].label() << " omega_" << c.weight_index + 1
                << ": comark " << c.verdict.curve_constant << ", dense bound " << c.verdict.dense_lower_bound
                << ", " << (c.verdict.pass ? "pass" : "FAIL") << '\n';
    }
    std::cout << "direct (root curve of factor " << nv.selected_factor + 1 << ", all sections of D):\n";
    print_verdict(std::cout, "  ", nv.direct);
    std::cout << "full conjecture criterion: " << (nv.direct.full_conjecture ? "yes" : "no") << '\n';
  } else {
    throw wc::Error(wc::ErrorKind::BadArgs, "bound supports text and json output");
  }
  return ok ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

struct AlphaArgs {
  std::string point;
  std::string curve = "line";
  std::size_t count = 1000;
  unsigned m = 1;
  std::string place = "inf";
  double tail = 0.5;
  double margin = 0.2;
  std::string format = "text";
  bool samples = false;
};

int cmd_alpha(const AlphaArgs& a) {
  const auto P = wc::RationalProjectivePoint::parse(a.point);
  const auto v = wc::PlaceSpec::parse(a.place);
  if (a.m < 1) throw wc::Error(wc::ErrorKind::BadArgs, "--m must be positive");
  std::vector<wc::ApproxSample> seq;
  if (a.curve == "line") {
    seq = wc::best_sequence_on_line(P, v, a.count, a.m);
  } else if (a.curve == "squares") {
    if (!v.is_archimedean()) throw wc::Error(wc::ErrorKind::BadArgs, "the squares curve is archimedean only");
    seq = wc::square_sequence_on_line(P, a.count, a.m);
  } else {
    throw wc::Error(wc::ErrorKind::BadArgs, "unknown curve '" + a.curve + "'");
  }
  wc::EstimateOptions opt;
  opt.tail_fraction = a.tail;
  const auto est = wc::alpha_estimate(seq, opt);
  const bool above = wc::product_bounded(seq, est.estimate + a.margin);
  const bool below = wc::product_bounded(seq, est.estimate - a.margin);

  const auto format = wc::parse_output_format(a.format);
  const auto sorted = wc::sorted_by_distance(seq);
  if (format == wc::OutputFormat::Json) {
    json j{{"point", P.to_string()},
           {"place", v.label()},
           {"m", a.m},
           {"count", est.sample_count},
           {"estimate", est.estimate},
           {"tail_min", est.tail_min},
           {"tail_max", est.tail_max},
           {"tail_count", est.tail_count},
           {"bounded_above_estimate", above},
           {"bounded_below_estimate", below}};
    if (a.samples) {
      json arr = json::array();
      for (const auto& s : sorted) {
        arr.push_back({{"point", s.point.to_string()},
                       {"height", s.height.str()},
                       {"distance", s.distance.str()},
                       {"ratio", std::isfinite(s.ratio) ? json(s.ratio) : json(nullptr)}});
      }
      j["samples"] = arr;
    }
    std::cout << j.dump(2) << '\n';
  } else if (format == wc::OutputFormat::Csv) {
    std::cout << "point,height,distance,ratio\n";
    for (const auto& s : sorted) {
      std::cout << '"' << s.point.to_string() << "\"," << s.height << ',' << s.distance << ',' << s.ratio << '\n';
    }
  } else if (format == wc::OutputFormat::Text) {
    if (a.samples) {
      std::cout << "point | height | distance | ratio\n";
      for (const auto& s : sorted)
        std::cout << s.point.to_string() << " | " << s.height << " | " << s.distance << " | " << s.ratio << '\n';
    }
    std::cout << "target " << P.to_string() << ", place " << v.label() << ", L = O(" << a.m << "), "
              << est.sample_count << " samples\n"
              << "alpha estimate (median over last " << est.tail_count << ") = " << est.estimate << '\n'
              << "tail range = [" << est.tail_min << ", " << est.tail_max << "]\n"
              << "dist^g * H bounded at g = estimate + " << a.margin << ": " << (above ? "yes" : "no") << '\n'
              << "dist^g * H bounded at g = estimate - " << a.margin << ": " << (below ? "yes" : "no") << '\n';
  } else {
    throw wc::Error(wc::ErrorKind::BadArgs, "alpha supports text, csv and json output");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root-system bounds for wonderful compactifications and an approximation-constant lab"};
  app.require_subcommand(1);
  const int rank_default = default_rank_max();

  TablesArgs ta;
  ta.rank_max = rank_default;
  auto* tables = app.add_subcommand("tables", "Reproduce the root-curve (rootcurves) or dimension (dims) table");
  tables->add_option("which", ta.which, "rootcurves or dims")->required();
  tables->add_option("--types", ta.types, "all, exceptional, classical, a family letter, or a list like A3,E8");
  tables->add_option("--rank-max", ta.rank_max, "rank ceiling for the classical families");
  tables->add_option("--format", ta.format, "text, csv, json or latex");
  tables->add_option("--order", ta.order, "printed or bourbaki cell order");
  tables->add_option("--golden-dir", ta.golden_dir, "compare the output with a golden file in this directory");
  tables->add_flag("--write-golden", ta.write_golden, "write the golden file instead of comparing");

  VerifyArgs va;
  va.rank_max = rank_default;
  auto* verify = app.add_subcommand("verify", "Check every colour of the selected types");
  verify->add_option("types", va.types, "types or selectors (default: all)");
  verify->add_option("--rank-max", va.rank_max, "rank ceiling for the classical families");
  verify->add_option("--mode", va.mode, "end: End(V_omega) only; h0: all sections");
  verify->add_option("--format", va.format, "text, csv or json");
  verify->add_option("--jobs", va.jobs, "worker threads (0 = all cores)");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Verdicts for a nef divisor on a (semisimple) wonderful compactification");
  bound->add_option("--type", ba.type, "type such as E8 or A1xA1")->required();
  bound->add_option("--divisor", ba.divisor, "comma separated coefficients in the fundamental-weight basis")->required();
  bound->add_option("--format", ba.format, "text or json");

  AlphaArgs aa;
  auto* alpha = app.add_subcommand("alpha", "Estimate approximation constants along explicit sequences");
  alpha->add_option("--P", aa.point, "target point, e.g. 1:0")->required();
  alpha->add_option("--curve", aa.curve, "line or squares");
  alpha->add_option("--count", aa.count, "number of samples");
  alpha->add_option("--m", aa.m, "L = O(m)");
  alpha->add_option("--place", aa.place, "inf or a prime");
  alpha->add_option("--tail", aa.tail, "tail fraction used by the estimator");
  alpha->add_option("--margin", aa.margin, "gamma offset for the boundedness check");
  alpha->add_option("--format", aa.format, "text, csv or json");
  alpha->add_flag("--samples", aa.samples, "print the samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*tables) return cmd_tables(ta);
    if (*verify) return cmd_verify(va);
    if (*bound) return cmd_bound(ba);
    if (*alpha) return cmd_alpha(aa);
  } catch (const wc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
