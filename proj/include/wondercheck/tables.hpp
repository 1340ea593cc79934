#pragma once

// Recomputes the root-curve table and the dimension table, lines the results
// up against the printed cells and renders both as text, CSV, JSON or LaTeX.

#include <optional>
#include <string>
#include <vector>

#include "wondercheck/bigint.hpp"
#include "wondercheck/rootsys.hpp"

namespace wondercheck {

enum class TableKind { RootCurves, Dims };
enum class OutputFormat { Text, Csv, Json, Latex };
enum class CellOrder {
  Printed,   ///< computed values arranged in the printed column order
  Bourbaki,  ///< computed values in Bourbaki order
};

TableKind parse_table_kind(const std::string& text);
OutputFormat parse_output_format(const std::string& text);
CellOrder parse_cell_order(const std::string& text);
std::string to_string(OutputFormat f);
std::string to_string(TableKind k);

/// How a computed list compares with a printed one.
enum class MatchKind { Exact, Permuted, Differs };
std::string to_string(MatchKind m);

MatchKind compare_lists(const std::vector<BigInt>& computed, const std::vector<BigInt>& printed);

/// position[i] = printed slot that computed entry i is shown in. Equal values
/// are paired first, in order; leftovers fill the remaining slots in order.
std::vector<std::size_t> align_to_printed(const std::vector<BigInt>& computed, const std::vector<BigInt>& printed);

struct Discrepancy {
  std::string type;
  std::string table;   ///< "rootcurves" or "dims"
  std::string column;
  std::string printed;
  std::string computed;
  std::string note;
};

struct RootCurveRow {
  SimpleType type;
  IntVector comarks;               ///< Bourbaki order
  std::vector<BigInt> binomials;   ///< C(dimX+d-2, d-1), Bourbaki order
  std::vector<BigInt> header_values;  ///< C(dimX-1+d, dimX), Bourbaki order
  std::vector<std::size_t> printed_slot;
  MatchKind comark_match;
  MatchKind binomial_match;
};

struct DimsRow {
  SimpleType type;
  std::int64_t dim_x;
  std::int64_t printed_dim_x;
  std::vector<BigInt> fundamental_dims;  ///< Weyl dimensions, Bourbaki order
  std::vector<std::size_t> printed_slot;
  MatchKind dims_match;
};

RootCurveRow compute_root_curve_row(const SimpleType& t);
DimsRow compute_dims_row(const SimpleType& t);

std::vector<Discrepancy> root_curve_discrepancies(const RootCurveRow& row);
std::vector<Discrepancy> dims_discrepancies(const DimsRow& row);

/// Per-weight notes for sweep rows: the printed dimension-table cell for
/// weight `index` when it differs from the Weyl dimension.
std::optional<std::string> dims_note(const DimsRow& row, std::size_t index);

/// Type selection: "all", "exceptional", "classical", a family letter or a
/// comma separated list such as "A3,E8".
std::vector<SimpleType> select_types(const std::string& selector, int rank_max);

struct TableRequest {
  TableKind kind = TableKind::RootCurves;
  OutputFormat format = OutputFormat::Text;
  CellOrder order = CellOrder::Printed;
  std::vector<SimpleType> types;
};

std::string render_table(const TableRequest& request);

}  // namespace wondercheck
