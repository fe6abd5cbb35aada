#ifndef POLLING_CSV_HPP
#define POLLING_CSV_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polling/measures.hpp"

namespace polling {

/// One result row: a strategy/buffer combination with both products'
/// measures at full precision. Display rounding (2 decimals in the console
/// tables) is applied at print time only, never to the stored values.
struct TableRow {
  Strategy strategy = Strategy::SP;
  int n1 = 0, n2 = 0;
  double th11 = 0, th21 = 0, th12 = 0, th22 = 0;
  double l11 = 0, l21 = 0, l12 = 0, l22 = 0;
  std::optional<double> w11, w21, w12, w22, w1, w2;
  double wip = 0;
};

TableRow make_row(int n1, int n2, Strategy strategy, const NetworkReport& net);

/// Fixed schema: strategy,n1,n2,th11,th21,th12,th22,l11,l21,l12,l22,
/// w11,w21,w12,w22,w1,w2,wip. Values carry 12 significant digits so the
/// file round-trips; undefined waiting times print as nan.
std::string csv_header();
std::string csv_line(const TableRow& row);
void write_csv(std::ostream& os, const std::vector<TableRow>& rows);
void write_csv_file(const std::string& path, const std::vector<TableRow>& rows);

/// Parses a file produced by write_csv (used for round-trip checks).
std::vector<TableRow> parse_csv(std::istream& in);

}  // namespace polling

#endif
