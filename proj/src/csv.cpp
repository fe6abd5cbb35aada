#include "polling/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polling {

TableRow make_row(int n1, int n2, Strategy strategy, const NetworkReport& net) {
  TableRow r;
  r.strategy = strategy;
  r.n1 = n1;
  r.n2 = n2;
  r.th11 = net.product1.th1;
  r.th21 = net.product2.th1;
  r.th12 = net.product1.th2;
  r.th22 = net.product2.th2;
  r.l11 = net.product1.len1;
  r.l21 = net.product2.len1;
  r.l12 = net.product1.len2;
  r.l22 = net.product2.len2;
  r.w11 = net.product1.w1;
  r.w21 = net.product2.w1;
  r.w12 = net.product1.w2;
  r.w22 = net.product2.w2;
  r.w1 = net.product1.w_total;
  r.w2 = net.product2.w_total;
  r.wip = net.wip_total;
  return r;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) {
  return v ? fmt(*v) : "nan";
}

std::optional<double> parse_opt(const std::string& field) {
  if (field == "nan") return std::nullopt;
  return std::stod(field);
}

}  // namespace

std::string csv_header() {
  return "strategy,n1,n2,th11,th21,th12,th22,l11,l21,l12,l22,"
         "w11,w21,w12,w22,w1,w2,wip";
}

std::string csv_line(const TableRow& r) {
  std::ostringstream os;
  os << to_string(r.strategy) << ',' << r.n1 << ',' << r.n2 << ',' << fmt(r.th11)
     << ',' << fmt(r.th21) << ',' << fmt(r.th12) << ',' << fmt(r.th22) << ','
     << fmt(r.l11) << ',' << fmt(r.l21) << ',' << fmt(r.l12) << ',' << fmt(r.l22)
     << ',' << fmt(r.w11) << ',' << fmt(r.w21) << ',' << fmt(r.w12) << ','
     << fmt(r.w22) << ',' << fmt(r.w1) << ',' << fmt(r.w2) << ',' << fmt(r.wip);
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << csv_header() << '\n';
  for (const TableRow& r : rows) os << csv_line(r) << '\n';
}

void write_csv_file(const std::string& path, const std::vector<TableRow>& rows) {
  std::ofstream out(path, std::ios::binary);  // binary: keep UNIX newlines
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_csv(out, rows);
}

std::vector<TableRow> parse_csv(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  if (!std::getline(in, line) || line != csv_header())
    throw std::runtime_error("unexpected CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 18) throw std::runtime_error("malformed CSV row: " + line);
    TableRow r;
    if (fields[0] == "sp") r.strategy = Strategy::SP;
    else if (fields[0] == "op") r.strategy = Strategy::OP;
    else throw std::runtime_error("unknown strategy in CSV: " + fields[0]);
    r.n1 = std::stoi(fields[1]);
    r.n2 = std::stoi(fields[2]);
    r.th11 = std::stod(fields[3]);
    r.th21 = std::stod(fields[4]);
    r.th12 = std::stod(fields[5]);
    r.th22 = std::stod(fields[6]);
    r.l11 = std::stod(fields[7]);
    r.l21 = std::stod(fields[8]);
    r.l12 = std::stod(fields[9]);
    r.l22 = std::stod(fields[10]);
    r.w11 = parse_opt(fields[11]);
    r.w21 = parse_opt(fields[12]);
    r.w12 = parse_opt(fields[13]);
    r.w22 = parse_opt(fields[14]);
    r.w1 = parse_opt(fields[15]);
    r.w2 = parse_opt(fields[16]);
    r.wip = std::stod(fields[17]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace polling
