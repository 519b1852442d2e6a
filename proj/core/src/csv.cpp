// SPDX-License-Identifier: Apache-2.0
#include "ft422/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ft422::csv {

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double to_double(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(context + ": bad numeric cell '" + s + "'");
  }
}

}  // namespace

Writer::Writer(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

void Writer::add_row(const std::vector<double>& values) {
  if (values.size() != columns_) throw std::invalid_argument("csv::Writer: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text_ += ',';
    text_ += format_number(values[i]);
  }
  text_ += '\n';
}

void Writer::add_text_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::invalid_argument("csv::Writer: column count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

void Writer::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("csv: cannot write " + path);
  out << text_;
}

int Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<double> Table::numeric_column(const std::string& name) const {
  const int idx = column(name);
  if (idx < 0) throw std::runtime_error("csv: missing column " + name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.push_back(to_double(rows[r][static_cast<std::size_t>(idx)],
                            "row " + std::to_string(r + 2)));
  return out;
}

Table read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);
  Table t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_line(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
      continue;
    }
    if (cells.size() != t.header.size())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(t.header.size()) + " columns");
    t.rows.push_back(std::move(cells));
  }
  if (t.header.empty()) throw std::runtime_error(path + ": empty file");
  return t;
}

void write_shots(const std::string& path, const std::vector<ShotRecord>& shots) {
  Writer w({"cs", "c1", "c2", "c3", "c4"});
  for (const ShotRecord& s : shots)
    w.add_row({static_cast<double>(s.c_s), static_cast<double>(s.c[0]),
               static_cast<double>(s.c[1]), static_cast<double>(s.c[2]),
               static_cast<double>(s.c[3])});
  w.save(path);
}

std::vector<ShotRecord> read_shots(const std::string& path, PrepTarget::Basis basis) {
  const Table t = read_table(path);
  for (const char* col : {"cs", "c1", "c2", "c3", "c4"})
    if (t.column(col) < 0) throw std::runtime_error(path + ": missing column " + col);
  const auto cs = t.numeric_column("cs");
  const std::array<std::vector<double>, 4> c{t.numeric_column("c1"), t.numeric_column("c2"),
                                             t.numeric_column("c3"), t.numeric_column("c4")};
  std::vector<ShotRecord> shots(cs.size());
  auto to_bit = [&path](double v) {
    if (v != 0.0 && v != 1.0) throw std::runtime_error(path + ": bits must be 0 or 1");
    return static_cast<int>(v);
  };
  for (std::size_t i = 0; i < cs.size(); ++i) {
    shots[i].basis = basis;
    shots[i].c_s = to_bit(cs[i]);
    for (int q = 0; q < 4; ++q)
      shots[i].c[static_cast<std::size_t>(q)] = to_bit(c[static_cast<std::size_t>(q)][i]);
  }
  return shots;
}

void write_curve(const std::string& path, const fit::CurveData& data) {
  data.validate();
  Writer w({"x", "y", "sigma"});
  for (std::size_t i = 0; i < data.x.size(); ++i) w.add_row({data.x[i], data.y[i], data.sigma[i]});
  w.save(path);
}

fit::CurveData read_curve(const std::string& path) {
  const Table t = read_table(path);
  fit::CurveData d;
  d.x = t.numeric_column("x");
  d.y = t.numeric_column("y");
  d.sigma = t.numeric_column("sigma");
  d.validate();
  return d;
}

void write_tomo(const std::string& path, const tomo::TomoDataset& data) {
  data.validate();
  Writer w({"setting", "outcome", "count"});
  for (const tomo::TomoSetting& s : data.settings) {
    for (int o = 0; o < 16; ++o) {
      std::string outcome(4, '0');
      for (int q = 0; q < 4; ++q)
        if ((o >> q) & 1) outcome[static_cast<std::size_t>(q)] = '1';
      w.add_text_row({s.basis, outcome, format_number(s.counts[static_cast<std::size_t>(o)])});
    }
  }
  w.save(path);
}

tomo::TomoDataset read_tomo(const std::string& path) {
  const Table t = read_table(path);
  const int c_setting = t.column("setting");
  const int c_outcome = t.column("outcome");
  const int c_count = t.column("count");
  if (c_setting < 0 || c_outcome < 0 || c_count < 0)
    throw std::runtime_error(path + ": expected setting,outcome,count columns");

  tomo::TomoDataset data;
  data.settings.resize(tomo::all_settings().size());
  for (std::size_t i = 0; i < tomo::all_settings().size(); ++i)
    data.settings[i].basis = tomo::all_settings()[i];

  auto setting_index = [&](const std::string& basis) {
    for (std::size_t i = 0; i < tomo::all_settings().size(); ++i)
      if (tomo::all_settings()[i] == basis) return i;
    throw std::runtime_error(path + ": unknown setting " + basis);
  };

  double max_total = 0.0;
  std::vector<double> totals(tomo::all_settings().size(), 0.0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const std::size_t si = setting_index(row[static_cast<std::size_t>(c_setting)]);
    const std::string& outcome = row[static_cast<std::size_t>(c_outcome)];
    if (outcome.size() != 4) throw std::runtime_error(path + ": outcome must be 4 bits");
    int o = 0;
    for (int q = 0; q < 4; ++q) {
      if (outcome[static_cast<std::size_t>(q)] == '1')
        o |= 1 << q;
      else if (outcome[static_cast<std::size_t>(q)] != '0')
        throw std::runtime_error(path + ": outcome must be 4 bits");
    }
    const double count =
        to_double(row[static_cast<std::size_t>(c_count)], path + " row " + std::to_string(r + 2));
    data.settings[si].counts[static_cast<std::size_t>(o)] += count;
    totals[si] += count;
    max_total = std::max(max_total, totals[si]);
  }
  data.shots_per_setting = static_cast<int>(std::lround(max_total));
  data.exact = false;
  for (double total : totals)
    if (std::abs(total - max_total) > 1e-9 * std::max(1.0, max_total))
      throw std::runtime_error(path + ": settings have unequal shot counts");
  data.validate();
  return data;
}

}  // namespace ft422::csv
