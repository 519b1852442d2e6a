// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ft422/fit.hpp"
#include "ft422/postsel.hpp"
#include "ft422/tomo.hpp"

namespace ft422::csv {

// Comma-separated with one header row, '.' decimal, fixed column order;
// numbers are written with %.12g.
class Writer {
 public:
  explicit Writer(std::vector<std::string> header);
  void add_row(const std::vector<double>& values);
  void add_text_row(const std::vector<std::string>& cells);
  const std::string& text() const { return text_; }
  void save(const std::string& path) const;

 private:
  std::size_t columns_;
  std::string text_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
  std::vector<double> numeric_column(const std::string& name) const;
};

Table read_table(const std::string& path);

// Shot tables: columns cs,c1,c2,c3,c4 (one row per shot).
void write_shots(const std::string& path, const std::vector<ShotRecord>& shots);
std::vector<ShotRecord> read_shots(const std::string& path, PrepTarget::Basis basis);

// Curve files: columns x,y,sigma.
void write_curve(const std::string& path, const fit::CurveData& data);
fit::CurveData read_curve(const std::string& path);

// Tomography datasets: columns setting,outcome,count.
void write_tomo(const std::string& path, const tomo::TomoDataset& data);
tomo::TomoDataset read_tomo(const std::string& path);

}  // namespace ft422::csv
