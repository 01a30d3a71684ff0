#ifndef LIEKIT_CSV_HPP
#define LIEKIT_CSV_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit::csv {

/// Lossless, locale-independent double formatting (17 significant digits).
inline std::string cell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

inline std::string cell(int v) { return std::to_string(v); }
inline std::string cell(long v) { return std::to_string(v); }
inline std::string cell(const std::string& v) { return v; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
      throw std::invalid_argument("csv::Table: column count mismatch");
    rows_.push_back(std::move(row));
  }

  std::string to_string() const {
    std::ostringstream out;
    emit(out, header_);
    for (const auto& row : rows_) emit(out, row);
    return out.str();
  }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("csv::Table: cannot open " + path);
    out << to_string();
  }

 private:
  static void emit(std::ostringstream& out,
                   const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace liekit::csv

#endif
