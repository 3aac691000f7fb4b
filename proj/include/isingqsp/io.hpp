#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace isingqsp::io {

// Shortest round-trippable decimal form of a double: %.17g guarantees
// bit-exact recovery, which keeps emitted tables reproducible byte for byte.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Plain CSV with '#'-prefixed run-metadata comments ahead of the header row.
struct Csv {
  std::vector<std::string> comments;  // emitted as "# <line>"
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline void write_csv(std::ostream& os, const Csv& table) {
  for (const std::string& c : table.comments) os << "# " << c << '\n';
  for (std::size_t i = 0; i < table.header.size(); ++i)
    os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << fmt17(row[i]);
    os << '\n';
  }
}

}  // namespace isingqsp::io
