#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyarc::cli {

/// Left-aligned plain-text table. Widths count UTF-8 code points and skip
/// ANSI colour sequences.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::size_t display_width(const std::string& text);

}  // namespace polyarc::cli
