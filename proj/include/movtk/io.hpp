#pragma once

// Text formats.
//
// .trn: first line n, then n rows of space-separated 0/1 entries where row i,
// column j is 1 iff alternative i dominates j, then optionally a line
// "labels: a b c ...".
//
// .wts: n rows of n space-separated decimal reals. Entries for present edges
// must be positive; entries for absent edges are ignored (written as 0).

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "movtk/error.hpp"
#include "movtk/tournament.hpp"

namespace movtk::io {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string> nonblank_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!split_ws(line).empty()) out.push_back(line);
  }
  return out;
}

inline std::string cell(int row, int col) {
  return "row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline Tournament parse_tournament(std::string_view text) {
  auto lines = detail::nonblank_lines(text);
  if (lines.empty()) throw ParseError("empty tournament file");
  auto head = detail::split_ws(lines[0]);
  int n = 0;
  if (head.size() != 1 ||
      std::from_chars(head[0].data(), head[0].data() + head[0].size(), n).ec != std::errc{} || n < 1)
    throw ParseError("line 1 must hold the number of alternatives (>= 1)");

  std::vector<std::string> labels;
  std::size_t rows_end = lines.size();
  if (lines.back().rfind("labels:", 0) == 0) {
    labels = detail::split_ws(std::string_view(lines.back()).substr(7));
    if (labels.size() != static_cast<std::size_t>(n))
      throw ParseError("labels line names " + std::to_string(labels.size()) + " alternatives, expected " +
                       std::to_string(n));
    --rows_end;
  }
  if (rows_end - 1 != static_cast<std::size_t>(n))
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(rows_end - 1));

  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    auto tok = detail::split_ws(lines[i + 1]);
    if (tok.size() != static_cast<std::size_t>(n))
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(tok.size()) +
                       " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (tok[j] == "1") {
        m[static_cast<std::size_t>(i) * n + j] = 1;
      } else if (tok[j] != "0") {
        throw ParseError(detail::cell(i, j) + ": entry must be 0 or 1, got '" + tok[j] + "'");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (m[static_cast<std::size_t>(i) * n + i]) throw ParseError(detail::cell(i, i) + ": diagonal must be 0");
    for (int j = i + 1; j < n; ++j) {
      bool ij = m[static_cast<std::size_t>(i) * n + j], ji = m[static_cast<std::size_t>(j) * n + i];
      if (ij && ji) throw ParseError(detail::cell(i, j) + " and " + detail::cell(j, i) + ": both set");
      if (!ij && !ji) throw ParseError(detail::cell(i, j) + " and " + detail::cell(j, i) + ": neither set");
    }
  }
  return Tournament(n, std::move(m), std::move(labels));
}

inline Weighting parse_weights(std::string_view text, const Tournament& t) {
  const int n = t.size();
  auto lines = detail::nonblank_lines(text);
  if (lines.size() != static_cast<std::size_t>(n))
    throw ParseError("weights file has " + std::to_string(lines.size()) + " rows, tournament has " +
                     std::to_string(n) + " alternatives");
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    auto tok = detail::split_ws(lines[i]);
    if (tok.size() != static_cast<std::size_t>(n))
      throw ParseError("weights row " + std::to_string(i + 1) + " has " + std::to_string(tok.size()) +
                       " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      char* end = nullptr;
      double v = std::strtod(tok[j].c_str(), &end);
      if (end == tok[j].c_str() || *end != '\0' || !std::isfinite(v))
        throw ParseError("weights " + detail::cell(i, j) + ": not a number: '" + tok[j] + "'");
      if (v < 0.0) throw ParseError("weights " + detail::cell(i, j) + ": negative weight");
      if (t.beats(i, j) && v == 0.0)
        throw ParseError("weights " + detail::cell(i, j) + ": edge present, weight must be positive");
      w[static_cast<std::size_t>(i) * n + j] = t.beats(i, j) ? v : 0.0;
    }
  }
  return Weighting(t, std::move(w));
}

inline std::string serialize(const Tournament& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) out << (j ? " " : "") << (t.beats(i, j) ? 1 : 0);
    out << '\n';
  }
  if (!t.labels().empty()) {
    out << "labels:";
    for (const auto& l : t.labels()) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

inline std::string serialize(const Weighting& w) {
  // Shortest representation that parses back to the same double.
  std::string out;
  char buf[64];
  for (int i = 0; i < w.size(); ++i) {
    for (int j = 0; j < w.size(); ++j) {
      if (j) out += ' ';
      auto res = std::to_chars(buf, buf + sizeof buf, w(i, j));
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

inline Tournament load_tournament(const std::string& path) { return parse_tournament(detail::read_file(path)); }

inline Weighting load_weights(const std::string& path, const Tournament& t) {
  return parse_weights(detail::read_file(path), t);
}

}  // namespace movtk::io
