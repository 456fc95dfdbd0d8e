#pragma once

// Facet-list text format: one facet per line, vertex ids separated by
// whitespace; a line whose first non-blank character is '#' is a comment;
// blank lines are ignored.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "swlab/complex.hpp"
#include "swlab/error.hpp"

namespace swlab::io {

inline std::vector<std::vector<Vertex>> parse_facets(std::istream& in) {
  std::vector<std::vector<Vertex>> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size() || line[pos] == '#') continue;
    std::vector<Vertex> facet;
    std::vector<std::size_t> columns;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      const std::size_t begin = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      Vertex v = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + begin, line.data() + pos, v);
      if (ec != std::errc() || ptr != line.data() + pos)
        throw ParseError(line_no, begin + 1,
                         "expected a non-negative vertex id, got '" + line.substr(begin, pos - begin) + "'");
      facet.push_back(v);
      columns.push_back(begin + 1);
    }
    for (std::size_t a = 0; a < facet.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (facet[a] == facet[b])
          throw ParseError(line_no, columns[a], "MalformedFacet: vertex " + std::to_string(facet[a]) + " repeated");
    facets.push_back(std::move(facet));
  }
  return facets;
}

inline SimplicialComplex parse_complex(std::istream& in) {
  auto facets = parse_facets(in);
  if (facets.empty()) throw Error(ErrorKind::EmptyInput, "no facets in input");
  return build_complex(facets);
}

inline SimplicialComplex parse_complex_string(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

inline SimplicialComplex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return parse_complex(in);
}

/// Writes the maximal simplices, one per line, in canonical order.
inline void write_complex(const SimplicialComplex& x, std::ostream& out) {
  for (const auto& f : x.facets()) {
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? " " : "") << f[k];
    out << '\n';
  }
}

inline std::string to_facet_text(const SimplicialComplex& x) {
  std::ostringstream out;
  write_complex(x, out);
  return out.str();
}

}  // namespace swlab::io
