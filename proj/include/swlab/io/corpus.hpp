#pragma once

// Built-in triangulations of closed manifolds, revalidated on every load.

#include <string>
#include <vector>

#include "swlab/complex.hpp"
#include "swlab/error.hpp"
#include "swlab/homology.hpp"

namespace swlab::io {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::vector<std::vector<Vertex>> facets;
  std::vector<std::size_t> betti;     // mod 2
  std::vector<bool> sw_nonzero;       // w_0 … w_n

  SimplicialComplex complex() const { return build_complex(facets); }
};

namespace detail {

inline std::vector<std::vector<Vertex>> boundary_of_simplex(Vertex n_plus_1) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex skip = 0; skip <= n_plus_1; ++skip) {
    std::vector<Vertex> f;
    for (Vertex v = 0; v <= n_plus_1; ++v)
      if (v != skip) f.push_back(v);
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<CorpusEntry> raw_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"s2", "boundary of the 3-simplex (2-sphere)", boundary_of_simplex(3), {1, 0, 1}, {true, false, false}});
  c.push_back({"rp2-6", "6-vertex real projective plane",
               {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}},
               {1, 1, 1},
               {true, true, true}});
  c.push_back({"t2-7", "7-vertex (Moebius) torus",
               {{0, 1, 3}, {0, 1, 5}, {0, 2, 3}, {0, 2, 6}, {0, 4, 5}, {0, 4, 6}, {1, 2, 4},
                {1, 2, 6}, {1, 3, 4}, {1, 5, 6}, {2, 3, 5}, {2, 4, 5}, {3, 4, 6}, {3, 5, 6}},
               {1, 2, 1},
               {true, false, false}});
  c.push_back({"klein", "8-vertex Klein bottle",
               {{0, 2, 6}, {0, 2, 7}, {0, 3, 5}, {0, 3, 6}, {0, 4, 5}, {0, 4, 7},
                {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 7},
                {2, 4, 5}, {2, 5, 6}, {3, 4, 6}, {3, 4, 7}},
               {1, 2, 1},
               {true, true, false}});
  c.push_back({"s3", "boundary of the 4-simplex (3-sphere)", boundary_of_simplex(4), {1, 0, 0, 1},
               {true, false, false, false}});
  c.push_back({"rp3", "11-vertex real projective 3-space (f-vector 11, 51, 80, 40)",
               {{0, 1, 3, 6}, {0, 1, 3, 10}, {0, 1, 4, 6}, {0, 1, 4, 10}, {0, 2, 4, 9}, {0, 2, 4, 10},
                {0, 2, 5, 9}, {0, 2, 5, 10}, {0, 3, 5, 7}, {0, 3, 5, 10}, {0, 3, 6, 7}, {0, 4, 6, 9},
                {0, 5, 7, 9}, {0, 6, 7, 9}, {1, 2, 3, 6}, {1, 2, 3, 9}, {1, 2, 5, 6}, {1, 2, 5, 9},
                {1, 3, 9, 10}, {1, 4, 5, 6}, {1, 4, 5, 7}, {1, 4, 7, 10}, {1, 5, 7, 9}, {1, 7, 9, 10},
                {2, 3, 4, 7}, {2, 3, 4, 9}, {2, 3, 6, 7}, {2, 4, 7, 10}, {2, 5, 6, 10}, {2, 6, 7, 10},
                {3, 4, 5, 7}, {3, 4, 5, 8}, {3, 4, 8, 9}, {3, 5, 8, 10}, {3, 8, 9, 10}, {4, 5, 6, 8},
                {4, 6, 8, 9}, {5, 6, 8, 10}, {6, 7, 9, 10}, {6, 8, 9, 10}},
               {1, 1, 1, 1},
               {true, false, false, false}});
  return c;
}

}  // namespace detail

/// Pseudomanifold and Betti checks; throws CorpusValidationFailed.
inline void validate_corpus_entry(const CorpusEntry& e) {
  SimplicialComplex x;
  try {
    x = e.complex();
  } catch (const Error& err) {
    throw Error(ErrorKind::CorpusValidationFailed, e.name + ": " + err.what());
  }
  if (!is_closed_pseudomanifold(x).ok())
    throw Error(ErrorKind::CorpusValidationFailed, e.name + ": not a closed pseudomanifold");
  if (homology(x).betti() != e.betti)
    throw Error(ErrorKind::CorpusValidationFailed, e.name + ": mod-2 Betti numbers differ from the recorded ones");
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& e : detail::raw_corpus()) names.push_back(e.name);
  return names;
}

inline CorpusEntry corpus(const std::string& name) {
  for (auto& e : detail::raw_corpus()) {
    if (e.name != name) continue;
    validate_corpus_entry(e);
    return e;
  }
  throw Error(ErrorKind::UnknownCorpusEntry, "'" + name + "'");
}

}  // namespace swlab::io
