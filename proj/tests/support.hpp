#pragma once

// Shared fixtures and hand-rolled generators for the tests.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "swlab/swlab.hpp"

namespace swlab::gen {

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline SimplicialComplex corpus_complex(const std::string& name) { return io::corpus(name).complex(); }

inline SimplicialComplex sphere(int n) {
  std::vector<std::vector<Vertex>> f;
  for (Vertex skip = 0; skip <= static_cast<Vertex>(n + 1); ++skip) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v <= static_cast<Vertex>(n + 1); ++v)
      if (v != skip) s.push_back(v);
    f.push_back(s);
  }
  return build_complex(f);
}

inline Cochain random_cochain(const SimplicialComplex& x, int d, std::mt19937_64& g) {
  return Cochain(x, d, BitVector::random(x.count(d), g));
}

inline Chain random_chain(const SimplicialComplex& x, int d, std::mt19937_64& g) {
  return Chain(x, d, BitVector::random(x.count(d), g));
}

/// δ of a random (d−1)-cochain, or a random cocycle built from the cohomology
/// basis plus a coboundary.
inline Cochain random_cocycle(const SimplicialComplex& x, const CohomologySummary& h, int d, std::mt19937_64& g) {
  Cochain c = h.from_coordinates(d, BitVector::random(h.betti(d), g));
  if (d > 0) c += coboundary(random_cochain(x, d - 1, g));
  return c;
}

inline VertexOrder shuffled_order(const SimplicialComplex& x, std::mt19937_64& g) {
  std::vector<Vertex> vs;
  for (const auto& s : x.skeleton(0)) vs.push_back(s[0]);
  std::shuffle(vs.begin(), vs.end(), g);
  return VertexOrder::from_sequence(x, vs);
}

/// Random pure 2-complex on a few vertices, not necessarily a manifold.
inline SimplicialComplex random_surface_patch(std::mt19937_64& g, Vertex vertices = 7, int facets = 6) {
  std::uniform_int_distribution<Vertex> pick(0, vertices - 1);
  std::vector<std::vector<Vertex>> f;
  while (static_cast<int>(f.size()) < facets) {
    Vertex a = pick(g), b = pick(g), c = pick(g);
    if (a == b || b == c || a == c) continue;
    f.push_back({a, b, c});
  }
  return build_complex(f);
}

inline const std::vector<std::string>& corpus_list() {
  static const std::vector<std::string> names = io::corpus_names();
  return names;
}

}  // namespace swlab::gen
