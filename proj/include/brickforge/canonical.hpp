#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brickforge/multigraph.hpp"

namespace brickforge {

enum class CanonMode { WithMultiplicity, SimpleUnderlying };

// Isomorphism-invariant encoding of a multigraph: the lexicographically
// smallest upper-triangle adjacency code over all vertex orderings. In
// simple-underlying mode multiplicities are clamped to 1.
struct CanonicalForm {
  int n = 0;
  CanonMode mode = CanonMode::WithMultiplicity;
  std::vector<std::uint8_t> code;

  bool operator==(const CanonicalForm& o) const {
    return n == o.n && mode == o.mode && code == o.code;
  }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    if (mode != o.mode) return mode < o.mode;
    return code < o.code;
  }

  std::string key() const;  // hex string, usable as a map key / catalog hash
};

CanonicalForm canonical_form(const Multigraph& g, CanonMode mode);  // TooLarge above 16 vertices

bool isomorphic(const Multigraph& a, const Multigraph& b, CanonMode mode);

// Relabels vertices to 0..n-1 following the canonical order (representative
// graph with the canonical adjacency). Edge ids are renumbered 0..m-1.
Multigraph canonical_representative(const Multigraph& g, CanonMode mode);

}  // namespace brickforge
