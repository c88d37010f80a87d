#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqm/quiver.hpp"

namespace cqm {

/// Byte string identifying a coloured quiver up to colour- and
/// multiplicity-preserving isomorphism.
using CanonicalForm = std::string;

struct CanonicalLabelling {
  CanonicalForm form;
  /// perm[v] is the canonical label of vertex v.
  std::vector<Vertex> perm;
  /// Number of colour-preserving automorphisms.
  std::uint64_t automorphisms = 1;
};

/// Exact canonical labelling: colour refinement of vertex invariants, then an
/// exhaustive branch-and-bound over the labellings compatible with the
/// refined cells, keeping the lexicographically smallest adjacency code.
CanonicalLabelling canonical_labelling(const ColouredQuiver& q);

CanonicalForm canonical_form(const ColouredQuiver& q);

/// q relabelled by its canonical labelling.
ColouredQuiver canonical_representative(const ColouredQuiver& q);

/// Inverse of canonical_form.
ColouredQuiver quiver_from_form(const CanonicalForm& form);

bool isomorphic(const ColouredQuiver& a, const ColouredQuiver& b);

/// Hex rendering for reports.
std::string form_to_hex(const CanonicalForm& form);

}  // namespace cqm
