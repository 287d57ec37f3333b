#pragma once

// Pure abstract simplicial complexes: the underlying complex of a fan, star,
// link, suspension, face counts and the combinatorial checks around the edge
// e1d3 of the smooth Barnette refinement.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "toricfan/fan.hpp"

namespace toricfan {

class SimplicialComplex {
 public:
  /// Facets are given as vertex-index lists; they are stored sorted. All
  /// facets must have the same size, none may repeat, and every vertex must
  /// occur in some facet (a lone empty facet is allowed: the complex {∅}).
  SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<Face> facets);

  /// Builds from facets given by vertex labels; vertices are numbered in
  /// order of first appearance.
  static SimplicialComplex from_labels(const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  /// Dimension of the facets (facet size - 1).
  int dimension() const noexcept;

  std::size_t vertex_index(const std::string& label) const;  // throws MissingLabel
  bool has_vertex(const std::string& label) const;
  Face face_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Face& face) const;

  bool has_face(const Face& face) const;
  bool has_facet(const std::vector<std::string>& labels) const;

  /// Facets as sorted label lists, for label-preserving comparison.
  std::set<std::vector<std::string>> facet_label_sets() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facet_label_sets() == b.facet_label_sets();
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
};

SimplicialComplex underlying_complex(const Fan& fan);

/// Subcomplex generated by the facets containing face. Throws FaceNotPresent.
SimplicialComplex star(const SimplicialComplex& c, const Face& face);
/// {tau \ face : tau a facet containing face}. Throws FaceNotPresent.
SimplicialComplex link(const SimplicialComplex& c, const Face& face);

/// Joins every facet with new apices "N" and "S".
SimplicialComplex suspension(const SimplicialComplex& c);

/// Stellar subdivision of the complex at a face: each facet tau containing
/// the face becomes (tau - {r}) + {new vertex} for every r in the face.
SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& face, const std::string& label);

struct FVector {
  /// counts[i] = number of i-dimensional faces.
  std::vector<std::size_t> counts;

  long long euler_characteristic() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const SimplicialComplex& c);

struct PseudomanifoldReport {
  std::size_t ridge_count = 0;
  /// Ridges not contained in exactly two facets.
  std::vector<Face> bad_ridges;
  bool ridges_ok = false;
  bool connected = false;
  long long euler_characteristic = 0;
  long long expected_euler = 0;
  bool euler_ok = false;
  bool passed = false;
};

/// Necessary conditions for being a sphere: every ridge in two facets,
/// connected dual graph, Euler characteristic 1 + (-1)^d.
PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& c);

struct ObstructionFact {
  std::string name;
  bool passed = false;
  std::string witness;
  std::vector<std::string> discrepancies;
};

struct ObstructionReport {
  std::vector<ObstructionFact> facts;
  std::vector<std::vector<std::string>> star_facets;  // computed st(e1d3)
  std::vector<std::pair<std::string, std::string>> link_edges;
  bool verdict = false;
};

/// Purely combinatorial facts about the edge e1d3 and the facets
/// d1e2e3e4, d1d2e3e4 of the smooth Barnette refinement:
///   1. both are facets and meet exactly in the triangle d1e3e4;
///   2. c1 is a vertex of neither;
///   3. the star of e1d3 has exactly six facets (compared against the
///      reference listing, which is reported, not enforced);
///   4. the link of e1d3 is the 6-cycle d2-e3-c1-d1-e2-e4-d2.
/// Throws MissingLabel when one of the required vertices is absent.
ObstructionReport verify_barnette_obstruction(const SimplicialComplex& c);

/// The six facets listed for st(e1d3) in the reference write-up, verbatim.
const std::vector<std::vector<std::string>>& reference_star_listing();

}  // namespace toricfan
