#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "f2lie/autgroup.hpp"
#include "f2lie/lie_algebra.hpp"
#include "f2lie/subspace.hpp"

namespace f2lie {

struct LatticeEntry {
  Subspace rep;  // least member of its orbit
  std::uint64_t orbit_size = 0;
  bool processed = false;
  bool maximal = false;
};

// Cover relation between orbit representatives; `element` maps entries[lower].rep
// into entries[upper].rep.
struct HasseEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  ColMatrix element;
};

struct SubalgebraOptions {
  // Try the quotient-submodule shortcut when dim(L/U) is at most this.
  std::size_t submodule_codim = 6;
  std::size_t submodule_limit = 256;
  // Subalgebras above this dimension are not recorded.
  std::size_t max_dim = 64;
  // Total number of stored orbit members.
  std::size_t member_limit = 20'000'000;
  double max_seconds = 0.0;
  std::function<void(const std::string&)> progress;
};

struct SubalgebraLattice {
  LieAlgebra parent;
  MatGroup group;
  std::vector<LatticeEntry> entries;  // by (dim, rep)
  // Every stored subalgebra mapped to the entry of its orbit.
  std::unordered_map<Subspace, std::size_t, SubspaceHash> member_of;
  bool complete = true;
  std::string truncation;

  std::vector<std::size_t> orbit_counts() const;  // index = dimension
  std::vector<std::size_t> maximal_counts() const;
  std::vector<std::uint64_t> weighted_counts() const;
  std::optional<std::size_t> find(const Subspace& s) const;
};

SubalgebraLattice all_subalgebras(const LieAlgebra& l, const MatGroup& a,
                                  const SubalgebraOptions& opt = {});

// Exhaustive filter over all subspaces; 2^dim(L) <= bound.
std::vector<std::vector<Subspace>> brute_force_subalgebras(const LieAlgebra& l,
                                                           std::size_t bound = 512);

// ad(U)-invariant subspaces of L containing U, or nullopt beyond limit.
std::optional<std::vector<Subspace>> submodules_over(const LieAlgebra& l, const Subspace& u,
                                                     std::size_t limit = 256);

std::vector<HasseEdge> hasse_edges(const SubalgebraLattice& lat);

// Cover pairs (lower, upper) among all stored subalgebras, listed in `vertices`.
struct ExpandedHasse {
  std::vector<Subspace> vertices;  // by (dim, subspace)
  std::vector<std::size_t> orbit;  // entry index per vertex
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};
ExpandedHasse expanded_hasse(const SubalgebraLattice& lat, std::size_t vertex_limit = 5000);

// Graphviz text. Expanded diagrams draw orbits as clusters.
std::string hasse_dot(const SubalgebraLattice& lat, const std::vector<HasseEdge>& edges);
std::string hasse_dot(const SubalgebraLattice& lat, const ExpandedHasse& h);

struct IsoCertificate {
  std::optional<BitMatrix> matrix;  // rows: images of the basis of the first algebra
  bool unknown = false;  // search budget exhausted
  explicit operator bool() const { return matrix.has_value(); }
};

IsoCertificate iso_test(const LieAlgebra& a, const LieAlgebra& b, const Budget& budget = {});

using Identifier = std::function<std::optional<std::string>(const LieAlgebra&)>;

struct SubquotientReport {
  std::set<std::string> ids;
  // Simple sections no identifier recognized, pairwise non-isomorphic.
  std::vector<LieAlgebra> unidentified;
  std::size_t sections = 0;
};

// Proper simple sections V/I over all representatives V.
SubquotientReport simple_subquotients(const LieAlgebra& l, const SubalgebraLattice& lat,
                                      const Identifier& identify);

// Maximal ideals of the subalgebra V (as subspaces of L).
std::vector<Subspace> maximal_ideals(const LieAlgebra& l, const Subspace& v);

}  // namespace f2lie
