#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "f2lie/lie_algebra.hpp"
#include "f2lie/module.hpp"
#include "f2lie/subspace.hpp"

namespace f2lie {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Node and wall-clock limits for backtracking searches. Zero seconds means no limit.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 0.0;
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b);
  void tick();
  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

ColMatrix compose(std::span<const Vec> a, std::span<const Vec> b);  // a after b
std::optional<ColMatrix> invert(std::span<const Vec> m);
bool is_identity(std::span<const Vec> m);

// Base and strong generating set for a group of invertible matrices acting on
// GF(2)^n, built by the deterministic Schreier-Sims algorithm.
class StabChain {
 public:
  explicit StabChain(std::size_t n) : n_(n) {}

  bool contains(const ColMatrix& g) const;
  // Adds g; returns false when g was already a member.
  bool add(const ColMatrix& g);
  // Exact group order; throws std::overflow_error beyond 2^64 - 1.
  std::uint64_t order() const;
  std::size_t base_length() const { return levels_.size(); }

 private:
  struct Level {
    Vec base = 0;
    std::vector<std::size_t> gens;
    // point -> (index into strong_ or npos for the base, predecessor)
    std::unordered_map<Vec, std::pair<std::size_t, Vec>> orbit;
    std::vector<Vec> points;
  };

  std::pair<ColMatrix, std::size_t> sift(ColMatrix g, std::size_t from) const;
  ColMatrix transversal(const Level& lv, Vec p) const;
  ColMatrix inverse_transversal_times(const Level& lv, Vec p, ColMatrix g) const;
  void rebuild_orbit(std::size_t l);
  void add_strong(const ColMatrix& h, std::size_t first, std::size_t last);
  void complete();

  std::size_t n_;
  std::vector<ColMatrix> strong_;
  std::vector<ColMatrix> strong_inv_;
  std::vector<Level> levels_;
};

// Subgroup of GL(n,2) given by generators (column packed).
class MatGroup {
 public:
  MatGroup() : MatGroup(0, {}) {}
  MatGroup(std::size_t n, std::vector<ColMatrix> gens);
  static MatGroup trivial(std::size_t n) { return MatGroup(n, {}); }

  std::size_t dim() const { return n_; }
  const std::vector<ColMatrix>& generators() const { return gens_; }
  std::uint64_t order() const { return chain_->order(); }
  bool contains(const ColMatrix& g) const { return chain_->contains(g); }

 private:
  std::size_t n_;
  std::vector<ColMatrix> gens_;
  std::shared_ptr<const StabChain> chain_;
};

// Orbit of a subspace with a Schreier tree rooted at the canonical (least) member.
struct OrbitRecord {
  Subspace representative;
  std::vector<Subspace> members;  // members[0] == representative
  std::vector<std::size_t> parent;  // BFS parent index (self for the root)
  std::vector<std::size_t> via;  // generator index used to reach the member
  std::size_t size() const { return members.size(); }
  // Group element mapping the representative to members[index].
  ColMatrix transversal(const MatGroup& a, std::size_t index) const;
  std::optional<std::size_t> index_of(const Subspace& s) const;

  std::unordered_map<Subspace, std::size_t, SubspaceHash> lookup;
};

bool is_automorphism(const LieAlgebra& l, std::span<const Vec> g);
bool is_automorphism(const LieAlgebra& l, const BitMatrix& g);
// g maps a's basis into b and transports brackets exactly.
bool is_isomorphism(const LieAlgebra& a, const LieAlgebra& b, std::span<const Vec> g);

MatGroup automorphism_group(const LieAlgebra& l, const Budget& budget = {});
// An isomorphism a -> b as column-packed matrix, or nullopt when none exists.
std::optional<ColMatrix> find_isomorphism(const LieAlgebra& a, const LieAlgebra& b,
                                          const Budget& budget = {});

// Line orbits ordered by representative; representatives are least members.
std::vector<OrbitRecord> orbits_on_lines(const MatGroup& a);
OrbitRecord subspace_orbit(const MatGroup& a, const Subspace& u,
                           std::size_t limit = 20'000'000);
std::pair<OrbitRecord, MatGroup> orbit_and_stabilizer(const MatGroup& a, const Subspace& u,
                                                      std::size_t limit = 20'000'000);
// Canonical (least) member of the orbit of u.
Subspace canonical_in_orbit(const MatGroup& a, const Subspace& u,
                            std::size_t limit = 20'000'000);
std::uint64_t group_order(const MatGroup& a);

// Orbits of a group on a set of vectors closed under it; each orbit sorted
// with its least element (coordinate 0 most significant) first.
std::vector<std::vector<Vec>> vector_orbits(std::span<const ColMatrix> gens,
                                            std::span<const Vec> points);

}  // namespace f2lie
