#include "f2lie/subalgebra.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "f2lie/module.hpp"

namespace f2lie {

namespace {

// Coordinates of L/U on the non-pivot units of U.
struct Quotient {
  const Subspace* u;
  std::vector<Vec> units;

  explicit Quotient(const Subspace& s) : u(&s), units(s.complement_units()) {}
  std::size_t dim() const { return units.size(); }
  Vec lift(Vec idx) const {
    Vec v = 0;
    for (std::size_t j = 0; j < units.size(); ++j)
      if (idx & unit(j)) v |= units[j];
    return v;
  }
  Vec index(Vec v) const {
    const Vec r = u->reduce(v);
    Vec idx = 0;
    for (std::size_t j = 0; j < units.size(); ++j)
      if (r & units[j]) idx |= unit(j);
    return idx;
  }
};

// Least coset of each orbit of a group stabilizing U on the nonzero cosets of L/U.
std::vector<Vec> coset_orbit_reps(const Quotient& q, const std::vector<ColMatrix>& gens) {
  const std::size_t m = q.dim();
  if (m > 26) throw std::length_error("coset orbits: quotient too large");
  const Vec total = unit(m);
  std::vector<bool> seen(total, false);
  std::vector<Vec> reps;
  std::vector<Vec> stack;
  for (Vec i = 1; i < total; ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    reps.push_back(q.lift(i));
    if (gens.empty()) continue;
    stack.assign(1, i);
    while (!stack.empty()) {
      const Vec c = stack.back();
      stack.pop_back();
      const Vec v = q.lift(c);
      for (const auto& g : gens) {
        const Vec j = q.index(cols::apply(g, v));
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  return reps;
}

Subspace extend(const LieAlgebra& l, const Subspace& u, Vec w) {
  Subspace s = u;
  s.insert(w);
  return closure(l, s);
}

// V covers U when every element of V outside U generates V together with U.
bool covers(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  std::vector<Vec> extra;
  Subspace acc = u;
  for (Vec b : v.basis())
    if (acc.insert(b)) extra.push_back(b);
  const std::size_t k = extra.size();
  if (k > 26) throw std::length_error("covers: gap too large");
  for (Vec i = 1; i < unit(k); ++i) {
    Vec x = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (i & unit(j)) x ^= extra[j];
    if (extend(l, u, x).dim() != v.dim()) return false;
  }
  return true;
}

class Clock {
 public:
  explicit Clock(double limit) : limit_(limit), start_(std::chrono::steady_clock::now()) {}
  bool expired() const {
    if (limit_ <= 0) return false;
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
    return el.count() > limit_;
  }

 private:
  double limit_;
  std::chrono::steady_clock::time_point start_;
};

std::string dim_counts(const std::vector<std::size_t>& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

}  // namespace

std::vector<std::size_t> SubalgebraLattice::orbit_counts() const {
  std::vector<std::size_t> c(parent.dim() + 1, 0);
  for (const auto& e : entries) ++c[e.rep.dim()];
  return c;
}

std::vector<std::size_t> SubalgebraLattice::maximal_counts() const {
  std::vector<std::size_t> c(parent.dim() + 1, 0);
  for (const auto& e : entries)
    if (e.maximal) ++c[e.rep.dim()];
  return c;
}

std::vector<std::uint64_t> SubalgebraLattice::weighted_counts() const {
  std::vector<std::uint64_t> c(parent.dim() + 1, 0);
  for (const auto& e : entries) c[e.rep.dim()] += e.orbit_size;
  return c;
}

std::optional<std::size_t> SubalgebraLattice::find(const Subspace& s) const {
  const auto it = member_of.find(s);
  if (it == member_of.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<Subspace>> submodules_over(const LieAlgebra& l, const Subspace& u,
                                                     std::size_t limit) {
  if (u.ambient() != l.dim()) throw std::invalid_argument("submodules_over: ambient mismatch");
  if (!is_subalgebra(l, u)) throw std::invalid_argument("submodules_over: U is not a subalgebra");
  const Quotient q(u);
  const std::size_t m = q.dim();
  std::vector<ColMatrix> gens;
  for (Vec b : u.basis()) {
    const auto ad = l.ad(b);
    ColMatrix g(m);
    for (std::size_t j = 0; j < m; ++j) g[j] = q.index(cols::apply(ad, q.units[j]));
    gens.push_back(std::move(g));
  }
  auto subs = enumerate_submodules(gens, m, limit);
  if (!subs) return std::nullopt;
  std::vector<Subspace> out;
  out.reserve(subs->size());
  for (const auto& s : *subs) {
    Subspace p = u;
    for (Vec b : s.basis()) p.insert(q.lift(b));
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubalgebraLattice all_subalgebras(const LieAlgebra& l, const MatGroup& a,
                                  const SubalgebraOptions& opt) {
  const std::size_t n = l.dim();
  if (a.dim() != n) throw std::invalid_argument("all_subalgebras: group dimension mismatch");
  for (const auto& g : a.generators())
    if (!is_automorphism(l, g))
      throw std::invalid_argument("all_subalgebras: group generator is not an automorphism");

  SubalgebraLattice lat{l, a, {}, {}, true, {}};
  const Clock clock(opt.max_seconds);
  std::vector<std::vector<std::size_t>> by_dim(n + 1);

  auto insert = [&](const Subspace& v) {
    if (lat.member_of.count(v) || v.dim() > opt.max_dim) return;
    auto orbit = subspace_orbit(a, v);
    if (lat.member_of.size() + orbit.size() > opt.member_limit)
      throw BudgetExceeded("subalgebra member limit exceeded (" +
                           std::to_string(opt.member_limit) + ")");
    const std::size_t idx = lat.entries.size();
    for (auto& m : orbit.members) lat.member_of.emplace(std::move(m), idx);
    lat.entries.push_back({std::move(orbit.representative), orbit.size(), false, false});
    by_dim[v.dim()].push_back(idx);
  };

  insert(Subspace(n));
  lat.entries[0].processed = true;
  try {
    for (const auto& orb : orbits_on_lines(a)) insert(orb.representative);
  } catch (const BudgetExceeded& e) {
    lat.complete = false;
    lat.truncation = e.what();
  }

  for (std::size_t d = 1; d < n && lat.complete; ++d) {
    auto& layer = by_dim[d];
    std::sort(layer.begin(), layer.end(),
              [&](std::size_t x, std::size_t y) { return lat.entries[x].rep < lat.entries[y].rep; });
    for (std::size_t pos = 0; pos < layer.size(); ++pos) {
      if (clock.expired()) {
        lat.complete = false;
        lat.truncation = "time budget exceeded";
        break;
      }
      const std::size_t idx = layer[pos];
      const Subspace u = lat.entries[idx].rep;
      bool maximal = true;
      try {
        std::optional<std::vector<Subspace>> pulls;
        if (n - d <= opt.submodule_codim) pulls = submodules_over(l, u, opt.submodule_limit);
        if (pulls) {
          for (const auto& p : *pulls) {
            if (p.dim() == d || !is_subalgebra(l, p)) continue;
            if (!p.is_full()) maximal = false;
            insert(p);
          }
        } else {
          const auto stab = orbit_and_stabilizer(a, u).second;
          const Quotient q(u);
          for (Vec w : coset_orbit_reps(q, stab.generators())) {
            const auto v = extend(l, u, w);
            if (!v.is_full()) maximal = false;
            insert(v);
          }
        }
      } catch (const BudgetExceeded& e) {
        lat.complete = false;
        lat.truncation = e.what();
        break;
      }
      lat.entries[idx].processed = true;
      lat.entries[idx].maximal = maximal;
    }
    if (opt.progress) opt.progress("dim " + std::to_string(d) + ": " + std::to_string(layer.size()) +
                                   " orbits, " + std::to_string(lat.member_of.size()) + " subalgebras");
  }
  if (n >= 1 && opt.max_dim >= n) insert(Subspace::full(n));
  for (auto& e : lat.entries)
    if (e.rep.is_full()) e.processed = true;
  if (opt.max_dim < n && lat.complete) {
    lat.complete = false;
    lat.truncation = "dimension cap " + std::to_string(opt.max_dim);
  }

  // renumber by (dim, rep)
  std::vector<std::size_t> order(lat.entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return lat.entries[x].rep < lat.entries[y].rep; });
  std::vector<std::size_t> rank(order.size());
  std::vector<LatticeEntry> sorted;
  sorted.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    sorted.push_back(std::move(lat.entries[order[i]]));
  }
  lat.entries = std::move(sorted);
  for (auto& [s, idx] : lat.member_of) idx = rank[idx];
  if (opt.progress) opt.progress("orbits by dim: " + dim_counts(lat.orbit_counts()));
  return lat;
}

std::vector<std::vector<Subspace>> brute_force_subalgebras(const LieAlgebra& l, std::size_t bound) {
  const std::size_t n = l.dim();
  if (n >= 63 || unit(n) > bound)
    throw std::length_error("brute_force_subalgebras: 2^" + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  std::vector<std::vector<Subspace>> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    for_each_subspace(n, k, [&](const Subspace& s) {
      if (is_subalgebra(l, s)) out[k].push_back(s);
      return true;
    });
  return out;
}

std::vector<HasseEdge> hasse_edges(const SubalgebraLattice& lat) {
  if (!lat.complete) throw std::logic_error("hasse_edges: lattice is incomplete");
  const auto& l = lat.parent;
  const auto& a = lat.group;
  std::map<std::size_t, OrbitRecord> records;
  auto record = [&](std::size_t j) -> const OrbitRecord& {
    auto it = records.find(j);
    if (it == records.end()) it = records.emplace(j, subspace_orbit(a, lat.entries[j].rep)).first;
    return it->second;
  };
  std::vector<HasseEdge> edges;
  for (std::size_t i = 0; i < lat.entries.size(); ++i) {
    const auto& u = lat.entries[i].rep;
    if (u.is_full()) continue;
    const auto stab = orbit_and_stabilizer(a, u).second;
    const Quotient q(u);
    std::set<Subspace> candidates;
    for (Vec w : coset_orbit_reps(q, stab.generators())) candidates.insert(extend(l, u, w));
    std::map<std::size_t, ColMatrix> found;
    for (const auto& v : candidates) {
      if (!covers(l, u, v)) continue;
      const std::size_t j = lat.member_of.at(v);
      if (found.count(j)) continue;
      const auto& rec = record(j);
      found.emplace(j, *invert(rec.transversal(a, *rec.index_of(v))));
    }
    for (auto& [j, g] : found) edges.push_back({i, j, std::move(g)});
  }
  return edges;
}

ExpandedHasse expanded_hasse(const SubalgebraLattice& lat, std::size_t vertex_limit) {
  if (!lat.complete) throw std::logic_error("expanded_hasse: lattice is incomplete");
  if (lat.member_of.size() > vertex_limit)
    throw std::length_error("expanded_hasse: " + std::to_string(lat.member_of.size()) +
                            " vertices exceed limit " + std::to_string(vertex_limit));
  ExpandedHasse h;
  for (const auto& [s, idx] : lat.member_of) h.vertices.push_back(s);
  std::sort(h.vertices.begin(), h.vertices.end());
  std::unordered_map<Subspace, std::size_t, SubspaceHash> pos;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    pos.emplace(h.vertices[i], i);
    h.orbit.push_back(lat.member_of.at(h.vertices[i]));
  }
  const auto& l = lat.parent;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    const auto& u = h.vertices[i];
    if (u.is_full()) continue;
    const Quotient q(u);
    std::set<Subspace> candidates;
    for (Vec c = 1; c < unit(q.dim()); ++c) candidates.insert(extend(l, u, q.lift(c)));
    std::vector<std::size_t> ups;
    for (const auto& v : candidates)
      if (covers(l, u, v)) ups.push_back(pos.at(v));
    std::sort(ups.begin(), ups.end());
    for (std::size_t j : ups) h.edges.emplace_back(i, j);
  }
  return h;
}

namespace {

std::string vertex_label(const Subspace& s) {
  std::string out = "dim " + std::to_string(s.dim());
  for (Vec b : s.basis()) out += "\\n" + format_vec(b, s.ambient());
  return out;
}

}  // namespace

std::string hasse_dot(const SubalgebraLattice& lat, const std::vector<HasseEdge>& edges) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < lat.entries.size(); ++i) {
    const auto& e = lat.entries[i];
    os << "  o" << i << " [label=\"" << vertex_label(e.rep) << "\\norbit " << e.orbit_size << "\"";
    if (e.maximal) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& e : edges) os << "  o" << e.lower << " -> o" << e.upper << ";\n";
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const SubalgebraLattice& lat, const ExpandedHasse& h) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (std::size_t v = 0; v < h.vertices.size(); ++v) clusters[h.orbit[v]].push_back(v);
  for (const auto& [orb, vs] : clusters) {
    os << "  subgraph cluster_" << orb << " {\n    label=\"orbit " << orb << "\";\n    style=rounded;\n";
    if (lat.entries[orb].maximal) os << "    color=red;\n";
    for (std::size_t v : vs) os << "    v" << v << " [label=\"" << vertex_label(h.vertices[v]) << "\"];\n";
    os << "  }\n";
  }
  for (const auto& [x, y] : h.edges) os << "  v" << x << " -> v" << y << ";\n";
  os << "}\n";
  return os.str();
}

IsoCertificate iso_test(const LieAlgebra& a, const LieAlgebra& b, const Budget& budget) {
  IsoCertificate cert;
  if (a.dim() != b.dim()) return cert;
  try {
    if (auto g = find_isomorphism(a, b, budget)) {
      if (!is_isomorphism(a, b, *g)) throw std::logic_error("iso_test: certificate failed verification");
      cert.matrix = BitMatrix::from_columns(*g, b.dim()).transpose();
    }
  } catch (const BudgetExceeded&) {
    cert.unknown = true;
  }
  return cert;
}

std::vector<Subspace> maximal_ideals(const LieAlgebra& l, const Subspace& v) {
  const auto m = restrict_to(l, v);
  const std::size_t d = m.dim();
  std::vector<ColMatrix> dual;
  for (const auto& g : m.ad_generators()) dual.push_back(transpose_cols(g, d));
  // lift coordinates of V back to L
  const auto vb = v.basis();
  auto lift = [&](Vec c) {
    Vec x = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (c & unit(j)) x ^= vb[j];
    return x;
  };
  std::vector<Subspace> out;
  for (const auto& n : minimal_submodules(dual, d)) {
    const auto ann = n.annihilator();
    std::vector<Vec> ib;
    for (Vec c : ann.basis()) ib.push_back(lift(c));
    out.push_back(Subspace::span(l.dim(), ib));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubquotientReport simple_subquotients(const LieAlgebra& l, const SubalgebraLattice& lat,
                                      const Identifier& identify) {
  if (!lat.complete) throw std::logic_error("simple_subquotients: lattice is incomplete");
  SubquotientReport rep;
  for (const auto& e : lat.entries) {
    const auto& v = e.rep;
    if (v.dim() < 3) continue;
    const auto vl = restrict_to(l, v);
    if (derived(vl).dim() < 3) continue;
    for (const auto& i : maximal_ideals(l, v)) {
      if (v.is_full() && i.is_zero()) continue;
      auto s = section(l, v, i);
      ++rep.sections;
      if (s.dim() < 3 || s.is_abelian() || !is_simple(s)) continue;
      if (auto id = identify(s)) {
        rep.ids.insert(*id);
        continue;
      }
      bool known = false;
      for (const auto& u : rep.unidentified)
        if (u.dim() == s.dim() && iso_test(u, s)) {
          known = true;
          break;
        }
      if (!known) rep.unidentified.push_back(std::move(s));
    }
  }
  return rep;
}

}  // namespace f2lie
