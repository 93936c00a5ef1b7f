#include "f2lie/autgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <unordered_set>

namespace f2lie {

BudgetMeter::BudgetMeter(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

void BudgetMeter::tick() {
  ++nodes_;
  if (budget_.max_nodes && nodes_ > budget_.max_nodes)
    throw BudgetExceeded("search node budget exceeded (" + std::to_string(budget_.max_nodes) + ")");
  if (budget_.max_seconds > 0 && (nodes_ & 1023) == 0) {
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
    if (el.count() > budget_.max_seconds) throw BudgetExceeded("search time budget exceeded");
  }
}

ColMatrix compose(std::span<const Vec> a, std::span<const Vec> b) { return cols::multiply(a, b); }

std::optional<ColMatrix> invert(std::span<const Vec> m) {
  const auto inv = inverse(BitMatrix::from_columns(m, m.size()));
  if (!inv) return std::nullopt;
  return inv->columns();
}

bool is_identity(std::span<const Vec> m) {
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] != unit(j)) return false;
  return true;
}

// ---------------------------------------------------------------- StabChain

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

ColMatrix StabChain::transversal(const Level& lv, Vec p) const {
  std::vector<std::size_t> path;
  for (Vec cur = p; cur != lv.base;) {
    const auto& [gi, prev] = lv.orbit.at(cur);
    path.push_back(gi);
    cur = prev;
  }
  ColMatrix u = identity_cols(n_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = compose(strong_[*it], u);
  return u;
}

ColMatrix StabChain::inverse_transversal_times(const Level& lv, Vec p, ColMatrix g) const {
  for (Vec cur = p; cur != lv.base;) {
    const auto& [gi, prev] = lv.orbit.at(cur);
    g = compose(strong_inv_[gi], g);
    cur = prev;
  }
  return g;
}

std::pair<ColMatrix, std::size_t> StabChain::sift(ColMatrix g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Vec p = cols::apply(g, levels_[l].base);
    if (!levels_[l].orbit.count(p)) return {std::move(g), l};
    g = inverse_transversal_times(levels_[l], p, std::move(g));
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const ColMatrix& g) const {
  if (g.size() != n_) return false;
  auto [h, l] = sift(g, 0);
  return l == levels_.size() && is_identity(h);
}

void StabChain::rebuild_orbit(std::size_t l) {
  Level& lv = levels_[l];
  lv.orbit.clear();
  lv.points.clear();
  lv.orbit.emplace(lv.base, std::make_pair(kNone, lv.base));
  lv.points.push_back(lv.base);
  for (std::size_t head = 0; head < lv.points.size(); ++head) {
    const Vec p = lv.points[head];
    for (auto gi : lv.gens) {
      const Vec q = cols::apply(strong_[gi], p);
      if (lv.orbit.emplace(q, std::make_pair(gi, p)).second) lv.points.push_back(q);
    }
  }
}

void StabChain::add_strong(const ColMatrix& h, std::size_t first, std::size_t last) {
  const std::size_t gi = strong_.size();
  strong_.push_back(h);
  strong_inv_.push_back(*invert(h));
  for (std::size_t l = first; l <= last; ++l) {
    if (l == levels_.size()) {
      Level lv;
      for (std::size_t i = 0; i < n_; ++i)
        if (h[i] != unit(i)) {
          lv.base = unit(i);
          break;
        }
      levels_.push_back(std::move(lv));
    }
    levels_[l].gens.push_back(gi);
    rebuild_orbit(l);
  }
}

void StabChain::complete() {
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t l = i - 1;
    bool clean = true;
    const auto points = levels_[l].points;
    const auto gens = levels_[l].gens;
    for (std::size_t pi = 0; pi < points.size() && clean; ++pi) {
      const Vec p = points[pi];
      const ColMatrix up = transversal(levels_[l], p);
      for (auto gi : gens) {
        const ColMatrix sup = compose(strong_[gi], up);
        const Vec q = cols::apply(sup, levels_[l].base);
        ColMatrix sg = inverse_transversal_times(levels_[l], q, sup);
        if (is_identity(sg)) continue;
        auto [h, j] = sift(std::move(sg), l + 1);
        if (j == levels_.size() && is_identity(h)) continue;
        add_strong(h, l + 1, j);
        i = j + 1;
        clean = false;
        break;
      }
    }
    if (clean) --i;
  }
}

bool StabChain::add(const ColMatrix& g) {
  if (g.size() != n_) throw std::invalid_argument("StabChain::add: size mismatch");
  if (!invert(g)) throw std::invalid_argument("StabChain::add: singular matrix");
  auto [h, j] = sift(g, 0);
  if (j == levels_.size() && is_identity(h)) return false;
  add_strong(h, 0, j);
  complete();
  return true;
}

std::uint64_t StabChain::order() const {
  std::uint64_t o = 1;
  for (const auto& lv : levels_) {
    if (__builtin_mul_overflow(o, static_cast<std::uint64_t>(lv.points.size()), &o))
      throw std::overflow_error("group order exceeds 64 bits");
  }
  return o;
}

// ----------------------------------------------------------------- MatGroup

MatGroup::MatGroup(std::size_t n, std::vector<ColMatrix> gens) : n_(n), gens_(std::move(gens)) {
  auto chain = std::make_shared<StabChain>(n);
  for (const auto& g : gens_) {
    if (g.size() != n) throw std::invalid_argument("MatGroup: generator size mismatch");
    chain->add(g);
  }
  chain_ = std::move(chain);
}

std::uint64_t group_order(const MatGroup& a) { return a.order(); }

// ------------------------------------------------------------------- orbits

namespace {

struct BfsTree {
  std::vector<Subspace> members;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> lookup;
};

BfsTree bfs_orbit(const MatGroup& a, const Subspace& root, std::size_t limit) {
  BfsTree t;
  t.members.push_back(root);
  t.parent.push_back(0);
  t.via.push_back(kNone);
  t.lookup.emplace(root, 0);
  const auto& gens = a.generators();
  for (std::size_t head = 0; head < t.members.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      auto img = t.members[head].image(gens[gi]);
      if (t.lookup.count(img)) continue;
      if (t.members.size() >= limit)
        throw BudgetExceeded("orbit size limit exceeded (" + std::to_string(limit) + ")");
      t.lookup.emplace(img, t.members.size());
      t.members.push_back(std::move(img));
      t.parent.push_back(head);
      t.via.push_back(gi);
    }
  }
  return t;
}

ColMatrix tree_element(const MatGroup& a, const std::vector<std::size_t>& parent,
                       const std::vector<std::size_t>& via, std::size_t index) {
  std::vector<std::size_t> path;
  for (std::size_t cur = index; via[cur] != kNone; cur = parent[cur]) path.push_back(via[cur]);
  ColMatrix u = identity_cols(a.dim());
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = compose(a.generators()[*it], u);
  return u;
}

OrbitRecord make_record(BfsTree t) {
  OrbitRecord r;
  r.representative = t.members[0];
  r.members = std::move(t.members);
  r.parent = std::move(t.parent);
  r.via = std::move(t.via);
  r.lookup = std::move(t.lookup);
  return r;
}

}  // namespace

ColMatrix OrbitRecord::transversal(const MatGroup& a, std::size_t index) const {
  return tree_element(a, parent, via, index);
}

std::optional<std::size_t> OrbitRecord::index_of(const Subspace& s) const {
  auto it = lookup.find(s);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

OrbitRecord subspace_orbit(const MatGroup& a, const Subspace& u, std::size_t limit) {
  auto first = bfs_orbit(a, u, limit);
  const auto least = std::min_element(first.members.begin(), first.members.end());
  if (*least == u) return make_record(std::move(first));
  return make_record(bfs_orbit(a, *least, limit));
}

Subspace canonical_in_orbit(const MatGroup& a, const Subspace& u, std::size_t limit) {
  Subspace best = u;
  std::unordered_set<Subspace, SubspaceHash> seen{u};
  std::vector<Subspace> queue{u};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : a.generators()) {
      auto img = queue[head].image(g);
      if (!seen.insert(img).second) continue;
      if (seen.size() > limit)
        throw BudgetExceeded("orbit size limit exceeded (" + std::to_string(limit) + ")");
      if (img < best) best = img;
      queue.push_back(std::move(img));
    }
  }
  return best;
}

std::pair<OrbitRecord, MatGroup> orbit_and_stabilizer(const MatGroup& a, const Subspace& u,
                                                      std::size_t limit) {
  auto tree = bfs_orbit(a, u, limit);
  const std::uint64_t target = a.order() / tree.members.size();
  StabChain stab(a.dim());
  std::vector<ColMatrix> stab_gens;
  const auto& gens = a.generators();
  for (std::size_t m = 0; m < tree.members.size() && stab.order() < target; ++m) {
    ColMatrix tm;
    bool have_tm = false;
    for (std::size_t gi = 0; gi < gens.size() && stab.order() < target; ++gi) {
      const std::size_t m2 = tree.lookup.at(tree.members[m].image(gens[gi]));
      if (tree.parent[m2] == m && tree.via[m2] == gi) continue;
      if (!have_tm) {
        tm = tree_element(a, tree.parent, tree.via, m);
        have_tm = true;
      }
      auto sg = compose(gens[gi], tm);
      // left-multiply by the inverse of the tree element of m2
      for (std::size_t cur = m2; tree.via[cur] != kNone; cur = tree.parent[cur])
        sg = compose(*invert(gens[tree.via[cur]]), sg);
      if (is_identity(sg)) continue;
      if (stab.add(sg)) stab_gens.push_back(std::move(sg));
    }
  }
  if (stab.order() != target) throw std::logic_error("orbit_and_stabilizer: order mismatch");
  MatGroup b(a.dim(), std::move(stab_gens));
  const auto least = std::min_element(tree.members.begin(), tree.members.end());
  if (*least == u) return {make_record(std::move(tree)), std::move(b)};
  return {make_record(bfs_orbit(a, *least, limit)), std::move(b)};
}

std::vector<std::vector<Vec>> vector_orbits(std::span<const ColMatrix> gens,
                                            std::span<const Vec> points) {
  std::unordered_set<Vec> seen;
  std::vector<std::vector<Vec>> out;
  for (Vec p : points) {
    if (seen.count(p)) continue;
    std::vector<Vec> orbit{p};
    seen.insert(p);
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : gens) {
        const Vec q = cols::apply(g, orbit[head]);
        if (seen.insert(q).second) orbit.push_back(q);
      }
    std::sort(orbit.begin(), orbit.end(), lex_less);
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return lex_less(x.front(), y.front()); });
  return out;
}

std::vector<OrbitRecord> orbits_on_lines(const MatGroup& a) {
  const std::size_t n = a.dim();
  if (n > 26) throw std::length_error("orbits_on_lines: dimension too large");
  std::vector<Vec> points;
  points.reserve(unit(n) - 1);
  for (Vec v = 1; v < unit(n); ++v) points.push_back(v);
  std::vector<OrbitRecord> out;
  for (const auto& orb : vector_orbits(a.generators(), points))
    out.push_back(subspace_orbit(a, Subspace::span(n, {orb.front()})));
  return out;
}

// ------------------------------------------------------ automorphism search

bool is_isomorphism(const LieAlgebra& a, const LieAlgebra& b, std::span<const Vec> g) {
  const std::size_t n = a.dim();
  if (b.dim() != n || g.size() != n) return false;
  for (Vec c : g)
    if (c & ~low_mask(n)) return false;
  if (cols::rank(g) != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cols::apply(g, a.basis_bracket(i, j)) != b.bracket(g[i], g[j])) return false;
  return true;
}

bool is_automorphism(const LieAlgebra& l, std::span<const Vec> g) {
  if (g.size() != l.dim()) throw std::invalid_argument("is_automorphism: size mismatch");
  return is_isomorphism(l, l, g);
}

bool is_automorphism(const LieAlgebra& l, const BitMatrix& g) {
  if (g.rows() != l.dim() || g.cols() != l.dim())
    throw std::invalid_argument("is_automorphism: size mismatch");
  return is_automorphism(l, g.columns());
}

namespace {

constexpr std::size_t kMaxSearchDim = 24;
constexpr std::size_t kFullFingerprintDim = 16;

std::uint64_t fingerprint(const ColMatrix& a, bool full) {
  const std::size_t n = a.size();
  ColMatrix ai = a;
  for (std::size_t j = 0; j < n; ++j) ai[j] ^= unit(j);
  const auto a2 = cols::multiply(a, a);
  std::uint64_t f = cols::rank(a);
  f = (f << 7) | cols::rank(a2);
  f = (f << 7) | cols::rank(ai);
  if (full) {
    f = (f << 7) | cols::rank(cols::multiply(a2, a));
    f = (f << 7) | cols::rank(cols::multiply(ai, ai));
    ColMatrix t = a2;
    for (std::size_t j = 0; j < n; ++j) t[j] ^= ai[j];
    f = (f << 7) | cols::rank(t);
  }
  return f;
}

std::vector<std::uint64_t> all_fingerprints(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (n > kMaxSearchDim) throw std::length_error("automorphism search limited to dimension 24");
  const bool full = n <= kFullFingerprintDim;
  std::vector<std::uint64_t> fp(unit(n));
  ColMatrix a(n, 0);
  fp[0] = fingerprint(a, full);
  for (std::uint64_t g = 1; g < unit(n); ++g) {
    const auto i = static_cast<std::size_t>(std::countr_zero(g));
    for (std::size_t j = 0; j < n; ++j) a[j] ^= l.ad_basis(i)[j];
    fp[g ^ (g >> 1)] = fingerprint(a, full);
  }
  return fp;
}

struct Word {
  std::size_t gen = kNone;  // generator index, or kNone for a bracket
  std::size_t a = 0, b = 0;
};

struct Relation {
  std::size_t a = 0, b = 0;
  Vec coeff = 0;  // over word indices
};

struct Level {
  std::size_t first = 0, end = 0;  // words introduced at this level
  std::vector<Relation> relations;
};

// A generating sequence of the source algebra together with a word program
// spanning it and the bracket relations among the words.
struct Plan {
  std::vector<Vec> xs;
  std::vector<Word> words;
  std::vector<Vec> values;
  std::vector<Level> levels;
  std::vector<Vec> basis_coeff;  // unit(j) in word coordinates
};

class WordEchelon {
 public:
  // Returns coefficients of v over inserted words, or nullopt if independent.
  std::optional<Vec> express(Vec v) const {
    Vec c = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (v & rows_[r] & (~rows_[r] + 1)) {
        v ^= rows_[r];
        c ^= combos_[r];
      }
    if (v) return std::nullopt;
    return c;
  }
  void insert(Vec v, std::size_t word) {
    Vec c = unit(word);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (v & rows_[r] & (~rows_[r] + 1)) {
        v ^= rows_[r];
        c ^= combos_[r];
      }
    rows_.push_back(v);
    combos_.push_back(c);
  }

 private:
  std::vector<Vec> rows_, combos_;
};

Plan make_plan(const LieAlgebra& l, const std::vector<std::uint64_t>& fp) {
  const std::size_t n = l.dim();
  std::map<std::uint64_t, std::size_t> class_size;
  for (Vec v = 1; v < unit(n); ++v) ++class_size[fp[v]];
  Plan p;
  WordEchelon ech;
  Subspace span(n);
  while (!span.is_full()) {
    Vec best = 0;
    std::size_t best_size = kNone;
    for (Vec v = 1; v < unit(n); ++v) {
      if (span.contains(v)) continue;
      const std::size_t s = class_size[fp[v]];
      if (s < best_size) {
        best_size = s;
        best = v;
      }
    }
    Level lv;
    lv.first = p.words.size();
    const std::size_t gi = p.xs.size();
    p.xs.push_back(best);
    p.words.push_back({gi, 0, 0});
    p.values.push_back(best);
    ech.insert(best, p.words.size() - 1);
    span.insert(best);
    for (std::size_t a = lv.first; a < p.words.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) {
        const Vec v = l.bracket(p.values[a], p.values[b]);
        if (auto c = ech.express(v)) {
          lv.relations.push_back({a, b, *c});
        } else {
          p.words.push_back({kNone, a, b});
          p.values.push_back(v);
          ech.insert(v, p.words.size() - 1);
          span.insert(v);
        }
      }
    lv.end = p.words.size();
    p.levels.push_back(std::move(lv));
  }
  for (std::size_t j = 0; j < n; ++j) p.basis_coeff.push_back(*ech.express(unit(j)));
  return p;
}

class Search {
 public:
  Search(const LieAlgebra& src, const LieAlgebra& dst, const Plan& plan,
         const std::vector<std::uint64_t>& fsrc, const std::vector<std::uint64_t>& fdst,
         BudgetMeter& meter)
      : src_(src), dst_(dst), plan_(plan), fsrc_(fsrc), fdst_(fdst), meter_(meter) {
    const std::size_t n = dst.dim();
    std::map<std::uint64_t, std::vector<Vec>> by_class;
    for (Vec v = 1; v < unit(n); ++v) by_class[fdst[v]].push_back(v);
    for (Vec x : plan.xs) {
      auto it = by_class.find(fsrc[x]);
      candidates_.push_back(it == by_class.end() ? std::vector<Vec>{} : it->second);
    }
    images_.assign(plan.words.size(), 0);
    spans_.assign(plan.levels.size() + 1, Subspace(n));
    ys_.assign(plan.xs.size(), 0);
  }

  std::size_t levels() const { return plan_.xs.size(); }
  const std::vector<Vec>& candidates(std::size_t t) const { return candidates_[t]; }

  // Cheap invariants of y as image of x_t given the earlier images.
  bool compatible(std::size_t t, Vec y) const {
    const Vec x = plan_.xs[t];
    for (std::size_t s = 0; s < t; ++s) {
      if (fdst_[y ^ ys_[s]] != fsrc_[x ^ plan_.xs[s]]) return false;
      if (fdst_[dst_.bracket(y, ys_[s])] != fsrc_[src_.bracket(x, plan_.xs[s])]) return false;
    }
    return true;
  }

  // Sets y_t and checks that the word program stays a partial isomorphism.
  bool assign(std::size_t t, Vec y) {
    meter_.tick();
    if (!compatible(t, y)) return false;
    ys_[t] = y;
    const Level& lv = plan_.levels[t];
    Subspace span = spans_[t];
    for (std::size_t w = lv.first; w < lv.end; ++w) {
      const Word& wd = plan_.words[w];
      const Vec img = wd.gen != kNone ? ys_[wd.gen] : dst_.bracket(images_[wd.a], images_[wd.b]);
      if (!span.insert(img)) return false;
      images_[w] = img;
    }
    for (const auto& r : lv.relations) {
      Vec rhs = 0;
      for (Vec c = r.coeff; c; c &= c - 1) rhs ^= images_[static_cast<std::size_t>(std::countr_zero(c))];
      if (dst_.bracket(images_[r.a], images_[r.b]) != rhs) return false;
    }
    spans_[t + 1] = std::move(span);
    return true;
  }

  bool complete_from(std::size_t t) {
    if (t == levels()) return true;
    for (Vec y : candidates_[t])
      if (assign(t, y) && complete_from(t + 1)) return true;
    return false;
  }

  ColMatrix matrix() const {
    ColMatrix g(plan_.basis_coeff.size(), 0);
    for (std::size_t j = 0; j < g.size(); ++j)
      for (Vec c = plan_.basis_coeff[j]; c; c &= c - 1)
        g[j] ^= images_[static_cast<std::size_t>(std::countr_zero(c))];
    return g;
  }

 private:
  const LieAlgebra& src_;
  const LieAlgebra& dst_;
  const Plan& plan_;
  const std::vector<std::uint64_t>& fsrc_;
  const std::vector<std::uint64_t>& fdst_;
  BudgetMeter& meter_;
  std::vector<std::vector<Vec>> candidates_;
  std::vector<Vec> images_;
  std::vector<Subspace> spans_;
  std::vector<Vec> ys_;
};

}  // namespace

MatGroup automorphism_group(const LieAlgebra& l, const Budget& budget) {
  const std::size_t n = l.dim();
  if (n == 0) return MatGroup::trivial(0);
  const auto fp = all_fingerprints(l);
  const Plan plan = make_plan(l, fp);
  BudgetMeter meter(budget);
  Search search(l, l, plan, fp, fp, meter);
  std::vector<ColMatrix> gens;
  std::uint64_t order = 1;
  for (std::size_t i = search.levels(); i-- > 0;) {
    // identity on the prefix
    for (std::size_t t = 0; t < i; ++t)
      if (!search.assign(t, plan.xs[t])) throw std::logic_error("automorphism_group: identity rejected");
    const Vec x = plan.xs[i];
    std::unordered_set<Vec> orbit{x};
    std::vector<Vec> queue{x};
    auto grow = [&]() {
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& g : gens) {
          const Vec q = cols::apply(g, queue[head]);
          if (orbit.insert(q).second) queue.push_back(q);
        }
    };
    grow();
    for (Vec y : search.candidates(i)) {
      if (orbit.count(y)) continue;
      if (!search.assign(i, y) || !search.complete_from(i + 1)) continue;
      auto g = search.matrix();
      if (!is_automorphism(l, g)) throw std::logic_error("automorphism_group: bad certificate");
      gens.push_back(std::move(g));
      // re-scan the whole orbit with the new generator
      queue.assign(orbit.begin(), orbit.end());
      std::sort(queue.begin(), queue.end());
      grow();
    }
    if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(orbit.size()), &order))
      throw std::overflow_error("automorphism group order exceeds 64 bits");
  }
  MatGroup a(n, std::move(gens));
  if (a.order() != order) throw std::logic_error("automorphism_group: order mismatch");
  return a;
}

std::optional<ColMatrix> find_isomorphism(const LieAlgebra& a, const LieAlgebra& b,
                                          const Budget& budget) {
  if (a.dim() != b.dim()) return std::nullopt;
  const std::size_t n = a.dim();
  if (n == 0) return ColMatrix{};
  const auto fa = all_fingerprints(a);
  const auto fb = all_fingerprints(b);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const Plan plan = make_plan(a, fa);
  BudgetMeter meter(budget);
  Search search(a, b, plan, fa, fb, meter);
  if (!search.complete_from(0)) return std::nullopt;
  auto g = search.matrix();
  if (!is_isomorphism(a, b, g)) throw std::logic_error("find_isomorphism: bad certificate");
  return g;
}

}  // namespace f2lie
