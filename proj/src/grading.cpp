#include "f2lie/grading.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace f2lie {

bool is_idempotent(const LieAlgebra& l, Vec x) {
  const auto a = l.ad(x);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (cols::apply(a, a[j]) != a[j]) return false;
  return true;
}

namespace {

// Scans x = high | gray(g) for g in [0, 2^low_bits).
void scan_chunk(const LieAlgebra& l, Vec high, std::size_t low_bits, std::vector<Vec>& out) {
  const std::size_t n = l.dim();
  ColMatrix a = l.ad(high);
  auto test = [&](Vec x) {
    for (std::size_t j = 0; j < n; ++j)
      if (cols::apply(a, a[j]) != a[j]) return;
    out.push_back(x);
  };
  test(high);
  const std::uint64_t total = std::uint64_t{1} << low_bits;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto i = static_cast<std::size_t>(std::countr_zero(g));
    const auto& col = l.ad_basis(i);
    for (std::size_t j = 0; j < n; ++j) a[j] ^= col[j];
    test(high | (g ^ (g >> 1)));
  }
}

}  // namespace

std::vector<Idempotent> find_idempotents(const LieAlgebra& l, const IdempotentOptions& opt) {
  const std::size_t n = l.dim();
  if (n > opt.max_dim)
    throw std::length_error("find_idempotents: dimension " + std::to_string(n) +
                            " exceeds bound " + std::to_string(opt.max_dim));
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  std::size_t split = 0;
  while ((1u << split) < threads && split + 8 < n) ++split;
  const std::size_t low = n - split;
  const std::size_t chunks = std::size_t{1} << split;
  std::vector<std::vector<Vec>> found(chunks);
  if (chunks == 1) {
    scan_chunk(l, 0, low, found[0]);
  } else {
    std::vector<std::thread> pool;
    std::mutex m;
    std::size_t next = 0;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, chunks); ++t)
      pool.emplace_back([&]() {
        while (true) {
          std::size_t c;
          {
            std::lock_guard lock(m);
            if (next == chunks) return;
            c = next++;
          }
          scan_chunk(l, static_cast<Vec>(c) << low, low, found[c]);
        }
      });
    for (auto& th : pool) th.join();
  }
  std::vector<Vec> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  const Subspace z = center(l);
  std::vector<Idempotent> out;
  out.reserve(all.size());
  for (Vec x : all) out.push_back({x, z.contains(x)});
  return out;
}

Z2Grading grading_from_idempotent(const LieAlgebra& l, Vec x) {
  if (!is_idempotent(l, x)) throw std::invalid_argument("grading_from_idempotent: not an idempotent");
  if (center(l).contains(x))
    throw std::invalid_argument("grading_from_idempotent: central idempotent gives a degenerate grading");
  const auto a = l.ad(x);
  return {eigenspace_of_columns(a, false), eigenspace_of_columns(a, true)};
}

bool check_grading(const LieAlgebra& l, const Z2Grading& g, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (g.l0.dim() + g.l1.dim() != l.dim()) return fail("dimensions do not add up");
  if (!g.l0.intersection(g.l1).is_zero()) return fail("L0 and L1 intersect");
  const Subspace* part[2] = {&g.l0, &g.l1};
  for (int a = 0; a < 2; ++a)
    for (int b = a; b < 2; ++b) {
      const Subspace& target = *part[(a + b) % 2];
      for (Vec x : part[a]->basis())
        for (Vec y : part[b]->basis())
          if (!target.contains(l.bracket(x, y))) return fail("bracket leaves the graded part");
    }
  return true;
}

std::vector<IdempotentOrbit> idempotent_orbits(const LieAlgebra& l, const MatGroup& a,
                                               const std::vector<Idempotent>& idempotents) {
  std::vector<Vec> points;
  for (const auto& e : idempotents)
    if (!e.central) points.push_back(e.element);
  std::vector<IdempotentOrbit> out;
  for (const auto& orb : vector_orbits(a.generators(), points)) {
    const auto g = grading_from_idempotent(l, orb.front());
    out.push_back({orb.front(), orb.size(), g.l0.dim(), g.l1.dim()});
  }
  return out;
}

std::vector<SignatureCount> summarize(const std::vector<IdempotentOrbit>& orbits) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  for (const auto& o : orbits) ++counts[{o.d0, o.d1}];
  std::vector<SignatureCount> out;
  for (const auto& [sig, c] : counts) out.push_back({c, sig.first, sig.second});
  return out;
}

std::vector<SignatureCount> idempotent_orbit_summary(const LieAlgebra& l, const MatGroup& a) {
  return summarize(idempotent_orbits(l, a, find_idempotents(l)));
}

std::string format_summary(const std::vector<SignatureCount>& s) {
  std::string out;
  for (const auto& e : s) {
    if (!out.empty()) out += ", ";
    out += std::to_string(e.count) + " x [" + std::to_string(e.d0) + "," + std::to_string(e.d1) + "]";
  }
  return out;
}

}  // namespace f2lie
