#pragma once

// Exhaustive scans over a finite category. Each kernel has a serial reference
// path and an OpenMP path that splits the outermost object loop; both visit
// sites in the same order and return identical results.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fincat/category.hpp"

namespace fincat::kernels {

enum class Execution { serial, parallel };

/// parallel when built with OpenMP, serial otherwise.
Execution default_execution();
int thread_count();

template <class Site>
struct Scan {
  std::vector<Site> sites;  // first `limit` failing sites in visiting order
  std::uint64_t count = 0;  // total number of failing sites
  bool ok() const { return count == 0; }

  void merge(Scan&& other, std::size_t limit) {
    count += other.count;
    for (auto& s : other.sites) {
      if (sites.size() >= limit) break;
      sites.push_back(std::move(s));
    }
  }
};

struct PairSite {
  MorId g;
  MorId f;
  MorId gf;
};

struct TripleSite {
  MorId h;
  MorId g;
  MorId f;
};

namespace detail {

template <class Site, class PerObject>
Scan<Site> over_objects(std::size_t n, std::size_t limit, Execution exec, PerObject&& per_object) {
  if (exec == Execution::serial || n < 2) {
    Scan<Site> out;
    for (std::size_t x = 0; x < n; ++x) out.merge(per_object(static_cast<ObjId>(x)), limit);
    return out;
  }
  std::vector<Scan<Site>> partial(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t x = 0; x < count; ++x) partial[x] = per_object(static_cast<ObjId>(x));
  Scan<Site> out;
  for (auto& p : partial) out.merge(std::move(p), limit);
  return out;
}

}  // namespace detail

/// Visits every composable pair (g, f) ordered by (dom f, cod f, cod g, f, g).
/// `prepare(x, y, z, view)` builds per-triple state; `holds(state, g, f, gf)`
/// decides the law at one pair.
template <class Prepare, class Holds>
Scan<PairSite> scan_pairs(const FiniteCategory& c, Prepare&& prepare, Holds&& holds, std::size_t limit,
                          Execution exec) {
  const std::size_t n = c.object_count();
  return detail::over_objects<PairSite>(n, limit, exec, [&](ObjId x) {
    Scan<PairSite> local;
    for (ObjId y = 0; y < n; ++y) {
      const HomRange fs = c.hom(x, y);
      if (fs.empty()) continue;
      for (ObjId z = 0; z < n; ++z) {
        const BlockView view = c.block(x, y, z);
        if (view.g_range.empty()) continue;
        auto state = prepare(x, y, z, view);
        for (std::uint32_t fi = 0; fi < view.f_range.size(); ++fi) {
          for (std::uint32_t gi = 0; gi < view.g_range.size(); ++gi) {
            const MorId gf = view.compose_local(gi, fi);
            const MorId g = view.g_range[gi];
            const MorId f = view.f_range[fi];
            if (!holds(state, g, f, gf)) {
              ++local.count;
              if (local.sites.size() < limit) local.sites.push_back({g, f, gf});
            }
          }
        }
      }
    }
    return local;
  });
}

/// Associativity h . (g . f) == (h . g) . f over every composable triple.
Scan<TripleSite> scan_associativity(const FiniteCategory& c, std::size_t limit, Execution exec);

/// Visits morphisms 0..n-1 and collects those failing `holds`.
template <class Holds>
Scan<MorId> scan_morphisms(std::size_t n, Holds&& holds, std::size_t limit, Execution exec) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  return detail::over_objects<MorId>(chunks, limit, exec, [&](ObjId chunk) {
    Scan<MorId> local;
    const std::size_t end = std::min(n, (static_cast<std::size_t>(chunk) + 1) * kChunk);
    for (std::size_t m = static_cast<std::size_t>(chunk) * kChunk; m < end; ++m) {
      if (!holds(static_cast<MorId>(m))) {
        ++local.count;
        if (local.sites.size() < limit) local.sites.push_back(static_cast<MorId>(m));
      }
    }
    return local;
  });
}

/// results[i] = fn(i), computed in parallel when requested.
template <class R, class Fn>
std::vector<R> map_indices(std::size_t n, Fn&& fn, Execution exec) {
  std::vector<R> out(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) out[i] = fn(static_cast<std::size_t>(i));
  return out;
}

}  // namespace fincat::kernels
