#include "fincat/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fincat::kernels {

Execution default_execution() {
#ifdef _OPENMP
  return Execution::parallel;
#else
  return Execution::serial;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Scan<TripleSite> scan_associativity(const FiniteCategory& c, std::size_t limit, Execution exec) {
  const std::size_t n = c.object_count();
  return detail::over_objects<TripleSite>(n, limit, exec, [&](ObjId w) {
    Scan<TripleSite> local;
    for (ObjId x = 0; x < n; ++x) {
      const HomRange fs = c.hom(w, x);
      if (fs.empty()) continue;
      for (ObjId y = 0; y < n; ++y) {
        const BlockView gf_view = c.block(w, x, y);
        if (gf_view.g_range.empty()) continue;
        for (ObjId z = 0; z < n; ++z) {
          const BlockView h_gf = c.block(w, y, z);
          if (h_gf.g_range.empty()) continue;
          const BlockView hg_view = c.block(x, y, z);
          const BlockView hg_f = c.block(w, x, z);
          for (std::uint32_t fi = 0; fi < fs.size(); ++fi)
            for (std::uint32_t gi = 0; gi < gf_view.g_range.size(); ++gi) {
              const std::uint32_t gf = gf_view.compose_local(gi, fi) - gf_view.out_range.first();
              for (std::uint32_t hi = 0; hi < h_gf.g_range.size(); ++hi) {
                const std::uint32_t hg = hg_view.compose_local(hi, gi) - hg_view.out_range.first();
                if (h_gf.compose_local(hi, gf) != hg_f.compose_local(hg, fi)) {
                  ++local.count;
                  if (local.sites.size() < limit)
                    local.sites.push_back({h_gf.g_range[hi], gf_view.g_range[gi], fs[fi]});
                }
              }
            }
        }
      }
    }
    return local;
  });
}

}  // namespace fincat::kernels
