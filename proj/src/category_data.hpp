#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "fincat/category.hpp"

namespace fincat::detail {

struct TableComposition {
  // offset into `local` for the triple (x, y, z), indexed (x * n + y) * n + z
  std::vector<std::uint64_t> triple_offset;
  std::vector<std::uint32_t> local;
};

struct OppositeComposition {
  FiniteCategory base;
};

struct ReplicaComposition {
  FiniteCategory base;
  std::vector<ObjId> projection;
};

struct CategoryData {
  std::vector<std::string> object_names;
  std::unordered_map<std::string, ObjId> object_index;
  std::vector<HomRange> homs;  // x * n + y
  std::vector<ObjId> dom;
  std::vector<ObjId> cod;
  std::vector<MorId> identities;
  std::vector<std::string> morphism_names;  // empty for derived categories
  std::unordered_map<std::string, MorId> morphism_index;
  std::size_t max_hom = 0;
  std::variant<TableComposition, OppositeComposition, ReplicaComposition> composition;

  // opposite(c) hands back the same data while a copy is alive
  mutable std::mutex opposite_mutex;
  mutable std::weak_ptr<const CategoryData> opposite_cache;

  std::size_t n() const { return object_names.size(); }
  const HomRange& hom(ObjId x, ObjId y) const { return homs[static_cast<std::size_t>(x) * n() + y]; }
};

}  // namespace fincat::detail
