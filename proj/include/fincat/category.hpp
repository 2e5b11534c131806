#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/error.hpp"

namespace fincat {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr MorId kNoMorphism = std::numeric_limits<MorId>::max();
inline constexpr ObjId kNoObject = std::numeric_limits<ObjId>::max();

/// A hom-set. Every hom-set of a FiniteCategory occupies a contiguous range of
/// morphism identifiers, so a hom-set is just (first, size).
class HomRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = MorId;
    using difference_type = std::ptrdiff_t;
    using pointer = const MorId*;
    using reference = MorId;

    iterator() = default;
    explicit iterator(MorId m) : m_(m) {}
    MorId operator*() const { return m_; }
    iterator& operator++() {
      ++m_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++m_;
      return tmp;
    }
    bool operator==(const iterator&) const = default;

   private:
    MorId m_ = 0;
  };

  HomRange() = default;
  HomRange(MorId first, std::uint32_t size) : first_(first), size_(size) {}

  MorId first() const { return first_; }
  std::uint32_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(MorId m) const { return m >= first_ && m - first_ < size_; }
  std::uint32_t local(MorId m) const { return m - first_; }
  MorId operator[](std::uint32_t i) const { return first_ + i; }
  iterator begin() const { return iterator(first_); }
  iterator end() const { return iterator(first_ + size_); }

 private:
  MorId first_ = 0;
  std::uint32_t size_ = 0;
};

/// Composition restricted to one object triple x -> y -> z. `table` holds the
/// local index (inside Hom(x, z)) of g . f for f in Hom(x, y), g in Hom(y, z).
struct BlockView {
  const std::uint32_t* table = nullptr;
  std::size_t stride_g = 0;
  std::size_t stride_f = 0;
  HomRange f_range;
  HomRange g_range;
  HomRange out_range;

  MorId compose_local(std::uint32_t gi, std::uint32_t fi) const {
    return out_range.first() + table[gi * stride_g + fi * stride_f];
  }
  MorId compose(MorId g, MorId f) const { return compose_local(g_range.local(g), f_range.local(f)); }
};

namespace detail {
struct CategoryData;
}

/// An explicitly presented finite category. Immutable and cheap to copy: the
/// value is a shared handle onto validated data.
///
/// Composition uses the convention compose(g, f) = "g after f", defined iff
/// cod(f) == dom(g).
class FiniteCategory {
 public:
  FiniteCategory();

  std::size_t object_count() const;
  std::size_t morphism_count() const;

  const std::string& object_name(ObjId x) const;
  std::string morphism_name(MorId m) const;
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  ObjId dom(MorId m) const;
  ObjId cod(MorId m) const;
  MorId identity(ObjId x) const;
  bool is_identity(MorId m) const { return identity(dom(m)) == m; }
  HomRange hom(ObjId x, ObjId y) const;

  /// g after f. Throws Error(TypeMismatch) if the pair is not composable.
  MorId compose(MorId g, MorId f) const;
  BlockView block(ObjId x, ObjId y, ObjId z) const;

  /// Two-sided inverse by exhaustive search of Hom(cod m, dom m).
  std::optional<MorId> inverse(MorId m) const;
  bool is_iso(MorId m) const { return inverse(m).has_value(); }

  /// Maximum hom-set size; 0 for the empty category.
  std::size_t max_hom_size() const;

  /// True iff both handles refer to the same underlying data.
  bool same_as(const FiniteCategory& other) const { return data_ == other.data_; }

  /// Structural (field-by-field) equality: names, typing, identities, and
  /// the full composition table.
  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

  // Provenance of derived categories.
  /// Non-null when this category was built as opposite(base).
  const FiniteCategory* opposite_of() const;
  /// Non-null when this category replicates hom-sets of a base category
  /// (full subcategories, Hermitian completions).
  const FiniteCategory* replica_base() const;
  /// For replicas: base object under x.
  ObjId replica_projection(ObjId x) const;
  /// For replicas: base morphism underlying m.
  MorId replica_morphism(MorId m) const;
  /// For replicas: the morphism over base morphism `b` from x to y.
  MorId replica_lift(MorId b, ObjId x, ObjId y) const;

 private:
  explicit FiniteCategory(std::shared_ptr<const detail::CategoryData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::CategoryData> data_;

  friend class CategoryBuilder;
  friend FiniteCategory opposite(const FiniteCategory& c);
  friend FiniteCategory replicate(const FiniteCategory& base, std::vector<ObjId> projection,
                                  std::vector<std::string> object_names);
};

/// Name-based raw input, as read from a document.
struct RawCategory {
  struct Morphism {
    std::string name;
    std::string dom;
    std::string cod;
  };
  struct Composite {
    std::string g;
    std::string f;
    std::string result;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  /// Optional explicit identity assignment (object, morphism). Objects without
  /// an entry use the morphism named "id_<object>" if one is declared.
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<Composite> compositions;
};

/// Index-based construction. Morphisms may be added in any order; build()
/// groups them into hom-set ranges (stable in insertion order) and reports
/// the final identifier of each added morphism through final_id().
class CategoryBuilder {
 public:
  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId dom, ObjId cod);
  void set_identity(ObjId x, MorId m);
  void set_composite(MorId g, MorId f, MorId result);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  /// Validates every category law; composites involving identities may be
  /// omitted and are filled in by the identity laws.
  Checked<FiniteCategory> build();
  MorId final_id(MorId provisional) const { return final_ids_.at(provisional); }

 private:
  struct Mor {
    std::string name;
    ObjId dom;
    ObjId cod;
  };
  struct Entry {
    MorId g;
    MorId f;
    MorId result;
  };
  std::vector<std::string> objects_;
  std::vector<Mor> morphisms_;
  std::vector<MorId> identities_;
  std::vector<Entry> composites_;
  std::vector<MorId> final_ids_;
};

Checked<FiniteCategory> validate_category(const RawCategory& raw);

/// Same identifiers, domain and codomain swapped, composition reversed.
/// opposite(opposite(c)) returns c itself.
FiniteCategory opposite(const FiniteCategory& c);

/// Category with objects `projection` (over base objects) and hom-sets copied
/// from the base: Hom(x, y) = Hom_base(p x, p y).
FiniteCategory replicate(const FiniteCategory& base, std::vector<ObjId> projection,
                         std::vector<std::string> object_names);

/// Full subcategory on the listed objects (kept in the given order).
FiniteCategory full_subcategory(const FiniteCategory& base, const std::vector<ObjId>& objects);

/// True iff `c` is opposite(base), by provenance or structurally.
bool is_opposite_of(const FiniteCategory& c, const FiniteCategory& base);

/// Same handle or structurally equal.
inline bool same_category(const FiniteCategory& a, const FiniteCategory& b) { return a.same_as(b) || a == b; }

}  // namespace fincat
