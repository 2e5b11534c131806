#pragma once

#include <cstdint>
#include <vector>

namespace fincat {

/// GF(p^k) with elements encoded as base-p digit vectors of a polynomial
/// basis (element 0 is zero, element 1 is one). Multiplication goes through
/// log/antilog tables over a primitive element.
class FiniteField {
 public:
  /// Throws InvalidSpec unless order is a prime power in [2, 256].
  explicit FiniteField(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * order_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// A fixed generator of the multiplicative group.
  std::uint32_t primitive() const { return antilog_[1]; }

 private:
  std::uint32_t order_, p_, k_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
};

}  // namespace fincat
