#include "fincat/finite_field.hpp"

#include <string>

#include "fincat/error.hpp"

namespace fincat {

namespace {

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& k) {
  if (q < 2) return false;
  for (p = 2; p * p <= q; ++p)
    if (q % p == 0) break;
  if (p * p > q) p = q;
  k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1;
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (auto& x : d) {
    x = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t order) : order_(order) {
  if (order > 256 || !prime_power(order, p_, k_))
    throw Error(Code::InvalidSpec, "field order " + std::to_string(order) + " is not a prime power up to 256");
  add_.resize(order_ * order_);
  neg_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    const auto da = digits(a, p_, k_);
    for (std::uint32_t b = 0; b < order_; ++b) {
      auto db = digits(b, p_, k_);
      for (std::uint32_t i = 0; i < k_; ++i) db[i] = (db[i] + da[i]) % p_;
      add_[a * order_ + b] = encode(db, p_);
    }
    auto dn = da;
    for (auto& x : dn) x = (p_ - x) % p_;
    neg_[a] = encode(dn, p_);
  }

  // search monic polynomials x^k + c(x) until x generates the multiplicative group
  const std::uint32_t units = order_ - 1;
  for (std::uint32_t c = 0; c < order_; ++c) {
    const auto low = digits(c, p_, k_);  // x^k = -low(x)
    auto times_x = [&](std::vector<std::uint32_t> v) {
      const std::uint32_t top = k_ == 0 ? 0 : v[k_ - 1];
      for (std::uint32_t i = k_ - 1; i > 0; --i) v[i] = v[i - 1];
      v[0] = 0;
      for (std::uint32_t i = 0; i < k_; ++i) v[i] = (v[i] + (p_ - low[i]) * top) % p_;
      return v;
    };
    std::vector<std::uint32_t> logs(order_, 0), anti(units + 1, 0);
    std::vector<std::uint32_t> v(k_, 0);
    v[0] = 1;
    bool primitive = true;
    std::vector<char> seen(order_, 0);
    for (std::uint32_t e = 0; e < units; ++e) {
      const std::uint32_t a = encode(v, p_);
      if (a == 0 || seen[a]) {
        primitive = false;
        break;
      }
      seen[a] = 1;
      logs[a] = e;
      anti[e] = a;
      if (k_ == 1) {
        // prime field: multiply by the candidate generator c instead of x
        v[0] = (v[0] * c) % p_;
      } else {
        v = times_x(v);
      }
    }
    if (!primitive) continue;
    anti[units] = anti[0];
    log_ = std::move(logs);
    antilog_ = std::move(anti);
    return;
  }
  throw Error(Code::InvalidSpec, "no primitive polynomial found");
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % (order_ - 1)];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(Code::InvalidSpec, "zero has no inverse");
  return antilog_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return antilog_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * e) % (order_ - 1))];
}

}  // namespace fincat
