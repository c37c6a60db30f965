#include "permstruct/order.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstruct/errors.hpp"

namespace permstruct {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Order Order::from_u64(std::uint64_t value) {
  if (value == 0)
    throw PreconditionError("Order: zero is not a group order");
  Order out;
  for (std::uint64_t p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    while (value % p == 0) {
      out.factors_[p] += 1;
      value /= p;
    }
  }
  if (value > 1)
    out.factors_[value] += 1;
  return out;
}

Order &Order::operator*=(const Order &rhs) {
  for (const auto &[p, e] : rhs.factors_)
    factors_[p] += e;
  return *this;
}

bool Order::divides(const Order &rhs) const {
  for (const auto &[p, e] : factors_) {
    auto it = rhs.factors_.find(p);
    if (it == rhs.factors_.end() || it->second < e)
      return false;
  }
  return true;
}

Order Order::divided_by(const Order &rhs) const {
  if (!rhs.divides(*this))
    throw PreconditionError("Order: inexact division");
  Order out;
  for (const auto &[p, e] : factors_) {
    auto it = rhs.factors_.find(p);
    std::uint32_t r = e - (it == rhs.factors_.end() ? 0 : it->second);
    if (r > 0)
      out.factors_[p] = r;
  }
  return out;
}

Order Order::gcd(const Order &rhs) const {
  Order out;
  for (const auto &[p, e] : factors_) {
    auto it = rhs.factors_.find(p);
    if (it != rhs.factors_.end())
      out.factors_[p] = std::min(e, it->second);
  }
  return out;
}

bool Order::is_power_of(std::uint64_t p) const {
  return factors_.empty() ||
         (factors_.size() == 1 && factors_.begin()->first == p);
}

std::vector<std::uint64_t> Order::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (const auto &[p, e] : factors_)
    out.push_back(p);
  return out;
}

bool Order::fits_u64() const {
  std::uint64_t acc = 1;
  for (const auto &[p, e] : factors_)
    for (std::uint32_t i = 0; i < e; ++i) {
      if (acc > UINT64_MAX / p)
        return false;
      acc *= p;
    }
  return true;
}

std::uint64_t Order::u64() const {
  std::uint64_t acc = 1;
  for (const auto &[p, e] : factors_)
    for (std::uint32_t i = 0; i < e; ++i) {
      if (acc > UINT64_MAX / p)
        throw Error("Order: value exceeds 64 bits");
      acc *= p;
    }
  return acc;
}

bool Order::leq_u64(std::uint64_t bound) const {
  std::uint64_t acc = 1;
  for (const auto &[p, e] : factors_)
    for (std::uint32_t i = 0; i < e; ++i) {
      if (acc > bound / p)
        return false;
      acc *= p;
      if (acc > bound)
        return false;
    }
  return true;
}

std::vector<std::uint32_t> Order::limbs() const {
  std::vector<std::uint32_t> mag{1};
  auto mul_small = [&mag](std::uint64_t m) {
    std::uint64_t carry = 0;
    for (auto &limb : mag) {
      std::uint64_t cur = std::uint64_t{limb} * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry != 0) {
      mag.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  };
  for (const auto &[p, e] : factors_)
    for (std::uint32_t i = 0; i < e; ++i)
      mul_small(p);
  return mag;
}

int Order::compare(const Order &rhs) const {
  if (factors_ == rhs.factors_)
    return 0;
  auto a = limbs();
  auto b = rhs.limbs();
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::string Order::str() const {
  auto mag = limbs();
  std::string out;
  // repeated division by 1e9
  while (!(mag.size() == 1 && mag[0] == 0)) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (mag.size() > 1 && mag.back() == 0)
      mag.pop_back();
    bool last = mag.size() == 1 && mag[0] == 0;
    std::string chunk = std::to_string(rem);
    if (!last)
      chunk = std::string(9 - chunk.size(), '0') + chunk;
    out = chunk + out;
  }
  return out.empty() ? "0" : out;
}

} // namespace permstruct
