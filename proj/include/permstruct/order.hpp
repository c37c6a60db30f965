#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace permstruct {

// exact positive integer kept in factored form (prime -> exponent); group
// orders arise as products of small transversal lengths, so factoring stays
// cheap while products, exact division, gcd and comparisons remain exact at
// any magnitude
class Order {
public:
  Order() = default; // one

  static Order from_u64(std::uint64_t value); // value >= 1

  Order &operator*=(const Order &rhs);
  friend Order operator*(Order lhs, const Order &rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const Order &rhs) const { return factors_ == rhs.factors_; }
  bool operator!=(const Order &rhs) const { return factors_ != rhs.factors_; }

  bool is_one() const { return factors_.empty(); }
  bool divides(const Order &rhs) const;
  Order divided_by(const Order &rhs) const; // exact; throws otherwise
  Order gcd(const Order &rhs) const;
  bool coprime_to(const Order &rhs) const { return gcd(rhs).is_one(); }
  bool is_prime_power() const { return factors_.size() == 1; }
  bool is_power_of(std::uint64_t p) const;

  // -1 / 0 / +1
  int compare(const Order &rhs) const;
  bool operator<(const Order &rhs) const { return compare(rhs) < 0; }
  bool operator<=(const Order &rhs) const { return compare(rhs) <= 0; }

  std::vector<std::uint64_t> primes() const;
  const std::map<std::uint64_t, std::uint32_t> &factorization() const {
    return factors_;
  }

  bool fits_u64() const;
  std::uint64_t u64() const; // throws when the value exceeds 64 bits
  bool leq_u64(std::uint64_t bound) const;
  std::string str() const; // decimal at any size

private:
  // base 2^32 little-endian magnitude
  std::vector<std::uint32_t> limbs() const;

  std::map<std::uint64_t, std::uint32_t> factors_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace permstruct
