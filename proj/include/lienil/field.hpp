#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lienil {

// Field elements are handled by canonical index in the hot paths:
// index = sum coeffs[i] * p^i, coefficients low degree first.
using Scalar = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxFieldOrder = 1u << 16;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k). For k > 1 the modulus is the lexicographically smallest monic
/// irreducible polynomial of degree k, comparing coefficients low degree
/// first. Immutable after construction.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t k, std::uint64_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  // Monic modulus, low degree first, length k + 1. For k == 1 this is x.
  const std::vector<Scalar>& modulus() const { return modulus_; }
  std::string name() const;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }

  Scalar add(Scalar a, Scalar b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    if (k_ == 1) return (a + b) % p_;
    return add_slow(a, b);
  }
  Scalar neg(Scalar a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_slow(a);
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (k_ == 1) return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
    return mul_slow(a, b);
  }
  // Throws InvalidArgument for a == 0.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;

  // Image of an integer in the prime subfield.
  Scalar from_integer(long long n) const;
  std::vector<Scalar> coefficients(Scalar a) const;
  Scalar from_coefficients(std::span<const Scalar> coeffs) const;
  bool contains(Scalar a) const { return a < q_; }
  std::string to_string(Scalar a) const;

  // Smallest d > 0 with a^d = 1; a must be nonzero.
  std::uint64_t multiplicative_order(Scalar a) const;

  bool operator==(const Field& other) const { return p_ == other.p_ && k_ == other.k_; }

 private:
  Scalar add_slow(Scalar a, Scalar b) const;
  Scalar neg_slow(Scalar a) const;
  Scalar mul_slow(Scalar a, Scalar b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<Scalar> modulus_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<Scalar> inv_table_;
};

FieldPtr make_field(std::uint32_t p, std::uint32_t k,
                    std::uint64_t max_order = kDefaultMaxFieldOrder);
// Parses "p^k" (or a bare prime "p").
FieldPtr parse_field(std::string_view text, std::uint64_t max_order = kDefaultMaxFieldOrder);
// The field with q elements; q must be a prime power.
FieldPtr field_of_order(std::uint64_t q, std::uint64_t max_order = kDefaultMaxFieldOrder);

bool is_prime(std::uint64_t n);

// Polynomials over GF(p), low degree first, used for modulus search.
namespace poly {
bool is_irreducible(std::span<const Scalar> monic, std::uint32_t p);
std::vector<Scalar> smallest_irreducible(std::uint32_t p, std::uint32_t k);
}  // namespace poly

/// Value type carrying its field; arithmetic across fields throws MismatchError.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Scalar index);

  const FieldPtr& field() const { return field_; }
  Scalar index() const { return index_; }
  std::vector<Scalar> coefficients() const { return field_->coefficients(index_); }
  bool is_zero() const { return index_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_->to_string(index_); }

 private:
  const Field& same_field(const FieldElement& o) const;

  FieldPtr field_;
  Scalar index_;
};

// All q elements in canonical index order; index 0 first.
std::vector<FieldElement> enumerate(const FieldPtr& field);

}  // namespace lienil
