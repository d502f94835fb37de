#include "lienil/field.hpp"

#include <charconv>
#include <sstream>

#include "lienil/error.hpp"

namespace lienil {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace poly {
namespace {

using Poly = std::vector<Scalar>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly remainder(Poly a, std::span<const Scalar> b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const Scalar lead = a.back();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<Scalar>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(b[i])) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(std::span<const Scalar> monic, std::uint32_t p) {
  const std::size_t k = monic.size() - 1;
  if (k == 0) return false;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly divisor(d + 1);
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<Scalar>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (remainder(Poly(monic.begin(), monic.end()), divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<Scalar> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  // Lexicographic low degree first: c0 is the most significant digit of t.
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly candidate(k + 1);
    std::uint64_t rest = t;
    for (std::uint32_t i = k; i-- > 0;) {
      candidate[i] = static_cast<Scalar>(rest % p);
      rest /= p;
    }
    candidate[k] = 1;
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw Error("no irreducible polynomial found");
}

}  // namespace poly

Field::Field(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) : p_(p), k_(k) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order) {
      throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) +
                        " exceeds cap " + std::to_string(max_order));
    }
  }
  if (q > (std::uint64_t{1} << 16)) {
    throw CapExceeded("field order above 2^16 is not supported");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = poly::smallest_irreducible(p, k);
  }

  if (q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    mul_table_.resize(std::size_t{q_} * q_);
    neg_table_.resize(q_);
    for (Scalar a = 0; a < q_; ++a) {
      neg_table_[a] = static_cast<std::uint16_t>(k_ == 1 ? (a == 0 ? 0 : p_ - a) : neg_slow(a));
      for (Scalar b = 0; b < q_; ++b) {
        const Scalar s = k_ == 1 ? (a + b) % p_ : add_slow(a, b);
        const Scalar m = k_ == 1 ? static_cast<Scalar>((std::uint64_t{a} * b) % p_) : mul_slow(a, b);
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(s);
        mul_table_[a * q_ + b] = static_cast<std::uint16_t>(m);
      }
    }
  }
  inv_table_.assign(q_, 0);
  for (Scalar a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
}

std::string Field::name() const { return std::to_string(p_) + "^" + std::to_string(k_); }

Scalar Field::add_slow(Scalar a, Scalar b) const {
  Scalar result = 0;
  Scalar place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    result += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

Scalar Field::neg_slow(Scalar a) const {
  Scalar result = 0;
  Scalar place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const Scalar c = a % p_;
    result += (c == 0 ? 0 : p_ - c) * place;
    a /= p_;
    place *= p_;
  }
  return result;
}

Scalar Field::mul_slow(Scalar a, Scalar b) const {
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
  }
  // Reduce with the monic modulus: x^k = -sum modulus[i] x^i.
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - lead) * modulus_[i]) % p_;
    }
  }
  std::vector<Scalar> reduced(k_);
  for (std::uint32_t i = 0; i < k_; ++i) reduced[i] = static_cast<Scalar>(prod[i]);
  return from_coefficients(reduced);
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return inv_table_.empty() ? pow(a, q_ - 2) : inv_table_[a];
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1;
  Scalar base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar Field::from_integer(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

std::vector<Scalar> Field::coefficients(Scalar a) const {
  std::vector<Scalar> c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Scalar Field::from_coefficients(std::span<const Scalar> coeffs) const {
  Scalar result = 0;
  Scalar place = 1;
  for (std::uint32_t i = 0; i < k_ && i < coeffs.size(); ++i) {
    result += (coeffs[i] % p_) * place;
    place *= p_;
  }
  return result;
}

std::string Field::to_string(Scalar a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto c = coefficients(a);
  std::string out;
  for (std::uint32_t i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::uint64_t Field::multiplicative_order(Scalar a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t d = 1;
  Scalar x = a;
  while (x != 1) {
    x = mul(x, a);
    ++d;
  }
  return d;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  return std::make_shared<const Field>(p, k, max_order);
}

FieldPtr parse_field(std::string_view text, std::uint64_t max_order) {
  auto parse_uint = [&](std::string_view part) {
    std::uint32_t value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (ec != std::errc{} || ptr != end || part.empty()) {
      throw InvalidArgument("malformed field '" + std::string(text) + "', expected p^k");
    }
    return value;
  };
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return make_field(parse_uint(text), 1, max_order);
  return make_field(parse_uint(text.substr(0, caret)), parse_uint(text.substr(caret + 1)), max_order);
}

FieldPtr field_of_order(std::uint64_t q, std::uint64_t max_order) {
  if (q < 2) throw InvalidArgument("field order must be a prime power, got " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw InvalidArgument("field order must be a prime power, got " + std::to_string(q));
  if (q > max_order) throw CapExceeded("field of order " + std::to_string(q));
  return make_field(static_cast<std::uint32_t>(p), k, max_order);
}

FieldElement::FieldElement(FieldPtr field, Scalar index) : field_(std::move(field)), index_(index) {
  if (!field_->contains(index_)) throw InvalidArgument("field element index out of range");
}

const Field& FieldElement::same_field(const FieldElement& o) const {
  if (!(*field_ == *o.field_)) {
    throw MismatchError("field elements from GF(" + field_->name() + ") and GF(" + o.field_->name() + ")");
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same_field(o).add(index_, o.index_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same_field(o).sub(index_, o.index_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same_field(o).mul(index_, o.index_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, same_field(o).div(index_, o.index_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(index_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(index_)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return *field_ == *o.field_ && index_ == o.index_;
}

std::vector<FieldElement> enumerate(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (Scalar a = 0; a < field->order(); ++a) out.emplace_back(field, a);
  return out;
}

}  // namespace lienil
