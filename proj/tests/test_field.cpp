#include <doctest.h>

#include <algorithm>
#include <random>

#include "lienil/error.hpp"
#include "lienil/field.hpp"

using namespace lienil;

namespace {

// Polynomial product over GF(p), low degree first.
std::vector<Scalar> poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b, std::uint32_t p) {
  std::vector<Scalar> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

std::vector<std::vector<Scalar>> monic_of_degree(std::uint32_t p, std::uint32_t d) {
  std::vector<std::vector<Scalar>> out;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<Scalar> c(d + 1, 0);
    auto m = n;
    for (std::uint32_t i = 0; i < d; ++i, m /= p) c[i] = static_cast<Scalar>(m % p);
    c[d] = 1;
    out.push_back(c);
  }
  return out;
}

// No product of two monic factors of positive degree equals f.
bool irreducible_by_products(const std::vector<Scalar>& f, std::uint32_t p) {
  const auto k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d)
    for (const auto& a : monic_of_degree(p, d))
      for (const auto& b : monic_of_degree(p, k - d))
        if (poly_mul(a, b, p) == f) return false;
  return true;
}

void check_axioms(const Field& f) {
  const Scalar q = f.order();
  for (Scalar a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (Scalar b = 0; b < q; ++b) {
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(a, b) < q);
      if (a != 0 && b != 0) REQUIRE(f.mul(a, b) != 0);
      for (Scalar c = 0; c < q; ++c) {
        REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("moduli are the smallest irreducibles") {
  CHECK(make_field(2, 2)->modulus() == std::vector<Scalar>{1, 1, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<Scalar>{1, 0, 1});
  CHECK(make_field(2, 3)->modulus() == std::vector<Scalar>{1, 0, 1, 1});
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    const auto f = make_field(p, k);
    CHECK(irreducible_by_products(f->modulus(), p));
    CHECK(poly::is_irreducible(f->modulus(), p));
    // Every smaller monic polynomial of degree k (low degree compared first) is reducible.
    auto candidates = monic_of_degree(p, k);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& g : candidates) {
      if (g == f->modulus()) break;
      CHECK(!irreducible_by_products(g, p));
    }
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {7u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}}) {
    CAPTURE(p);
    CAPTURE(k);
    check_axioms(*make_field(p, k));
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (auto [p, k] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 4u}, {5u, 1u}, {7u, 2u}}) {
    const auto f = make_field(p, k);
    bool found = false;
    for (Scalar a = 1; a < f->order() && !found; ++a) found = f->multiplicative_order(a) == f->order() - 1;
    CHECK(found);
    for (Scalar a = 1; a < f->order(); ++a) CHECK(f->pow(a, f->order() - 1) == 1);
  }
}

TEST_CASE("fields above the table threshold agree with a reference product") {
  const auto f = make_field(2, 9);
  REQUIRE(f->order() == 512);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Scalar> pick(0, f->order() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const Scalar a = pick(rng), b = pick(rng), c = pick(rng);
    auto prod = poly_mul(f->coefficients(a), f->coefficients(b), 2);
    const auto& m = f->modulus();
    for (std::size_t d = prod.size(); d-- > m.size() - 1;)
      if (prod[d] != 0)
        for (std::size_t i = 0; i < m.size(); ++i) prod[d - (m.size() - 1) + i] ^= m[i];
    prod.resize(m.size() - 1);
    CHECK(f->mul(a, b) == f->from_coefficients(prod));
    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
  }
  const auto big = make_field(257, 1);
  for (Scalar a = 1; a < 257; ++a) CHECK(big->mul(a, big->inv(a)) == 1);
}

TEST_CASE("parsing and naming") {
  CHECK(parse_field("5^1")->order() == 5);
  CHECK(parse_field("3")->order() == 3);
  CHECK(parse_field("2^2")->name() == "2^2");
  CHECK(field_of_order(9)->degree() == 2);
  CHECK(field_of_order(4)->characteristic() == 2);
  CHECK_THROWS_AS(parse_field("4^1"), InvalidArgument);
  CHECK_THROWS_AS(parse_field("x^2"), InvalidArgument);
  CHECK_THROWS_AS(parse_field("2^"), InvalidArgument);
  CHECK_THROWS_AS(field_of_order(6), InvalidArgument);
  CHECK_THROWS_AS(parse_field("2^17"), CapExceeded);
  CHECK(make_field(2, 2)->to_string(3) == "x+1");
  CHECK_THROWS(make_field(3, 1)->inv(0));
}

TEST_CASE("field elements") {
  const auto f4 = make_field(2, 2);
  const FieldElement a(f4, 2), b(f4, 3);
  CHECK((a * b).index() == f4->mul(2, 3));
  CHECK((a * a.inverse()).index() == 1);
  CHECK((a + a).is_zero());
  CHECK_THROWS_AS(a + FieldElement(make_field(3, 1), 1), MismatchError);
  CHECK_THROWS_AS(FieldElement(f4, 4), InvalidArgument);
  CHECK(enumerate(f4).size() == 4);
}
