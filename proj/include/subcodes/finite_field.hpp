#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subcodes {

/// A field element in its packed encoding: the integer whose base-p digits are
/// the coefficient vector of the residue polynomial (lowest degree first).
/// Tower fields nest: a GF(q^m) element has base-q digits that are themselves
/// GF(q) encodings, so the base-p digits are still the absolute coefficients.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldOrderCap = std::uint64_t{1} << 20;

// Orders up to this size get log/antilog tables for multiplication.
inline constexpr std::uint64_t kTableOrderLimit = std::uint64_t{1} << 16;

class FieldElement;

/// Polynomials over a field, coefficients lowest degree first.
using Poly = std::vector<Elem>;

/// GF(p^e), or GF(q^m) built on top of another field. Immutable; copies share
/// one implementation object.
class Field {
 public:
  /// GF(p^e). With no modulus the lexicographically-least monic irreducible
  /// polynomial is chosen (least when read as a base-p integer).
  static Field create(std::uint32_t p, unsigned e, std::optional<Poly> modulus = std::nullopt,
                      std::uint64_t cap = kDefaultFieldOrderCap);

  /// GF(q) for a prime power q with the default modulus.
  static Field of_order(std::uint64_t q, std::uint64_t cap = kDefaultFieldOrderCap);

  /// Degree-m extension of `base`; polynomial basis {1, b, ..., b^(m-1)} where
  /// b is the residue of x modulo an irreducible polynomial over `base`.
  static Field extension(const Field& base, unsigned m, std::optional<Poly> modulus = std::nullopt,
                         std::uint64_t cap = kDefaultFieldOrderCap);

  /// Parses "gf(16)" or "gf(2,4,poly=0b10011)".
  static Field parse(std::string_view literal);

  /// Literal accepted by parse() for fields built directly over GF(p).
  std::string literal() const;

  std::uint32_t characteristic() const;
  unsigned degree() const;           // over ground()
  unsigned absolute_degree() const;  // over GF(p)
  std::uint64_t order() const;
  std::uint64_t ground_order() const;
  bool is_prime_field() const;
  std::optional<Field> ground() const;
  const Poly& modulus() const;  // over ground(), monic, length degree()+1

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Residue of x, the polynomial-basis generator.
  Elem x() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t n) const;
  /// a^(ground order): the Frobenius map fixing ground().
  Elem frobenius(Elem a) const;

  /// Coordinates over ground() with respect to the polynomial basis.
  std::vector<Elem> expand(Elem a) const;
  Elem compress(std::span<const Elem> coords) const;
  /// Base-p digits, length absolute_degree().
  std::vector<std::uint32_t> coefficients(Elem a) const;

  bool contains(Elem a) const { return a < order(); }
  FieldElement element(Elem a) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// An element bundled with its field; mixing fields raises FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t n) const;

  bool operator==(const FieldElement& o) const;

 private:
  void require_same(const FieldElement& o) const;
  Field field_;
  Elem value_;
};

/// a^q, where q must be the order of a subfield in a's tower (GF(p) counts).
FieldElement frobenius(const FieldElement& a, std::uint64_t q);

/// Ground-field coordinates of an element of an extension field.
std::vector<FieldElement> expand(const FieldElement& a);
/// Inverse of expand(); coordinates must lie in ext.ground().
FieldElement compress(const Field& ext, std::span<const FieldElement> coords);

bool is_prime(std::uint64_t n);

namespace poly {

// Arithmetic on polynomials over `f`. Results are trimmed (no leading zeros);
// the zero polynomial is the empty vector.
Poly trim(Poly a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly mod(const Field& f, Poly a, const Poly& m);
Poly gcd(const Field& f, Poly a, Poly b);
Poly powmod(const Field& f, Poly base, std::uint64_t n, const Poly& m);
Elem evaluate(const Field& f, const Poly& a, Elem x);
int degree(const Poly& a);

/// Monic degree <= 4 test by exhaustive root and quadratic-factor scan.
bool is_irreducible_exhaustive(const Field& f, const Poly& a);
/// Ben-Or: gcd(a, x^(q^i) - x) = 1 for i = 1..deg/2.
bool is_irreducible_ben_or(const Field& f, const Poly& a);
/// Dispatches to the exhaustive scan for degree <= 4 and Ben-Or above.
bool is_irreducible(const Field& f, const Poly& a);

/// Lexicographically-least monic irreducible polynomial of the given degree.
Poly least_irreducible(const Field& f, unsigned degree);

}  // namespace poly

}  // namespace subcodes
