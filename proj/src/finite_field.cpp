#include "subcodes/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "subcodes/error.hpp"

namespace subcodes {

struct Field::Impl {
  std::uint32_t p = 2;
  unsigned degree = 1;
  unsigned abs_degree = 1;
  std::uint64_t order = 2;
  std::uint64_t ground_order = 2;
  std::shared_ptr<const Impl> ground;  // null for GF(p)
  Poly modulus;
  bool default_modulus = true;
  // exp_table has 2(order-1) entries so log sums need no reduction.
  std::vector<Elem> exp_table;
  std::vector<std::uint32_t> log_table;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > cap / base) {
      throw Error(ErrorKind::FieldTooLarge, "field order " + std::to_string(base) + "^" +
                                                std::to_string(exp) + " exceeds cap " +
                                                std::to_string(cap));
    }
    r *= base;
  }
  if (r > cap) throw Error(ErrorKind::FieldTooLarge, "field order exceeds cap");
  return r;
}

std::uint64_t parse_integer(std::string_view s) {
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
    base = 2;
    s.remove_prefix(2);
  } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s.remove_prefix(2);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::string trim_ws(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

// --- raw arithmetic on Impl ------------------------------------------------

namespace {

using ImplPtr = std::shared_ptr<const Field::Impl>;

Elem add_digits(const Field::Impl& f, Elem a, Elem b) {
  if (f.p == 2) return a ^ b;
  Elem r = 0;
  Elem place = 1;
  for (unsigned i = 0; i < f.abs_degree; ++i) {
    const Elem da = a % f.p;
    const Elem db = b % f.p;
    r += ((da + db) % f.p) * place;
    a /= f.p;
    b /= f.p;
    place *= f.p;
  }
  return r;
}

Elem neg_digits(const Field::Impl& f, Elem a) {
  if (f.p == 2) return a;
  Elem r = 0;
  Elem place = 1;
  for (unsigned i = 0; i < f.abs_degree; ++i) {
    const Elem d = a % f.p;
    r += ((f.p - d) % f.p) * place;
    a /= f.p;
    place *= f.p;
  }
  return r;
}

}  // namespace

namespace {

Elem mul_impl(const Field::Impl& f, Elem a, Elem b);

// Polynomial-basis multiplication over the ground field, no tables.
Elem mul_slow(const Field::Impl& f, Elem a, Elem b) {
  if (!f.ground) {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % f.p);
  }
  const Field::Impl& g = *f.ground;
  const unsigned n = f.degree;
  std::vector<Elem> da(n), db(n);
  for (unsigned i = 0; i < n; ++i) {
    da[i] = static_cast<Elem>(a % f.ground_order);
    db[i] = static_cast<Elem>(b % f.ground_order);
    a = static_cast<Elem>(a / f.ground_order);
    b = static_cast<Elem>(b / f.ground_order);
  }
  std::vector<Elem> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = add_digits(g, prod[i + j], mul_impl(g, da[i], db[j]));
    }
  }
  // Reduce with the monic modulus: x^n = -(m_0 + ... + m_{n-1} x^{n-1}).
  for (std::size_t top = prod.size(); top-- > n;) {
    const Elem c = prod[top];
    if (c == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      const Elem t = mul_impl(g, c, f.modulus[j]);
      prod[top - n + j] = add_digits(g, prod[top - n + j], neg_digits(g, t));
    }
    prod[top] = 0;
  }
  Elem r = 0;
  for (unsigned i = n; i-- > 0;) {
    r = static_cast<Elem>(r * f.ground_order + prod[i]);
  }
  return r;
}

Elem mul_impl(const Field::Impl& f, Elem a, Elem b) {
  if (a == 0 || b == 0) return 0;
  if (!f.log_table.empty()) {
    return f.exp_table[f.log_table[a] + f.log_table[b]];
  }
  return mul_slow(f, a, b);
}

Elem pow_impl(const Field::Impl& f, Elem a, std::uint64_t n) {
  Elem result = 1;
  Elem base = a;
  while (n > 0) {
    if (n & 1) result = mul_impl(f, result, base);
    base = mul_impl(f, base, base);
    n >>= 1;
  }
  return result;
}

void build_tables(Field::Impl& f) {
  const std::uint64_t group = f.order - 1;
  const auto factors = prime_factors(group);
  Elem gen = 0;
  for (Elem g = 2; g < f.order; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow_impl(f, g, group / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  if (f.order == 2) gen = 1;
  std::vector<Elem> exp_table(2 * group);
  std::vector<std::uint32_t> log_table(f.order, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_table[i] = x;
    exp_table[i + group] = x;
    log_table[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(f, x, gen);
  }
  f.exp_table = std::move(exp_table);
  f.log_table = std::move(log_table);
}

std::shared_ptr<Field::Impl> make_prime(std::uint32_t p, std::uint64_t cap) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (p > cap) throw Error(ErrorKind::FieldTooLarge, "prime exceeds field order cap");
  auto impl = std::make_shared<Field::Impl>();
  impl->p = p;
  impl->degree = 1;
  impl->abs_degree = 1;
  impl->order = p;
  impl->ground_order = p;
  impl->modulus = {0, 1};
  impl->default_modulus = true;
  return impl;
}

}  // namespace

// --- Field ------------------------------------------------------------------

Field Field::create(std::uint32_t p, unsigned e, std::optional<Poly> modulus, std::uint64_t cap) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (e == 0) throw Error(ErrorKind::ParamViolation, "field degree must be positive");
  checked_power(p, e, cap);
  if (e == 1) {
    auto impl = make_prime(p, cap);
    if (modulus) {
      Poly m = *modulus;
      if (m.size() != 2 || m[1] != 1 || m[0] >= p) {
        throw Error(ErrorKind::ParamViolation, "modulus must be monic of degree 1");
      }
      impl->modulus = m;
      impl->default_modulus = m[0] == 0;
    }
    return Field(impl);
  }
  return extension(Field(make_prime(p, cap)), e, std::move(modulus), cap);
}

Field Field::of_order(std::uint64_t q, std::uint64_t cap) {
  if (q < 2) throw Error(ErrorKind::ParamViolation, "field order must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) {
    throw Error(ErrorKind::NonPrimeCharacteristic,
                std::to_string(q) + " is not a prime power");
  }
  if (q > cap) throw Error(ErrorKind::FieldTooLarge, "field order exceeds cap");
  return create(static_cast<std::uint32_t>(p), e, std::nullopt, cap);
}

Field Field::extension(const Field& base, unsigned m, std::optional<Poly> modulus,
                       std::uint64_t cap) {
  if (m == 0) throw Error(ErrorKind::ParamViolation, "extension degree must be positive");
  const std::uint64_t order = checked_power(base.order(), m, cap);

  Poly least = poly::least_irreducible(base, m);
  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw Error(ErrorKind::ParamViolation,
                  "modulus must be monic of degree " + std::to_string(m));
    }
    for (Elem c : mod) {
      if (!base.contains(c)) {
        throw Error(ErrorKind::ParamViolation, "modulus coefficient outside the base field");
      }
    }
    if (!poly::is_irreducible(base, mod)) {
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over the base field");
    }
  } else {
    mod = least;
  }

  auto impl = std::make_shared<Impl>();
  impl->p = base.characteristic();
  impl->degree = m;
  impl->abs_degree = base.absolute_degree() * m;
  impl->order = order;
  impl->ground_order = base.order();
  impl->ground = base.impl_;
  impl->default_modulus = (mod == least);
  impl->modulus = std::move(mod);
  if (order <= kTableOrderLimit) build_tables(*impl);
  return Field(impl);
}

Field Field::parse(std::string_view literal) {
  const std::string s = trim_ws(literal);
  if (s.size() < 5 || s.compare(0, 3, "gf(") != 0 || s.back() != ')') {
    throw Error(ErrorKind::ParseError, "field literal must look like gf(...): '" + s + "'");
  }
  const std::string body = s.substr(3, s.size() - 4);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    parts.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() == 1) return of_order(parse_integer(parts[0]));
  if (parts.size() != 2 && parts.size() != 3) {
    throw Error(ErrorKind::ParseError, "field literal takes 1 to 3 arguments: '" + s + "'");
  }
  const auto p = parse_integer(parts[0]);
  const auto e = parse_integer(parts[1]);
  if (p > UINT32_MAX || e == 0 || e > 64) {
    throw Error(ErrorKind::ParseError, "field parameters out of range: '" + s + "'");
  }
  std::optional<Poly> modulus;
  if (parts.size() == 3) {
    if (parts[2].compare(0, 5, "poly=") != 0) {
      throw Error(ErrorKind::ParseError, "expected poly=<integer>: '" + s + "'");
    }
    std::uint64_t value = parse_integer(std::string_view(parts[2]).substr(5));
    if (!is_prime(p)) {
      throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    }
    Poly m;
    while (value > 0) {
      m.push_back(static_cast<Elem>(value % p));
      value /= p;
    }
    modulus = std::move(m);
  }
  return create(static_cast<std::uint32_t>(p), static_cast<unsigned>(e), std::move(modulus));
}

std::string Field::literal() const {
  const Impl& f = *impl_;
  if (f.default_modulus && (!f.ground || !f.ground->ground)) {
    return "gf(" + std::to_string(f.order) + ")";
  }
  std::uint64_t value = 0;
  for (std::size_t i = f.modulus.size(); i-- > 0;) value = value * f.ground_order + f.modulus[i];
  std::string poly_text;
  if (f.ground_order == 2) {
    poly_text = "0b";
    for (std::size_t i = f.modulus.size(); i-- > 0;) poly_text.push_back(f.modulus[i] ? '1' : '0');
  } else {
    poly_text = std::to_string(value);
  }
  if (!f.ground || !f.ground->ground) {
    return "gf(" + std::to_string(f.p) + "," + std::to_string(f.abs_degree) + ",poly=" +
           poly_text + ")";
  }
  return "ext(" + Field(f.ground).literal() + "," + std::to_string(f.degree) + ",poly=" +
         poly_text + ")";
}

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->degree; }
unsigned Field::absolute_degree() const { return impl_->abs_degree; }
std::uint64_t Field::order() const { return impl_->order; }
std::uint64_t Field::ground_order() const { return impl_->ground_order; }
bool Field::is_prime_field() const { return !impl_->ground; }
const Poly& Field::modulus() const { return impl_->modulus; }

std::optional<Field> Field::ground() const {
  if (!impl_->ground) return std::nullopt;
  return Field(impl_->ground);
}

Elem Field::x() const {
  if (impl_->degree == 1) {
    // Degree-1 modulus x + c has root -c.
    if (impl_->ground) return Field(impl_->ground).neg(impl_->modulus[0]);
    return neg(impl_->modulus[0]);
  }
  return static_cast<Elem>(impl_->ground_order);
}

Elem Field::add(Elem a, Elem b) const { return add_digits(*impl_, a, b); }
Elem Field::neg(Elem a) const { return neg_digits(*impl_, a); }
Elem Field::sub(Elem a, Elem b) const { return add_digits(*impl_, a, neg_digits(*impl_, b)); }
Elem Field::mul(Elem a, Elem b) const { return mul_impl(*impl_, a, b); }
Elem Field::pow(Elem a, std::uint64_t n) const { return pow_impl(*impl_, a, n); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Impl& f = *impl_;
  if (!f.log_table.empty()) {
    const std::uint64_t group = f.order - 1;
    return f.exp_table[(group - f.log_table[a]) % group];
  }
  return pow_impl(f, a, f.order - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::frobenius(Elem a) const { return pow(a, impl_->ground_order); }

std::vector<Elem> Field::expand(Elem a) const {
  std::vector<Elem> out(impl_->degree);
  if (!impl_->ground) {
    out[0] = a;
    return out;
  }
  for (auto& d : out) {
    d = static_cast<Elem>(a % impl_->ground_order);
    a = static_cast<Elem>(a / impl_->ground_order);
  }
  return out;
}

Elem Field::compress(std::span<const Elem> coords) const {
  if (coords.size() != impl_->degree) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(impl_->degree) +
                                               " coordinates, got " +
                                               std::to_string(coords.size()));
  }
  std::uint64_t r = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= impl_->ground_order) {
      throw Error(ErrorKind::FieldMismatch, "coordinate outside the ground field");
    }
    r = r * impl_->ground_order + coords[i];
  }
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> out(impl_->abs_degree);
  for (auto& d : out) {
    d = a % impl_->p;
    a /= impl_->p;
  }
  return out;
}

FieldElement Field::element(Elem a) const { return FieldElement(*this, a); }

bool Field::operator==(const Field& other) const {
  const Impl* a = impl_.get();
  const Impl* b = other.impl_.get();
  while (a != b) {
    if (!a || !b) return false;
    if (a->p != b->p || a->degree != b->degree || a->modulus != b->modulus) return false;
    a = a->ground.get();
    b = b->ground.get();
  }
  return true;
}

// --- FieldElement -----------------------------------------------------------

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) {
    throw Error(ErrorKind::ParamViolation,
                "element encoding " + std::to_string(value) + " outside the field");
  }
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_) throw Error(ErrorKind::FieldMismatch, "elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t n) const { return {field_, field_.pow(value_, n)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return value_ == o.value_ && field_ == o.field_;
}

FieldElement frobenius(const FieldElement& a, std::uint64_t q) {
  std::optional<Field> f = a.field();
  while (f) {
    if (f->ground_order() == q || (f->is_prime_field() && f->order() == q)) return a.pow(q);
    f = f->ground();
  }
  throw Error(ErrorKind::FieldMismatch,
              "no subfield of order " + std::to_string(q) + " in the element's tower");
}

std::vector<FieldElement> expand(const FieldElement& a) {
  const Field& f = a.field();
  const Field g = f.ground().value_or(f);
  std::vector<FieldElement> out;
  for (Elem c : f.expand(a.value())) out.emplace_back(g, c);
  return out;
}

FieldElement compress(const Field& ext, std::span<const FieldElement> coords) {
  const Field g = ext.ground().value_or(ext);
  std::vector<Elem> raw;
  raw.reserve(coords.size());
  for (const auto& c : coords) {
    if (c.field() != g) throw Error(ErrorKind::FieldMismatch, "coordinate from another field");
    raw.push_back(c.value());
  }
  return {ext, ext.compress(raw)};
}

// --- polynomials --------------------------------------------------------------

namespace poly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return trim(std::move(r));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return trim(std::move(r));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  return trim(std::move(r));
}

Poly mod(const Field& f, Poly a, const Poly& m) {
  a = trim(std::move(a));
  const int dm = degree(m);
  if (dm < 0) throw Error(ErrorKind::DivisionByZero, "polynomial modulo zero");
  const Elem lead_inv = f.inv(m[static_cast<std::size_t>(dm)]);
  while (degree(a) >= dm) {
    const auto da = static_cast<std::size_t>(degree(a));
    const Elem c = f.mul(a[da], lead_inv);
    const std::size_t shift = da - static_cast<std::size_t>(dm);
    for (int j = 0; j <= dm; ++j) {
      const auto idx = shift + static_cast<std::size_t>(j);
      a[idx] = f.sub(a[idx], f.mul(c, m[static_cast<std::size_t>(j)]));
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem lead_inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, lead_inv);
  }
  return a;
}

Poly powmod(const Field& f, Poly base, std::uint64_t n, const Poly& m) {
  Poly result = mod(f, Poly{1}, m);
  base = mod(f, std::move(base), m);
  while (n > 0) {
    if (n & 1) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    n >>= 1;
  }
  return result;
}

Elem evaluate(const Field& f, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

bool is_irreducible_exhaustive(const Field& f, const Poly& a) {
  const int d = degree(a);
  if (d < 1) return false;
  if (d > 4) throw Error(ErrorKind::ParamViolation, "exhaustive irreducibility test is for degree <= 4");
  if (d == 1) return true;
  for (std::uint64_t x = 0; x < f.order(); ++x) {
    if (evaluate(f, a, static_cast<Elem>(x)) == 0) return false;
  }
  if (d == 4) {
    for (std::uint64_t b = 0; b < f.order(); ++b) {
      for (std::uint64_t c = 0; c < f.order(); ++c) {
        const Poly quad{static_cast<Elem>(c), static_cast<Elem>(b), 1};
        if (mod(f, a, quad).empty()) return false;
      }
    }
  }
  return true;
}

bool is_irreducible_ben_or(const Field& f, const Poly& a) {
  const int d = degree(a);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly h = mod(f, x, a);
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(f, h, f.order(), a);
    if (degree(gcd(f, a, sub(f, h, x))) > 0) return false;
  }
  return true;
}

bool is_irreducible(const Field& f, const Poly& a) {
  return degree(a) <= 4 ? is_irreducible_exhaustive(f, a) : is_irreducible_ben_or(f, a);
}

Poly least_irreducible(const Field& f, unsigned deg) {
  const std::uint64_t q = f.order();
  Poly cand(deg + 1, 0);
  cand[deg] = 1;
  // Count through the lower coefficients as a base-q integer. The first hit
  // is the least monic irreducible in both integer and lexicographic order.
  while (true) {
    if (is_irreducible(f, cand)) return cand;
    unsigned i = 0;
    while (i < deg && cand[i] == q - 1) cand[i++] = 0;
    if (i == deg) break;
    ++cand[i];
  }
  throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace poly

}  // namespace subcodes
