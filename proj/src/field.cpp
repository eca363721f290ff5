#include "mtrace/field.hpp"

#include <cctype>

namespace mtrace {

namespace {

constexpr std::uint32_t kExhaustiveLimit = 10000;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

// Tonelli-Shanks for odd p; caller guarantees n is a nonzero quadratic residue.
std::uint32_t tonelli_shanks(std::uint32_t n, std::uint32_t p) {
  std::uint64_t q = p - 1;
  std::uint32_t s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint32_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = mod_pow(z, q, p);
  std::uint64_t t = mod_pow(n, q, p);
  std::uint64_t r = mod_pow(n, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

std::optional<mpz_class> integer_sqrt_exact(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31U) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidField, "GF(" + std::to_string(p) + ") requires a prime 2 <= p < 2^31");
  }
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    auto inner = text.substr(3, text.size() - 4);
    if (!inner.empty() && is_integer_literal(inner) && inner.front() != '-' && inner.size() <= 18) {
      return prime(std::stoull(std::string(inner)));
    }
  }
  throw Error(ErrorKind::InvalidField, "expected \"Q\" or \"GF(p)\", got \"" + std::string(text) + "\"");
}

std::string FieldSpec::to_string() const {
  return kind_ == Kind::Rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long n) {
  if (!field.is_finite()) return Scalar(0, mpq_class(static_cast<long>(n)));
  long long p = field.p();
  long long r = n % p;
  if (r < 0) r += p;
  return Scalar(field.p(), static_cast<std::uint32_t>(r));
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class copy(q);
  copy.canonicalize();
  return Scalar(0, std::move(copy));
}

Scalar Scalar::residue(const FieldSpec& field, std::uint64_t value) {
  if (!field.is_finite()) throw Error(ErrorKind::FieldMismatch, "residue requested over Q");
  return Scalar(field.p(), static_cast<std::uint32_t>(value % field.p()));
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num_text = s.substr(0, slash);
  auto den_text = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text.front() == '-' ||
      den_text.front() == '+') {
    throw Error(ErrorKind::ParseError, "malformed scalar \"" + std::string(text) + "\"");
  }
  if (num_text.front() == '+') num_text.remove_prefix(1);
  if (den_text.front() == '+') den_text.remove_prefix(1);
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "scalar \"" + std::string(text) + "\" has zero denominator");
  if (!field.is_finite()) return rational(mpq_class(num, den));
  auto reduce = [&](const mpz_class& v) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), field.p());
    return Scalar(field.p(), static_cast<std::uint32_t>(r.get_ui()));
  };
  return reduce(num) / reduce(den);
}

FieldSpec Scalar::field() const {
  return p_ == 0 ? FieldSpec::rationals() : FieldSpec(FieldSpec::Kind::PrimeField, p_);
}

bool Scalar::is_zero() const {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (p_ != rhs.p_) {
    throw Error(ErrorKind::FieldMismatch, "cannot combine " + field().to_string() + " and " +
                                              rhs.field().to_string() + " scalars");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (p_ != 0) return Scalar(p_, mod_pow(std::get<std::uint32_t>(value_), p_ - 2, p_));
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  return Scalar(0, std::move(inv));
}

Scalar Scalar::operator-() const {
  if (p_ != 0) {
    auto v = std::get<std::uint32_t>(value_);
    return Scalar(p_, v == 0 ? 0 : p_ - v);
  }
  mpq_class neg = -std::get<mpq_class>(value_);
  return Scalar(0, std::move(neg));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>((std::uint64_t{v} + std::get<std::uint32_t>(rhs.value_)) % p_);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>((std::uint64_t{v} + p_ - std::get<std::uint32_t>(rhs.value_)) % p_);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(std::uint64_t{v} * std::get<std::uint32_t>(rhs.value_) % p_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.p_ == b.p_ && a.value_ == b.value_;
}

int compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.p_ != 0) {
    auto x = std::get<std::uint32_t>(a.value_);
    auto y = std::get<std::uint32_t>(b.value_);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

std::optional<Scalar> is_square(const Scalar& s) {
  const auto field = s.field();
  if (!field.is_finite()) {
    const auto& q = s.rational_value();
    auto num = integer_sqrt_exact(q.get_num());
    auto den = integer_sqrt_exact(q.get_den());
    if (!num || !den) return std::nullopt;
    return Scalar::rational(mpq_class(*num, *den));
  }
  const std::uint32_t p = field.p();
  const std::uint32_t v = s.residue_value();
  if (v == 0) return Scalar::zero(field);
  if (p <= kExhaustiveLimit) {
    for (std::uint32_t r = 1; r < p; ++r) {
      if (std::uint64_t{r} * r % p == v) return Scalar::residue(field, r);
    }
    return std::nullopt;
  }
  // p > 10^4 is odd, so Euler's criterion applies.
  if (mod_pow(v, (p - 1) / 2, p) != 1) return std::nullopt;
  return Scalar::residue(field, tonelli_shanks(v, p));
}

QuadraticRoots quadratic_roots(const Scalar& b, const Scalar& c) {
  const auto field = b.field();
  if (c.field() != field) throw Error(ErrorKind::FieldMismatch, "quadratic coefficients in different fields");
  QuadraticRoots out;
  if (field.is_finite() && field.p() <= kExhaustiveLimit) {
    for (const auto& x : field_elements(field)) {
      if ((x * x + b * x + c).is_zero()) out.roots.push_back(x);
    }
    out.repeated = out.roots.size() == 1;
    return out;
  }
  const auto two = Scalar::from_int(field, 2);
  const auto disc = b * b - Scalar::from_int(field, 4) * c;
  auto root = is_square(disc);
  if (!root) return out;
  auto r1 = (-b - *root) / two;
  auto r2 = (-b + *root) / two;
  if (r1 == r2) {
    out.roots.push_back(r1);
    out.repeated = true;
    return out;
  }
  if (compare(r2, r1) < 0) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

std::vector<Scalar> field_elements(const FieldSpec& field) {
  if (!field.is_finite()) throw Error(ErrorKind::InvalidField, "cannot enumerate the elements of Q");
  std::vector<Scalar> out;
  out.reserve(field.p());
  for (std::uint32_t v = 0; v < field.p(); ++v) out.push_back(Scalar::residue(field, v));
  return out;
}

}  // namespace mtrace
