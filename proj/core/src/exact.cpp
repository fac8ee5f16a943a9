#include "vcsirreps/exact.hpp"

#include <gmp.h>

#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace vcsirreps {

namespace {

constexpr unsigned long kTrialLimit = 1000000UL;

const BigInt& resolvable_bound() {
  static const BigInt bound = BigInt(kTrialLimit) * kTrialLimit * kTrialLimit;
  return bound;
}

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  return BigInt(text);
}

int sign_of(const Rational& q) {
  return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

}  // namespace

double to_double(const Rational& q) {
  return q.convert_to<double>();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.backend().data()) != 0;
}

bool is_perfect_square(const Rational& q) {
  return is_perfect_square(BigInt(boost::multiprecision::numerator(q))) &&
         is_perfect_square(BigInt(boost::multiprecision::denominator(q)));
}

BigInt integer_sqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("integer_sqrt of negative value");
  BigInt r;
  mpz_sqrt(r.backend().data(), n.backend().data());
  return r;
}

SquareFreeSplit square_free_split(const BigInt& n) {
  if (n <= 0) throw std::domain_error("square_free_split needs a positive integer");

  static std::shared_mutex mutex;
  static std::map<BigInt, SquareFreeSplit> memo;
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }

  BigInt rem = n;
  BigInt root = 1;
  BigInt kernel = 1;
  bool exhausted = false;
  for (unsigned long p = 2;; p = (p == 2 ? 3 : p + 2)) {
    if (BigInt(p) * p > rem) break;
    if (p > kTrialLimit) {
      exhausted = true;
      break;
    }
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rem.backend().data(), p)) {
      mpz_divexact_ui(rem.backend().data(), rem.backend().data(), p);
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) root *= p;
    if (exponent % 2) kernel *= p;
  }
  if (rem > 1) {
    if (!exhausted) {
      kernel *= rem;
    } else if (is_perfect_square(rem)) {
      root *= integer_sqrt(rem);
    } else if (rem < resolvable_bound()) {
      // no factor below the trial limit and below its cube: prime or a product of two distinct primes
      kernel *= rem;
    } else {
      throw NonRadicalError("cannot reduce radicand " + n.str() + " to square-free form");
    }
  }

  SquareFreeSplit out{root, kernel};
  std::unique_lock lock(mutex);
  memo.emplace(n, out);
  return out;
}

// ---------------------------------------------------------------- Radical

Radical::Radical(long value) : Radical(Rational(value)) {}

Radical::Radical(const Rational& value) : sign_(sign_of(value)), radicand_(value * value) {}

Radical Radical::sqrt(const Rational& radicand) {
  if (radicand < 0) throw std::domain_error("Radical::sqrt of negative rational");
  return from_parts(radicand == 0 ? 0 : 1, radicand);
}

Radical Radical::from_parts(int sign, const Rational& radicand) {
  if (radicand < 0) throw std::domain_error("negative radicand");
  Radical r;
  if (sign == 0 || radicand == 0) return r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.radicand_ = radicand;
  return r;
}

std::optional<Rational> Radical::rational() const {
  if (sign_ == 0) return Rational(0);
  if (!is_perfect_square(radicand_)) return std::nullopt;
  Rational root(integer_sqrt(boost::multiprecision::numerator(radicand_)),
                integer_sqrt(boost::multiprecision::denominator(radicand_)));
  return sign_ > 0 ? root : Rational(-root);
}

double Radical::to_double() const {
  return to_float50().convert_to<double>();
}

Float50 Radical::to_float50() const {
  if (sign_ == 0) return Float50(0);
  Float50 v = boost::multiprecision::sqrt(Float50(radicand_));
  return sign_ > 0 ? v : Float50(-v);
}

std::string Radical::to_string() const {
  if (sign_ == 0) return "0";
  if (auto q = rational()) return rational_to_string(*q);
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + rational_to_string(radicand_) + ")";
}

Radical operator*(const Radical& a, const Radical& b) {
  return Radical::from_parts(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

Radical operator/(const Radical& a, const Radical& b) {
  if (b.sign_ == 0) throw std::domain_error("Radical division by zero");
  return Radical::from_parts(a.sign_ * b.sign_, a.radicand_ / b.radicand_);
}

std::partial_ordering operator<=>(const Radical& a, const Radical& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  auto cmp = [](const Rational& x, const Rational& y) {
    return x < y ? std::partial_ordering::less
                 : (y < x ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  };
  return a.sign_ >= 0 ? cmp(a.radicand_, b.radicand_) : cmp(b.radicand_, a.radicand_);
}

// ---------------------------------------------------------------- Surd

Surd::Surd(long value) : Surd(Rational(value)) {}

Surd::Surd(const Rational& value) {
  if (value != 0) terms_.emplace(BigInt(1), value);
}

Surd::Surd(const Radical& value) {
  if (value.is_zero()) return;
  const Rational& r = value.radicand();
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  // sqrt(p/q) = sqrt(p q) / q
  SquareFreeSplit split = square_free_split(num * den);
  Rational coeff(split.root, den);
  terms_.emplace(split.kernel, value.sign() > 0 ? coeff : Rational(-coeff));
}

void Surd::add_term(const BigInt& kernel, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(kernel, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Radical> Surd::radical() const {
  if (terms_.empty()) return Radical();
  if (terms_.size() != 1) return std::nullopt;
  const auto& [kernel, coeff] = *terms_.begin();
  return Radical::from_parts(coeff > 0 ? 1 : -1, coeff * coeff * Rational(kernel));
}

std::optional<Rational> Surd::rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

double Surd::to_double() const {
  return to_float50().convert_to<double>();
}

Float50 Surd::to_float50() const {
  Float50 sum = 0;
  for (const auto& [kernel, coeff] : terms_) {
    sum += Float50(coeff) * boost::multiprecision::sqrt(Float50(kernel));
  }
  return sum;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [kernel, coeff] : terms_) {
    if (!first) out << (coeff < 0 ? " - " : " + ");
    else if (coeff < 0) out << "-";
    first = false;
    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    if (kernel == 1) {
      out << rational_to_string(mag);
    } else {
      if (mag != 1) out << rational_to_string(mag) << "*";
      out << "sqrt(" << kernel.str() << ")";
    }
  }
  return out.str();
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& [kernel, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [kernel, coeff] : o.terms_) add_term(kernel, coeff);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [kernel, coeff] : o.terms_) add_term(kernel, -coeff);
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // sqrt(ka kb) = g sqrt(ka kb / g^2) with g = gcd(ka, kb), both square-free
      BigInt g = boost::multiprecision::gcd(ka, kb);
      BigInt kernel = (ka / g) * (kb / g);
      out.add_term(kernel, ca * cb * Rational(g));
    }
  }
  return out;
}

Surd operator*(const Rational& a, const Surd& b) {
  Surd out;
  if (a == 0) return out;
  out.terms_ = b.terms_;
  for (auto& [kernel, coeff] : out.terms_) coeff *= a;
  return out;
}

}  // namespace vcsirreps
