#include "vinbun/laurent.hpp"

#include <stdexcept>

namespace vinbun {

std::string HalfInt::toString() const {
  if (isInteger()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentValue::LaurentValue(std::int64_t constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentValue LaurentValue::monomial(std::int64_t coefficient, int exponent) {
  LaurentValue r;
  if (coefficient != 0) r.coeffs_[exponent] = coefficient;
  return r;
}

std::int64_t LaurentValue::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentValue::minExponent() const {
  if (coeffs_.empty()) throw std::domain_error("zero has no exponents");
  return coeffs_.begin()->first;
}

int LaurentValue::maxExponent() const {
  if (coeffs_.empty()) throw std::domain_error("zero has no exponents");
  return coeffs_.rbegin()->first;
}

void LaurentValue::addTerm(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checkedAdd(it->second, coefficient);
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentValue LaurentValue::operator-() const {
  LaurentValue r;
  for (auto [e, c] : coeffs_) r.coeffs_[e] = checkedMul(c, -1);
  return r;
}

LaurentValue& LaurentValue::operator+=(const LaurentValue& o) {
  for (auto [e, c] : o.coeffs_) addTerm(e, c);
  return *this;
}

LaurentValue& LaurentValue::operator-=(const LaurentValue& o) {
  for (auto [e, c] : o.coeffs_) addTerm(e, checkedMul(c, -1));
  return *this;
}

LaurentValue operator*(const LaurentValue& a, const LaurentValue& b) {
  LaurentValue r;
  for (auto [ea, ca] : a.coeffs_)
    for (auto [eb, cb] : b.coeffs_) r.addTerm(ea + eb, checkedMul(ca, cb));
  return r;
}

LaurentValue& LaurentValue::operator*=(const LaurentValue& o) {
  *this = *this * o;
  return *this;
}

LaurentValue LaurentValue::pow(unsigned k) const {
  LaurentValue result(1);
  LaurentValue base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentValue LaurentValue::substitutePower(int factor) const {
  LaurentValue r;
  for (auto [e, c] : coeffs_) r.addTerm(e * factor, c);
  return r;
}

std::optional<LaurentValue> LaurentValue::divideExact(const LaurentValue& divisor) const {
  if (divisor.isZero()) throw std::domain_error("Laurent division by zero");
  if (isZero()) return LaurentValue();
  // long division from the top degree; the divisor's leading coefficient
  // must divide every intermediate leading coefficient
  const int dTop = divisor.maxExponent();
  const int dBottom = divisor.minExponent();
  const std::int64_t lead = divisor.coefficient(dTop);
  const int floor = minExponent() - dBottom;
  LaurentValue rem = *this;
  LaurentValue quot;
  while (!rem.isZero()) {
    const int top = rem.maxExponent();
    if (top - dTop < floor) return std::nullopt;
    const std::int64_t c = rem.coefficient(top);
    if (c % lead != 0) return std::nullopt;
    const LaurentValue term = monomial(c / lead, top - dTop);
    quot += term;
    rem -= term * divisor;
  }
  return quot;
}

Rational LaurentValue::specializeAtQ(std::int64_t q) const {
  Rational total = 0;
  for (auto [e, c] : coeffs_) {
    if (e % 2 != 0) throw std::domain_error("odd power of v has no rational value at v^2 = q");
    const int k = e / 2;
    Rational term = c;
    boost::multiprecision::cpp_int power = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) power *= q;
    if (k >= 0)
      term *= Rational(power);
    else
      term /= Rational(power);
    total += term;
  }
  return total;
}

std::string LaurentValue::toString() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace vinbun
