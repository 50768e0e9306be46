#include "vinbun/field.hpp"

#include <stdexcept>

namespace vinbun {

bool isPrime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Digits = std::vector<unsigned>;

Digits toDigits(std::uint32_t x, unsigned p, unsigned e) {
  Digits d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

std::uint32_t fromDigits(const Digits& d, unsigned p) {
  std::uint32_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// Product of two field elements as polynomials in g, reduced mod the monic modulus.
std::uint32_t mulByModulus(std::uint32_t x, std::uint32_t y, unsigned p, unsigned e,
                           const std::vector<unsigned>& modulus) {
  const Digits a = toDigits(x, p, e);
  const Digits b = toDigits(y, p, e);
  std::vector<unsigned long long> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + 1ULL * a[i] * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > e;) {
    const unsigned long long c = prod[k];
    if (c == 0) continue;
    // g^k = g^(k-e) * g^e, g^e = -(m_0 + ... + m_{e-1} g^{e-1})
    for (unsigned i = 0; i < e; ++i) {
      prod[k - e + i] = (prod[k - e + i] + (p - modulus[i]) % p * c) % p;
    }
    prod[k] = 0;
  }
  Digits r(e);
  for (unsigned i = 0; i < e; ++i) r[i] = static_cast<unsigned>(prod[i]);
  return fromDigits(r, p);
}

bool hasRootModP(const std::vector<unsigned>& poly, unsigned p) {
  for (unsigned x = 0; x < p; ++x) {
    unsigned long long acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<unsigned>> PrimePowerField::irreducibleModuli(unsigned p, unsigned e) {
  if (!isPrime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1 || e > 3) throw std::invalid_argument("field degree must be between 1 and 3");
  std::vector<std::vector<unsigned>> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<unsigned> poly = toDigits(static_cast<std::uint32_t>(idx), p, e);
    poly.push_back(1);
    // a polynomial of degree <= 3 is irreducible iff it has no root
    if (e == 1 || !hasRootModP(poly, p)) out.push_back(std::move(poly));
  }
  return out;
}

PrimePowerField PrimePowerField::build(unsigned p, unsigned e, std::size_t modulusIndex) {
  auto moduli = irreducibleModuli(p, e);
  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < e; ++i) q64 *= p;
  if (q64 > 65535) throw std::invalid_argument("field order exceeds 65535");
  if (modulusIndex >= moduli.size())
    throw std::invalid_argument("modulus index out of range: only " + std::to_string(moduli.size()) +
                                " irreducible moduli of degree " + std::to_string(e));

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<unsigned>(q64);
  t->modulus = moduli[modulusIndex];
  const unsigned q = t->q;

  t->negation.resize(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    Digits d = toDigits(x, p, e);
    for (auto& c : d) c = (p - c) % p;
    t->negation[x] = fromDigits(d, p);
  }

  // search for a generator of the multiplicative group
  const std::uint32_t groupOrder = q - 1;
  std::vector<std::uint32_t> powers{1};
  if (q > 2) {
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      powers.assign(1, 1);
      std::uint32_t cur = 1;
      for (std::uint32_t k = 1; k < groupOrder; ++k) {
        cur = mulByModulus(cur, cand, p, e, t->modulus);
        if (cur == 1) break;
        powers.push_back(cur);
      }
      if (powers.size() == groupOrder) {
        t->generator = cand;
        break;
      }
    }
  } else {
    t->generator = 1;
  }
  if (powers.size() != groupOrder) throw std::logic_error("no generator found; modulus not irreducible");

  t->expTable.resize(2 * static_cast<std::size_t>(groupOrder));
  t->logTable.assign(q, 0);
  for (std::uint32_t k = 0; k < groupOrder; ++k) {
    t->expTable[k] = powers[k];
    t->expTable[k + groupOrder] = powers[k];
    t->logTable[powers[k]] = k;
  }

  PrimePowerField field(t);
  if (q <= kTableLimit) {
    t->addTable.resize(static_cast<std::size_t>(q) * q);
    t->mulTable.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) {
        t->addTable[x * q + y] = static_cast<std::uint16_t>(field.addDigits(x, y));
        t->mulTable[x * q + y] = static_cast<std::uint16_t>(
            (x == 0 || y == 0) ? 0 : t->expTable[t->logTable[x] + t->logTable[y]]);
      }
    }
  }
  return field;
}

PrimePowerField PrimePowerField::ofOrder(unsigned q, std::size_t modulusIndex) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return build(p, e, modulusIndex);
}

std::uint32_t PrimePowerField::addDigits(std::uint32_t x, std::uint32_t y) const {
  const unsigned p = tables_->p;
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < tables_->e; ++i) {
    result += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return result;
}

Fq PrimePowerField::add(Fq x, Fq y) const {
  if (!tables_->addTable.empty()) return Fq{tables_->addTable[x.value * tables_->q + y.value]};
  return Fq{addDigits(x.value, y.value)};
}

Fq PrimePowerField::mul(Fq x, Fq y) const {
  if (!tables_->mulTable.empty()) return Fq{tables_->mulTable[x.value * tables_->q + y.value]};
  if (x.value == 0 || y.value == 0) return zero();
  return Fq{tables_->expTable[tables_->logTable[x.value] + tables_->logTable[y.value]]};
}

Fq PrimePowerField::inv(Fq x) const {
  if (x.value == 0) throw std::domain_error("inverse of zero in F_q");
  const std::uint32_t n = tables_->q - 1;
  return Fq{tables_->expTable[(n - tables_->logTable[x.value]) % n]};
}

Fq PrimePowerField::pow(Fq x, std::uint64_t k) const {
  if (k == 0) return one();
  if (x.value == 0) return zero();
  const std::uint64_t n = tables_->q - 1;
  return Fq{tables_->expTable[(tables_->logTable[x.value] * (k % n)) % n]};
}

Fq PrimePowerField::fromInt(long long n) const {
  const long long p = tables_->p;
  return Fq{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Fq PrimePowerField::element(std::uint32_t index) const {
  if (index >= tables_->q) throw std::out_of_range("field element index out of range");
  return Fq{index};
}

std::vector<Fq> PrimePowerField::elements() const {
  std::vector<Fq> out(tables_->q);
  for (std::uint32_t i = 0; i < tables_->q; ++i) out[i] = Fq{i};
  return out;
}

std::vector<Fq> PrimePowerField::nonzeroElements() const {
  std::vector<Fq> out;
  out.reserve(tables_->q - 1);
  for (std::uint32_t i = 1; i < tables_->q; ++i) out.push_back(Fq{i});
  return out;
}

std::uint32_t PrimePowerField::multiplicativeOrder(Fq x) const {
  if (x.value == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t k = 1;
  Fq cur = x;
  while (cur != one()) {
    cur = mul(cur, x);
    ++k;
  }
  return k;
}

bool PrimePowerField::operator==(const PrimePowerField& other) const {
  return tables_ == other.tables_ ||
         (tables_->p == other.tables_->p && tables_->e == other.tables_->e &&
          tables_->modulus == other.tables_->modulus);
}

}  // namespace vinbun
