#pragma once

// Exact arithmetic in F_q, q = p^e with e <= 3.
//
// Elements are encoded as integers in [0, q): the base-p digits of the index
// are the coefficients of the element in the power basis 1, g, g^2 of the
// chosen modulus (g a root of the modulus). Zero is 0 and one is 1 in every
// field. Field objects are cheap to copy; the tables behind them are shared
// and never mutated after construction.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace vinbun {

struct Fq {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const Fq&) const = default;
};

class PrimePowerField {
 public:
  /// Builds F_{p^e}. `modulusIndex` picks among the monic irreducible moduli
  /// of degree e over F_p in lexicographic order (0 = the first one).
  static PrimePowerField build(unsigned p, unsigned e, std::size_t modulusIndex = 0);

  /// Convenience: builds F_q from the order, factoring q as a prime power.
  static PrimePowerField ofOrder(unsigned q, std::size_t modulusIndex = 0);

  /// All monic irreducible polynomials of degree e over F_p, coefficients
  /// listed low to high (leading 1 included).
  static std::vector<std::vector<unsigned>> irreducibleModuli(unsigned p, unsigned e);

  unsigned characteristic() const { return tables_->p; }
  unsigned degree() const { return tables_->e; }
  unsigned order() const { return tables_->q; }
  const std::vector<unsigned>& modulus() const { return tables_->modulus; }

  static constexpr Fq zero() { return Fq{0}; }
  static constexpr Fq one() { return Fq{1}; }

  Fq add(Fq x, Fq y) const;
  Fq sub(Fq x, Fq y) const { return add(x, neg(y)); }
  Fq neg(Fq x) const { return Fq{tables_->negation[x.value]}; }
  Fq mul(Fq x, Fq y) const;
  /// Throws std::domain_error on zero.
  Fq inv(Fq x) const;
  Fq div(Fq x, Fq y) const { return mul(x, inv(y)); }
  Fq pow(Fq x, std::uint64_t k) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Fq fromInt(long long n) const;
  /// Throws std::out_of_range if the index is not below q.
  Fq element(std::uint32_t index) const;

  std::vector<Fq> elements() const;
  std::vector<Fq> nonzeroElements() const;
  Fq primitiveElement() const { return Fq{tables_->generator}; }
  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicativeOrder(Fq x) const;

  std::string format(Fq x) const { return std::to_string(x.value); }

  bool operator==(const PrimePowerField& other) const;

 private:
  struct Tables {
    unsigned p = 0;
    unsigned e = 0;
    unsigned q = 0;
    std::vector<unsigned> modulus;
    std::uint32_t generator = 0;
    std::vector<std::uint32_t> logTable;  // log_g(x) for x != 0
    std::vector<std::uint32_t> expTable;  // g^k for 0 <= k < 2(q-1)
    std::vector<std::uint32_t> negation;
    std::vector<std::uint16_t> addTable;  // q*q, only for q <= kTableLimit
    std::vector<std::uint16_t> mulTable;  // q*q, only for q <= kTableLimit
  };
  static constexpr unsigned kTableLimit = 256;

  explicit PrimePowerField(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
  std::uint32_t addDigits(std::uint32_t x, std::uint32_t y) const;

  std::shared_ptr<const Tables> tables_;
};

bool isPrime(unsigned n);

}  // namespace vinbun
