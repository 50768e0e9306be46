#include "vinbun/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace vinbun::poly {

int degree(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

void normalize(FqPoly& f) {
  while (!f.empty() && f.back() == PrimePowerField::zero()) f.pop_back();
}

bool isMonic(const FqPoly& f) { return !f.empty() && f.back() == PrimePowerField::one(); }

FqPoly add(const PrimePowerField& F, const FqPoly& f, const FqPoly& g) {
  FqPoly r(std::max(f.size(), g.size()), PrimePowerField::zero());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.add(r[i], g[i]);
  normalize(r);
  return r;
}

FqPoly sub(const PrimePowerField& F, const FqPoly& f, const FqPoly& g) {
  FqPoly r(std::max(f.size(), g.size()), PrimePowerField::zero());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.sub(r[i], g[i]);
  normalize(r);
  return r;
}

FqPoly mul(const PrimePowerField& F, const FqPoly& f, const FqPoly& g) {
  if (f.empty() || g.empty()) return {};
  FqPoly r(f.size() + g.size() - 1, PrimePowerField::zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == PrimePowerField::zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  normalize(r);
  return r;
}

FqPoly scale(const PrimePowerField& F, const FqPoly& f, Fq c) {
  FqPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.mul(f[i], c);
  normalize(r);
  return r;
}

std::pair<FqPoly, FqPoly> divmod(const PrimePowerField& F, const FqPoly& f, const FqPoly& g) {
  if (g.empty()) throw std::domain_error("polynomial division by zero");
  FqPoly rem = f;
  normalize(rem);
  const int dg = degree(g);
  if (degree(rem) < dg) return {{}, rem};
  FqPoly quot(rem.size() - g.size() + 1, PrimePowerField::zero());
  const Fq leadInv = F.inv(g.back());
  for (int k = degree(rem) - dg; k >= 0; --k) {
    const Fq c = F.mul(rem[k + dg], leadInv);
    quot[k] = c;
    if (c == PrimePowerField::zero()) continue;
    for (int j = 0; j <= dg; ++j) rem[k + j] = F.sub(rem[k + j], F.mul(c, g[j]));
  }
  normalize(quot);
  normalize(rem);
  return {quot, rem};
}

bool divides(const PrimePowerField& F, const FqPoly& g, const FqPoly& f) {
  return divmod(F, f, g).second.empty();
}

FqPoly makeMonic(const PrimePowerField& F, const FqPoly& f) {
  if (f.empty()) return {};
  return scale(F, f, F.inv(f.back()));
}

FqPoly monicGcd(const PrimePowerField& F, FqPoly f, FqPoly g) {
  normalize(f);
  normalize(g);
  while (!g.empty()) {
    FqPoly r = divmod(F, f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return makeMonic(F, f);
}

Fq evaluate(const PrimePowerField& F, const FqPoly& f, Fq x) {
  Fq acc = PrimePowerField::zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

FqPoly monicFromIndex(const PrimePowerField& F, int d, std::uint64_t index) {
  const unsigned q = F.order();
  FqPoly f(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) {
    f[i] = Fq{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  f[d] = PrimePowerField::one();
  return f;
}

std::uint64_t monicIndex(const PrimePowerField& F, const FqPoly& f) {
  std::uint64_t idx = 0;
  for (int i = degree(f) - 1; i >= 0; --i) idx = idx * F.order() + f[i].value;
  return idx;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool isIrreducibleByTrialDivision(const PrimePowerField& F, const FqPoly& f) {
  const int d = degree(f);
  if (d < 1) return false;
  if (!isMonic(f)) return isIrreducibleByTrialDivision(F, makeMonic(F, f));
  for (int k = 1; 2 * k <= d; ++k) {
    const std::uint64_t n = ipow(F.order(), k);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      if (divides(F, monicFromIndex(F, k, idx), f)) return false;
    }
  }
  return true;
}

std::vector<FqPoly> monicIrreducibles(const PrimePowerField& F, int d) {
  if (d < 1) return {};
  const std::uint64_t total = ipow(F.order(), d);
  std::vector<bool> reducible(total, false);
  for (int k = 1; 2 * k <= d; ++k) {
    const std::vector<FqPoly> lower = monicIrreducibles(F, k);
    const std::uint64_t cofactors = ipow(F.order(), d - k);
    for (const FqPoly& g : lower) {
      for (std::uint64_t idx = 0; idx < cofactors; ++idx) {
        reducible[monicIndex(F, mul(F, g, monicFromIndex(F, d - k, idx)))] = true;
      }
    }
  }
  std::vector<FqPoly> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!reducible[idx]) out.push_back(monicFromIndex(F, d, idx));
  }
  return out;
}

std::vector<std::pair<FqPoly, int>> factorMonic(const PrimePowerField& F, FqPoly f) {
  normalize(f);
  if (!isMonic(f)) throw std::invalid_argument("factorMonic expects a monic polynomial");
  std::vector<std::pair<FqPoly, int>> out;
  for (int k = 1; degree(f) > 0; ++k) {
    if (2 * k > degree(f)) {
      out.emplace_back(f, 1);  // what remains has no factor of degree <= deg/2
      break;
    }
    const std::uint64_t n = ipow(F.order(), k);
    for (std::uint64_t idx = 0; idx < n && degree(f) >= k; ++idx) {
      const FqPoly g = monicFromIndex(F, k, idx);
      int mult = 0;
      for (;;) {
        auto [quot, rem] = divmod(F, f, g);
        if (!rem.empty()) break;
        f = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.emplace_back(g, mult);
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    if (degree(x.first) != degree(y.first)) return degree(x.first) < degree(y.first);
    return monicIndex(F, x.first) < monicIndex(F, y.first);
  });
  return out;
}

std::string format(const PrimePowerField& F, const FqPoly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (int i = degree(f); i >= 0; --i) {
    if (f[i] == PrimePowerField::zero()) continue;
    if (!out.empty()) out += "+";
    const bool unit = f[i] == PrimePowerField::one();
    if (i == 0) {
      out += F.format(f[i]);
      continue;
    }
    if (!unit) out += F.format(f[i]);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FqPoly parse(const PrimePowerField& F, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  FqPoly result;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed polynomial '" + text + "': " + why);
  };
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Fq coeff = PrimePowerField::one();
    bool haveCoeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + static_cast<unsigned>(s[pos] - '0');
        if (v >= F.order()) fail("coefficient out of range for F_" + std::to_string(F.order()));
        ++pos;
      }
      coeff = Fq{static_cast<std::uint32_t>(v)};
      haveCoeff = true;
    }
    if (pos < s.size() && s[pos] == '*') {
      if (!haveCoeff) fail("'*' without coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 't') fail("expected 't' after '*'");
    }
    int exponent = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("bad exponent");
        exponent = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          exponent = exponent * 10 + (s[pos] - '0');
          if (exponent > 64) fail("exponent too large");
          ++pos;
        }
      }
    } else if (!haveCoeff) {
      fail("expected a term");
    }
    if (negative) coeff = F.neg(coeff);
    FqPoly mono(static_cast<std::size_t>(exponent) + 1, PrimePowerField::zero());
    mono[exponent] = coeff;
    result = add(F, result, mono);
  }
  return result;
}

}  // namespace vinbun::poly
