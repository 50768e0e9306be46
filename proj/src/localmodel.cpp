#include "vinbun/localmodel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>

#include "parallel.hpp"
#include "vinbun/kcalc.hpp"

namespace vinbun {

// ---------------------------------------------------------------------------
// Equations

EquationSystem::EquationSystem(std::vector<int> multiplicities) : multiplicities_(std::move(multiplicities)) {
  if (multiplicities_.empty()) throw std::invalid_argument("equation system needs at least one factor");
  for (std::size_t k = 0; k < multiplicities_.size(); ++k) {
    const int m = multiplicities_[k];
    if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    for (int r = 1; r <= m - 1; ++r) {
      FactorEquation eq;
      eq.factor = static_cast<int>(k);
      eq.r = r;
      for (int i = -m; i <= -1; ++i) {
        const int j = r - m - i;
        if (j >= 0 && j <= m - 1) eq.terms.push_back({i, j});
      }
      equations_.push_back(std::move(eq));
    }
  }
}

int EquationSystem::degree() const {
  int n = 0;
  for (int m : multiplicities_) n += m;
  return n;
}

std::string EquationSystem::variableName(char letter, int factor, int index) {
  return std::string(1, letter) + std::string(static_cast<std::size_t>(factor), '\'') + "[" + std::to_string(index) +
         "]";
}

std::string EquationSystem::toString() const {
  std::string out;
  for (const auto& eq : equations_) {
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      if (t) out += " + ";
      out += variableName('a', eq.factor, eq.terms[t].aIndex) + "*" + variableName('b', eq.factor, eq.terms[t].bIndex);
    }
    out += " = 0\n";
  }
  auto dExpr = [&](int k) {
    return variableName('a', k, -multiplicities_[static_cast<std::size_t>(k)]) + "*" + variableName('b', k, 0);
  };
  out += "d = " + dExpr(0) + "\n";
  for (int k = 1; k < factorCount(); ++k) out += dExpr(0) + " = " + dExpr(k) + "\n";
  return out;
}

EquationSystem buildSystem(const std::vector<int>& multiplicities) { return EquationSystem(multiplicities); }

// ---------------------------------------------------------------------------
// Points and constraints

Fq factorD(const PrimePowerField& F, const FactorPoint& p) { return F.mul(p.a.front(), p.b.front()); }

namespace {

bool factorSatisfies(const PrimePowerField& F, const FactorPoint& p) {
  const int m = static_cast<int>(p.a.size());
  for (int r = 1; r <= m - 1; ++r) {
    Fq s = PrimePowerField::zero();
    for (int j = 0; j <= r; ++j) s = F.add(s, F.mul(p.a[static_cast<std::size_t>(r - j)], p.b[static_cast<std::size_t>(j)]));
    if (s != PrimePowerField::zero()) return false;
  }
  return true;
}

std::uint64_t saturatingPow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

std::uint64_t checkedMul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("point count exceeds 64 bits");
  return out;
}

std::uint64_t checkedAdd(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("point count exceeds 64 bits");
  return out;
}

void decode(const PrimePowerField& F, std::uint64_t index, std::vector<Fq>& out) {
  const std::uint64_t q = F.order();
  for (auto& x : out) {
    x = F.element(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
}

// Solutions in b of the linear system attached to a fixed a-vector.
class BSolver {
 public:
  BSolver(const PrimePowerField& F, int m) : F_(F), m_(m) {}

  void load(const std::vector<Fq>& a) {
    const auto zero = PrimePowerField::zero();
    rows_.assign(static_cast<std::size_t>(std::max(m_ - 1, 0)), std::vector<Fq>(static_cast<std::size_t>(m_), zero));
    for (int r = 1; r <= m_ - 1; ++r)
      for (int j = 0; j <= r; ++j) rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(r - j)];
    pivots_.clear();
    std::size_t rank = 0;
    for (int c = 0; c < m_ && rank < rows_.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows_.size() && rows_[piv][static_cast<std::size_t>(c)] == zero) ++piv;
      if (piv == rows_.size()) continue;
      std::swap(rows_[rank], rows_[piv]);
      const Fq inv = F_.inv(rows_[rank][static_cast<std::size_t>(c)]);
      for (auto& x : rows_[rank]) x = F_.mul(x, inv);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == rank) continue;
        const Fq f = rows_[i][static_cast<std::size_t>(c)];
        if (f == zero) continue;
        for (int j = 0; j < m_; ++j)
          rows_[i][static_cast<std::size_t>(j)] =
              F_.sub(rows_[i][static_cast<std::size_t>(j)], F_.mul(f, rows_[rank][static_cast<std::size_t>(j)]));
      }
      pivots_.push_back(c);
      ++rank;
    }
    free_.clear();
    for (int c = 0; c < m_; ++c)
      if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) free_.push_back(c);
    // is b_0 a nonzero functional on the solution space?
    b0Varies_ = false;
    if (!pivots_.empty() && pivots_.front() == 0) {
      for (int f : free_)
        if (rows_[0][static_cast<std::size_t>(f)] != zero) b0Varies_ = true;
    } else {
      b0Varies_ = true;  // column 0 is free
    }
  }

  int kernelDimension() const { return static_cast<int>(free_.size()); }
  bool b0Varies() const { return b0Varies_; }

  void solution(std::uint64_t freeIndex, std::vector<Fq>& b) const {
    const std::uint64_t q = F_.order();
    b.assign(static_cast<std::size_t>(m_), PrimePowerField::zero());
    for (int f : free_) {
      b[static_cast<std::size_t>(f)] = F_.element(static_cast<std::uint32_t>(freeIndex % q));
      freeIndex /= q;
    }
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Fq s = PrimePowerField::zero();
      for (int f : free_) s = F_.add(s, F_.mul(rows_[i][static_cast<std::size_t>(f)], b[static_cast<std::size_t>(f)]));
      b[static_cast<std::size_t>(pivots_[i])] = F_.neg(s);
    }
  }

 private:
  const PrimePowerField& F_;
  int m_;
  std::vector<std::vector<Fq>> rows_;
  std::vector<int> pivots_;
  std::vector<int> free_;
  bool b0Varies_ = false;
};

void enforceBudget(const EquationSystem& sys, const PrimePowerField& F, const EnumerationOptions& options) {
  const std::uint64_t c = candidateCount(sys, F, options.strategy);
  if (c > options.budget) throw BudgetExceeded(c, options.budget);
}

std::vector<std::uint64_t> factorCountByD(int m, const PrimePowerField& F, int jobs) {
  const std::uint64_t q = F.order();
  const std::uint64_t aSpace = saturatingPow(q, m);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(std::max(1, jobs)),
                                                  std::vector<std::uint64_t>(q, 0));
  detail::parallelRanges(jobs, aSpace, [&](std::uint64_t begin, std::uint64_t end, int worker) {
    auto& acc = partial[static_cast<std::size_t>(worker)];
    BSolver solver(F, m);
    std::vector<Fq> a(static_cast<std::size_t>(m));
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      decode(F, idx, a);
      solver.load(a);
      const std::uint64_t size = saturatingPow(q, solver.kernelDimension());
      if (a.front() == PrimePowerField::zero() || !solver.b0Varies()) {
        acc[0] = checkedAdd(acc[0], size);
      } else {
        for (auto& x : acc) x = checkedAdd(x, size / q);
      }
    }
  });
  std::vector<std::uint64_t> total(q, 0);
  for (const auto& p : partial)
    for (std::size_t c = 0; c < q; ++c) total[c] = checkedAdd(total[c], p[c]);
  return total;
}

std::vector<std::uint64_t> naiveCountByD(const EquationSystem& sys, const PrimePowerField& F, int jobs) {
  const std::uint64_t q = F.order();
  const std::uint64_t space = saturatingPow(q, sys.variableCount());
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(std::max(1, jobs)),
                                                  std::vector<std::uint64_t>(q, 0));
  detail::parallelRanges(jobs, space, [&](std::uint64_t begin, std::uint64_t end, int worker) {
    auto& acc = partial[static_cast<std::size_t>(worker)];
    std::vector<Fq> coords(static_cast<std::size_t>(sys.variableCount()));
    std::vector<FactorPoint> factors;
    for (int m : sys.multiplicities())
      factors.push_back({std::vector<Fq>(static_cast<std::size_t>(m)), std::vector<Fq>(static_cast<std::size_t>(m))});
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      decode(F, idx, coords);
      std::size_t pos = 0;
      for (auto& f : factors) {
        for (auto& x : f.a) x = coords[pos++];
        for (auto& x : f.b) x = coords[pos++];
      }
      bool ok = true;
      const Fq d = factorD(F, factors.front());
      for (const auto& f : factors) {
        if (!factorSatisfies(F, f) || factorD(F, f) != d) {
          ok = false;
          break;
        }
      }
      if (ok) ++acc[d.value];
    }
  });
  std::vector<std::uint64_t> total(q, 0);
  for (const auto& p : partial)
    for (std::size_t c = 0; c < q; ++c) total[c] += p[c];
  return total;
}

// Every solution of the single factor [m], in a-index then kernel order.
template <class Visit>
void forEachFactorPoint(int m, const PrimePowerField& F, std::uint64_t aBegin, std::uint64_t aEnd, Visit&& visit) {
  const std::uint64_t q = F.order();
  BSolver solver(F, m);
  FactorPoint p{std::vector<Fq>(static_cast<std::size_t>(m)), {}};
  for (std::uint64_t idx = aBegin; idx < aEnd; ++idx) {
    decode(F, idx, p.a);
    solver.load(p.a);
    const std::uint64_t size = saturatingPow(q, solver.kernelDimension());
    for (std::uint64_t s = 0; s < size; ++s) {
      solver.solution(s, p.b);
      visit(p);
    }
  }
}

}  // namespace

bool satisfies(const EquationSystem& sys, const PrimePowerField& F, const SolutionPoint& pt) {
  if (pt.factors.size() != sys.multiplicities().size()) return false;
  for (std::size_t k = 0; k < pt.factors.size(); ++k) {
    const auto& f = pt.factors[k];
    const auto m = static_cast<std::size_t>(sys.multiplicities()[k]);
    if (f.a.size() != m || f.b.size() != m) return false;
    if (!factorSatisfies(F, f) || factorD(F, f) != pt.dValue) return false;
  }
  return true;
}

DConstraint DConstraint::parse(const std::string& text, const PrimePowerField& F) {
  if (text == "any") return any();
  if (text == "zero") return zero();
  if (text == "nonzero") return nonzero();
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw std::invalid_argument("d constraint must be any, zero, nonzero or an element index, got '" + text + "'");
  return equals(F.element(static_cast<std::uint32_t>(value)));
}

bool DConstraint::admits(Fq d) const {
  switch (kind) {
    case Kind::Any:
      return true;
    case Kind::Zero:
      return d == PrimePowerField::zero();
    case Kind::Nonzero:
      return d != PrimePowerField::zero();
    case Kind::Equals:
      return d == value;
  }
  return false;
}

BudgetExceeded::BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(candidates) + " candidates, budget is " +
                         std::to_string(budget)),
      candidates_(candidates),
      budget_(budget) {}

std::uint64_t defaultBudget() {
  constexpr std::uint64_t fallback = 1'000'000'000ULL;
  const char* env = std::getenv("VINBUN_BUDGET");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return v;
}

std::uint64_t candidateCount(const EquationSystem& sys, const PrimePowerField& F, EnumerationStrategy strategy) {
  const std::uint64_t q = F.order();
  if (strategy == EnumerationStrategy::Naive) return saturatingPow(q, sys.variableCount());
  std::uint64_t total = 0;
  for (int m : sys.multiplicities()) {
    const std::uint64_t c = saturatingPow(q, m);
    total = c > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max() : total + c;
  }
  return total;
}

std::vector<std::uint64_t> countByD(const EquationSystem& sys, const PrimePowerField& F,
                                    const EnumerationOptions& options) {
  enforceBudget(sys, F, options);
  if (options.strategy == EnumerationStrategy::Naive) return naiveCountByD(sys, F, options.jobs);
  std::map<int, std::vector<std::uint64_t>> perMultiplicity;
  for (int m : sys.multiplicities())
    if (!perMultiplicity.count(m)) perMultiplicity[m] = factorCountByD(m, F, options.jobs);
  std::vector<std::uint64_t> out(F.order(), 1);
  for (int m : sys.multiplicities()) {
    const auto& c = perMultiplicity.at(m);
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = checkedMul(out[d], c[d]);
  }
  return out;
}

std::uint64_t countPoints(const EquationSystem& sys, const PrimePowerField& F, DConstraint constraint,
                          const EnumerationOptions& options) {
  const auto byD = countByD(sys, F, options);
  std::uint64_t total = 0;
  for (std::uint32_t d = 0; d < byD.size(); ++d)
    if (constraint.admits(F.element(d))) total = checkedAdd(total, byD[d]);
  return total;
}

void forEachPoint(const EquationSystem& sys, const PrimePowerField& F, DConstraint constraint,
                  const std::function<void(const SolutionPoint&)>& visit, const EnumerationOptions& options) {
  enforceBudget(sys, F, options);
  const std::uint64_t q = F.order();
  const auto& ms = sys.multiplicities();
  if (ms.size() == 1) {
    SolutionPoint pt;
    pt.factors.resize(1);
    forEachFactorPoint(ms[0], F, 0, saturatingPow(q, ms[0]), [&](const FactorPoint& p) {
      const Fq d = factorD(F, p);
      if (!constraint.admits(d)) return;
      pt.factors[0] = p;
      pt.dValue = d;
      visit(pt);
    });
    return;
  }
  // group each factor's solutions by d-value, then walk the fiber products
  std::vector<std::vector<std::vector<FactorPoint>>> byD(ms.size(), std::vector<std::vector<FactorPoint>>(q));
  for (std::size_t k = 0; k < ms.size(); ++k) {
    forEachFactorPoint(ms[k], F, 0, saturatingPow(q, ms[k]), [&](const FactorPoint& p) {
      const Fq d = factorD(F, p);
      if (constraint.admits(d)) byD[k][d.value].push_back(p);
    });
  }
  SolutionPoint pt;
  pt.factors.resize(ms.size());
  for (std::uint32_t d = 0; d < q; ++d) {
    bool empty = false;
    for (std::size_t k = 0; k < ms.size(); ++k) empty = empty || byD[k][d].empty();
    if (empty) continue;
    pt.dValue = F.element(d);
    std::vector<std::size_t> pos(ms.size(), 0);
    for (bool more = true; more;) {
      for (std::size_t k = 0; k < ms.size(); ++k) pt.factors[k] = byD[k][d][pos[k]];
      visit(pt);
      more = false;
      for (std::size_t k = ms.size(); k-- > 0;) {
        if (++pos[k] < byD[k][d].size()) {
          more = true;
          break;
        }
        pos[k] = 0;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Defects and strata

int DefectProfile::total() const {
  int s = 0;
  for (int k : perFactor) s += k;
  return s;
}

int factorDefect(const PrimePowerField& F, const FactorPoint& p) {
  const int m = static_cast<int>(p.a.size());
  const auto zero = PrimePowerField::zero();
  auto ord = [&](const std::vector<Fq>& coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != zero) return static_cast<int>(i);
    return m;
  };
  // t^s coefficients of g f for s >= 0: sum over i + j = s of a_i b_j
  std::vector<Fq> nonneg(static_cast<std::size_t>(std::max(m - 1, 0)), zero);
  for (int s = 0; s <= m - 2; ++s)
    for (int j = s + 1; j <= m - 1; ++j)
      nonneg[static_cast<std::size_t>(s)] =
          F.add(nonneg[static_cast<std::size_t>(s)],
                F.mul(p.a[static_cast<std::size_t>(s - j + m)], p.b[static_cast<std::size_t>(j)]));
  return std::min({m, ord(p.b), ord(p.a), ord(nonneg)});
}

DefectProfile defectProfile(const PrimePowerField& F, const SolutionPoint& pt) {
  if (pt.dValue != PrimePowerField::zero())
    throw std::invalid_argument("defect is defined only on the B-locus (d = 0)");
  DefectProfile out;
  for (const auto& f : pt.factors) out.perFactor.push_back(factorDefect(F, f));
  return out;
}

std::map<int, std::uint64_t> strataCounts(int n, const PrimePowerField& F, const EnumerationOptions& options) {
  const EquationSystem sys({n});
  enforceBudget(sys, F, EnumerationOptions{options.jobs, options.budget, EnumerationStrategy::Propagated});
  const std::uint64_t q = F.order();
  std::vector<std::map<int, std::uint64_t>> partial(static_cast<std::size_t>(std::max(1, options.jobs)));
  detail::parallelRanges(options.jobs, saturatingPow(q, n), [&](std::uint64_t begin, std::uint64_t end, int worker) {
    auto& acc = partial[static_cast<std::size_t>(worker)];
    forEachFactorPoint(n, F, begin, end, [&](const FactorPoint& p) {
      if (factorD(F, p) == PrimePowerField::zero()) ++acc[factorDefect(F, p)];
    });
  });
  std::map<int, std::uint64_t> out;
  for (const auto& p : partial)
    for (const auto& [k, c] : p) out[k] += c;
  return out;
}

std::uint64_t predictedStratumCount(int n, int k, std::uint64_t q) {
  auto c = [q](int m) -> std::uint64_t { return m == 0 ? 1 : saturatingPow(q, m) - saturatingPow(q, m - 1); };
  std::uint64_t total = 0;
  for (int n1 = 0; n1 <= n - k; ++n1) total = checkedAdd(total, checkedMul(c(n1), c(n - k - n1)));
  return total;
}

std::map<std::uint32_t, std::uint64_t> fiberCounts(int n, const PrimePowerField& F,
                                                   const EnumerationOptions& options) {
  const auto byD = countByD(EquationSystem({n}), F, options);
  std::map<std::uint32_t, std::uint64_t> out;
  for (std::uint32_t d = 1; d < byD.size(); ++d) out[d] = byD[d];
  return out;
}

bool perFiberUniformity(int n, const PrimePowerField& F, const EnumerationOptions& options) {
  const auto counts = fiberCounts(n, F, options);
  return std::all_of(counts.begin(), counts.end(),
                     [&](const auto& kv) { return kv.second == counts.begin()->second; });
}

bool gmOrbitCheck(const EquationSystem& sys, const PrimePowerField& F, const SolutionPoint& pt, Fq c) {
  const Fq c2 = F.mul(c, c);
  SolutionPoint scaled = pt;
  for (auto& f : scaled.factors) {
    for (auto& x : f.a) x = F.mul(c2, x);
    for (auto& x : f.b) x = F.mul(c2, x);
  }
  scaled.dValue = F.mul(F.mul(c2, c2), pt.dValue);
  return satisfies(sys, F, scaled);
}

OmegaCountCheck omegaPointCountIdentity(int n, const EffectiveDivisor& D, const PrimePowerField& F,
                                        const EnumerationOptions& options) {
  if (D.degree() != n) throw std::invalid_argument("divisor degree differs from n");
  if (!D.isRational()) throw std::invalid_argument("fibers are modelled only over divisors with rational support");
  OmegaCountCheck out;
  if (n == 0) {
    // the fiber over the empty divisor is the point with d ranging over G_m
    out.count = F.order() - 1;
  } else {
    out.count = countPoints(EquationSystem(D.multiplicities()), F, DConstraint::nonzero(), options);
  }
  const std::uint64_t q = F.order();
  out.traceSide = Rational(saturatingPow(q, n)) * Rational(q - 1) * traceOmegaTilde(n, D).specializeAtQ(static_cast<std::int64_t>(q));
  const int m = static_cast<int>(D.parts().size());
  out.closedForm = checkedMul(saturatingPow(q - 1, m + 1), saturatingPow(q, n - m));
  out.pass = Rational(out.count) == out.traceSide && out.count == out.closedForm;
  return out;
}

}  // namespace vinbun
