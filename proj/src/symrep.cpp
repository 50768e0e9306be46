#include "vinbun/symrep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace vinbun {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::toString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

TwoColumnDiagram TwoColumnDiagram::make(int k, int r) {
  if (k < 0 || r < 0 || 2 * r > k) throw std::invalid_argument("two-column diagram needs 0 <= r <= k/2");
  return {k, r};
}

Partition TwoColumnDiagram::toPartition() const {
  std::vector<int> rows(static_cast<std::size_t>(r), 2);
  rows.insert(rows.end(), static_cast<std::size_t>(k - 2 * r), 1);
  return Partition(std::move(rows));
}

bool TwoColumnDiagram::isTwoColumn(const Partition& p) { return p.parts().empty() || p.parts().front() <= 2; }

TwoColumnDiagram TwoColumnDiagram::fromPartition(const Partition& p) {
  if (!isTwoColumn(p)) throw std::invalid_argument("partition " + p.toString() + " has more than two columns");
  const int r = static_cast<int>(std::count(p.parts().begin(), p.parts().end(), 2));
  return make(p.size(), r);
}

std::string TwoColumnDiagram::toString() const {
  return "rho(" + std::to_string(k - r) + "," + std::to_string(r) + ")";
}

std::vector<Partition> partitionsOf(int k) {
  if (k < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t dimension(const TwoColumnDiagram& d) {
  return factorial(d.k) * static_cast<std::uint64_t>(d.k - 2 * d.r + 1) / (factorial(d.r) * factorial(d.k - d.r + 1));
}

std::uint64_t hookDimension(const Partition& lambda) {
  const auto& rows = lambda.parts();
  const Partition conj = lambda.conjugate();
  std::uint64_t hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j)
      hooks *= static_cast<std::uint64_t>(rows[i] - j - 1 + conj.parts()[j] - static_cast<int>(i) - 1 + 1);
  return factorial(lambda.size()) / hooks;
}

std::uint64_t centralizerOrder(const CycleType& c) {
  std::map<int, int> counts;
  for (int len : c.parts()) ++counts[len];
  std::uint64_t z = 1;
  for (auto [len, m] : counts) {
    for (int i = 0; i < m; ++i) z *= static_cast<std::uint64_t>(len);
    z *= factorial(m);
  }
  return z;
}

std::uint64_t classSize(const CycleType& c) { return factorial(c.size()) / centralizerOrder(c); }

std::int64_t signCharacter(const CycleType& c) {
  std::int64_t s = 1;
  for (int len : c.parts())
    if (len % 2 == 0) s = -s;
  return s;
}

namespace {

// Removing a rim hook of length r from lambda corresponds to moving one bead
// of the beta-set down by r; the sign is (-1)^(beads jumped over).
std::int64_t murnaghanNakayama(const Partition& lambda, const std::vector<int>& cycles, std::size_t from);

struct MemoKey {
  Partition lambda;
  std::vector<int> cycles;
  auto operator<=>(const MemoKey&) const = default;
};

std::shared_mutex& memoMutex() {
  static std::shared_mutex m;
  return m;
}

std::map<MemoKey, std::int64_t>& memo() {
  static std::map<MemoKey, std::int64_t> table;
  return table;
}

std::int64_t murnaghanNakayama(const Partition& lambda, const std::vector<int>& cycles, std::size_t from) {
  if (from == cycles.size()) return lambda.size() == 0 ? 1 : 0;
  std::vector<int> rest(cycles.begin() + static_cast<std::ptrdiff_t>(from), cycles.end());
  MemoKey key{lambda, rest};
  {
    std::shared_lock lock(memoMutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  const int r = cycles[from];
  const auto& rows = lambda.parts();
  const int len = static_cast<int>(rows.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = rows[i] + (len - 1 - i);
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> newRows(len);
    for (int j = 0; j < len; ++j) newRows[j] = nb[j] - (len - 1 - j);
    const std::int64_t sub = murnaghanNakayama(Partition(newRows), cycles, from + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  {
    std::unique_lock lock(memoMutex());
    memo().emplace(std::move(key), total);  // identical values from every writer
  }
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const CycleType& c) {
  if (lambda.size() != c.size())
    throw std::invalid_argument("character: partition " + lambda.toString() + " and cycle type " + c.toString() +
                                " have different sizes");
  return murnaghanNakayama(lambda, c.parts(), 0);
}

std::int64_t character(const TwoColumnDiagram& d, const CycleType& c) { return character(d.toPartition(), c); }

std::int64_t VirtualSnRep::character(const CycleType& c) const {
  std::int64_t total = 0;
  for (const auto& [lambda, m] : multiplicity) total += m * vinbun::character(lambda, c);
  return total;
}

std::int64_t VirtualSnRep::dimension() const {
  std::int64_t total = 0;
  for (const auto& [lambda, m] : multiplicity) total += m * static_cast<std::int64_t>(hookDimension(lambda));
  return total;
}

ClassFunction characterTable(const VirtualSnRep& rep) {
  ClassFunction out;
  for (const auto& c : partitionsOf(rep.k)) out[c] = rep.character(c);
  return out;
}

VirtualSnRep decomposeClassFunction(const ClassFunction& values, int k) {
  const auto classes = partitionsOf(k);
  for (const auto& c : classes)
    if (!values.contains(c)) throw std::invalid_argument("class function missing cycle type " + c.toString());
  for (const auto& [c, v] : values)
    if (c.size() != k) throw std::invalid_argument("cycle type " + c.toString() + " does not belong to S_" + std::to_string(k));
  const auto order = static_cast<std::int64_t>(factorial(k));
  VirtualSnRep rep;
  rep.k = k;
  for (const auto& lambda : classes) {
    std::int64_t inner = 0;
    for (const auto& c : classes)
      inner += static_cast<std::int64_t>(classSize(c)) * character(lambda, c) * values.at(c);
    if (inner % order != 0)
      throw std::domain_error("class function has non-integral multiplicity at " + lambda.toString());
    if (inner != 0) rep.multiplicity[lambda] = inner / order;
  }
  return rep;
}

std::string characterTableCsv(int k) {
  const auto classes = partitionsOf(k);
  std::ostringstream out;
  out << "irrep";
  for (const auto& c : classes) out << ",\"" << c.toString() << "\"";
  out << "\n";
  for (const auto& lambda : classes) {
    out << "\"" << lambda.toString() << "\"";
    for (const auto& c : classes) out << "," << character(lambda, c);
    out << "\n";
  }
  return out.str();
}

}  // namespace vinbun
