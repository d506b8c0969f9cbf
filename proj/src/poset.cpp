#include "skewcat/poset.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace skewcat {

Poset::Poset(int points, std::vector<std::uint8_t> leq) : m_(points), leq_(std::move(leq)) {
  if (m_ < 0) throw InvalidInput("poset size must be nonnegative");
  if (m_ > 30) throw InvalidInput("poset size above bitmask width 30");
  if (leq_.size() != static_cast<size_t>(m_) * m_) throw InvalidInput("leq matrix has wrong shape");
  for (int x = 0; x < m_; ++x)
    if (!this->leq(x, x)) throw InvalidInput("leq not reflexive at " + std::to_string(x));
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (x != y && this->leq(x, y) && this->leq(y, x))
        throw InvalidInput("leq not antisymmetric at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y) {
      if (!this->leq(x, y)) continue;
      for (int z = 0; z < m_; ++z)
        if (this->leq(y, z) && !this->leq(x, z))
          throw InvalidInput("leq not transitive at (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) + ")");
    }
}

bool is_downset(const Poset& p, PointSet u) {
  for (int x = 0; x < p.points(); ++x) {
    if (!((u >> x) & 1u)) continue;
    for (int y = 0; y < p.points(); ++y)
      if (p.leq(y, x) && !((u >> y) & 1u)) return false;
  }
  return true;
}

std::vector<PointSet> downsets_of(const Poset& p, const Limits& limits) {
  const int m = p.points();
  if (m > 30 || (1LL << m) > limits.max_size)
    throw SizeOverflow("2^" + std::to_string(m) + " downset candidates exceed cap " +
                       std::to_string(limits.max_size));
  std::vector<PointSet> down(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (p.leq(y, x)) down[x] |= 1u << y;
  std::vector<PointSet> out;
  for (PointSet u = 0; u < (1u << m); ++u) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      if ((u >> x) & 1u) ok = (down[x] & ~u) == 0;
    if (ok) out.push_back(u);
  }
  return out;
}

PointSet principal_downset(const Poset& p, int x) {
  PointSet u = 0;
  for (int y = 0; y < p.points(); ++y)
    if (p.leq(y, x)) u |= 1u << y;
  return u;
}

bool is_monotone(const Poset& x, const Poset& y, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != x.points()) return false;
  for (int v : f)
    if (v < 0 || v >= y.points()) return false;
  for (int a = 0; a < x.points(); ++a)
    for (int b = 0; b < x.points(); ++b)
      if (x.leq(a, b) && !y.leq(f[a], f[b])) return false;
  return true;
}

std::vector<std::vector<int>> monotone_maps(const Poset& x, const Poset& y) {
  std::vector<std::vector<int>> out;
  if (x.points() == 0) {
    out.push_back({});
    return out;
  }
  if (y.points() == 0) return out;
  std::vector<int> f(x.points(), 0);
  while (true) {
    if (is_monotone(x, y, f)) out.push_back(f);
    int i = x.points() - 1;
    while (i >= 0 && f[i] == y.points() - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

Poset add_top(const Poset& p) {
  const int m = p.points();
  std::vector<std::uint8_t> leq(static_cast<size_t>(m + 1) * (m + 1), 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      leq[static_cast<size_t>(x) * (m + 1) + y] = p.leq(x, y) ? 1 : 0;
  for (int x = 0; x <= m; ++x) leq[static_cast<size_t>(x) * (m + 1) + m] = 1;
  leq[static_cast<size_t>(m) * (m + 1) + m] = 1;
  return Poset(m + 1, std::move(leq));
}

std::vector<std::pair<int, int>> hasse_edges(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  const int m = p.points();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < m && covered; ++z)
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) covered = false;
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

std::vector<Poset> all_posets(int m) {
  std::vector<Poset> out;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  std::vector<int> choice(pairs.size(), 0);
  while (true) {
    std::vector<std::uint8_t> leq(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) leq[static_cast<size_t>(i) * m + i] = 1;
    for (size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      if (choice[k] == 1) leq[static_cast<size_t>(i) * m + j] = 1;
      if (choice[k] == 2) leq[static_cast<size_t>(j) * m + i] = 1;
    }
    bool transitive = true;
    for (int x = 0; x < m && transitive; ++x)
      for (int y = 0; y < m && transitive; ++y) {
        if (!leq[static_cast<size_t>(x) * m + y]) continue;
        for (int z = 0; z < m; ++z)
          if (leq[static_cast<size_t>(y) * m + z] && !leq[static_cast<size_t>(x) * m + z]) {
            transitive = false;
            break;
          }
      }
    if (transitive) out.emplace_back(m, std::move(leq));
    int k = static_cast<int>(pairs.size()) - 1;
    while (k >= 0 && choice[k] == 2) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  return out;
}

std::optional<std::vector<int>> find_poset_isomorphism(const Poset& a, const Poset& b) {
  const int m = a.points();
  if (b.points() != m) return std::nullopt;
  std::vector<int> f(m, -1);
  std::vector<char> used(m, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == m) return true;
    for (int v = 0; v < m; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = (a.leq(i, j) == b.leq(v, f[j])) && (a.leq(j, i) == b.leq(f[j], v));
      if (!ok) continue;
      f[i] = v;
      used[v] = 1;
      if (rec(i + 1)) return true;
      used[v] = 0;
      f[i] = -1;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

}  // namespace skewcat
