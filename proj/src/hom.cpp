#include "skewcat/hom.hpp"

#include <algorithm>
#include <functional>

namespace skewcat {

bool is_homomorphism(const std::vector<Elt>& map, const SkewLattice& source,
                     const SkewLattice& target) {
  const int n = source.size();
  if (static_cast<int>(map.size()) != n) return false;
  for (Elt v : map)
    if (v < 0 || v >= target.size()) return false;
  if (map[source.zero()] != target.zero()) return false;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      if (map[source.meet(x, y)] != target.meet(map[x], map[y])) return false;
      if (map[source.join(x, y)] != target.join(map[x], map[y])) return false;
    }
  return true;
}

SkewHom identity_hom(const SkewLattice& s) {
  std::vector<Elt> map(s.size());
  for (Elt x = 0; x < s.size(); ++x) map[x] = x;
  return SkewHom{s, s, std::move(map)};
}

SkewHom compose(const SkewHom& g, const SkewHom& f) {
  if (!(f.target == g.source)) throw InvalidInput("compose: middle algebras differ");
  std::vector<Elt> map(f.map.size());
  for (size_t x = 0; x < f.map.size(); ++x) map[x] = g.map[f.map[x]];
  return SkewHom{f.source, g.target, std::move(map)};
}

namespace {

// Checks every constraint whose three participating indices are all <= i once
// f[i] has just been assigned; over a whole assignment this covers every pair.
bool consistent_at(const SkewLattice& s, const SkewLattice& t, const std::vector<Elt>& f, int i) {
  for (Elt j = 0; j <= i; ++j) {
    Elt m = s.meet(i, j), mj = s.meet(j, i);
    Elt v = s.join(i, j), vj = s.join(j, i);
    if (m <= i && f[m] != t.meet(f[i], f[j])) return false;
    if (mj <= i && f[mj] != t.meet(f[j], f[i])) return false;
    if (v <= i && f[v] != t.join(f[i], f[j])) return false;
    if (vj <= i && f[vj] != t.join(f[j], f[i])) return false;
  }
  for (Elt j = 0; j < i; ++j)
    for (Elt k = 0; k < i; ++k) {
      if (s.meet(j, k) == i && f[i] != t.meet(f[j], f[k])) return false;
      if (s.join(j, k) == i && f[i] != t.join(f[j], f[k])) return false;
    }
  return true;
}

}  // namespace

std::vector<std::vector<Elt>> enumerate_homs(const SkewLattice& source, const SkewLattice& target) {
  const int n = source.size(), m = target.size();
  std::vector<std::vector<Elt>> out;
  std::vector<Elt> f(n, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(f);
      return;
    }
    if (i == source.zero()) {
      f[i] = target.zero();
      if (consistent_at(source, target, f, i)) rec(i + 1);
      f[i] = -1;
      return;
    }
    for (Elt v = 0; v < m; ++v) {
      f[i] = v;
      if (consistent_at(source, target, f, i)) rec(i + 1);
    }
    f[i] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elt>> find_isomorphism(const SkewLattice& a, const SkewLattice& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;

  auto profile = [](const SkewLattice& s) {
    const int n = s.size();
    std::vector<int> dsize(n, 0), up(n, 0), down(n, 0);
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y) {
        if (s.meet(s.meet(x, y), x) == x && s.meet(s.meet(y, x), y) == y) ++dsize[x];
        if (s.leq(x, y)) ++up[x];
        if (s.leq(y, x)) ++down[x];
      }
    std::vector<std::array<int, 3>> p(n);
    for (Elt x = 0; x < n; ++x) p[x] = {dsize[x], up[x], down[x]};
    return p;
  };
  auto pa = profile(a), pb = profile(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Elt> f(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    for (Elt v = 0; v < n; ++v) {
      if (used[v] || pa[i] != pb[v]) continue;
      if ((i == a.zero()) != (v == b.zero())) continue;
      f[i] = v;
      used[v] = 1;
      if (consistent_at(a, b, f, i) && rec(i + 1)) return true;
      used[v] = 0;
    }
    f[i] = -1;
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

}  // namespace skewcat
