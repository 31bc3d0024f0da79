#pragma once

#include <random>
#include <vector>

#include "schnyder/surface_map.hpp"

// Reference computations used by the tests. They work on raw permutations
// and never call into library predicates.
namespace testref {

inline int count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int k = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++k;
    for (int x = static_cast<int>(i); !seen[x]; x = perm[x]) seen[x] = 1;
  }
  return k;
}

inline std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

// a after b
inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

// Face permutation: sigma^-1 after alpha.
inline std::vector<int> face_perm(const std::vector<int>& alpha, const std::vector<int>& sigma) {
  return compose(inverse(sigma), alpha);
}

inline int vertices(const schnyder::SurfaceMap& m) { return count_cycles(m.sigma_perm()); }
inline int faces(const schnyder::SurfaceMap& m) { return count_cycles(face_perm(m.alpha_perm(), m.sigma_perm())); }

// Whether some dart bijection carries (alpha1, sigma1) to (alpha2, sigma2).
inline bool isomorphic(const schnyder::SurfaceMap& x, const schnyder::SurfaceMap& y) {
  const auto &a1 = x.alpha_perm(), &s1 = x.sigma_perm(), &a2 = y.alpha_perm(), &s2 = y.sigma_perm();
  const int n = static_cast<int>(a1.size());
  if (static_cast<int>(a2.size()) != n) return false;
  for (int image = 0; image < n; ++image) {
    std::vector<int> f(n, -1);
    std::vector<int> stack{0};
    f[0] = image;
    bool ok = true;
    while (ok && !stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      const std::pair<int, int> moves[] = {{a1[d], a2[f[d]]}, {s1[d], s2[f[d]]}};
      for (auto [u, v] : moves) {
        if (f[u] == -1) {
          f[u] = v;
          stack.push_back(u);
        } else if (f[u] != v) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> hit(n, 0);
    for (int v : f) {
      if (v < 0 || hit[v]) ok = false;
      else hit[v] = 1;
    }
    if (ok) return true;
  }
  return false;
}

// Signed edge counts of a dart sequence; reference direction = smaller dart.
inline std::vector<long long> walk_flow(const schnyder::SurfaceMap& m, const std::vector<int>& walk) {
  std::vector<long long> f(m.num_edges(), 0);
  for (int d : walk) f[m.edge(d)] += d < m.alpha(d) ? 1 : -1;
  return f;
}

}  // namespace testref
