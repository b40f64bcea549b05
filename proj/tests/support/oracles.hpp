#pragma once

// Brute-force reference computations for the test suites.  Nothing here
// uses the library's counting code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle_ref {

using Int = std::int64_t;

/// Ordered k-tuples of positive integers with product n, weighted by
/// weight(tuple).  Plain recursion over trial divisors.
inline Int factorizations(Int n, int k, const std::function<Int(const std::vector<Int>&)>& weight) {
  std::vector<Int> cur;
  std::function<Int(Int, int)> rec = [&](Int rest, int left) -> Int {
    if (left == 1) {
      cur.push_back(rest);
      const Int w = weight(cur);
      cur.pop_back();
      return w;
    }
    Int total = 0;
    for (Int d = 1; d <= rest; ++d) {
      if (rest % d != 0) continue;
      cur.push_back(d);
      total += rec(rest / d, left - 1);
      cur.pop_back();
    }
    return total;
  };
  return n < 1 ? 0 : rec(n, k);
}

inline Int divisor_power_sum(Int n, int p) {
  Int s = 0;
  for (Int d = 1; d <= n; ++d)
    if (n % d == 0) {
      Int t = 1;
      for (int i = 0; i < p; ++i) t *= d;
      s += t;
    }
  return s;
}

inline Int d3(Int n) {
  return factorizations(n, 3, [](const std::vector<Int>&) { return Int{1}; });
}

/// Index-n sublattices of Z^3 counted by factorization n = a b c with weight
/// b c^2 (choices of off-diagonal entries).
inline Int omega(Int n) {
  return factorizations(n, 3, [](const std::vector<Int>& t) { return t[1] * t[2] * t[2]; });
}

/// Subgroups of order `order` in (Z/n)^dim, as sorted element codes.  Built
/// by closing upward from the trivial group one cyclic factor at a time.
inline std::set<std::vector<int>> subgroups_of_order(int n, int dim, int order) {
  int size = 1;
  for (int i = 0; i < dim; ++i) size *= n;
  auto add = [&](int p, int q) {
    int r = 0, scale = 1;
    for (int i = 0; i < dim; ++i) {
      r += ((p / scale % n + q / scale % n) % n) * scale;
      scale *= n;
    }
    return r;
  };
  std::set<std::vector<int>> seen{{0}};
  std::vector<std::vector<int>> frontier{{0}};
  std::set<std::vector<int>> out;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& S : frontier) {
      if (static_cast<int>(S.size()) == order) {
        out.insert(S);
        continue;
      }
      for (int g = 1; g < size; ++g) {
        if (std::binary_search(S.begin(), S.end(), g)) continue;
        std::vector<int> multiples{0};
        for (int m = g; m != 0; m = add(m, g)) multiples.push_back(m);
        std::set<int> T;
        for (int s : S)
          for (int m : multiples) T.insert(add(s, m));
        if (static_cast<int>(T.size()) > order || order % static_cast<int>(T.size()) != 0) continue;
        std::vector<int> v(T.begin(), T.end());
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Number of order-n subgroups of (Z/n)^dim mapped to themselves by every
/// coordinate sign change.  Orthogonal duality matches these with the
/// sign-invariant sublattices of index n in Z^dim.
inline Int sign_invariant_subgroups(int n, int dim) {
  Int count = 0;
  for (const auto& S : subgroups_of_order(n, dim, n)) {
    bool ok = true;
    for (int axis = 0; axis < dim && ok; ++axis) {
      int scale = 1;
      for (int i = 0; i < axis; ++i) scale *= n;
      for (int s : S) {
        const int digit = s / scale % n;
        const int flipped = s - digit * scale + ((n - digit) % n) * scale;
        if (!std::binary_search(S.begin(), S.end(), flipped)) {
          ok = false;
          break;
        }
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace oracle_ref
