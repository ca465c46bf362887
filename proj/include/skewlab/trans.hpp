#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "skewlab/digraph.hpp"
#include "skewlab/errors.hpp"

namespace skewlab {

/// Hard ceiling for the exact solvers.
inline constexpr int kSolverCeiling = 256;

namespace detail {

/// Exact maximum "chain" solver: a chain is a vertex sequence v1,...,vk with
/// a one-way arc vi -> vj for every i < j. In a tournament this is exactly a
/// transitive subtournament; in a general digraph it is an induced transitive
/// tournament. Chains are enumerated top-down (each prefix dominates the
/// rest), so the candidate set is the intersection of strict out-neighborhoods.
class ChainSolver {
 public:
  explicit ChainSolver(const Digraph& g) : n_(g.size()), beats_(n_, Bits(n_)) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && g.arc(u, v) && !g.arc(v, u)) beats_[u].set(v);
  }

  /// Exact size of the largest chain inside `allowed`.
  int max_chain(const Bits& allowed) {
    best_ = greedy(allowed);
    dfs(allowed, 0);
    return best_;
  }

  /// Subset DP over all 2^n vertex subsets; exact, for small n.
  int max_chain_dp(std::vector<int>* chain_out) {
    const std::size_t full = std::size_t{1} << n_;
    std::vector<std::uint32_t> mask(n_);
    for (int v = 0; v < n_; ++v) {
      std::uint32_t m = 0;
      beats_[v].for_each([&](int u) { m |= std::uint32_t{1} << u; });
      mask[v] = m;
    }
    std::vector<std::uint8_t> g(full, 0);
    for (std::size_t s = 1; s < full; ++s) {
      std::uint32_t rest = static_cast<std::uint32_t>(s);
      std::uint8_t best = 0;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const std::uint8_t cand =
            static_cast<std::uint8_t>(1 + g[s & mask[v]]);
        best = std::max(best, cand);
      }
      g[s] = best;
    }
    if (chain_out) {
      chain_out->clear();
      std::size_t s = full - 1;
      while (g[s] > 0) {
        std::uint32_t rest = static_cast<std::uint32_t>(s);
        while (rest) {
          const int v = std::countr_zero(rest);
          rest &= rest - 1;
          if (1 + g[s & mask[v]] == g[s]) {
            chain_out->push_back(v);
            s &= mask[v];
            break;
          }
        }
      }
    }
    return g[full - 1];
  }

  /// Lexicographically smallest dominance order among chains of size k
  /// inside `allowed`. Requires k == max_chain(allowed).
  std::vector<int> lexmin_chain(Bits allowed, int k) {
    std::vector<int> order;
    while (k > 0) {
      bool placed = false;
      for (int v = 0; v < n_ && !placed; ++v) {
        if (!allowed.test(v)) continue;
        Bits rest = allowed & beats_[v];
        if (1 + max_chain(rest) >= k) {
          order.push_back(v);
          allowed = rest;
          --k;
          placed = true;
        }
      }
      if (!placed) break;  // unreachable when the precondition holds
    }
    return order;
  }

  const Bits& beats(int v) const { return beats_[v]; }

 private:
  int greedy(const Bits& allowed) {
    int best = 0;
    for (int s = 0; s < n_; ++s) {
      if (!allowed.test(s)) continue;
      int len = 1;
      Bits p = allowed & beats_[s];
      while (p.any()) {
        // pick the candidate keeping the most follow-ups
        int pick = -1, pickc = -1;
        p.for_each([&](int u) {
          const int c = (p & beats_[u]).count();
          if (c > pickc) {
            pickc = c;
            pick = u;
          }
        });
        ++len;
        p &= beats_[pick];
      }
      best = std::max(best, len);
    }
    return best;
  }

  void dfs(const Bits& P, int size) {
    if (size > best_) best_ = size;
    if (!P.any() || size + P.count() <= best_) return;
    // bit-row domination: skip branching on u when some w in P beats u and
    // covers u's candidate row; any chain through u maps to one through w.
    std::vector<int> branch;
    P.for_each([&](int u) {
      const Bits pu = P & beats_[u];
      bool dominated = false;
      P.for_each([&](int w) {
        if (dominated || w == u) return;
        if (beats_[w].test(u) && pu.subset_of(beats_[w])) dominated = true;
      });
      if (!dominated) branch.push_back(u);
    });
    for (int u : branch) {
      if (size + 1 + (P & beats_[u]).count() <= best_) continue;
      dfs(P & beats_[u], size + 1);
    }
  }

  int n_;
  std::vector<Bits> beats_;
  int best_ = 0;
};

/// Exact maximum clique over a symmetric adjacency given as bit rows,
/// with a greedy-coloring bound.
class CliqueSolver {
 public:
  CliqueSolver(int n, std::vector<Bits> adj) : n_(n), adj_(std::move(adj)) {}

  int max_clique(const Bits& allowed) {
    best_ = 0;
    cur_ = 0;
    expand(allowed);
    return best_;
  }

  /// Lexicographically smallest vertex list among cliques of size k.
  std::vector<int> lexmin_clique(Bits allowed, int k) {
    std::vector<int> out;
    while (k > 0) {
      bool placed = false;
      for (int v = 0; v < n_ && !placed; ++v) {
        if (!allowed.test(v)) continue;
        Bits rest = allowed & adj_[v];
        // restrict the remainder to indices above v so the list stays sorted
        for (int u = 0; u <= v; ++u) rest.reset(u);
        if (1 + max_clique(rest) >= k) {
          out.push_back(v);
          allowed = rest;
          --k;
          placed = true;
        }
      }
      if (!placed) break;  // unreachable when the precondition holds
    }
    return out;
  }

 private:
  void expand(const Bits& P) {
    if (cur_ > best_) best_ = cur_;
    if (!P.any() || cur_ + P.count() <= best_) return;
    // greedy coloring: color classes are independent sets, so a clique takes
    // at most one vertex per class
    std::vector<int> order, color;
    Bits uncolored = P;
    int c = 0;
    while (uncolored.any()) {
      ++c;
      Bits avail = uncolored;
      while (avail.any()) {
        const int v = avail.lowest();
        avail.reset(v);
        uncolored.reset(v);
        Bits cut = avail & adj_[v];
        cut.for_each([&](int x) { avail.reset(x); });
        order.push_back(v);
        color.push_back(c);
      }
    }
    Bits P2 = P;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur_ + color[i] <= best_) return;
      const int v = order[i];
      ++cur_;
      expand(P2 & adj_[v]);
      --cur_;
      P2.reset(v);
    }
  }

  int n_;
  std::vector<Bits> adj_;
  int best_ = 0;
  int cur_ = 0;
};

inline void check_ceiling(int n) {
  if (n > kSolverCeiling) throw TooLargeError(n);
}

}  // namespace detail

struct TransResult {
  int size = 0;
  HomogeneousWitness witness;
};

/// Exact size of the largest transitive subtournament, with a certifying
/// witness (lexicographically smallest dominance order).
inline TransResult trans_exact(const Tournament& t) {
  detail::check_ceiling(t.size());
  detail::ChainSolver solver(t.graph());
  int best;
  if (t.size() <= 24) {
    best = solver.max_chain_dp(nullptr);
  } else {
    best = solver.max_chain(Bits::full(t.size()));
  }
  TransResult r;
  r.size = best;
  r.witness.kind = WitnessKind::Transitive;
  r.witness.vertices = solver.lexmin_chain(Bits::full(t.size()), best);
  return r;
}

struct HomResult {
  int size = 0;
  HomogeneousWitness witness;
};

namespace detail {

inline std::vector<Bits> clique_rows(const Digraph& g) {
  std::vector<Bits> rows(g.size(), Bits(g.size()));
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (u != v && g.arc(u, v) && g.arc(v, u)) rows[u].set(v);
  return rows;
}

inline std::vector<Bits> independent_rows(const Digraph& g) {
  std::vector<Bits> rows(g.size(), Bits(g.size()));
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (u != v && !g.arc(u, v) && !g.arc(v, u)) rows[u].set(v);
  return rows;
}

}  // namespace detail

/// hom(G): the larger of the maximum complete subset (all ordered pairs
/// present) and the maximum independent set (no arcs either way). Ties go to
/// the independent side.
inline HomResult hom_exact(const Digraph& g) {
  detail::check_ceiling(g.size());
  const Bits all = Bits::full(g.size());
  detail::CliqueSolver comp(g.size(), detail::clique_rows(g));
  detail::CliqueSolver indep(g.size(), detail::independent_rows(g));
  const int c = comp.max_clique(all);
  const int i = indep.max_clique(all);
  HomResult r;
  if (i >= c) {
    r.size = i;
    r.witness = {WitnessKind::Independent, indep.lexmin_clique(all, i)};
  } else {
    r.size = c;
    r.witness = {WitnessKind::Complete, comp.lexmin_clique(all, c)};
  }
  return r;
}

/// Largest homogeneous witness among Complete / Independent / Transitive.
/// Tie-break: Complete > Independent > Transitive, then the lexicographically
/// smallest vertex list of the winning kind.
inline HomogeneousWitness best_homogeneous(const Digraph& g) {
  detail::check_ceiling(g.size());
  const Bits all = Bits::full(g.size());
  detail::CliqueSolver comp(g.size(), detail::clique_rows(g));
  detail::CliqueSolver indep(g.size(), detail::independent_rows(g));
  detail::ChainSolver chain(g);
  const int c = comp.max_clique(all);
  const int i = indep.max_clique(all);
  const int t = chain.max_chain(all);
  if (c >= i && c >= t)
    return {WitnessKind::Complete, comp.lexmin_clique(all, c)};
  if (i >= t)
    return {WitnessKind::Independent, indep.lexmin_clique(all, i)};
  return {WitnessKind::Transitive, chain.lexmin_chain(all, t)};
}

}  // namespace skewlab
