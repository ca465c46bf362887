#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "skewlab/lines.hpp"
#include "skewlab/random.hpp"
#include "skewlab/trans.hpp"

namespace skewlab {

// --- lexicographic powers and bundling ---

struct BundleParams {
  Rational shrink = Rational(1, 16);  // per-level scale factor, in (0, 1)
  int levels = 0;
};

/// Substitutes `inner` into every vertex of `outer`.
inline Tournament lex_product(const Tournament& outer, const Tournament& inner) {
  const int no = outer.size(), ni = inner.size();
  Digraph g(no * ni);
  for (int u = 0; u < no * ni; ++u)
    for (int v = 0; v < no * ni; ++v) {
      if (u == v) continue;
      const int bu = u / ni, bv = v / ni;
      const bool arc = bu != bv ? outer.beats(bu, bv) : inner.beats(u % ni, v % ni);
      if (arc) g.add_arc(u, v);
    }
  return Tournament(std::move(g));
}

inline Tournament lex_power(const Tournament& base, int levels) {
  Tournament t = base;
  for (int i = 0; i < levels; ++i) t = lex_product(t, base);
  return t;
}

/// Predicted trans of a bundled configuration: base_trans^(levels+1).
inline long long lex_power_trans(long long base_trans, int levels) {
  long long r = 1;
  for (int i = 0; i <= levels; ++i) r *= base_trans;
  return r;
}

/// Replaces every line of the configuration, level by level, with a copy of
/// the base shrunk by shrink^level. The result's crossing tournament must be
/// the (levels+1)-fold lexicographic power of the base tournament; if a level
/// of shrinking is too coarse the shrink factor is halved and the whole
/// construction retried.
inline Configuration bundle(const Configuration& base, const BundleParams& params) {
  if (!(params.shrink > 0 && params.shrink < 1))
    throw Error("bundle: shrink must lie strictly between 0 and 1");
  if (params.levels < 0) throw Error("bundle: levels must be >= 0");
  const Tournament base_t = crossing_tournament(base);  // throws NotSkew
  if (params.levels == 0) return base;

  const Tournament expected = lex_power(base_t, params.levels);
  Rational shrink = params.shrink;
  constexpr int kRetries = 8;
  for (int attempt = 0; attempt < kRetries; ++attempt, shrink /= 2) {
    Configuration cfg = base;
    Rational scale = 1;
    for (int level = 1; level <= params.levels; ++level) {
      scale *= shrink;
      Configuration next;
      next.lines.reserve(cfg.lines.size() * base.lines.size());
      for (const auto& big : cfg.lines)
        for (const auto& m : base.lines)
          next.lines.push_back({big.a + scale * m.a, big.b + scale * m.b,
                                big.c + scale * m.c, big.d + scale * m.d});
      cfg = std::move(next);
    }
    cfg.label = base.label.empty()
                    ? "bundle^" + std::to_string(params.levels)
                    : base.label + " bundled x" + std::to_string(params.levels);
    if (!all_pairs_skew(cfg)) continue;
    if (crossing_tournament(cfg).graph().to_text() == expected.graph().to_text())
      return cfg;
  }
  throw BundleVerificationFailedError(
      "bundle: crossing tournament failed to match the lexicographic power "
      "after " + std::to_string(kRetries) + " shrink halvings");
}

// --- Milnor-Thom sign-pattern bound ---

using Float50 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<50, boost::multiprecision::digit_base_2>>;
using Float100 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<100, boost::multiprecision::digit_base_2>>;

/// log2 of (4edm/k)^k: sign patterns of m polynomials of degree <= d in k
/// variables.
template <class F = Float100>
F mt_log2_bound_general(long long d, long long m, long long k) {
  const F e = exp(F(1));
  return F(k) * log(4 * e * F(d) * F(m) / F(k)) / log(F(2));
}

struct MTBoundReport {
  long long n = 0;
  Float100 log2_mt_bound;               // log2 of (3e(n-1)/2)^{4n}
  Rational log2_total;                  // n(n-1)/2, exact
  Float100 realizable_fraction_log2;    // log2_mt_bound - log2_total
};

/// Specialization for crossing tournaments: m = n(n-1)/2 sign conditions of
/// degree 3 in 4n variables collapses the general bound to (3e(n-1)/2)^{4n}.
template <class F = Float100>
F mt_log2_bound(long long n) {
  const F e = exp(F(1));
  return 4 * F(n) * log(3 * e * F(n - 1) / 2) / log(F(2));
}

inline MTBoundReport mt_bound(long long n) {
  if (n < 2) throw Error("mt_bound: n must be at least 2");
  MTBoundReport r;
  r.n = n;
  r.log2_mt_bound = mt_log2_bound<Float100>(n);
  r.log2_total = Rational(BigInt(n) * BigInt(n - 1), 2);
  r.realizable_fraction_log2 =
      r.log2_mt_bound - Float100(numerator(r.log2_total)) /
                            Float100(denominator(r.log2_total));
  return r;
}

/// Smallest n with log2 bound below n(n-1)/2, i.e. where realizable crossing
/// tournaments become a vanishing fraction of all tournaments.
template <class F = Float100>
long long mt_threshold() {
  for (long long n = 2;; ++n) {
    const F frac = mt_log2_bound<F>(n) - F(n) * F(n - 1) / 2;
    if (frac < 0) return n;
  }
}

// --- randomized search for low-trans configurations ---

struct SearchReport {
  int target_n = 0;
  int target_trans = 0;
  Configuration best_config;
  int best_trans = 0;
  long long seeds_tried = 0;
  std::chrono::duration<double> elapsed{0};
  bool success = false;
  std::uint64_t base_seed = 0;
  long long found_at_restart = -1;
};

inline int worker_count(long long jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SKEWLAB_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<long long>(hw, std::max<long long>(jobs, 1)));
}

namespace detail {

/// One annealing restart over integer 4-tuples in [-K, K]^4. Energy counts
/// degenerate pairs (heavily) plus transitive (target+1)-subsets; moves that
/// do not increase the energy are accepted. Returns the lines and whether the
/// energy reached zero.
struct SearchRestart {
  int n, target;
  std::vector<std::array<std::int64_t, 4>> lines;
  bool solved = false;

  static std::int64_t gsign(const std::array<std::int64_t, 4>& p,
                            const std::array<std::int64_t, 4>& q) {
    const std::int64_t a = p[0] - q[0], b = p[1] - q[1], c = p[2] - q[2],
                       d = p[3] - q[3];
    const std::int64_t v = (a - c) * (a * d - b * c);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
  }

  long long energy() const {
    long long degen = 0;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const std::int64_t s = gsign(lines[i], lines[j]);
        if (s == 0) ++degen;
        if (s > 0)
          adj[i][j] = 1;
        else
          adj[j][i] = 1;
      }
    // count transitive (target+1)-subsets via the score-sequence criterion
    long long tts = 0;
    const int k = target + 1;
    if (k > n) return degen * 1000;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      int degs[16] = {0};
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j && adj[idx[i]][idx[j]]) ++degs[i];
      std::sort(degs, degs + k);
      bool trans = true;
      for (int i = 0; i < k; ++i)
        if (degs[i] != i) trans = false;
      if (trans) ++tts;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return degen * 1000 + tts;
  }

  void run(std::uint64_t seed, int iters, std::int64_t K) {
    Rng rng(seed);
    lines.assign(n, {});
    for (auto& l : lines)
      for (auto& c : l) c = rng.range(-K, K);
    long long e = energy();
    for (int it = 0; it < iters && e > 0; ++it) {
      const int li = static_cast<int>(rng.below(n));
      const int ci = static_cast<int>(rng.below(4));
      std::int64_t step = rng.range(1, 3);
      if (rng.below(2)) step = -step;
      const std::int64_t old = lines[li][ci];
      if (std::abs(old + step) > K) continue;
      lines[li][ci] = old + step;
      const long long e2 = energy();
      if (e2 <= e)
        e = e2;
      else
        lines[li][ci] = old;
    }
    solved = (e == 0);
  }

  Configuration to_config() const {
    Configuration c;
    for (const auto& l : lines)
      c.lines.push_back({Rational(l[0]), Rational(l[1]), Rational(l[2]), Rational(l[3])});
    return c;
  }
};

}  // namespace detail

/// Randomized restarts looking for n pairwise-skew lines whose crossing
/// tournament has trans <= target. Each restart draws integer coordinates
/// from a bounded grid and walks them with non-worsening moves. Every
/// candidate is re-verified in exact rational arithmetic before being
/// reported. Running out of budget yields success=false, not an error.
inline SearchReport search_low_trans(int n, int target, long long budget,
                                     std::uint64_t base_seed) {
  if (n > 12) throw Error("search_low_trans: n is capped at 12");
  if (target < 2) throw Error("search_low_trans: target must be at least 2");
  const auto t0 = std::chrono::steady_clock::now();

  struct Outcome {
    bool solved = false;
    int trans = 0;
    Configuration config;
    long long restart = -1;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(budget));
  const int workers = worker_count(budget);
  std::vector<std::thread> pool;
  std::atomic<long long> next{0};
  auto work = [&]() {
    for (;;) {
      const long long r = next.fetch_add(1);
      if (r >= budget) return;
      detail::SearchRestart sr{n, target};
      sr.run(Rng::derive(base_seed, static_cast<std::uint64_t>(r)), 4000, 25);
      Outcome& o = outcomes[static_cast<std::size_t>(r)];
      o.restart = r;
      o.config = sr.to_config();
      if (!all_pairs_skew(o.config)) continue;  // exact re-check of the grid walk
      const TransResult tr = trans_exact(crossing_tournament(o.config));
      o.trans = tr.size;
      o.solved = sr.solved && tr.size <= target;
    }
  };
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  // deterministic merge: lowest restart index among successes, else the best
  SearchReport rep;
  rep.target_n = n;
  rep.target_trans = target;
  rep.base_seed = base_seed;
  rep.seeds_tried = budget;
  const Outcome* best = nullptr;
  for (const auto& o : outcomes) {
    if (o.restart < 0 || o.trans == 0) continue;
    if (!best || o.trans < best->trans ||
        (o.trans == best->trans && o.restart < best->restart))
      best = &o;
    if (o.solved) break;  // earlier restarts already inspected; this one wins
  }
  if (best) {
    rep.best_config = best->config;
    rep.best_trans = best->trans;
    rep.success = best->solved && best->trans <= target;
    rep.found_at_restart = best->restart;
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

}  // namespace skewlab
