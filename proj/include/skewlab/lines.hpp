#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewlab/digraph.hpp"
#include "skewlab/errors.hpp"
#include "skewlab/random.hpp"
#include "skewlab/rational.hpp"

namespace skewlab {

/// A line in R^3 not parallel to the planes x=1 and x=-1, recorded by its
/// intersections with them: (1, a, b) and (-1, c, d).
struct Line4 {
  Rational a, b, c, d;

  friend Line4 operator-(const Line4& l, const Line4& r) {
    return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
  }
  friend bool operator==(const Line4& l, const Line4& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
};

struct Configuration {
  std::vector<Line4> lines;
  std::string label;

  int size() const { return static_cast<int>(lines.size()); }
};

/// g(a,b,c,d) = (a-c)(ad-bc). Applied to the difference of two lines, its
/// sign tells which one passes over the other.
inline Rational crossing_form(const Line4& delta) {
  return (delta.a - delta.c) * (delta.a * delta.d - delta.b * delta.c);
}

enum class SkewVerdict { Skew, ProjectionsParallel, Intersecting, Identical };

inline const char* to_string(SkewVerdict v) {
  switch (v) {
    case SkewVerdict::Skew: return "skew";
    case SkewVerdict::ProjectionsParallel: return "projections-parallel";
    case SkewVerdict::Intersecting: return "intersecting";
    case SkewVerdict::Identical: return "identical";
  }
  return "?";
}

/// Total classification of a line pair. The projections onto the xy-plane
/// meet unless (da - dc) = 0; the z-gap at the meeting point has numerator
/// (da*dd - db*dc).
inline SkewVerdict is_skew_pair(const Line4& l1, const Line4& l2) {
  const Line4 d = l1 - l2;
  if (d.a == 0 && d.b == 0 && d.c == 0 && d.d == 0) return SkewVerdict::Identical;
  if (d.a - d.c == 0) return SkewVerdict::ProjectionsParallel;
  if (d.a * d.d - d.b * d.c == 0) return SkewVerdict::Intersecting;
  return SkewVerdict::Skew;
}

/// Tournament with arc i -> j iff line i passes over line j. All pairs must
/// be skew.
inline Tournament crossing_tournament(const Configuration& config) {
  const int n = config.size();
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SkewVerdict v = is_skew_pair(config.lines[i], config.lines[j]);
      if (v != SkewVerdict::Skew) throw NotSkewError(i, j, to_string(v));
      if (sign(crossing_form(config.lines[i] - config.lines[j])) > 0)
        g.add_arc(i, j);
      else
        g.add_arc(j, i);
    }
  return Tournament(std::move(g));
}

inline bool all_pairs_skew(const Configuration& config) {
  for (int i = 0; i < config.size(); ++i)
    for (int j = i + 1; j < config.size(); ++j)
      if (is_skew_pair(config.lines[i], config.lines[j]) != SkewVerdict::Skew)
        return false;
  return true;
}

/// Nudges coordinates by distinct rationals of magnitude at most 2^-20 times
/// the coordinate spread until all pairs are skew. Identity on inputs already
/// in general position; deterministic per seed.
inline Configuration perturb_to_general(const Configuration& config,
                                        std::uint64_t seed) {
  if (all_pairs_skew(config)) return config;

  Rational lo = 0, hi = 0;
  bool first = true;
  for (const auto& l : config.lines)
    for (const Rational& q : {l.a, l.b, l.c, l.d}) {
      if (first || q < lo) lo = q;
      if (first || q > hi) hi = q;
      first = false;
    }
  Rational spread = hi - lo;
  if (spread == 0) spread = 1;
  const Rational eps = spread / (std::int64_t{1} << 20);

  Rng rng(seed);
  constexpr int kRetries = 16;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Configuration out = config;
    std::set<std::int64_t> used;
    auto draw = [&]() {
      std::int64_t k;
      do {
        k = rng.range(1, (std::int64_t{1} << 31) - 1);
      } while (!used.insert(k).second);
      return eps * Rational(k, std::int64_t{1} << 31);
    };
    for (auto& l : out.lines) {
      l.a += draw();
      l.b += draw();
      l.c += draw();
      l.d += draw();
    }
    if (all_pairs_skew(out)) return out;
  }
  throw PerturbationFailedError(kRetries);
}

// --- Configuration JSON: {"label": str, "lines": [["p/q", ...], ...]} ---

inline nlohmann::json config_to_json(const Configuration& config) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : config.lines)
    lines.push_back({format_rational(l.a), format_rational(l.b),
                     format_rational(l.c), format_rational(l.d)});
  return {{"label", config.label}, {"lines", lines}};
}

inline Configuration config_from_json(const nlohmann::json& j) {
  Configuration c;
  c.label = j.value("label", "");
  if (!j.contains("lines") || !j["lines"].is_array())
    throw ParseError("configuration JSON: missing \"lines\" array");
  for (const auto& row : j["lines"]) {
    if (!row.is_array() || row.size() != 4)
      throw ParseError("configuration JSON: each line needs 4 rationals");
    c.lines.push_back({parse_rational(row[0].get<std::string>()),
                       parse_rational(row[1].get<std::string>()),
                       parse_rational(row[2].get<std::string>()),
                       parse_rational(row[3].get<std::string>())});
  }
  return c;
}

}  // namespace skewlab
