#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "skewlab/errors.hpp"

namespace skewlab {

/// Dynamic bitset sized for vertex sets. All operands of binary ops must
/// come from graphs of the same order.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or -1.
  int lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
  friend bool operator==(const Bits& a, const Bits& b) { return a.w_ == b.w_; }

  /// True iff *this & ~o is empty.
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        const int b = std::countr_zero(w);
        fn(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  static Bits full(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Irreflexive digraph over dense adjacency, one bit row per vertex.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), out_(n, Bits(n)) {}

  int size() const { return n_; }
  bool arc(int u, int v) const { return out_[u].test(v); }
  void add_arc(int u, int v) {
    if (u != v) out_[u].set(v);
  }
  void remove_arc(int u, int v) { out_[u].reset(v); }
  const Bits& out(int v) const { return out_[v]; }

  bool is_tournament() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (arc(i, j) == arc(j, i)) return false;
    return true;
  }

  /// Shared text format: first line n, then n rows of '0'/'1' characters,
  /// row i column j set iff the arc i -> j is present.
  std::string to_text() const {
    std::ostringstream os;
    os << n_ << "\n";
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) os << (arc(i, j) ? '1' : '0');
      os << "\n";
    }
    return os.str();
  }

  static Digraph from_text(const std::string& text) {
    std::istringstream is(text);
    int n = -1;
    if (!(is >> n) || n < 0) throw ParseError("digraph text: bad vertex count");
    Digraph g(n);
    for (int i = 0; i < n; ++i) {
      std::string row;
      if (!(is >> row) || static_cast<int>(row.size()) != n)
        throw ParseError("digraph text: bad row " + std::to_string(i));
      for (int j = 0; j < n; ++j) {
        if (row[j] == '1') {
          if (i == j) throw ParseError("digraph text: diagonal entry set");
          g.add_arc(i, j);
        } else if (row[j] != '0') {
          throw ParseError("digraph text: row characters must be 0/1");
        }
      }
    }
    return g;
  }

 private:
  int n_ = 0;
  std::vector<Bits> out_;
};

/// Digraph with exactly one arc per unordered pair.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(Digraph g) : g_(std::move(g)) {
    if (!g_.is_tournament())
      throw ParseError("digraph is not a tournament (needs exactly one arc per pair)");
  }

  int size() const { return g_.size(); }
  bool beats(int u, int v) const { return g_.arc(u, v); }
  const Digraph& graph() const { return g_; }

  std::string to_text() const { return g_.to_text(); }
  static Tournament from_text(const std::string& text) {
    return Tournament(Digraph::from_text(text));
  }

 private:
  Digraph g_;
};

enum class WitnessKind { Complete, Independent, Transitive };

inline const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Complete: return "complete";
    case WitnessKind::Independent: return "independent";
    case WitnessKind::Transitive: return "transitive";
  }
  return "?";
}

/// For Transitive, `vertices` is the dominance order: each listed vertex
/// has an arc to (and none from) every vertex after it.
struct HomogeneousWitness {
  WitnessKind kind = WitnessKind::Independent;
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Literal check of a witness against a digraph, independent of any solver.
inline bool witness_valid(const Digraph& g, const HomogeneousWitness& w) {
  const auto& vs = w.vertices;
  for (int v : vs)
    if (v < 0 || v >= g.size()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      const bool fwd = g.arc(vs[i], vs[j]);
      switch (w.kind) {
        case WitnessKind::Complete:
          if (!fwd) return false;
          break;
        case WitnessKind::Independent:
          if (fwd) return false;
          break;
        case WitnessKind::Transitive:
          if (i < j && (!fwd || g.arc(vs[j], vs[i]))) return false;
          break;
      }
    }
  return true;
}

}  // namespace skewlab
