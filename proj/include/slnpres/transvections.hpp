#pragma once

#include "slnpres/word.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slnpres {

/// How words for the transvections T_{i,j} are built from the two
/// generators:
///  - recursive: distance-by-distance commutator recursion (short for small
///    rank, exponential growth in the rank);
///  - balanced: halving recursion with quadratic word-length growth.
enum class WordScheme { recursive, balanced };

inline std::string to_string(WordScheme s) {
  return s == WordScheme::recursive ? "recursive" : "balanced";
}

inline WordScheme word_scheme_from_string(const std::string& s) {
  if (s == "recursive") return WordScheme::recursive;
  if (s == "balanced") return WordScheme::balanced;
  throw std::invalid_argument("unknown word scheme: " + s);
}

/// Halving split of a distance r >= 3 into conjugation offset and two
/// shorter distances: m = floor(r/2) + 1, d = ceil(r/2); then
/// d + (m - 1) = r and both m, d < r for r >= 3.
struct SplitIndices {
  int r, m, d;
  explicit SplitIndices(int r_) : r(r_), m(r_ / 2 + 1), d(r_ - r_ / 2) {
    if (r_ < 3) throw std::invalid_argument("SplitIndices: distance must be at least 3");
  }
};

namespace detail {

inline void check_rank_at_least(int n, int lo, const char* who) {
  if (n < lo)
    throw std::invalid_argument(std::string(who) + ": rank must be at least " + std::to_string(lo));
}

inline void check_pair(int n, int i, int j, const char* who) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range(std::string(who) + ": index out of range");
  if (i == j)
    throw std::invalid_argument(std::string(who) + ": diagonal pair is not a transvection");
}

}  // namespace detail

/// Words in the generators (a, b) evaluating to the elementary transvections
/// T_{i,j} under the standard assignment a = cyclic_generator(n),
/// b = T_{2,1}.  Construction is eager; individual words are assembled on
/// demand from memoized shared sub-words.
class TransvectionTable {
 public:
  // The recursive scheme doubles word length per distance step, so it is
  // deliberately capped at small rank; the balanced scheme grows like n^2
  // and is capped only defensively.
  static constexpr int kRecursiveMaxRank = 12;
  static constexpr int kBalancedMaxRank = 4096;

  TransvectionTable(int n, WordScheme scheme) : n_(n), scheme_(scheme) {
    detail::check_rank_at_least(n, 3, "TransvectionTable");
    if (scheme == WordScheme::recursive) {
      if (n > kRecursiveMaxRank)
        throw std::invalid_argument("TransvectionTable: recursive scheme is capped at rank " +
                                    std::to_string(kRecursiveMaxRank));
      build_recursive();
    } else {
      if (n > kBalancedMaxRank)
        throw std::invalid_argument("TransvectionTable: rank too large");
      build_balanced();
    }
  }

  int rank() const { return n_; }
  WordScheme scheme() const { return scheme_; }

  /// Word for T_{i,j}, i != j.
  Word tau(int i, int j) const {
    detail::check_pair(n_, i, j, "TransvectionTable::tau");
    if (scheme_ == WordScheme::recursive) return taus_.at({i, j});
    if (i > j) {
      // Shift the first-column word of distance i-j+1 down the diagonal:
      // a^-(j-1) * omega_{i-j+1} * a^(j-1) lands at (i, j).  No wrap-around:
      // the shifted row index is exactly i <= n.
      return conjugate(omega_[static_cast<std::size_t>(i - j + 1)], j - 1);
    }
    // Upper triangle via the first-row words rho_s = T_{1,s}.
    return conjugate(rho_[static_cast<std::size_t>(j - i + 1)], i - 1);
  }

  /// First-column word omega_r = T_{r,1} (balanced scheme only), 2 <= r <= n.
  const Word& omega(int r) const {
    require_balanced("omega");
    if (r < 2 || r > n_) throw std::out_of_range("TransvectionTable::omega: distance out of range");
    return omega_[static_cast<std::size_t>(r)];
  }

  /// First-row word rho_s = T_{1,s} (balanced scheme only), 2 <= s <= n.
  const Word& rho(int s) const {
    require_balanced("rho");
    if (s < 2 || s > n_) throw std::out_of_range("TransvectionTable::rho: distance out of range");
    return rho_[static_cast<std::size_t>(s)];
  }

  /// Word evaluating to the cyclic generator a itself:
  /// the product of the block rotations sigma_{n-1} ... sigma_1, each spelled
  /// as tau(r, r+1) * tau(r+1, r)^-1 * tau(r, r+1).
  Word a_word() const {
    Word w;
    for (int r = n_ - 1; r >= 1; --r) {
      w.append(tau(r, r + 1));
      w.append(invert(tau(r + 1, r)));
      w.append(tau(r, r + 1));
    }
    return w;
  }

 private:
  void require_balanced(const char* who) const {
    if (scheme_ != WordScheme::balanced)
      throw std::logic_error(std::string("TransvectionTable::") + who +
                             ": only defined for the balanced scheme");
  }

  // Sign-corrected top-right word (a^-(n-1) b a^(n-1))^epsilon = T_{1,n}.
  Word top_right_word() const {
    Word w = conjugate(Word::letter(Gen::b), n_ - 1);
    return epsilon(n_) == 1 ? w : invert(w);
  }

  void build_recursive() {
    const Word b = Word::letter(Gen::b);
    // Step 1: subdiagonal words by shifting b = T_{2,1}, plus the corner.
    for (int r = 1; r <= n_ - 1; ++r) taus_[{r + 1, r}] = conjugate(b, r - 1);
    taus_[{1, n_}] = top_right_word();
    // Step 2: lower triangle by increasing distance,
    // T_{i,j} = [T_{i,j+1}, T_{j+1,j}].
    for (int d = 2; d <= n_ - 1; ++d)
      for (int i = d + 1; i <= n_; ++i) {
        int j = i - d;
        taus_[{i, j}] = commutator(taus_.at({i, j + 1}), taus_.at({j + 1, j}));
      }
    // Step 3: last column, T_{i,n} = [T_{i,1}, T_{1,n}].
    for (int i = 2; i <= n_ - 1; ++i)
      taus_[{i, n_}] = commutator(taus_.at({i, 1}), taus_.at({1, n_}));
    // Step 4: remaining upper triangle, T_{i,j} = [T_{i,n}, T_{n,j}].
    for (int i = 1; i <= n_ - 2; ++i)
      for (int j = i + 1; j <= n_ - 1; ++j)
        taus_[{i, j}] = commutator(taus_.at({i, n_}), taus_.at({n_, j}));
  }

  void build_balanced() {
    omega_.assign(static_cast<std::size_t>(n_) + 1, Word{});
    rho_.assign(static_cast<std::size_t>(n_) + 1, Word{});
    omega_[2] = Word::letter(Gen::b);
    // First column by halving: omega_r = [a^-(m-1) omega_d a^(m-1), omega_m]
    // with m = floor(r/2)+1, d = ceil(r/2); the conjugated factor is
    // T_{r,m} (no wrap: r <= n), the other T_{m,1}, and [T_{r,m}, T_{m,1}]
    // = T_{r,1}.
    for (int r = 3; r <= n_; ++r) {
      SplitIndices s(r);
      if (s.d + (s.m - 1) > n_ || s.m > n_)
        throw std::logic_error("TransvectionTable: halving split escapes the rank");
      omega_[static_cast<std::size_t>(r)] =
          commutator(conjugate(omega_[static_cast<std::size_t>(s.d)], s.m - 1),
                     omega_[static_cast<std::size_t>(s.m)]);
    }
    // First row from the corner down: rho_n = T_{1,n}, then
    // rho_s = [rho_n, T_{n,s}] = T_{1,s} for s = n-1, ..., 2.
    rho_[static_cast<std::size_t>(n_)] = top_right_word();
    for (int s = n_ - 1; s >= 2; --s) {
      Word t_ns = conjugate(omega_[static_cast<std::size_t>(n_ - s + 1)], s - 1);
      rho_[static_cast<std::size_t>(s)] = commutator(rho_[static_cast<std::size_t>(n_)], t_ns);
    }
  }

  int n_;
  WordScheme scheme_;
  std::vector<Word> omega_, rho_;               // balanced scheme
  std::map<std::pair<int, int>, Word> taus_;    // recursive scheme
};

/// The fixed bridging word W(u, v) = (u v u^-1) v^-1 (u v^-1 u^-1) v^-1
/// (u v u^-1) v, written in slots (a, b) = (u, v): twelve letters, freely
/// reduced.  Under u = cyclic_generator(n), v = b^-1 T_{1,2} it evaluates to
/// T_{2,1} for every rank n >= 3.
inline Word w_bridge() {
  const Word u = Word::letter(Gen::a);
  const Word v = Word::letter(Gen::b);
  const Word ui = invert(u);
  const Word vi = invert(v);
  return concat({u, v, ui, vi, u, vi, ui, vi, u, v, ui, v});
}

}  // namespace slnpres
