#pragma once

#include "slnpres/transvections.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slnpres {

enum class RelatorTag { commutativity, steinberg, torsion, a_defining, variant_defining };

inline std::string to_string(RelatorTag t) {
  switch (t) {
    case RelatorTag::commutativity: return "commutativity";
    case RelatorTag::steinberg: return "steinberg";
    case RelatorTag::torsion: return "torsion";
    case RelatorTag::a_defining: return "a-defining";
    case RelatorTag::variant_defining: return "variant-defining";
  }
  throw std::logic_error("unknown relator tag");
}

inline RelatorTag relator_tag_from_string(const std::string& s) {
  if (s == "commutativity") return RelatorTag::commutativity;
  if (s == "steinberg") return RelatorTag::steinberg;
  if (s == "torsion") return RelatorTag::torsion;
  if (s == "a-defining") return RelatorTag::a_defining;
  if (s == "variant-defining") return RelatorTag::variant_defining;
  throw std::invalid_argument("unknown relator tag: " + s);
}

/// Tag plus index tuple: (i,j,k,l) for commutativity, (i,j,k) for Steinberg,
/// empty for the singleton relators.
struct RelatorKind {
  RelatorTag tag;
  std::vector<int> indices;
  bool operator==(const RelatorKind& o) const { return tag == o.tag && indices == o.indices; }
  bool operator!=(const RelatorKind& o) const { return !(*this == o); }
};

struct Relator {
  RelatorKind kind;
  Word word;
  bool operator==(const Relator& o) const { return kind == o.kind && word == o.word; }
  bool operator!=(const Relator& o) const { return !(*this == o); }
};

enum class Flavor { base, infinite_infinite, finite_finite, psl };

inline std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::base: return "base";
    case Flavor::infinite_infinite: return "infinite-infinite";
    case Flavor::finite_finite: return "finite-finite";
    case Flavor::psl: return "psl";
  }
  throw std::logic_error("unknown flavor");
}

inline Flavor flavor_from_string(const std::string& s) {
  if (s == "base") return Flavor::base;
  if (s == "infinite-infinite" || s == "infinite") return Flavor::infinite_infinite;
  if (s == "finite-finite" || s == "finite") return Flavor::finite_finite;
  if (s == "psl") return Flavor::psl;
  throw std::invalid_argument("unknown flavor: " + s);
}

/// Generator names used when rendering words of each flavor.
inline std::array<std::string, 2> generator_names(Flavor f) {
  switch (f) {
    case Flavor::base:
    case Flavor::psl: return {"a", "b"};
    case Flavor::infinite_infinite: return {"x", "y"};
    case Flavor::finite_finite: return {"u", "v"};
  }
  throw std::logic_error("unknown flavor");
}

struct BuildOptions {
  bool dedup = true;              // keep one orientation of each commutativity pair
  bool redundant_torsion = false; // finite-finite only: adjoin u^n (or u^2n) and v^6
};

struct Presentation {
  int rank = 0;
  WordScheme scheme = WordScheme::balanced;
  Flavor flavor = Flavor::base;
  std::array<std::string, 2> generators{"a", "b"};
  std::vector<Relator> relators;

  bool operator==(const Presentation& o) const {
    return rank == o.rank && scheme == o.scheme && flavor == o.flavor &&
           generators == o.generators && relators == o.relators;
  }
  bool operator!=(const Presentation& o) const { return !(*this == o); }
};

/// Closed-form relator counts for the deduplicated base presentation.
struct RelatorCount {
  long long commutativity = 0;  // n(n-1)^2(n-2)/2
  long long steinberg = 0;      // n(n-1)(n-2)
  long long singletons = 2;     // torsion + a-defining
  long long total = 0;          // n(n+1)(n-1)(n-2)/2 + 2
};

inline RelatorCount relator_count_formula(int n) {
  detail::check_rank_at_least(n, 3, "relator_count_formula");
  long long N = n;
  RelatorCount c;
  c.commutativity = N * (N - 1) * (N - 1) * (N - 2) / 2;
  c.steinberg = N * (N - 1) * (N - 2);
  c.singletons = 2;
  c.total = c.commutativity + c.steinberg + c.singletons;
  return c;
}

/// Commutativity index combinatorics: for a fixed pair (i,j) the admissible
/// partners (k,l) — k != l, (k,l) != (i,j), k != j, l != i — number exactly
/// (n-1)(n-2), for a total of n(n-1)^2(n-2) ordered relator pairs.
struct CommutingPairCount {
  long long per_transvection = 0;
  long long total_ordered = 0;
};

inline CommutingPairCount commuting_pair_count(int n) {
  detail::check_rank_at_least(n, 3, "commuting_pair_count");
  long long N = n;
  return CommutingPairCount{(N - 1) * (N - 2), N * (N - 1) * (N - 1) * (N - 2)};
}

namespace detail {

inline bool commutativity_admissible(int i, int j, int k, int l) {
  return i != j && k != l && !(i == k && j == l) && i != l && j != k;
}

/// Dedup orientation: of the inverse pair {(i,j,k,l), (k,l,i,j)} keep the
/// lexicographically smaller tuple.
inline bool dedup_keep(int i, int j, int k, int l) {
  return std::array<int, 4>{i, j, k, l} < std::array<int, 4>{k, l, i, j};
}

}  // namespace detail

/// Stream the relators of one presentation flavor, in the canonical order:
/// commutativity (lex by index 4-tuple), Steinberg (lex by triple), torsion,
/// a-defining, variant-defining.  Words are already substituted into the
/// flavor's own alphabet.  `emit` receives each Relator by value.
template <class F>
void enumerate_relators(const TransvectionTable& table, Flavor flavor, const BuildOptions& opt,
                        F&& emit) {
  const int n = table.rank();
  const Word gen_a = Word::letter(Gen::a);
  const Word gen_b = Word::letter(Gen::b);

  // Letter substitution into the variant alphabet (identity for base/psl).
  Word image_a = gen_a, image_b = gen_b;
  if (flavor == Flavor::infinite_infinite) {
    image_a = concat(gen_a, invert(gen_b));  // a -> x y^-1
    image_b = gen_b;                         // b -> y
  } else if (flavor == Flavor::finite_finite) {
    image_a = gen_a;        // a -> u
    image_b = w_bridge();   // b -> W(u, v)
  }
  const bool substituting = flavor == Flavor::infinite_infinite || flavor == Flavor::finite_finite;
  auto sub = [&](const Word& w) { return substituting ? substitute(w, image_a, image_b) : w; };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Word tij = table.tau(i, j);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (!detail::commutativity_admissible(i, j, k, l)) continue;
          if (opt.dedup && !detail::dedup_keep(i, j, k, l)) continue;
          emit(Relator{RelatorKind{RelatorTag::commutativity, {i, j, k, l}},
                       sub(commutator(tij, table.tau(k, l)))});
        }
    }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        emit(Relator{RelatorKind{RelatorTag::steinberg, {i, j, k}},
                     sub(concat(commutator(table.tau(i, j), table.tau(j, k)),
                                invert(table.tau(i, k))))});
      }
    }

  emit(Relator{RelatorKind{RelatorTag::torsion, {}},
               sub(power(concat({table.tau(1, 2), invert(table.tau(2, 1)), table.tau(1, 2)}), 4))});
  if (flavor == Flavor::finite_finite && opt.redundant_torsion) {
    emit(Relator{RelatorKind{RelatorTag::torsion, {}},
                 power(gen_a, (n % 2 != 0) ? n : 2 * n)});
    emit(Relator{RelatorKind{RelatorTag::torsion, {}}, power(gen_b, 6)});
  }

  emit(Relator{RelatorKind{RelatorTag::a_defining, {}},
               sub(concat(gen_a, invert(table.a_word())))});

  if (flavor == Flavor::finite_finite) {
    // v = W(u,v)^-1 * tau_{1,2}(u, W(u,v)), as the relator v^-1 W^-1 tau12.
    emit(Relator{RelatorKind{RelatorTag::variant_defining, {}},
                 concat({invert(gen_b), invert(w_bridge()),
                         substitute(table.tau(1, 2), gen_a, w_bridge())})});
  } else if (flavor == Flavor::psl && n % 2 == 0) {
    // Kills the centre {±I}: evaluates to -I, so the verifier special-cases it.
    emit(Relator{RelatorKind{RelatorTag::variant_defining, {}}, power(gen_a, n)});
  }
}

namespace detail {

inline void check_build_args(int n, WordScheme scheme) {
  check_rank_at_least(n, 3, "presentation build");
  // The recursive scheme's words grow exponentially with rank; presentations
  // over it are deliberately restricted to small rank.
  if (scheme == WordScheme::recursive && n > 8)
    throw std::invalid_argument("presentation build: recursive scheme is supported for rank <= 8");
}

inline Presentation build(int n, WordScheme scheme, Flavor flavor, const BuildOptions& opt) {
  check_build_args(n, scheme);
  TransvectionTable table(n, scheme);
  Presentation p;
  p.rank = n;
  p.scheme = scheme;
  p.flavor = flavor;
  p.generators = generator_names(flavor);
  auto count = relator_count_formula(n);
  p.relators.reserve(static_cast<std::size_t>(opt.dedup ? count.total
                                                        : count.total + count.commutativity) + 3);
  enumerate_relators(table, flavor, opt, [&](Relator&& r) { p.relators.push_back(std::move(r)); });
  return p;
}

}  // namespace detail

inline Presentation build_base(int n, WordScheme scheme, const BuildOptions& opt = {}) {
  return detail::build(n, scheme, Flavor::base, opt);
}

inline Presentation build_infinite_variant(int n, WordScheme scheme, const BuildOptions& opt = {}) {
  return detail::build(n, scheme, Flavor::infinite_infinite, opt);
}

inline Presentation build_finite_variant(int n, WordScheme scheme, const BuildOptions& opt = {}) {
  return detail::build(n, scheme, Flavor::finite_finite, opt);
}

inline Presentation build_psl(int n, WordScheme scheme, const BuildOptions& opt = {}) {
  return detail::build(n, scheme, Flavor::psl, opt);
}

inline Presentation build_flavor(Flavor f, int n, WordScheme scheme, const BuildOptions& opt = {}) {
  return detail::build(n, scheme, f, opt);
}

/// Size summary of a relator list.
struct PresentationStats {
  long long count = 0;
  Int total_length = 0;
  Int max_length = 0;
  std::array<long long, 5> per_kind{};  // indexed by RelatorTag

  void add(const Relator& r) {
    ++count;
    Int len = r.word.length();
    total_length += len;
    if (len > max_length) max_length = len;
    ++per_kind[static_cast<std::size_t>(r.kind.tag)];
  }
};

inline PresentationStats stats(const Presentation& p) {
  PresentationStats s;
  for (const Relator& r : p.relators) s.add(r);
  return s;
}

/// Stats without materializing the relator list; usable well past the ranks
/// at which a Presentation value fits in memory.
inline PresentationStats streaming_stats(int n, WordScheme scheme, Flavor flavor,
                                         const BuildOptions& opt = {}) {
  detail::check_build_args(n, scheme);
  TransvectionTable table(n, scheme);
  PresentationStats s;
  enumerate_relators(table, flavor, opt, [&](Relator&& r) { s.add(r); });
  return s;
}

}  // namespace slnpres
