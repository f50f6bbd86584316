#pragma once

#include "slnpres/presentation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace slnpres {

// ---------------------------------------------------------------------------
// Word evaluation
// ---------------------------------------------------------------------------

/// How eval_word may exploit the structure of the assigned matrices.  The
/// three distinguished generator pairs admit column-operation evaluation
/// (O(n) or O(n^2) per run instead of a general bigint matrix product).
enum class AssignmentKind { canonical_ab, infinite_xy, finite_uv, generic };

/// A matrix for each generator slot together with its exact closed-form
/// inverse (evaluation never inverts a matrix numerically).
struct Assignment {
  int n = 0;
  AssignmentKind kind = AssignmentKind::generic;
  std::array<IntMatrix, 2> gen;
  std::array<IntMatrix, 2> inv;

  Assignment(int n_, AssignmentKind kind_, IntMatrix g0, IntMatrix i0, IntMatrix g1, IntMatrix i1)
      : n(n_), kind(kind_), gen{std::move(g0), std::move(g1)}, inv{std::move(i0), std::move(i1)} {
    for (int s = 0; s < 2; ++s)
      if (!(gen[s] * inv[s]).is_identity())
        throw std::invalid_argument("Assignment: inverse pair does not multiply to the identity");
  }

  /// a = signed n-cycle, b = T_{2,1}.
  static Assignment canonical(int n) {
    detail::check_rank_at_least(n, 3, "Assignment::canonical");
    return Assignment(n, AssignmentKind::canonical_ab, cyclic_generator(n),
                      cyclic_generator_inverse(n), transvection(n, 2, 1), shear(n, 2, 1, -1));
  }

  /// x = a*b (trace 1), y = b; both of infinite order.
  static Assignment infinite_pair(int n) {
    detail::check_rank_at_least(n, 3, "Assignment::infinite_pair");
    IntMatrix a = cyclic_generator(n), ai = cyclic_generator_inverse(n);
    IntMatrix b = transvection(n, 2, 1), bi = shear(n, 2, 1, -1);
    return Assignment(n, AssignmentKind::infinite_xy, a * b, bi * ai, b, bi);
  }

  /// u = a (finite order), v = b^-1 * T_{1,2} (order 6).
  static Assignment finite_pair(int n) {
    detail::check_rank_at_least(n, 3, "Assignment::finite_pair");
    IntMatrix b = transvection(n, 2, 1), bi = shear(n, 2, 1, -1);
    IntMatrix t12 = transvection(n, 1, 2), t12i = shear(n, 1, 2, -1);
    return Assignment(n, AssignmentKind::finite_uv, cyclic_generator(n),
                      cyclic_generator_inverse(n), bi * t12, t12i * b);
  }

  static Assignment custom(IntMatrix g0, IntMatrix i0, IntMatrix g1, IntMatrix i1) {
    int n = g0.rank();
    return Assignment(n, AssignmentKind::generic, std::move(g0), std::move(i0), std::move(g1),
                      std::move(i1));
  }

  static Assignment for_flavor(Flavor f, int n) {
    switch (f) {
      case Flavor::base:
      case Flavor::psl: return canonical(n);
      case Flavor::infinite_infinite: return infinite_pair(n);
      case Flavor::finite_finite: return finite_pair(n);
    }
    throw std::logic_error("unknown flavor");
  }
};

namespace detail {

/// M <- M * a^k for the signed n-cycle a, any integer k, in place.
/// Uses a^n = epsilon*I to fold k, then one column rotation per row.
inline void apply_cycle_power(IntMatrix& m, const Int& k) {
  const int n = m.rank();
  const int eps = epsilon(n);
  Int rr = k % n;
  if (rr < 0) rr += n;
  const int r = rr.convert_to<int>();
  const Int q = (k - rr) / n;
  const bool fold_negate = (eps == -1) && (q % 2 != 0);
  for (int i = 1; i <= n; ++i) {
    Int* row = &m.entry(i, 1);  // rows are stored contiguously
    if (r != 0) {
      std::rotate(row, row + (n - r), row + n);
      if (eps == -1)
        for (int j = 0; j < r; ++j) row[j] = -row[j];
    }
    if (fold_negate)
      for (int j = 0; j < n; ++j) row[j] = -row[j];
  }
}

/// M <- M * b^e, b = T_{2,1}: adds e times column 2 to column 1.
inline void apply_lower_shear(IntMatrix& m, const Int& e) {
  const int n = m.rank();
  for (int i = 1; i <= n; ++i) m.entry(i, 1) += e * m.entry(i, 2);
}

/// M <- M * v^{sign} for v = b^-1 * T_{1,2}: touches columns 1 and 2 only.
inline void apply_bridge_pair(IntMatrix& m, int sign) {
  const int n = m.rank();
  for (int i = 1; i <= n; ++i) {
    Int c1 = m.entry(i, 1), c2 = m.entry(i, 2);
    if (sign > 0) {
      m.entry(i, 1) = c1 - c2;
      m.entry(i, 2) = std::move(c1);
    } else {
      m.entry(i, 1) = c2;
      m.entry(i, 2) = c2 - c1;
    }
  }
}

inline void apply_generic_run(IntMatrix& m, const Assignment& a, const Letter& l) {
  const std::size_t s = static_cast<std::size_t>(l.gen);
  const IntMatrix& base = (l.exp > 0) ? a.gen[s] : a.inv[s];
  m = m * base.pow(abs(l.exp));
}

// Unit-step loops below fall back to the generic path for outsized
// exponents (words built here never produce them on the structured slots).
constexpr long long kUnitLoopCap = 1024;

}  // namespace detail

/// Exact left-to-right evaluation of a word under an assignment.
inline IntMatrix eval_word(const Word& w, const Assignment& a) {
  IntMatrix m = IntMatrix::identity(a.n);
  for (const Letter& l : w.runs()) {
    switch (a.kind) {
      case AssignmentKind::canonical_ab:
        if (l.gen == Gen::a)
          detail::apply_cycle_power(m, l.exp);
        else
          detail::apply_lower_shear(m, l.exp);
        break;
      case AssignmentKind::infinite_xy:
        if (l.gen == Gen::b) {
          detail::apply_lower_shear(m, l.exp);
        } else if (abs(l.exp) <= detail::kUnitLoopCap) {
          const int sign = l.exp > 0 ? 1 : -1;
          for (Int t = abs(l.exp); t > 0; --t) {
            // x = a*b, x^-1 = b^-1 * a^-1
            if (sign > 0) {
              detail::apply_cycle_power(m, 1);
              detail::apply_lower_shear(m, 1);
            } else {
              detail::apply_lower_shear(m, -1);
              detail::apply_cycle_power(m, -1);
            }
          }
        } else {
          detail::apply_generic_run(m, a, l);
        }
        break;
      case AssignmentKind::finite_uv:
        if (l.gen == Gen::a) {
          detail::apply_cycle_power(m, l.exp);
        } else if (abs(l.exp) <= detail::kUnitLoopCap) {
          const int sign = l.exp > 0 ? 1 : -1;
          for (Int t = abs(l.exp); t > 0; --t) detail::apply_bridge_pair(m, sign);
        } else {
          detail::apply_generic_run(m, a, l);
        }
        break;
      case AssignmentKind::generic:
        detail::apply_generic_run(m, a, l);
        break;
    }
  }
  return m;
}

/// Mod-m counterpart of Assignment (generic products only; entries are small).
struct ModAssignment {
  int n = 0;
  long long m = 0;
  std::array<ModMatrix, 2> gen;
  std::array<ModMatrix, 2> inv;

  static ModAssignment canonical(int n, long long mod) {
    detail::check_rank_at_least(n, 3, "ModAssignment::canonical");
    return ModAssignment{n, mod,
                         {mod_reduce(cyclic_generator(n), mod), mod_reduce(transvection(n, 2, 1), mod)},
                         {mod_reduce(cyclic_generator_inverse(n), mod), mod_reduce(shear(n, 2, 1, -1), mod)}};
  }
};

inline ModMatrix eval_word_mod(const Word& w, const ModAssignment& a) {
  ModMatrix m = ModMatrix::identity(a.n, a.m);
  for (const Letter& l : w.runs()) {
    const std::size_t s = static_cast<std::size_t>(l.gen);
    const ModMatrix& base = (l.exp > 0) ? a.gen[s] : a.inv[s];
    m = m * base.pow(abs(l.exp));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Verification sweeps
// ---------------------------------------------------------------------------

struct Failure {
  std::size_t index = 0;      // position in the swept list
  RelatorKind kind;
  std::string description;
  IntMatrix value{1};
};

struct VerificationReport {
  std::string scope;
  long long total_checks = 0;
  std::vector<Failure> failures;
  double wall_ms = 0.0;
  bool passed() const { return failures.empty(); }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return std::min(jobs, 64);
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

}  // namespace detail

/// Evaluate every relator under the flavor's distinguished assignment.
/// All relators must equal the identity, except the centre-killing relator
/// of the even-rank PSL flavor, which must equal minus the identity.
inline VerificationReport verify_presentation(const Presentation& p, int jobs = 0) {
  detail::Stopwatch clock;
  const Assignment assignment = Assignment::for_flavor(p.flavor, p.rank);
  const bool psl_even = p.flavor == Flavor::psl && p.rank % 2 == 0;
  const IntMatrix minus_identity = IntMatrix::identity(p.rank).negated();

  const std::size_t count = p.relators.size();
  const int workers = std::min<long long>(detail::resolve_jobs(jobs),
                                          std::max<long long>(1, static_cast<long long>(count)));
  std::vector<std::vector<Failure>> found(static_cast<std::size_t>(workers));

  auto sweep = [&](int w) {
    for (std::size_t idx = static_cast<std::size_t>(w); idx < count;
         idx += static_cast<std::size_t>(workers)) {
      const Relator& r = p.relators[idx];
      IntMatrix got = eval_word(r.word, assignment);
      const bool expect_minus =
          psl_even && r.kind.tag == RelatorTag::variant_defining;
      const bool ok = expect_minus ? (got == minus_identity) : got.is_identity();
      if (!ok) {
        std::ostringstream os;
        os << "relator " << idx << " (" << to_string(r.kind.tag)
           << ") evaluates to " << got.str();
        found[static_cast<std::size_t>(w)].push_back(
            Failure{idx, r.kind, os.str(), std::move(got)});
      }
    }
  };

  if (workers <= 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.scope = "presentation n=" + std::to_string(p.rank) + " scheme=" + to_string(p.scheme) +
                 " flavor=" + to_string(p.flavor);
  report.total_checks = static_cast<long long>(count);
  for (auto& part : found)
    for (auto& f : part) report.failures.push_back(std::move(f));
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) { return a.index < b.index; });
  report.wall_ms = clock.ms();
  return report;
}

/// Exhaustive check of the conjugation-shift identities:
///   a^-k b a^k         = T_{k+2,k+1}          for 0 <= k <= n-2,
///   a^-(n-1) b a^(n-1) = I + epsilon(n)*E_{1,n}   (the wrap case),
///   a^-k T_{p,q} a^k   = T_{p+k,q+k}          whenever p+k <= n, q+k <= n.
/// Computed with plain matrix products, independently of any word machinery.
inline VerificationReport verify_shift_lemmas(int n) {
  detail::check_rank_at_least(n, 3, "verify_shift_lemmas");
  detail::Stopwatch clock;
  VerificationReport report;
  report.scope = "shift lemmas n=" + std::to_string(n);

  const IntMatrix a = cyclic_generator(n);
  const IntMatrix ai = cyclic_generator_inverse(n);
  const IntMatrix b = transvection(n, 2, 1);
  std::vector<IntMatrix> apow{IntMatrix::identity(n)}, aipow{IntMatrix::identity(n)};
  for (int k = 1; k <= n - 1; ++k) {
    apow.push_back(apow.back() * a);
    aipow.push_back(aipow.back() * ai);
  }
  auto check = [&](const IntMatrix& got, const IntMatrix& want, const std::string& what) {
    ++report.total_checks;
    if (got != want)
      report.failures.push_back(Failure{static_cast<std::size_t>(report.total_checks - 1),
                                        RelatorKind{RelatorTag::steinberg, {}},
                                        what + " evaluates to " + got.str(), got});
  };

  for (int k = 0; k <= n - 2; ++k)
    check(aipow[k] * b * apow[k], transvection(n, k + 2, k + 1),
          "a^-" + std::to_string(k) + " b a^" + std::to_string(k));
  check(aipow[n - 1] * b * apow[n - 1], shear(n, 1, n, epsilon(n)), "wrap-around shift");
  for (int k = 0; k <= n - 2; ++k)
    for (int p = 1; p + k <= n; ++p)
      for (int q = 1; q + k <= n; ++q) {
        if (p == q) continue;
        check(aipow[k] * transvection(n, p, q) * apow[k], transvection(n, p + k, q + k),
              "general shift k=" + std::to_string(k) + " p=" + std::to_string(p) +
                  " q=" + std::to_string(q));
      }

  report.wall_ms = clock.ms();
  return report;
}

/// Checks, in Z/m arithmetic: every balanced transvection word reduces to
/// I + E_{i,j} mod m; ord(b mod m) = m; a^n = epsilon(n)*I mod m.
inline VerificationReport verify_congruence(int n, long long m, WordScheme scheme = WordScheme::balanced) {
  detail::check_rank_at_least(n, 3, "verify_congruence");
  if (m < 2) throw std::invalid_argument("verify_congruence: modulus must be at least 2");
  detail::Stopwatch clock;
  VerificationReport report;
  report.scope = "congruence n=" + std::to_string(n) + " m=" + std::to_string(m);

  const TransvectionTable table(n, scheme);
  const ModAssignment assignment = ModAssignment::canonical(n, m);

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      ++report.total_checks;
      ModMatrix got = eval_word_mod(table.tau(i, j), assignment);
      ModMatrix want = mod_reduce(transvection(n, i, j), m);
      if (got != want)
        report.failures.push_back(Failure{static_cast<std::size_t>(report.total_checks - 1),
                                          RelatorKind{RelatorTag::commutativity, {i, j}},
                                          "transvection word (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") mod " + std::to_string(m) +
                                              " is wrong",
                                          IntMatrix(1)});
    }

  {
    ++report.total_checks;
    auto ord_b = order(assignment.gen[1], m + 1);
    if (!ord_b || *ord_b != m)
      report.failures.push_back(Failure{static_cast<std::size_t>(report.total_checks - 1),
                                        RelatorKind{RelatorTag::torsion, {}},
                                        "ord(b mod m) != m", IntMatrix(1)});
  }
  {
    ++report.total_checks;
    ModMatrix an = assignment.gen[0].pow(n);
    IntMatrix eps_id = IntMatrix::identity(n);
    if (epsilon(n) == -1) eps_id = eps_id.negated();
    if (an != mod_reduce(eps_id, m))
      report.failures.push_back(Failure{static_cast<std::size_t>(report.total_checks - 1),
                                        RelatorKind{RelatorTag::torsion, {}},
                                        "a^n mod m != epsilon*I", IntMatrix(1)});
  }

  report.wall_ms = clock.ms();
  return report;
}

// ---------------------------------------------------------------------------
// Cayley-graph girth probe
// ---------------------------------------------------------------------------

struct GirthProbeResult {
  int n = 0;
  long long p = 0;
  int k = 0;
  long long modulus = 0;
  unsigned long long group_order_found = 0;
  bool complete = false;          // BFS exhausted the group within budget
  long long a_order = 0;          // ord(a mod p^k), always <= 2n
  long long shortest_cycle = 0;   // min(a_order, shortest BFS-detected cycle)
  int bound = 0;                  // 2n
  bool bound_satisfied() const { return shortest_cycle <= bound; }
};

namespace detail {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline ModMatrix mod_matrix_from_key(int n, long long m, const std::string& key) {
  ModMatrix r(n, m);
  std::size_t off = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      long long v;
      std::memcpy(&v, key.data() + off, sizeof(long long));
      off += sizeof(long long);
      r.entry(i, j) = v;
    }
  return r;
}

}  // namespace detail

/// Breadth-first enumeration of the Cayley graph of SL_n(Z/p^k) on
/// {a^{±1}, b^{±1}} starting at the identity.  Reports the number of group
/// elements reached, ord(a), and the shortest nontrivial reduced cycle at the
/// identity (immediate backtracks excluded; a collision between g and h at
/// the edge g*s = h closes a cycle of length dist(g) + 1 + dist(h)).
inline GirthProbeResult girth_probe(int n, long long p, int k,
                                    unsigned long long budget = 2'000'000) {
  detail::check_rank_at_least(n, 3, "girth_probe");
  if (!detail::is_prime(p)) throw std::invalid_argument("girth_probe: p must be prime");
  if (k < 1) throw std::invalid_argument("girth_probe: k must be at least 1");

  long long modulus = 1;
  for (int t = 0; t < k; ++t) {
    if (modulus > (1LL << 31) / p)
      throw std::invalid_argument("girth_probe: p^k exceeds the supported modulus range");
    modulus *= p;
  }

  GirthProbeResult result;
  result.n = n;
  result.p = p;
  result.k = k;
  result.modulus = modulus;
  result.bound = 2 * n;

  const ModAssignment assignment = ModAssignment::canonical(n, modulus);
  // Letters 0..3 = a, a^-1, b, b^-1; letter i's inverse is i^1.
  const std::array<const ModMatrix*, 4> step = {&assignment.gen[0], &assignment.inv[0],
                                                &assignment.gen[1], &assignment.inv[1]};

  auto ord_a = order(assignment.gen[0], 2LL * n);
  result.a_order = ord_a ? *ord_a : 2LL * n;  // a^{2n} = I always; ord_a is defensive
  long long best_cycle = result.a_order;

  struct Seen {
    int dist;
    int in_letter;  // letter used to reach this element; -1 at the identity
  };
  std::unordered_map<std::string, Seen> seen;
  std::deque<std::string> frontier;

  const ModMatrix id = ModMatrix::identity(n, modulus);
  seen.emplace(id.key(), Seen{0, -1});
  frontier.push_back(id.key());
  bool budget_hit = false;

  while (!frontier.empty()) {
    const std::string key = std::move(frontier.front());
    frontier.pop_front();
    const Seen at = seen.at(key);
    const ModMatrix g = detail::mod_matrix_from_key(n, modulus, key);
    for (int s = 0; s < 4; ++s) {
      if (at.in_letter >= 0 && s == (at.in_letter ^ 1)) continue;  // immediate backtrack
      ModMatrix h = g * *step[static_cast<std::size_t>(s)];
      std::string hkey = h.key();
      auto it = seen.find(hkey);
      if (it == seen.end()) {
        if (seen.size() >= budget) {
          budget_hit = true;
          continue;
        }
        seen.emplace(hkey, Seen{at.dist + 1, s});
        frontier.push_back(std::move(hkey));
      } else {
        // Non-tree edge: a closed reduced walk through the identity.
        long long cycle = static_cast<long long>(at.dist) + 1 + it->second.dist;
        if (cycle > 0 && cycle < best_cycle) best_cycle = cycle;
      }
    }
  }

  result.complete = !budget_hit;
  result.group_order_found = seen.size();
  result.shortest_cycle = best_cycle;
  return result;
}

/// |SL_n(Z/p)| = p^(n(n-1)/2) * prod_{i=2..n} (p^i - 1); for a prime power
/// p^k multiply by p^((k-1)(n^2-1)).  Overflow-unchecked beyond ~2^64; meant
/// for the small parameters the probe enumerates.
inline unsigned long long special_linear_group_order(int n, long long p, int k) {
  detail::check_rank_at_least(n, 2, "special_linear_group_order");
  if (!detail::is_prime(p)) throw std::invalid_argument("special_linear_group_order: p must be prime");
  if (k < 1) throw std::invalid_argument("special_linear_group_order: k must be at least 1");
  unsigned long long result = 1;
  for (int t = 0; t < n * (n - 1) / 2; ++t) result *= static_cast<unsigned long long>(p);
  for (int i = 2; i <= n; ++i) {
    unsigned long long pi = 1;
    for (int t = 0; t < i; ++t) pi *= static_cast<unsigned long long>(p);
    result *= pi - 1;
  }
  for (int t = 0; t < (k - 1) * (n * n - 1); ++t) result *= static_cast<unsigned long long>(p);
  return result;
}

// ---------------------------------------------------------------------------
// Word-length survey
// ---------------------------------------------------------------------------

struct SurveyRow {
  int n = 0;
  Int max_tau_length = 0;
  double mean_tau_length = 0.0;
  // First-column data (balanced scheme only; zeros otherwise).
  Int max_first_column_length = 0;
  double max_first_column_ratio = 0.0;  // max_r L_r / r^2
  bool recurrence_ok = true;            // L_r <= 2L_d + 2L_m + 4(m-1)
  double max_tau_ratio = 0.0;           // max_ij l(tau_ij) / n^2
  // Base-presentation size columns, filled for n <= presentation cap.
  bool has_presentation_stats = false;
  long long relator_count = 0;
  Int total_relator_length = 0;
  double count_over_n4 = 0.0;
  double length_over_n6 = 0.0;
};

/// Word-length growth survey over n = 3..n_max.  Presentation size columns
/// are computed up to `presentation_cap` (the full relator sweep is Theta(n^6)
/// letters and deliberately not taken further).  Throws if the balanced
/// first-column lengths ever violate their halving recurrence bound.
inline std::vector<SurveyRow> length_survey(int n_max, WordScheme scheme,
                                            int presentation_cap = 12) {
  detail::check_rank_at_least(n_max, 3, "length_survey");
  if (scheme == WordScheme::recursive && n_max > 8)
    throw std::invalid_argument("length_survey: recursive scheme is supported for n_max <= 8");

  std::vector<SurveyRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    TransvectionTable table(n, scheme);
    SurveyRow row;
    row.n = n;

    Int total = 0;
    long long pairs = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        Int len = table.tau(i, j).length();
        total += len;
        ++pairs;
        if (len > row.max_tau_length) row.max_tau_length = len;
      }
    row.mean_tau_length = total.convert_to<double>() / static_cast<double>(pairs);
    row.max_tau_ratio =
        row.max_tau_length.convert_to<double>() / (static_cast<double>(n) * n);

    if (scheme == WordScheme::balanced) {
      std::vector<Int> L(static_cast<std::size_t>(n) + 1);
      for (int r = 2; r <= n; ++r) {
        L[static_cast<std::size_t>(r)] = table.omega(r).length();
        if (L[static_cast<std::size_t>(r)] > row.max_first_column_length)
          row.max_first_column_length = L[static_cast<std::size_t>(r)];
        double ratio = L[static_cast<std::size_t>(r)].convert_to<double>() /
                       (static_cast<double>(r) * r);
        if (ratio > row.max_first_column_ratio) row.max_first_column_ratio = ratio;
      }
      for (int r = 3; r <= n; ++r) {
        SplitIndices s(r);
        Int bound = 2 * L[static_cast<std::size_t>(s.d)] + 2 * L[static_cast<std::size_t>(s.m)] +
                    4 * (s.m - 1);
        if (L[static_cast<std::size_t>(r)] > bound) {
          row.recurrence_ok = false;
          throw std::logic_error("length_survey: first-column length recurrence violated at r=" +
                                 std::to_string(r) + ", n=" + std::to_string(n));
        }
      }
    }

    if (n <= presentation_cap) {
      PresentationStats s = streaming_stats(n, scheme, Flavor::base);
      row.has_presentation_stats = true;
      row.relator_count = s.count;
      row.total_relator_length = s.total_length;
      double n4 = std::pow(static_cast<double>(n), 4);
      double n6 = std::pow(static_cast<double>(n), 6);
      row.count_over_n4 = static_cast<double>(s.count) / n4;
      row.length_over_n6 = s.total_length.convert_to<double>() / n6;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace slnpres
