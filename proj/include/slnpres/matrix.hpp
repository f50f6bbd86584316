#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slnpres {

using Int = boost::multiprecision::cpp_int;

/// Sign epsilon(n) = (-1)^(n-1): +1 for odd n, -1 for even n.
inline int epsilon(int n) { return (n % 2 != 0) ? 1 : -1; }

/// Square matrix over arbitrary-precision integers, acting on column
/// vectors from the left.  Public indices are 1-based throughout.
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(check_rank(n)), e_(static_cast<std::size_t>(n) * n) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) m.entry(i, i) = 1;
    return m;
  }

  int rank() const { return n_; }

  Int& entry(int i, int j) { return e_[index(i, j)]; }
  const Int& entry(int i, int j) const { return e_[index(i, j)]; }

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_identity() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (entry(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  IntMatrix negated() const {
    IntMatrix r(n_);
    for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = -e_[t];
    return r;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(n_);
    // Skip zero entries of the left factor: the matrices produced here are
    // mostly sparse (shears, permutation-like words), and this is the hot loop.
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        const Int& aik = e_[static_cast<std::size_t>(i) * n_ + k];
        if (aik == 0) continue;
        const Int* brow = &o.e_[static_cast<std::size_t>(k) * n_];
        Int* rrow = &r.e_[static_cast<std::size_t>(i) * n_];
        for (int j = 0; j < n_; ++j)
          if (brow[j] != 0) rrow[j] += aik * brow[j];
      }
    }
    return r;
  }

  /// Nonnegative power by repeated squaring.
  IntMatrix pow(const Int& k) const {
    if (k < 0) throw std::invalid_argument("IntMatrix::pow: negative exponent");
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    Int e = k;
    while (e > 0) {
      if ((e & 1) != 0) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Int trace() const {
    Int t = 0;
    for (int i = 1; i <= n_; ++i) t += entry(i, i);
    return t;
  }

  /// Exact determinant (fraction-free Gaussian elimination).
  Int det() const {
    std::vector<Int> m = e_;
    auto at = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i) * n_ + j]; };
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n_; ++k) {
      if (at(k, k) == 0) {
        int p = -1;
        for (int i = k + 1; i < n_; ++i)
          if (at(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n_; ++i) {
        for (int j = k + 1; j < n_; ++j)
          at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        at(i, k) = 0;
      }
      prev = at(k, k);
    }
    return sign * at(n_ - 1, n_ - 1);
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= n_; ++i) {
      if (i > 1) os << "; ";
      for (int j = 1; j <= n_; ++j) {
        if (j > 1) os << " ";
        os << entry(i, j);
      }
    }
    os << "]";
    return os.str();
  }

 private:
  static int check_rank(int n) {
    if (n < 1) throw std::invalid_argument("IntMatrix: rank must be positive");
    return n;
  }
  std::size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::out_of_range("IntMatrix: index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<Int> e_;
};

/// E_{i,j}: single 1 in row i, column j.  Requires i != j for the
/// transvection helpers, but the unit itself allows i == j.
inline IntMatrix matrix_unit(int n, int i, int j) {
  IntMatrix m(n);
  m.entry(i, j) = 1;  // bounds-checked by entry()
  return m;
}

/// I + c*E_{i,j}, i != j.
inline IntMatrix shear(int n, int i, int j, const Int& c) {
  if (i == j) throw std::invalid_argument("shear: diagonal position is not allowed");
  IntMatrix m = IntMatrix::identity(n);
  m.entry(i, j) = c;
  return m;
}

/// Elementary transvection T_{i,j} = I + E_{i,j}, i != j.
inline IntMatrix transvection(int n, int i, int j) { return shear(n, i, j, 1); }

/// The signed cycle: ones on the superdiagonal, epsilon(n) in the bottom-left
/// corner.  Sends e_1 to epsilon(n)*e_n and e_j to e_{j-1} for j >= 2;
/// determinant 1 for every n.
inline IntMatrix cyclic_generator(int n) {
  if (n < 2) throw std::invalid_argument("cyclic_generator: rank must be at least 2");
  IntMatrix m(n);
  for (int i = 1; i < n; ++i) m.entry(i, i + 1) = 1;
  m.entry(n, 1) = epsilon(n);
  return m;
}

inline IntMatrix cyclic_generator_inverse(int n) {
  if (n < 2) throw std::invalid_argument("cyclic_generator_inverse: rank must be at least 2");
  IntMatrix m(n);
  for (int j = 1; j < n; ++j) m.entry(j + 1, j) = 1;
  m.entry(1, n) = epsilon(n);
  return m;
}

/// Block rotation sigma_r: identity outside rows/columns {r, r+1}, where it is
/// [[0, 1], [-1, 0]].  Sends e_r to -e_{r+1} and e_{r+1} to e_r.
inline IntMatrix sigma_rotation(int n, int r) {
  if (r < 1 || r + 1 > n) throw std::out_of_range("sigma_rotation: block out of range");
  IntMatrix m = IntMatrix::identity(n);
  m.entry(r, r) = 0;
  m.entry(r + 1, r + 1) = 0;
  m.entry(r, r + 1) = 1;
  m.entry(r + 1, r) = -1;
  return m;
}

/// Multiplicative order, probed up to `cap` by repeated multiplication.
/// Returns nullopt if no power up to cap is the identity.
inline std::optional<long long> order(const IntMatrix& m, long long cap) {
  if (cap < 1) throw std::invalid_argument("order: cap must be positive");
  IntMatrix p = m;
  for (long long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    if (k < cap) p = p * m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Residue matrices
// ---------------------------------------------------------------------------

/// Square matrix over Z/m with entries stored canonically in [0, m).
/// Moduli are limited to fit products in 64-bit intermediates.
class ModMatrix {
 public:
  ModMatrix(int n, long long m)
      : n_(n), m_(m), e_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("ModMatrix: rank must be positive");
    if (m < 2 || m > (1LL << 31)) throw std::invalid_argument("ModMatrix: modulus out of range");
  }

  static ModMatrix identity(int n, long long m) {
    ModMatrix r(n, m);
    for (int i = 1; i <= n; ++i) r.entry(i, i) = 1;
    return r;
  }

  int rank() const { return n_; }
  long long modulus() const { return m_; }

  long long& entry(int i, int j) { return e_[index(i, j)]; }
  const long long& entry(int i, int j) const { return e_[index(i, j)]; }

  bool operator==(const ModMatrix& o) const {
    return n_ == o.n_ && m_ == o.m_ && e_ == o.e_;
  }
  bool operator!=(const ModMatrix& o) const { return !(*this == o); }

  bool is_identity() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (entry(i, j) != (i == j ? 1 % m_ : 0)) return false;
    return true;
  }

  ModMatrix operator*(const ModMatrix& o) const {
    if (n_ != o.n_ || m_ != o.m_)
      throw std::invalid_argument("ModMatrix: shape or modulus mismatch in product");
    ModMatrix r(n_, m_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        long long aik = e_[static_cast<std::size_t>(i) * n_ + k];
        if (aik == 0) continue;
        const long long* brow = &o.e_[static_cast<std::size_t>(k) * n_];
        long long* rrow = &r.e_[static_cast<std::size_t>(i) * n_];
        for (int j = 0; j < n_; ++j)
          rrow[j] = static_cast<long long>(
              (static_cast<unsigned __int128>(rrow[j]) + static_cast<unsigned __int128>(aik) * brow[j]) % m_);
      }
    return r;
  }

  ModMatrix pow(const Int& k) const {
    if (k < 0) throw std::invalid_argument("ModMatrix::pow: negative exponent");
    ModMatrix result = identity(n_, m_);
    ModMatrix base = *this;
    Int e = k;
    while (e > 0) {
      if ((e & 1) != 0) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Canonical byte key (row-major residues), usable as a hash-map key.
  std::string key() const {
    std::string s;
    s.reserve(e_.size() * sizeof(long long));
    for (long long v : e_)
      s.append(reinterpret_cast<const char*>(&v), sizeof(long long));
    return s;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::out_of_range("ModMatrix: index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  long long m_;
  std::vector<long long> e_;
};

/// Entry-wise reduction mod m; the result's entries lie in [0, m).
inline ModMatrix mod_reduce(const IntMatrix& a, long long m) {
  ModMatrix r(a.rank(), m);
  for (int i = 1; i <= a.rank(); ++i)
    for (int j = 1; j <= a.rank(); ++j) {
      Int v = a.entry(i, j) % m;
      if (v < 0) v += m;
      r.entry(i, j) = v.convert_to<long long>();
    }
  return r;
}

inline std::optional<long long> order(const ModMatrix& m, long long cap) {
  if (cap < 1) throw std::invalid_argument("order: cap must be positive");
  ModMatrix p = m;
  for (long long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    if (k < cap) p = p * m;
  }
  return std::nullopt;
}

}  // namespace slnpres
