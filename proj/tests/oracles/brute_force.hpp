#pragma once

// Test-only oracles. Nothing here calls into the signature, spectra or
// Molien code paths they are used to check.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "edim/enumerate.hpp"
#include "edim/numbers.hpp"
#include "edim/series.hpp"

namespace oracle {

using edim::Integer;
using edim::Rational;

// One element of G(m,l,n): x_i -> zeta_m^{phase[i]} x_{perm[i]}, i.e. the
// matrix with entry zeta^{phase[i]} at (perm[i], i).
struct MonomialElement {
  std::vector<int> perm;
  std::vector<int> phase;
};

// Every element of G(m,l,n), explicitly.
inline std::vector<MonomialElement> elements(int m, int l, int n) {
  std::vector<MonomialElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> phase(n, 0);
    while (true) {
      int sum = std::accumulate(phase.begin(), phase.end(), 0);
      if (sum % l == 0)
        out.push_back({perm, phase});
      int i = 0;
      while (i < n && ++phase[i] == m)
        phase[i++] = 0;
      if (i == n)
        break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Signature of one element by walking its cycles.
inline edim::CycleSignature signature_of(const MonomialElement& e, int m) {
  const int n = static_cast<int>(e.perm.size());
  std::vector<bool> seen(n, false);
  edim::CycleSignature sig;
  sig.modulus = m;
  for (int i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    int len = 0, sum = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      sum += e.phase[j];
      j = e.perm[j];
      ++len;
    }
    sig.cycles.push_back({len, sum % m});
  }
  sig.canonicalize();
  return sig;
}

inline std::map<edim::CycleSignature, Integer> signature_counts(int m, int l, int n) {
  std::map<edim::CycleSignature, Integer> out;
  for (const auto& e : elements(m, l, n))
    out[signature_of(e, m)] += 1;
  return out;
}

// Sign of a permutation by counting inversions.
inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      inv += p[i] > p[j];
  return inv % 2 == 0 ? 1 : -1;
}

inline Eigen::MatrixXcd complex_matrix(const MonomialElement& e, int m) {
  const int n = static_cast<int>(e.perm.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    a(e.perm[i], i) = std::polar(1.0, 2.0 * M_PI * e.phase[i] / m);
  return a;
}

// S_n on the sum-zero hyperplane in the basis e_i - e_n (i < n).
inline Eigen::MatrixXcd standard_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n - 1, n - 1);
  // sigma(e_i - e_n) = e_{s(i)} - e_{s(n)}
  //                  = (e_{s(i)} - e_n) - (e_{s(n)} - e_n)
  for (int i = 0; i < n - 1; ++i) {
    if (perm[i] != n - 1)
      a(perm[i], i) += 1.0;
    if (perm[n - 1] != n - 1)
      a(perm[n - 1], i) -= 1.0;
  }
  return a;
}

// dim ker(zeta I - A), numerically.
inline int eigenspace_dim(const Eigen::MatrixXcd& a, std::complex<double> zeta) {
  const auto n = a.rows();
  if (n == 0)
    return 0;
  Eigen::MatrixXcd b = zeta * Eigen::MatrixXcd::Identity(n, n) - a;
  // Absolute cutoff: all entries here have modulus at most 2.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    rank += svd.singularValues()(i) > 1e-9;
  return static_cast<int>(n - rank);
}

// Integer matrix as a list of rows.
using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix integer_matrix(const MonomialElement& e) {
  const int n = static_cast<int>(e.perm.size());
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    a[e.perm[i]][i] = e.phase[i] == 0 ? 1 : -1;
  return a;
}

inline IntMatrix integer_standard_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  IntMatrix a(n - 1, std::vector<int>(n - 1, 0));
  for (int i = 0; i < n - 1; ++i) {
    if (perm[i] != n - 1)
      a[perm[i]][i] += 1;
    if (perm[n - 1] != n - 1)
      a[perm[n - 1]][i] -= 1;
  }
  return a;
}

using Poly = edim::PolySeries<Rational>;

// det(I - t A) by the Leibniz formula over Q[t].
inline Poly det_one_minus_t(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total;
  do {
    Poly term = Poly::constant(Rational(permutation_sign(perm)));
    for (int i = 0; i < n; ++i) {
      // entry (i, perm[i]) of I - tA
      Poly entry = Poly::monomial(Rational(-a[i][perm[i]]), 1);
      if (i == perm[i])
        entry = entry + Poly::constant(Rational(1));
      term = term * entry;
    }
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// (1/|G|) sum 1/det(I - tA) over explicit integer matrices.
inline std::vector<Rational> molien_average(const std::vector<IntMatrix>& group, std::size_t bound) {
  std::vector<Rational> acc(bound + 1, Rational(0));
  for (const auto& a : group) {
    auto s = edim::series_reciprocal(det_one_minus_t(a), bound);
    for (std::size_t k = 0; k <= bound; ++k)
      acc[k] += s.coeff(k);
  }
  for (auto& c : acc)
    c /= static_cast<int>(group.size());
  return acc;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      result = -result;
    }
  }
  if (n > 1)
    result = -result;
  return result;
}

using IntPoly = std::vector<long long>;

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

// Exact division of integer polynomials by a monic-up-to-sign divisor.
inline IntPoly int_div(IntPoly a, const IntPoly& b) {
  const long db = static_cast<long>(b.size()) - 1;
  IntPoly q(a.size() - b.size() + 1, 0);
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    long long c = a[i] / b.back();
    q[i - db] = c;
    for (long j = 0; j <= db; ++j)
      a[i - db + j] -= c * b[j];
  }
  return q;
}

// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}.
inline IntPoly cyclotomic_mobius(int n) {
  IntPoly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    int mu = mobius(n / d);
    if (mu == 1)
      num = int_mul(num, f);
    else if (mu == -1)
      den = int_mul(den, f);
  }
  return int_div(num, den);
}

// Largest non-representable value by scanning all combinations up to `limit`.
inline long long frobenius_scan(const std::vector<int>& d, long long limit) {
  std::vector<bool> rep(limit + 1, false);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long sum) {
    if (sum > limit)
      return;
    if (i == d.size()) {
      rep[sum] = true;
      return;
    }
    for (long long s = sum; s <= limit; s += d[i])
      rec(i + 1, s);
  };
  rec(0, 0);
  long long last = -1;
  for (long long q = 0; q <= limit; ++q)
    if (!rep[q])
      last = q;
  return last;
}

} // namespace oracle
