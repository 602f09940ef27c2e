#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ugt {

// Why an integer fails to be in Theta.  Every exclusion re-evaluates to the
// excluded integer, so each negative answer is self-certifying.
struct ThetaExclusion {
  enum class Kind { too_small, prime_power, projective_count, power_of_two_form, sporadic };
  Kind kind = Kind::too_small;
  long long p = 0;  // prime (prime_power) or prime-power base q (projective)
  long long d = 0;  // exponent
  long long r = 0;  // projective dimension parameter (r >= 2)
  int sign = 0;     // +1 / -1 for the 2^{2d-1} +- 2^{d-1} family

  long long evaluate() const {
    auto ipow = [](long long b, long long e) {
      long long v = 1;
      while (e-- > 0) v *= b;
      return v;
    };
    switch (kind) {
      case Kind::too_small:
        return -1;
      case Kind::prime_power:
        return ipow(p, d);
      case Kind::projective_count: {
        long long q = ipow(p, d), v = 1, acc = 1;
        for (long long i = 1; i < r; ++i) {
          v *= q;
          acc += v;
        }
        return acc;  // (q^r - 1)/(q - 1)
      }
      case Kind::power_of_two_form:
        return ipow(2, 2 * d - 1) + sign * ipow(2, d - 1);
      case Kind::sporadic:
        return p;
    }
    return -1;
  }

  std::string str() const {
    switch (kind) {
      case Kind::too_small:
        return "too-small";
      case Kind::prime_power:
        return "prime-power(" + std::to_string(p) + "^" + std::to_string(d) + ")";
      case Kind::projective_count:
        return "projective(q=" + std::to_string(p) + "^" + std::to_string(d) +
               ",r=" + std::to_string(r) + ")";
      case Kind::power_of_two_form:
        return std::string("two-power-form(d=") + std::to_string(d) + "," +
               (sign > 0 ? "+" : "-") + ")";
      case Kind::sporadic:
        return "sporadic(" + std::to_string(p) + ")";
    }
    return "?";
  }
};

namespace detail {

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// n = p^d with p prime; returns (p,d) if so.
inline std::optional<std::pair<long long, long long>> prime_power_split(long long n) {
  if (n < 2) return std::nullopt;
  long long p = n;
  for (long long f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      p = f;
      break;
    }
  long long d = 0, m = n;
  while (m % p == 0) {
    m /= p;
    ++d;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, d);
}

}  // namespace detail

struct ThetaAnswer {
  bool in_theta = false;
  std::optional<ThetaExclusion> exclusion;
};

// Membership by bounded search over the exclusion families.
inline ThetaAnswer is_in_theta(long long m) {
  if (m < 1) throw std::invalid_argument("is_in_theta expects m >= 1");
  ThetaAnswer out;
  if (m < 6) {
    out.exclusion = ThetaExclusion{ThetaExclusion::Kind::too_small};
    return out;
  }
  for (long long s : {22, 176, 276})
    if (m == s) {
      ThetaExclusion e{ThetaExclusion::Kind::sporadic};
      e.p = s;
      out.exclusion = e;
      return out;
    }
  if (auto pp = detail::prime_power_split(m)) {
    ThetaExclusion e{ThetaExclusion::Kind::prime_power};
    e.p = pp->first;
    e.d = pp->second;
    out.exclusion = e;
    return out;
  }
  // (q^r - 1)/(q - 1): r = 2 means q = m - 1; r >= 3 bounds q <= sqrt(m)
  if (auto pp = detail::prime_power_split(m - 1)) {
    ThetaExclusion e{ThetaExclusion::Kind::projective_count};
    e.p = pp->first;
    e.d = pp->second;
    e.r = 2;
    out.exclusion = e;
    return out;
  }
  for (long long q = 2; q * q <= m; ++q) {
    auto pp = detail::prime_power_split(q);
    if (!pp) continue;
    long long acc = 1 + q, v = q, r = 2;
    while (acc < m) {
      v *= q;
      acc += v;
      ++r;
      if (acc == m) {
        ThetaExclusion e{ThetaExclusion::Kind::projective_count};
        e.p = pp->first;
        e.d = pp->second;
        e.r = r;
        out.exclusion = e;
        return out;
      }
    }
  }
  for (long long d = 3;; ++d) {
    long long lo = (1ll << (2 * d - 1)) - (1ll << (d - 1));
    if (lo > m) break;
    for (int sg : {-1, +1}) {
      long long v = (1ll << (2 * d - 1)) + sg * (1ll << (d - 1));
      if (v == m) {
        ThetaExclusion e{ThetaExclusion::Kind::power_of_two_form};
        e.d = d;
        e.sign = sg;
        out.exclusion = e;
        return out;
      }
    }
  }
  out.in_theta = true;
  return out;
}

// Exclusion bitmap up to n built from a single prime sieve; no per-m trial
// division.  Memory: two bit vectors of n bits.
class ThetaSieve {
public:
  explicit ThetaSieve(long long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("sieve bound must be >= 1");
    if (n > 100'000'000) throw std::length_error("sieve bound exceeds memory budget");
    std::vector<bool> composite(n_ + 1, false);
    excluded_.assign(n_ + 1, false);
    for (long long m = 1; m <= n_ && m < 6; ++m) excluded_[m] = true;
    for (long long p = 2; p <= n_; ++p) {
      if (composite[p]) continue;
      for (long long v = p * p; v <= n_; v += p) composite[v] = true;
      // prime powers q = p^d and the projective counts they generate
      for (long long q = p; q <= n_; q *= p) {
        excluded_[q] = true;
        if (q + 1 <= n_) excluded_[q + 1] = true;  // r = 2
        long long acc = 1 + q, v = q;
        while (true) {  // r >= 3
          if (v > n_ / q) break;
          v *= q;
          acc += v;
          if (acc > n_) break;
          excluded_[acc] = true;
        }
        if (q > n_ / p) break;
      }
    }
    for (long long d = 3;; ++d) {
      long long lo = (1ll << (2 * d - 1)) - (1ll << (d - 1));
      if (lo > n_) break;
      excluded_[lo] = true;
      long long hi = (1ll << (2 * d - 1)) + (1ll << (d - 1));
      if (hi <= n_) excluded_[hi] = true;
    }
    for (long long s : {22, 176, 276})
      if (s <= n_) excluded_[s] = true;
  }

  long long bound() const { return n_; }
  bool in_theta(long long m) const { return !excluded_.at(m); }

  std::vector<long long> list(long long up_to) const {
    std::vector<long long> out;
    for (long long m = 6; m <= up_to; ++m)
      if (!excluded_[m]) out.push_back(m);
    return out;
  }

  long long count(long long up_to) const {
    long long c = 0;
    for (long long m = 1; m <= up_to; ++m)
      if (!excluded_[m]) ++c;
    return c;
  }

  double density(long long up_to) const {
    return static_cast<double>(count(up_to)) / static_cast<double>(up_to);
  }

private:
  long long n_;
  std::vector<bool> excluded_;
};

inline std::vector<long long> theta_list(long long n) { return ThetaSieve(n).list(n); }
inline double theta_density(long long n) { return ThetaSieve(n).density(n); }

}  // namespace ugt
