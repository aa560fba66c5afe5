#pragma once

// Exact univariate polynomial certification over the rationals and over
// quadratic extensions Q(sqrt(d)). Root counts use Sturm chains, upper
// bounds use the derivative-sequence variation count, and sign claims on
// an interval combine a zero root count with one exact sample. No
// floating-point value enters any certification path.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace guderley {

using Rational = boost::multiprecision::cpp_rational;

// a + b*sqrt(d) with rational a, b and fixed rational d >= 0. Elements with
// b == 0 are plain rationals and combine with any radicand; if d is a
// perfect square the radical part is folded into the rational part on
// construction, so comparisons stay exact in every case.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {} // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, Rational d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Rational& radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  int sign() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  QuadExt inverse() const;

 private:
  void fold_square();
  static const Rational& merge_radicand(const QuadExt& x, const QuadExt& y);

  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const QuadExt& x) { return x.sign(); }

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> ascending) : c_(std::move(ascending)) {
    trim();
  }

  static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& leading() const { return c_.back(); }

  template <class T>
  T eval(const T& x) const {
    T s{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + T(*it);
    return s;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(scale_int(c_[i], static_cast<long>(i)));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<K> d = c_;
    for (K& x : d) x = -x;
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& x, const Poly& y) {
    std::vector<K> d(std::max(x.c_.size(), y.c_.size()), K{});
    for (std::size_t i = 0; i < x.c_.size(); ++i) d[i] = d[i] + x.c_[i];
    for (std::size_t i = 0; i < y.c_.size(); ++i) d[i] = d[i] + y.c_[i];
    return Poly(std::move(d));
  }
  friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    std::vector<K> d(x.c_.size() + y.c_.size() - 1, K{});
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        d[i + j] = d[i + j] + x.c_[i] * y.c_[j];
    return Poly(std::move(d));
  }

  Poly scaled(const K& s) const {
    std::vector<K> d = c_;
    for (K& x : d) x = x * s;
    return Poly(std::move(d));
  }

 private:
  static Rational scale_int(const Rational& x, long k) { return x * k; }
  static QuadExt scale_int(const QuadExt& x, long k) {
    return QuadExt(x.rational_part() * k, x.radical_part() * k, x.radicand());
  }

  void trim() {
    while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
  }

  std::vector<K> c_;
};

using RationalPoly = Poly<Rational>;
using QuadPoly = Poly<QuadExt>;

// Remainder of field division a mod b (b nonzero).
template <class K>
Poly<K> poly_rem(Poly<K> a, const Poly<K>& b);

// Product of the distinct linear factors of p over its splitting field,
// with multiplicities removed.
template <class K>
Poly<K> square_free(const Poly<K>& p);

// Exact number of distinct real roots of p in the open interval (a, b).
// Roots at the endpoints are removed by exact deflation first, so p may
// vanish at a or b. The zero polynomial is rejected.
int sturm_root_count(const RationalPoly& p, const Rational& a,
                     const Rational& b);
int sturm_root_count(const QuadPoly& p, const QuadExt& a, const QuadExt& b);

struct BudanFourier {
  int bound;  // |V_a - V_b|: roots in (a, b) counted with multiplicity
              // differ from this by an even number
  int parity; // bound mod 2
};
BudanFourier budan_fourier_count(const RationalPoly& p, const Rational& a,
                                 const Rational& b);

enum class Sign { negative, positive };

struct SignReport {
  bool pass = false;
  int roots = 0;    // distinct roots strictly inside (a, b)
  int mid_sign = 0; // exact sign of p at the midpoint
  // On failure with roots present: a subinterval isolating one root.
  std::optional<std::pair<Rational, Rational>> isolating;
};

// Certifies that p has the claimed sign everywhere on the open interval
// (a, b): exact root count zero plus one exact sample evaluation.
SignReport certify_sign(const RationalPoly& p, const Rational& a,
                        const Rational& b, Sign claimed);

struct SuiteItem {
  std::string id;
  std::string interval;
  std::string method; // "sturm" | "budan" | "sampled"
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  bool all_pass = false;
};

// Runs the bundled certification suite: the gamma-univariate sign
// conditions behind the solver's structural claims, the sampled
// two-parameter one-root and positivity conditions on rational grids
// inside their stated regions, and the auxiliary root brackets.
SuiteReport run_paper_suite();

} // namespace guderley
