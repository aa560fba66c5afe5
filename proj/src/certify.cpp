#include "guderley/polycert.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "guderley/errors.hpp"

namespace guderley {

namespace {

using boost::multiprecision::cpp_int;

bool rational_sqrt(const Rational& d, Rational& out) {
  if (d.sign() < 0) return false;
  const cpp_int num = boost::multiprecision::numerator(d);
  const cpp_int den = boost::multiprecision::denominator(d);
  const cpp_int rn = boost::multiprecision::sqrt(num);
  const cpp_int rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  out = Rational(rn, rd);
  return true;
}

} // namespace

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_.sign() < 0) throw domain_error("negative radicand in QuadExt");
  if (b_.is_zero()) d_ = 0;
  fold_square();
}

void QuadExt::fold_square() {
  if (b_.is_zero()) return;
  Rational r;
  if (rational_sqrt(d_, r)) {
    a_ += b_ * r;
    b_ = 0;
    d_ = 0;
  }
}

const Rational& QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ != y.d_)
    throw domain_error("mixed radicands in quadratic extension arithmetic");
  return x.d_;
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the part with the larger square magnitude wins.
  const int cmp = Rational(a_ * a_ - d_ * b_ * b_).sign();
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, d_); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const Rational d = merge_radicand(*this, o);
  Rational na = a_ * o.a_ + d * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = b_.is_zero() ? Rational(0) : d;
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw domain_error("division by zero in quadratic extension");
  if (b_.is_zero()) return QuadExt(Rational(1) / a_, 0, 0);
  const Rational norm = a_ * a_ - d_ * b_ * b_;
  return QuadExt(a_ / norm, -b_ / norm, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

namespace {

// Positive scalar rescaling keeps every sign in a chain unchanged while
// holding coefficient growth down.
void collect_content(const Rational& x, cpp_int& num_gcd, cpp_int& den_lcm) {
  if (x.is_zero()) return;
  const cpp_int num = boost::multiprecision::abs(
      boost::multiprecision::numerator(x));
  const cpp_int den = boost::multiprecision::denominator(x);
  num_gcd = num_gcd.is_zero() ? num : boost::multiprecision::gcd(num_gcd, num);
  den_lcm = boost::multiprecision::lcm(den_lcm, den);
}

template <class K>
void visit_rationals(const K&, cpp_int&, cpp_int&);

template <>
void visit_rationals(const Rational& x, cpp_int& g, cpp_int& l) {
  collect_content(x, g, l);
}

template <>
void visit_rationals(const QuadExt& x, cpp_int& g, cpp_int& l) {
  collect_content(x.rational_part(), g, l);
  collect_content(x.radical_part(), g, l);
}

Rational scale_rat(const Rational& x, const Rational& s) { return x * s; }
QuadExt scale_rat(const QuadExt& x, const Rational& s) {
  return QuadExt(x.rational_part() * s, x.radical_part() * s, x.radicand());
}

template <class K>
Poly<K> content_normalized(const Poly<K>& p) {
  if (p.is_zero()) return p;
  cpp_int g = 0, l = 1;
  for (const K& c : p.coeffs()) visit_rationals(c, g, l);
  if (g.is_zero()) return p;
  const Rational s(l, g);
  std::vector<K> out;
  out.reserve(p.coeffs().size());
  for (const K& c : p.coeffs()) out.push_back(scale_rat(c, s));
  return Poly<K>(std::move(out));
}

} // namespace

template <class K>
Poly<K> poly_rem(Poly<K> a, const Poly<K>& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    K q = a.leading() / b.leading();
    std::vector<K> sub(static_cast<std::size_t>(shift), K{});
    sub.push_back(std::move(q));
    a = a - b * Poly<K>(std::move(sub));
  }
  return a;
}

namespace {

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = content_normalized(poly_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class K>
Poly<K> divide_exact(const Poly<K>& a, const Poly<K>& b) {
  std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), K{});
  Poly<K> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    K c = r.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] = c;
    std::vector<K> sub(static_cast<std::size_t>(shift), K{});
    sub.push_back(std::move(c));
    r = r - b * Poly<K>(std::move(sub));
  }
  return Poly<K>(std::move(q));
}

// Removes a root at the rational point x exactly, as often as it divides.
template <class K>
Poly<K> deflate_at(Poly<K> p, const K& x) {
  while (!p.is_zero() && p.degree() >= 1 &&
         sign_of(p.template eval<K>(x)) == 0) {
    p = divide_exact(p, Poly<K>(std::vector<K>{-x, K(1)}));
  }
  return p;
}

template <class K>
std::vector<Poly<K>> sturm_chain(const Poly<K>& p) {
  std::vector<Poly<K>> ch;
  ch.push_back(content_normalized(p));
  ch.push_back(content_normalized(p.derivative()));
  while (!ch.back().is_zero() && ch.back().degree() > 0) {
    Poly<K> r = poly_rem(ch[ch.size() - 2], ch.back());
    if (r.is_zero()) break;
    ch.push_back(content_normalized(-r));
  }
  return ch;
}

template <class K>
int variations(const std::vector<Poly<K>>& seq, const K& x) {
  int v = 0, last = 0;
  for (const auto& f : seq) {
    if (f.is_zero()) continue;
    const int s = sign_of(f.template eval<K>(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

template <class K>
int sturm_count_impl(const Poly<K>& p, const K& a, const K& b) {
  if (p.is_zero()) throw domain_error("root count of the zero polynomial");
  if (sign_of(K(b) - a) <= 0)
    throw domain_error("root count needs an interval with a < b");
  Poly<K> sf = square_free(p);
  sf = deflate_at(std::move(sf), a);
  sf = deflate_at(std::move(sf), b);
  if (sf.degree() <= 0) return 0;
  const auto ch = sturm_chain(sf);
  return variations(ch, a) - variations(ch, b);
}

} // namespace

template <class K>
Poly<K> square_free(const Poly<K>& p) {
  if (p.degree() <= 1) return p;
  Poly<K> g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divide_exact(p, g);
}

template Poly<Rational> poly_rem(Poly<Rational>, const Poly<Rational>&);
template Poly<QuadExt> poly_rem(Poly<QuadExt>, const Poly<QuadExt>&);
template Poly<Rational> square_free(const Poly<Rational>&);
template Poly<QuadExt> square_free(const Poly<QuadExt>&);

int sturm_root_count(const RationalPoly& p, const Rational& a,
                     const Rational& b) {
  return sturm_count_impl(p, a, b);
}

int sturm_root_count(const QuadPoly& p, const QuadExt& a, const QuadExt& b) {
  return sturm_count_impl(p, a, b);
}

BudanFourier budan_fourier_count(const RationalPoly& p, const Rational& a,
                                 const Rational& b) {
  if (p.is_zero()) throw domain_error("root bound of the zero polynomial");
  if (b <= a) throw domain_error("root bound needs an interval with a < b");
  RationalPoly q = deflate_at(p, a);
  q = deflate_at(std::move(q), b);
  if (q.degree() <= 0) return {0, 0};
  std::vector<RationalPoly> seq{q};
  while (seq.back().degree() > 0) seq.push_back(seq.back().derivative());
  const int bound = std::abs(variations(seq, a) - variations(seq, b));
  return {bound, bound % 2};
}

SignReport certify_sign(const RationalPoly& p, const Rational& a,
                        const Rational& b, Sign claimed) {
  SignReport rep;
  rep.roots = sturm_root_count(p, a, b);
  const Rational mid = (a + b) / 2;
  rep.mid_sign = p.eval<Rational>(mid).sign();
  const int want = claimed == Sign::positive ? 1 : -1;
  rep.pass = rep.roots == 0 && rep.mid_sign == want;
  if (rep.roots > 0) {
    RationalPoly sf = square_free(p);
    sf = deflate_at(std::move(sf), a);
    sf = deflate_at(std::move(sf), b);
    Rational lo = a, hi = b;
    int count = sturm_root_count(sf, lo, hi);
    while (count > 1) {
      const Rational m = (lo + hi) / 2;
      if (sf.eval<Rational>(m).is_zero()) {
        Rational delta = (hi - lo) / 4;
        while (sturm_root_count(sf, m - delta, m + delta) != 1) delta /= 2;
        lo = m - delta;
        hi = m + delta;
        break;
      }
      const int left = sturm_root_count(sf, lo, m);
      if (left >= 1) {
        hi = m;
        count = left;
      } else {
        lo = m;
        count = sturm_root_count(sf, lo, hi);
      }
    }
    rep.isolating = std::make_pair(lo, hi);
  }
  return rep;
}

namespace {

RationalPoly ipoly(std::vector<long> ascending) {
  std::vector<Rational> c(ascending.begin(), ascending.end());
  return RationalPoly(std::move(c));
}

std::string rstr(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string interval_str(const Rational& a, const Rational& b, bool ia,
                         bool ib) {
  return std::string(ia ? "[" : "(") + rstr(a) + "," + rstr(b) +
         (ib ? "]" : ")");
}

class Suite {
 public:
  // Certifies a strict sign on an interval; closed endpoints add an exact
  // evaluation at the endpoint itself.
  void sign_item(const std::string& id, const RationalPoly& p,
                 const Rational& a, const Rational& b, Sign s,
                 bool include_a = false, bool include_b = false) {
    const SignReport rep = certify_sign(p, a, b, s);
    const int want = s == Sign::positive ? 1 : -1;
    bool pass = rep.pass;
    if (include_a) pass = pass && p.eval<Rational>(a).sign() == want;
    if (include_b) pass = pass && p.eval<Rational>(b).sign() == want;
    std::ostringstream detail;
    detail << "degree " << p.degree() << ", roots " << rep.roots
           << ", sample sign " << rep.mid_sign;
    push(id, interval_str(a, b, include_a, include_b), "sturm", pass,
         detail.str());
  }

  void quad_sign_item(const std::string& id, const QuadPoly& p,
                      const Rational& a, const Rational& b, Sign s,
                      bool include_a = false, bool include_b = false) {
    const QuadExt qa(a), qb(b);
    const int roots = sturm_root_count(p, qa, qb);
    const int want = s == Sign::positive ? 1 : -1;
    const QuadExt mid((a + b) / 2);
    bool pass = roots == 0 && p.eval<QuadExt>(mid).sign() == want;
    if (include_a) pass = pass && p.eval<QuadExt>(qa).sign() == want;
    if (include_b) pass = pass && p.eval<QuadExt>(qb).sign() == want;
    std::ostringstream detail;
    detail << "degree " << p.degree() << ", roots " << roots
           << ", coefficients in a quadratic extension";
    push(id, interval_str(a, b, include_a, include_b), "sturm", pass,
         detail.str());
  }

  void push(const std::string& id, const std::string& interval,
            const std::string& method, bool pass, const std::string& detail) {
    report.items.push_back({id, interval, method, pass, detail});
  }

  SuiteReport report;
};

// Exact comparators for the lower and upper edges of the admissible
// exponent strip at rational (gamma, z). Both reduce the defining radical
// to a rational inequality by squaring a positive rearrangement.
bool z_above_strip_floor(const Rational& g, const Rational& z, int m) {
  if (m == 1) {
    const Rational lhs = z * g * (g - 1) + g;
    return lhs.sign() > 0 && lhs * lhs > g * g + (g - 1) * (g - 1);
  }
  const Rational acc = 4 * g * (g - 1) + Rational(8, 3);
  const Rational base = 2 * g * g - g + 1;
  const Rational lhs = z * g * acc + base;
  return lhs.sign() > 0 && lhs * lhs > base * base + 2 * g * (g - 1) * acc;
}

bool z_below_strip_ceiling(const Rational& g, const Rational& z) {
  const Rational rest = 1 - z * (2 + g);
  return rest.sign() > 0 && rest * rest > 8 * g * z * z;
}

// Largest dyadic value below the ceiling, and a dyadic value just above the
// floor, found by exact bisection.
Rational dyadic_below_ceiling(const Rational& g) {
  Rational lo = 0, hi = Rational(1, 5);
  for (int i = 0; i < 24; ++i) {
    const Rational mid = (lo + hi) / 2;
    (z_below_strip_ceiling(g, mid) ? lo : hi) = mid;
  }
  return lo;
}

Rational dyadic_above_floor(const Rational& g, int m, const Rational& cap) {
  Rational lo = 0, hi = cap;
  for (int i = 0; i < 24; ++i) {
    const Rational mid = (lo + hi) / 2;
    (z_above_strip_floor(g, mid, m) ? hi : lo) = mid;
  }
  return hi;
}

RationalPoly sextic_in_C(const Rational& g, const Rational& z, int m) {
  std::vector<Rational> c(7);
  c[6] = 2 * (m * (g - 1) + 1);
  c[5] = 7 * m * (g - 1) + 6;
  c[4] = 5 * m * g - 3 * m - 2 + 2 * m * (g - 2) * g * z;
  c[3] = m * (5 * g - 9) * (g * z - 1) - 12;
  c[2] = 5 * m * (1 - g) + 2 + 2 * m * g * g * z;
  c[1] = m * (g - 3) + 6 - m * (2 * g * g - 6 * g + 2) * z;
  c[0] = m * (g - 1) - 2 - m * (g * g + g - 4) * z;
  return RationalPoly(std::move(c));
}

RationalPoly quartic_in_V(const Rational& g, const Rational& z, int m) {
  std::vector<Rational> c(5);
  c[4] = -4 * (g - 1);
  c[3] = (m - 1) * g * g - (m + 11) * g + 16 + 4 * m * g * (1 - g) * z;
  c[2] = (2 * m - 1) * g * g - (2 * m + 10) * g + 24 -
         2 * m * g * (g * g + 4 * g - 7) * z;
  c[1] = m * g * g - (3 + m) * g + 16 - m * g * (2 * g * g + 5 * g - 16) * z;
  c[0] = 4 + 2 * m * g * (3 - g) * z;
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> strip_edge_rearranged(int m) {
  const RationalPoly head = ipoly({2187, -209, -152}).scaled(27 * m);
  const RationalPoly tail = ipoly({-9044 * m - 703, 2888 * m});
  const RationalPoly P = head + tail * ipoly({2, 1});
  const RationalPoly Q = tail.scaled(2);
  return {P, Q};
}

void edge_sign_items(Suite& s) {
  for (int m = 1; m <= 2; ++m) {
    const auto [P, Q] = strip_edge_rearranged(m);
    const RationalPoly H = P * P - ipoly({0, 2}) * Q * Q;
    const std::string tag = ".m" + std::to_string(m);
    s.sign_item("g01" + tag + ".radical-coef", Q, Rational(5, 2), 3,
                Sign::negative, true, true);
    s.sign_item("g01" + tag + ".squared", H, Rational(5, 2), 3, Sign::negative,
                true, true);
  }
  s.sign_item("g01.ceiling-coef", ipoly({2187, -209, -152}), Rational(5, 2), 3,
              Sign::positive, true, true);

  // Direct exact samples of the original form, with the strip ceiling kept
  // as an element of Q(sqrt(2 gamma)).
  for (int m = 1; m <= 2; ++m) {
    bool pass = true;
    for (int k = 0; k <= 20; ++k) {
      const Rational g = Rational(5, 2) + Rational(k, 40);
      const QuadExt zM = QuadExt(2 + g, 2, 2 * g).inverse();
      const QuadExt expr =
          QuadExt(Rational(m) * (3 - Rational(209) * g / 729 -
                                 Rational(152) * g * g / 729)) *
              zM +
          QuadExt(Rational(m) * (2888 * g - 9044) / 19683 -
                  Rational(703, 19683));
      pass = pass && expr.sign() < 0;
    }
    s.push("g01.m" + std::to_string(m) + ".sampled", "[5/2,3]", "sampled",
           pass, "21 exact samples of the original radical form");
  }
}

void one_root_bracket_items(Suite& s, const std::string& id,
                            const RationalPoly& p, const Rational& lo,
                            const Rational& hi) {
  const bool range_one = sturm_root_count(p, 1, 2) == 1;
  const bool no_endpoint_roots = p.eval<Rational>(1).sign() > 0 &&
                                 p.eval<Rational>(2).sign() < 0;
  const bool bracket_one = sturm_root_count(p, lo, hi) == 1;
  const bool signs = p.eval<Rational>(lo).sign() > 0 &&
                     p.eval<Rational>(hi).sign() < 0;
  std::ostringstream detail;
  detail << "one root in (1,2]: " << (range_one ? "yes" : "no")
         << ", sign change across " << interval_str(lo, hi, false, false);
  s.push(id, interval_str(lo, hi, false, false), "sturm",
         range_one && no_endpoint_roots && bracket_one && signs,
         detail.str());
}

void grid_one_root_items(Suite& s) {
  for (int m = 1; m <= 2; ++m) {
    const Rational ghi = m == 1 ? Rational(79, 50) : Rational(77, 50);
    int passed = 0, total = 0, vacuous = 0;
    bool in_region = true;
    bool budan_only = true;
    for (int j = 1; j <= 20; ++j) {
      const Rational g = 1 + (ghi - 1) * j / 21;
      // Columns where 1/10 does not exceed the strip floor have an empty
      // z-range; that emptiness is itself decided exactly.
      if (!z_above_strip_floor(g, Rational(1, 10), m)) {
        ++vacuous;
        continue;
      }
      const Rational zlo = dyadic_above_floor(g, m, Rational(1, 10));
      for (int k = 0; k < 20; ++k) {
        const Rational z = zlo + (Rational(1, 10) - zlo) * k / 21;
        ++total;
        if (!(z_above_strip_floor(g, z, m) && z < Rational(1, 10))) {
          in_region = false;
          continue;
        }
        const RationalPoly B = sextic_in_C(g, z, m);
        const BudanFourier bf = budan_fourier_count(B, -1, 0);
        const bool ends = B.eval<Rational>(-1).sign() > 0 &&
                          B.eval<Rational>(0).sign() < 0;
        const bool sturm_one = sturm_root_count(B, -1, 0) == 1;
        if (bf.bound != 1) budan_only = false;
        if (bf.bound == 1 && ends && sturm_one) ++passed;
      }
    }
    std::ostringstream detail;
    detail << passed << "/" << total
           << " grid points: variation bound 1, endpoint signs +/-, root "
              "count 1; "
           << vacuous << " columns with an empty z-range decided exactly";
    const bool pass = in_region && passed == total &&
                      total == (20 - vacuous) * 20 && vacuous < 20;
    s.push("sextic-one-root.m" + std::to_string(m),
           "(1," + rstr(ghi) + "]x(floor,1/10)",
           budan_only ? "budan" : "sturm", pass, detail.str());
  }
}

void grid_quartic_items(Suite& s) {
  for (int m = 1; m <= 2; ++m) {
    int passed = 0, total = 0;
    for (int j = 1; j <= 20; ++j) {
      const Rational g = 1 + Rational(j, 20);
      const Rational zhi = dyadic_below_ceiling(g);
      const Rational zlo = dyadic_above_floor(g, m, zhi);
      for (int k = 1; k <= 20; ++k) {
        const Rational z = zlo + (zhi - zlo) * k / 20;
        ++total;
        if (!(z_above_strip_floor(g, z, m) && z_below_strip_ceiling(g, z)))
          continue;
        const RationalPoly p = quartic_in_V(g, z, m);
        const BudanFourier bf = budan_fourier_count(p, -1, 0);
        const bool ends = p.eval<Rational>(-1).sign() < 0 &&
                          p.eval<Rational>(0).sign() > 0;
        // Turning point of the sonic-tangency parabola, exact in
        // Q(sqrt((9g-8)g)).
        const Rational d = (9 * g - 8) * g;
        const QuadExt vhat(Rational(4 - 5 * g) / (4 * (g - 1)),
                           Rational(1) / (4 * (g - 1)), d);
        const bool inside =
            vhat.sign() < 0 && (vhat + QuadExt(1)).sign() > 0;
        const bool value_pos = p.eval<QuadExt>(vhat).sign() > 0;
        if (bf.bound == 1 && ends && inside && value_pos) ++passed;
      }
    }
    std::ostringstream detail;
    detail << passed << "/" << total
           << " grid points: one root below the turning point, value "
              "positive there";
    s.push("quartic-positive-above-vhat.m" + std::to_string(m),
           "(1,2]x(floor,ceiling]", "budan", passed == total && total == 400,
           detail.str());
  }
}

void auxiliary_items(Suite& s) {
  // Floor of the admissible strip stays above 1/10 beyond the crossing
  // value of gamma.
  s.sign_item("zg-floor.m1.cubic", ipoly({100, -100, 19, 1}), Rational(79, 50),
              3, Sign::negative, true, true);
  s.sign_item("zg-floor.m2.cubic", ipoly({15, -11, 24, 6}), 1, 3,
              Sign::positive, true, true);
  s.sign_item("zg-floor.m2.quad", ipoly({-55, 36, 3}), Rational(77, 50), 3,
              Sign::positive, true, true);
  s.sign_item("zg-floor.m2.pos", ipoly({2, -3, 3}), 1, 3, Sign::positive, true,
              true);

  // Sign conditions feeding the cubic bound and its derivative.
  s.sign_item("cubic-p.dz", ipoly({22, 16, -9, 4}), 1, 2, Sign::positive,
              false, true);
  s.sign_item("cubic-p.ceiling-fifth", ipoly({9, -14, 1}), 1, 3,
              Sign::negative, true, true);

  // Monotonicity of the strip weight for z below one fifth.
  s.sign_item("w-decreasing", ipoly({-6, -9, 1}), 1, 2, Sign::negative, true,
              true);

  // Endpoint positivity of the matching value at the low end of the
  // exponent range.
  s.sign_item("locus-endpoint.m1.linear", ipoly({-57, 34}), 1,
              Rational(159, 100), Sign::negative, false, true);
  s.sign_item("locus-endpoint.m1.quad", ipoly({-125, -233, 108}), 1,
              Rational(159, 100), Sign::negative, false, true);
  s.sign_item("locus-endpoint.m1.radicand", ipoly({109156, 15844, 289}), 1, 2,
              Sign::positive, false, true);
  s.sign_item("locus-endpoint.m1.denominator", ipoly({11594, 56125, -1836}), 1,
              2, Sign::positive, false, true);
  s.sign_item("locus-endpoint.m2.quad", ipoly({-511, -2046, 921}), 1,
              Rational(31, 20), Sign::negative, false, true);
  s.sign_item("locus-endpoint.m2.radicand", ipoly({39531, 11594, 289}), 1, 2,
              Sign::positive, false, true);
  s.sign_item("locus-endpoint.m2.denominator", ipoly({-4749, 121500, -5219}),
              1, 2, Sign::positive, false, true);
}

} // namespace

SuiteReport run_paper_suite() {
  Suite s;

  edge_sign_items(s);
  s.sign_item("g02", ipoly({771743, -1769830, 1369003, -673057, 266711,
                            -51495, 5050, -250}),
              1, Rational(159, 100), Sign::negative, false, true);
  s.sign_item("g03",
              RationalPoly(std::vector<Rational>{
                  Rational(9959809328LL), Rational(-7162470820LL),
                  Rational(1178808488LL), Rational(-451420037LL),
                  Rational(22188041LL)}),
              Rational(79, 50), 2, Sign::negative, true, true);
  s.sign_item("g04", ipoly({26076848, -19360620, 3215408, -1244367, 61731}),
              Rational(77, 50), 2, Sign::negative, true, true);
  s.sign_item("g05", ipoly({828125, -1143750, 341118, -37368, 2592}), 1, 2,
              Sign::negative, false, true);
  s.sign_item("g06", ipoly({53, -141, 123, -90, 18}), 1, 2, Sign::negative,
              false, true);
  s.sign_item("g07", ipoly({-121589, 158584, -68886, 7680, -600}), 1, 2,
              Sign::negative, false, true);
  s.sign_item("g08", ipoly({49348, -89063, 48852, -5760, 450}), 1, 2,
              Sign::positive, false, true);
  s.sign_item("g09", ipoly({1048, -3248, 3476, -1119, 81}), 1,
              Rational(159, 100), Sign::positive, false, true);
  s.sign_item("g10", ipoly({100, -100, 19, 1}), Rational(5, 2), 3,
              Sign::negative, true, true);
  s.sign_item("g11", ipoly({-414, 405, 167, -180, 36}), 1, 2, Sign::positive,
              false, true);
  s.sign_item("g12",
              ipoly({4729, 15074, -11948, -3575, 4270, -292, -352, 64}), 1, 2,
              Sign::positive, false, true);

  // Numerator and denominator pieces of the strip-weight inequality whose
  // coefficients live in Q(sqrt(3)).
  {
    auto q3 = [](long a, long b) {
      return QuadExt(Rational(a), Rational(b), 3);
    };
    const QuadPoly N(std::vector<QuadExt>{q3(-250059, 133125),
                                          q3(110869, -42750),
                                          q3(-25282, 6875), q3(5485, 0),
                                          q3(-450, 0)});
    const QuadPoly D(
        std::vector<QuadExt>{q3(1065, -250), q3(-342, 0), q3(55, 0)});
    s.quad_sign_item("g13.numerator", N, 1, 2, Sign::positive, false, true);
    s.quad_sign_item("g13.denominator", D, 1, 2, Sign::positive, false, true);
    s.sign_item("g13.radicand", ipoly({6561, -5816, 2714, -320, 25}), 1, 2,
                Sign::positive, false, true);
  }

  // Quintic bound evaluated along z = 2(gamma-1)/11, composed exactly.
  {
    const RationalPoly gm2 = ipoly({-2, 1});
    const RationalPoly gm2_2 = gm2 * gm2;
    const RationalPoly gm2_3 = gm2_2 * gm2;
    const RationalPoly gm2_5 = gm2_3 * gm2_2;
    const RationalPoly gm2_6 = gm2_5 * gm2;
    const RationalPoly c5 = ipoly({-1, 2}).scaled(32) * gm2_6;
    const RationalPoly c4 = ipoly({-1, 3}).scaled(32) * gm2_5;
    const RationalPoly c3 = ipoly({-4, -5, 3}).scaled(4) * gm2_3;
    const RationalPoly c2 = ipoly({4, -25, 11}).scaled(-2) * gm2_2;
    const RationalPoly c1 = -ipoly({-10, -1, 1}) * gm2;
    const RationalPoly c0 = ipoly({1, -1}) * ipoly({1, -1});
    const RationalPoly zs(
        std::vector<Rational>{Rational(-2, 11), Rational(2, 11)});
    RationalPoly composed = c0;
    RationalPoly zp = zs;
    composed = composed + c1 * zp;
    zp = zp * zs;
    composed = composed + c2 * zp;
    zp = zp * zs;
    composed = composed + c3 * zp;
    zp = zp * zs;
    composed = composed + c4 * zp;
    zp = zp * zs;
    composed = composed + c5 * zp;
    s.sign_item("g14", composed, 1, Rational(159, 100), Sign::negative, false,
                true);
  }

  one_root_bracket_items(
      s, "g15", ipoly({15625, -15625, 5016, -546, -245, 25}), Rational(79, 50),
      Rational(159, 100));
  one_root_bracket_items(
      s, "g16",
      ipoly({110250, -275503, 359749, -207817, 39111, 6432, -4860, 450}),
      Rational(77, 50), Rational(31, 20));
  s.sign_item("g17", ipoly({217809, -1166290, 1084814, -487091, 154918,
                            -27310, 2525, -125}),
              1, Rational(159, 100), Sign::negative, false, true);
  s.sign_item("g18", ipoly({760577, -880880, 317142, -68208, 2744}),
              Rational(77, 50), 2, Sign::negative, true, true);
  s.sign_item("g19", ipoly({10619, -23264, 10856, -1280, 100}), 1, 2,
              Sign::negative, false, true);
  s.sign_item("g20", ipoly({4061, -5816, 2714, -320, 25}), 1,
              Rational(159, 100), Sign::positive, false, true);

  grid_one_root_items(s);
  grid_quartic_items(s);
  auxiliary_items(s);

  s.report.all_pass = true;
  for (const SuiteItem& it : s.report.items)
    s.report.all_pass = s.report.all_pass && it.pass;
  return s.report;
}

} // namespace guderley
