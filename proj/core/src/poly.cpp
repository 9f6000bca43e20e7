/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/poly.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "zpoly.hpp"

namespace sigvol {
namespace detail {

void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void zderivative(const ZPoly& p, ZPoly& out) {
  if (p.size() <= 1) {
    out.clear();
    return;
  }
  out.resize(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    mpz_mul_ui(out[i - 1].get_mpz_t(), p[i].get_mpz_t(),
               static_cast<unsigned long>(i));
  }
  ztrim(out);
}

void zprimitive(ZPoly& p) {
  if (p.empty()) return;
  mpz_class content = abs(p.back());
  for (std::size_t i = 0; i + 1 < p.size() && content != 1; ++i) {
    if (sgn(p[i]) != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), p[i].get_mpz_t());
  }
  if (content == 1) return;
  for (auto& c : p) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
}

void zdivexact(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
  if (den.empty()) throw std::invalid_argument("zdivexact: zero divisor");
  if (num.empty()) {
    quot.clear();
    return;
  }
  int dn = zdeg(num), dd = zdeg(den);
  if (dn < dd) throw std::invalid_argument("zdivexact: not divisible");
  ZPoly rem = num;
  quot.assign(static_cast<std::size_t>(dn - dd) + 1, mpz_class(0));
  // Top-down synthetic division; every leading coefficient of the running
  // remainder is divisible by lc(den) when the quotient is integral.
  for (int k = dn - dd; k >= 0; --k) {
    int top = k + dd;
    if (zdeg(rem) < top) continue;  // coefficient already cancelled
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[top].get_mpz_t(), den.back().get_mpz_t());
    quot[k] = q;
    if (sgn(q) != 0) {
      for (int j = 0; j <= dd; ++j) rem[k + j] -= q * den[j];
    }
    ztrim(rem);
  }
  if (!rem.empty()) throw std::invalid_argument("zdivexact: not divisible");
  ztrim(quot);
}

namespace {

// One negated pseudo-remainder step: out = primitive(-(a mod b)), with the
// pseudo-division multiplier compensated so the step acts as division by a
// positive constant (the three-term sign relation of the chain needs that).
void sturm_next(const ZPoly& a, const ZPoly& b, ZPoly& out, mpz_class& t0) {
  out = a;
  const mpz_class& lcb = b.back();
  int db = zdeg(b);
  long iterations = 0;
  while (!out.empty() && zdeg(out) >= db) {
    int delta = zdeg(out) - db;
    t0 = out.back();
    for (auto& c : out) c *= lcb;
    for (int j = 0; j <= db; ++j) out[delta + j] -= t0 * b[j];
    ztrim(out);
    ++iterations;
  }
  // Total multiplier is lcb^iterations; when it is negative the computed
  // remainder is already the negated one.
  bool flip = !(sgn(lcb) < 0 && (iterations & 1));
  if (flip) {
    for (auto& c : out) c = -c;
  }
  zprimitive(out);
}

int sign_at_neg_inf(const ZPoly& p) {
  int s = sgn(p.back());
  return (zdeg(p) & 1) ? -s : s;
}

int count_variations(const int* signs, int n) {
  int count = 0, last = 0;
  for (int i = 0; i < n; ++i) {
    if (signs[i] == 0) continue;
    if (last != 0 && signs[i] != last) ++count;
    last = signs[i];
  }
  return count;
}

}  // namespace

void zgcd(const ZPoly& a, const ZPoly& b, ZPoly& g) {
  ZPoly u = a, v = b, r;
  mpz_class t0;
  ztrim(u);
  ztrim(v);
  if (zdeg(u) < zdeg(v)) std::swap(u, v);
  zprimitive(u);
  zprimitive(v);
  while (!v.empty()) {
    if (zdeg(v) == 0) {
      // Nonzero constant: coprime.
      g.assign(1, mpz_class(1));
      return;
    }
    sturm_next(u, v, r, t0);  // sign irrelevant for gcd
    u = std::move(v);
    v = std::move(r);
    r.clear();
  }
  g = std::move(u);
  if (!g.empty() && sgn(g.back()) < 0) {
    for (auto& c : g) c = -c;
  }
}

int zsign_at_rational(const ZPoly& p, const mpz_class& u, const mpz_class& v) {
  if (p.empty()) return 0;
  // p(u/v) * v^deg = sum c_i u^i v^{deg-i}, evaluated by Horner.
  mpz_class val = p.back(), vp = 1;
  for (int i = zdeg(p) - 1; i >= 0; --i) {
    vp *= v;
    val *= u;
    val += p[static_cast<std::size_t>(i)] * vp;
  }
  return sgn(val);
}

void SturmChain::build(const ZPoly& p) {
  if (zdeg(p) < 1) throw std::invalid_argument("SturmChain: degree < 1");
  if (elems_.size() < 2) elems_.resize(2);
  elems_[0] = p;
  zprimitive(elems_[0]);
  zderivative(elems_[0], elems_[1]);
  zprimitive(elems_[1]);
  length_ = 2;
  while (zdeg(elems_[static_cast<std::size_t>(length_ - 1)]) > 0) {
    // Resize before taking references: vector growth would invalidate them.
    if (elems_.size() < static_cast<std::size_t>(length_) + 1) {
      elems_.resize(static_cast<std::size_t>(length_) + 1);
    }
    ZPoly& r = elems_[static_cast<std::size_t>(length_)];
    sturm_next(elems_[static_cast<std::size_t>(length_ - 2)],
               elems_[static_cast<std::size_t>(length_ - 1)], r, t0_);
    if (r.empty()) break;
    ++length_;
  }
}

int SturmChain::variations_at_neg_inf() const {
  int signs[64];
  for (int i = 0; i < length_; ++i) signs[i] = sign_at_neg_inf(elems_[static_cast<std::size_t>(i)]);
  return count_variations(signs, length_);
}

int SturmChain::variations_at_pos_inf() const {
  int signs[64];
  for (int i = 0; i < length_; ++i) signs[i] = sgn(elems_[static_cast<std::size_t>(i)].back());
  return count_variations(signs, length_);
}

int SturmChain::variations_at(const mpz_class& u, const mpz_class& v) const {
  int signs[64];
  for (int i = 0; i < length_; ++i) {
    signs[i] = zsign_at_rational(elems_[static_cast<std::size_t>(i)], u, v);
  }
  return count_variations(signs, length_);
}

int zreal_roots_with_multiplicity(ZPoly& p, SturmChain& chain) {
  int total = 0;
  while (zdeg(p) >= 1) {
    chain.build(p);
    total += chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
    const ZPoly& g = chain.last();
    if (zdeg(g) == 0) break;
    p = g;  // safe copy: build() reuses slots, g would be overwritten
  }
  return total;
}

int ExactClassifier::classify(const long long* coeffs, int degree) {
  p_.resize(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i) {
    mpz_set_si(p_[static_cast<std::size_t>(i)].get_mpz_t(), coeffs[i]);
  }
  if (sgn(p_.back()) == 0) throw std::invalid_argument("classify: leading zero");
  int r = zreal_roots_with_multiplicity(p_, chain_);
  return (degree - r) / 2;
}

namespace {

// Sylvester-matrix resultant by fraction-free (Bareiss) elimination; exact
// over the integers.
mpz_class zresultant(const ZPoly& p, const ZPoly& q) {
  if (p.empty() || q.empty()) return 0;
  int m = zdeg(p), n = zdeg(q);
  int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<mpz_class>> M(
      static_cast<std::size_t>(N),
      std::vector<mpz_class>(static_cast<std::size_t>(N), mpz_class(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) M[i][i + j] = p[static_cast<std::size_t>(m - j)];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = q[static_cast<std::size_t>(n - j)];
  }
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < N; ++k) {
    if (sgn(M[k][k]) == 0) {
      int r = -1;
      for (int i = k + 1; i < N; ++i) {
        if (sgn(M[i][k]) != 0) {
          r = i;
          break;
        }
      }
      if (r < 0) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign < 0 ? mpz_class(-M[N - 1][N - 1]) : M[N - 1][N - 1];
}

// out = alpha * p with alpha > 0 the least common denominator.
void clear_denominators(const ExactPolynomial& p, ZPoly& out, mpz_class& alpha) {
  const auto& c = p.coeffs();
  alpha = 1;
  for (const auto& q : c) mpz_lcm(alpha.get_mpz_t(), alpha.get_mpz_t(), q.get_den_mpz_t());
  out.resize(c.size());
  mpz_class t;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(t.get_mpz_t(), alpha.get_mpz_t(), c[i].get_den_mpz_t());
    out[i] = c[i].get_num() * t;
  }
}

void require_nonzero(const ExactPolynomial& p, const char* who) {
  if (p.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
}

}  // namespace
}  // namespace detail

using detail::ZPoly;

ExactPolynomial::ExactPolynomial(std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<mpq_class> c(coeffs.begin(), coeffs.end());
  return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::derivative() const {
  std::vector<mpq_class> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * static_cast<long>(i));
  }
  return ExactPolynomial(std::move(out));
}

mpq_class ExactPolynomial::eval(const mpq_class& x) const {
  mpq_class val = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    val = val * x + coeffs_[i];
  }
  return val;
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& other) const {
  std::vector<mpq_class> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < other.coeffs_.size()) out[i] += other.coeffs_[i];
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& other) const {
  std::vector<mpq_class> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < other.coeffs_.size()) out[i] -= other.coeffs_[i];
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& other) const {
  if (is_zero() || other.is_zero()) return ExactPolynomial();
  std::vector<mpq_class> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator*(const mpq_class& c) const {
  std::vector<mpq_class> out(coeffs_);
  for (auto& x : out) x *= c;
  return ExactPolynomial(std::move(out));
}

int sturm_count(const ExactPolynomial& p,
                const std::optional<mpq_class>& a,
                const std::optional<mpq_class>& b) {
  detail::require_nonzero(p, "sturm_count");
  if (p.degree() < 1) throw std::invalid_argument("sturm_count: constant polynomial");
  if (a && b && *a >= *b) throw std::invalid_argument("sturm_count: empty interval");

  ZPoly zp;
  mpz_class alpha;
  detail::clear_denominators(p, zp, alpha);
  detail::SturmChain chain;
  chain.build(zp);
  if (detail::zdeg(chain.last()) >= 1) {
    throw std::invalid_argument("sturm_count: polynomial is not squarefree");
  }

  auto variations = [&](const mpq_class& x, bool right_end) {
    mpq_class xc = x;
    xc.canonicalize();
    if (right_end &&
        detail::zsign_at_rational(chain.element(0), xc.get_num(), xc.get_den()) == 0) {
      // Zeros are skipped when counting variations, which makes V(x) equal
      // V(x + 0); a left endpoint that is a root therefore drops out of the
      // open-interval count by itself, but a right endpoint root would be
      // counted as interior, so it has to be refused.
      throw std::invalid_argument("sturm_count: right endpoint is a root");
    }
    return chain.variations_at(xc.get_num(), xc.get_den());
  };

  int va = a ? variations(*a, false) : chain.variations_at_neg_inf();
  int vb = b ? variations(*b, true) : chain.variations_at_pos_inf();
  return va - vb;
}

int sturm_count(const ExactPolynomial& p) {
  return sturm_count(p, std::nullopt, std::nullopt);
}

SquarefreeFactorization squarefree_decomposition(const ExactPolynomial& p) {
  detail::require_nonzero(p, "squarefree_decomposition");
  SquarefreeFactorization result;
  if (p.degree() == 0) return result;

  ZPoly zp;
  mpz_class alpha;
  detail::clear_denominators(p, zp, alpha);
  detail::zprimitive(zp);

  auto to_exact = [](const ZPoly& f) {
    std::vector<mpq_class> c(f.begin(), f.end());
    return ExactPolynomial(std::move(c));
  };

  ZPoly dp, g, w, y, z, a, t;
  detail::zderivative(zp, dp);
  detail::zgcd(zp, dp, g);
  if (detail::zdeg(g) == 0) {
    result.push_back({to_exact(zp), 1});
    return result;
  }
  detail::zdivexact(zp, g, w);
  detail::zdivexact(dp, g, y);
  // z = y - w'
  detail::zderivative(w, t);
  z = y;
  if (z.size() < t.size()) z.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) z[i] -= t[i];
  detail::ztrim(z);

  for (int mult = 1; detail::zdeg(w) > 0; ++mult) {
    detail::zgcd(w, z, a);
    if (a.empty()) throw std::logic_error("squarefree_decomposition: gcd underflow");
    if (detail::zdeg(a) > 0) result.push_back({to_exact(a), mult});
    detail::zdivexact(w, a, t);
    w = t;
    detail::zdivexact(z, a, y);
    detail::zderivative(w, t);
    z = y;
    if (z.size() < t.size()) z.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) z[i] -= t[i];
    detail::ztrim(z);
  }
  return result;
}

Signature signature_exact(const ExactPolynomial& p) {
  detail::require_nonzero(p, "signature_exact");
  int d = p.degree();
  if (d < 1) throw std::invalid_argument("signature_exact: constant polynomial");
  ZPoly zp;
  mpz_class alpha;
  detail::clear_denominators(p, zp, alpha);
  detail::zprimitive(zp);
  detail::SturmChain chain;
  int r = detail::zreal_roots_with_multiplicity(zp, chain);
  if (r < 0 || r > d || ((d - r) & 1)) {
    throw std::logic_error("signature_exact: inconsistent real root count");
  }
  return Signature{r, (d - r) / 2};
}

mpq_class resultant(const ExactPolynomial& p, const ExactPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  ZPoly zp, zq;
  mpz_class alpha, beta;
  detail::clear_denominators(p, zp, alpha);
  detail::clear_denominators(q, zq, beta);
  mpz_class res = detail::zresultant(zp, zq);
  // Res(p, q) = Res(alpha p, beta q) / (alpha^deg(q) beta^deg(p)).
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), alpha.get_mpz_t(),
             static_cast<unsigned long>(q.degree()));
  mpz_class bp;
  mpz_pow_ui(bp.get_mpz_t(), beta.get_mpz_t(),
             static_cast<unsigned long>(p.degree()));
  denom *= bp;
  mpq_class out(res, denom);
  out.canonicalize();
  return out;
}

mpq_class discriminant(const ExactPolynomial& p) {
  detail::require_nonzero(p, "discriminant");
  int d = p.degree();
  if (d < 2) throw std::invalid_argument("discriminant: degree < 2");
  ZPoly zp, dzp;
  mpz_class alpha;
  detail::clear_denominators(p, zp, alpha);
  detail::zderivative(zp, dzp);
  mpz_class res = detail::zresultant(zp, dzp);
  mpz_class core;
  mpz_divexact(core.get_mpz_t(), res.get_mpz_t(), zp.back().get_mpz_t());
  if ((static_cast<long>(d) * (d - 1) / 2) & 1) core = -core;
  // The discriminant is homogeneous of degree 2d-2 in the coefficients.
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), alpha.get_mpz_t(),
             static_cast<unsigned long>(2 * d - 2));
  mpq_class out(core, denom);
  out.canonicalize();
  return out;
}

mpq_class cauchy_bound(const ExactPolynomial& p) {
  detail::require_nonzero(p, "cauchy_bound");
  mpq_class best = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    mpq_class t = abs(c[i] / c.back());
    if (t > best) best = t;
  }
  return best + 1;
}

double cauchy_bound(const FloatPolynomial& p) {
  if (p.coeffs.empty() || p.coeffs.back() == 0.0) {
    throw std::invalid_argument("cauchy_bound: zero leading coefficient");
  }
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
    double t = std::abs(p.coeffs[i] / p.coeffs.back());
    if (t > best) best = t;
  }
  return best + 1.0;
}

}  // namespace sigvol
