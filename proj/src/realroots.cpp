#include "lowrank/realroots.hpp"

#include <stdexcept>

namespace lowrank {

namespace {

// Dense integer polynomial, coefficient i belongs to x^i, no trailing zeros.
using Dense = std::vector<BigInt>;

struct Univariate {
  std::size_t var = 0;
  Dense coefs;
};

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

BigInt content(const Dense& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

// Divide by the positive content; the sign is left alone.
void strip_content(Dense& p) {
  if (p.empty()) return;
  const BigInt g = content(p);
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Content removed and leading coefficient made positive.
void make_primitive(Dense& p) {
  strip_content(p);
  if (!p.empty() && sgn(p.back()) < 0) {
    for (auto& c : p) c = -c;
  }
}

Univariate to_dense(const Polynomial& f) {
  const auto support = f.support();
  if (support.size() > 1) throw std::invalid_argument("expected a univariate polynomial");
  Univariate u;
  u.var = support.empty() ? 0 : support.front();
  const Polynomial prim = f.primitive();
  for (const auto& t : prim.terms()) {
    const auto e = f.variables()->size() == 0 ? 0U : t.mono[u.var];
    if (u.coefs.size() <= e) u.coefs.resize(e + 1);
    u.coefs[e] = t.coef.get_num();
  }
  trim(u.coefs);
  return u;
}

Polynomial from_dense(const Dense& p, const Polynomial& like, std::size_t var) {
  const auto& vars = like.variables();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    if (i > 0 && vars->size() == 0) throw std::logic_error("non-constant polynomial without variables");
    Monomial m = vars->size() == 0 ? Monomial(0) : Monomial::variable(vars->size(), var, static_cast<Monomial::Exponent>(i));
    terms.push_back({Rational(p[i]), std::move(m)});
  }
  return Polynomial::from_terms(vars, std::move(terms), like.order());
}

Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense r, const Dense& b) {
  const int db = deg(b);
  const BigInt& lc = b.back();
  int e = deg(r) - db + 1;
  while (!r.empty() && deg(r) >= db) {
    const BigInt t = r.back();
    const std::size_t shift = static_cast<std::size_t>(deg(r) - db);
    for (auto& c : r) c *= lc;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= t * b[i];
    trim(r);
    --e;
  }
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

Dense primitive_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

// Exact quotient a / b over Z; b must divide a.
Dense exact_quotient(Dense a, const Dense& b) {
  const int db = deg(b);
  Dense q(static_cast<std::size_t>(std::max(0, deg(a) - db + 1)));
  while (!a.empty() && deg(a) >= db) {
    const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) {
      throw std::logic_error("inexact polynomial division");
    }
    BigInt t;
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= t * b[i];
    q[shift] = t;
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

Dense squarefree_dense(const Dense& f) {
  Dense p = f;
  make_primitive(p);
  if (deg(p) <= 0) return p;
  const Dense g = primitive_gcd(p, derivative(p));
  Dense q = exact_quotient(p, g);
  make_primitive(q);
  return q;
}

std::vector<Dense> sturm_dense(const Dense& f) {
  std::vector<Dense> seq;
  seq.push_back(squarefree_dense(f));
  if (deg(seq.back()) <= 0) return seq;
  Dense d = derivative(seq.back());
  strip_content(d);
  seq.push_back(std::move(d));
  while (deg(seq.back()) > 0) {
    const Dense& a = seq[seq.size() - 2];
    const Dense& b = seq.back();
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) break;  // cannot happen for squarefree input
    // prem = lc(b)^k * rem; flip so that r is a positive multiple of -rem.
    const int k = deg(a) - deg(b) + 1;
    const bool positive_factor = sgn(b.back()) > 0 || k % 2 == 0;
    if (positive_factor) {
      for (auto& c : r) c = -c;
    }
    strip_content(r);
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_at(const Dense& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + Rational(p[i]);
  return sgn(v);
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<Dense> sturm_of(const SturmSequence& seq) {
  std::vector<Dense> out;
  for (const auto& p : seq.polys) out.push_back(to_dense(p).coefs);
  return out;
}

}  // namespace

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  const Univariate u = to_dense(f);
  return from_dense(squarefree_dense(u.coefs), f, u.var);
}

SturmSequence sturm_sequence(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  const Univariate u = to_dense(f);
  SturmSequence seq;
  for (const auto& p : sturm_dense(u.coefs)) seq.polys.push_back(from_dense(p, f, u.var));
  return seq;
}

std::size_t sign_variations(const SturmSequence& seq, const Rational& x) {
  std::vector<int> signs;
  for (const auto& p : sturm_of(seq)) signs.push_back(sign_at(p, x));
  return variations(signs);
}

std::size_t sign_variations_at_pos_infinity(const SturmSequence& seq) {
  std::vector<int> signs;
  for (const auto& p : sturm_of(seq)) signs.push_back(p.empty() ? 0 : sgn(p.back()));
  return variations(signs);
}

std::size_t sign_variations_at_neg_infinity(const SturmSequence& seq) {
  std::vector<int> signs;
  for (const auto& p : sturm_of(seq)) {
    if (p.empty()) {
      signs.push_back(0);
      continue;
    }
    const int s = sgn(p.back());
    signs.push_back(deg(p) % 2 == 0 ? s : -s);
  }
  return variations(signs);
}

std::size_t count_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
  const auto seq = sturm_dense(to_dense(f).coefs);
  std::vector<int> at_neg, at_pos;
  for (const auto& p : seq) {
    const int s = sgn(p.back());
    at_pos.push_back(s);
    at_neg.push_back(deg(p) % 2 == 0 ? s : -s);
  }
  const std::size_t vn = variations(at_neg), vp = variations(at_pos);
  return vn - vp;
}

std::size_t count_real_roots_between(const Polynomial& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  const auto seq = sturm_dense(to_dense(f).coefs);
  if (sign_at(seq.front(), lo) == 0 || sign_at(seq.front(), hi) == 0) {
    throw std::invalid_argument("interval endpoint is a root");
  }
  std::vector<int> a, b;
  for (const auto& p : seq) {
    a.push_back(sign_at(p, lo));
    b.push_back(sign_at(p, hi));
  }
  return variations(a) - variations(b);
}

bool homogeneous_has_nonzero_real_root(const Polynomial& bivariate) {
  if (bivariate.variables()->size() != 2) throw std::invalid_argument("expected a polynomial in two variables");
  if (bivariate.is_zero()) throw std::domain_error("zero polynomial");
  if (!bivariate.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  const auto d = static_cast<Monomial::Exponent>(bivariate.degree());
  bool pure_power = false;
  for (const auto& t : bivariate.terms()) {
    if (t.mono[0] == d) pure_power = true;
  }
  if (!pure_power) return true;
  return count_real_roots(dehomogenize(bivariate)) > 0;
}

}  // namespace lowrank
