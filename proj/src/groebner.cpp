#include "lowrank/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lowrank {

namespace {

using Exp = Monomial::Exponent;
using Clock = std::chrono::steady_clock;

// Packed integer polynomial used inside the engine: coefficients and a flat
// exponent array, terms sorted descending under the engine's order.
struct IPoly {
  unsigned nv = 0;
  std::vector<mpz_class> coef;
  std::vector<Exp> exps;

  std::size_t size() const noexcept { return coef.size(); }
  bool empty() const noexcept { return coef.empty(); }
  std::span<const Exp> mono(std::size_t i) const { return {exps.data() + i * nv, nv}; }

  void push(mpz_class c, std::span<const Exp> m) {
    coef.push_back(std::move(c));
    exps.insert(exps.end(), m.begin(), m.end());
  }
  void reserve(std::size_t n) {
    coef.reserve(n);
    exps.reserve(n * nv);
  }
  unsigned degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      auto m = mono(i);
      d = std::max<unsigned>(d, std::accumulate(m.begin(), m.end(), 0U));
    }
    return d;
  }
  bool is_constant() const {
    if (size() != 1) return false;
    auto m = mono(0);
    return std::all_of(m.begin(), m.end(), [](Exp e) { return e == 0; });
  }
};

std::uint64_t support_mask(std::span<const Exp> m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

unsigned total_degree(std::span<const Exp> m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool divides(std::span<const Exp> a, std::span<const Exp> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Exp> lcm_of(std::span<const Exp> a, std::span<const Exp> b) {
  std::vector<Exp> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool disjoint(std::span<const Exp> a, std::span<const Exp> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

IPoly to_ipoly(const Polynomial& p, const MonomialOrder& order) {
  const Polynomial q = p.primitive().with_order(order);
  IPoly out;
  out.nv = static_cast<unsigned>(q.variables()->size());
  out.reserve(q.size());
  for (const auto& t : q.terms()) out.push(t.coef.get_num(), t.mono.exponents());
  return out;
}

Polynomial from_ipoly(const IPoly& p, const VarSetPtr& vars, const MonomialOrder& order) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto m = p.mono(i);
    terms.push_back({Rational(p.coef[i]), Monomial(std::vector<Exp>(m.begin(), m.end()))});
  }
  return Polynomial::from_terms(vars, std::move(terms), order);
}

// Divides out the integer content and makes the leading coefficient positive.
// Returns the (signed) factor that was divided out.
mpz_class make_primitive(IPoly& p) {
  if (p.empty()) return 1;
  mpz_class g = 0;
  for (const auto& c : p.coef) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.coef.front()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

class Deadline {
 public:
  explicit Deadline(const ResourceLimits& limits) {
    if (limits.time_limit) at_ = Clock::now() + *limits.time_limit;
  }
  void check() const {
    if (at_ && Clock::now() > *at_) {
      throw ResourceExceeded(ResourceExceeded::Kind::Time, "Groebner computation exceeded its time limit");
    }
  }

 private:
  std::optional<Clock::time_point> at_;
};

struct Divisor {
  const IPoly* poly;
  std::uint64_t mask;
};

enum class ReducerChoice { First, Shortest };

// a * m1 * P[from1..] - b * m2 * Q[from2..], where an empty monomial span
// means 1.
IPoly combine(const MonomialOrder& order, const mpz_class& a, std::span<const Exp> m1, IPoly& p,
              std::size_t from1, bool consume_p, const mpz_class& b, std::span<const Exp> m2,
              const IPoly& q, std::size_t from2) {
  const unsigned nv = p.nv;
  IPoly out;
  out.nv = nv;
  out.reserve((p.size() - from1) + (q.size() - from2));
  std::vector<Exp> ba(nv), bb(nv);
  auto load = [nv](std::vector<Exp>& buf, std::span<const Exp> m, std::span<const Exp> src) {
    if (m.empty()) {
      std::copy(src.begin(), src.end(), buf.begin());
    } else {
      for (unsigned k = 0; k < nv; ++k) buf[k] = m[k] + src[k];
    }
  };
  const bool a_one = a == 1;
  std::size_t i = from1, j = from2;
  if (i < p.size()) load(ba, m1, p.mono(i));
  if (j < q.size()) load(bb, m2, q.mono(j));
  mpz_class tmp;
  while (i < p.size() || j < q.size()) {
    int c = i == p.size() ? -1 : j == q.size() ? 1 : order.compare(ba, bb);
    if (c > 0) {
      if (a_one) {
        out.coef.push_back(consume_p ? std::move(p.coef[i]) : p.coef[i]);
      } else {
        out.coef.emplace_back();
        mpz_mul(out.coef.back().get_mpz_t(), a.get_mpz_t(), p.coef[i].get_mpz_t());
      }
      out.exps.insert(out.exps.end(), ba.begin(), ba.end());
      if (++i < p.size()) load(ba, m1, p.mono(i));
    } else if (c < 0) {
      out.coef.emplace_back();
      mpz_mul(out.coef.back().get_mpz_t(), b.get_mpz_t(), q.coef[j].get_mpz_t());
      mpz_neg(out.coef.back().get_mpz_t(), out.coef.back().get_mpz_t());
      out.exps.insert(out.exps.end(), bb.begin(), bb.end());
      if (++j < q.size()) load(bb, m2, q.mono(j));
    } else {
      mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), p.coef[i].get_mpz_t());
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), q.coef[j].get_mpz_t());
      if (sgn(tmp) != 0) {
        out.coef.push_back(tmp);
        out.exps.insert(out.exps.end(), ba.begin(), ba.end());
      }
      if (++i < p.size()) load(ba, m1, p.mono(i));
      if (++j < q.size()) load(bb, m2, q.mono(j));
    }
  }
  return out;
}

// Fraction-free full reduction. On return the remainder satisfies
// remainder == scale * (input) modulo the divisors, with scale tracked only
// when requested.
class Reducer {
 public:
  Reducer(const MonomialOrder& order, const Deadline& deadline, ReducerChoice choice)
      : order_(order), deadline_(deadline), choice_(choice) {}

  IPoly reduce(IPoly p, const std::vector<Divisor>& divisors, bool keep_leading, Rational* scale,
               std::size_t* steps) const {
    IPoly rem;
    rem.nv = p.nv;
    if (p.empty()) return rem;
    std::size_t head = 0;
    if (keep_leading) {
      rem.push(std::move(p.coef[0]), p.mono(0));
      head = 1;
    }
    std::vector<Exp> quotient(p.nv);
    mpz_class g, a, b;
    std::size_t local_steps = 0;
    while (head < p.size()) {
      auto lt = p.mono(head);
      const Divisor* div = find_divisor(lt, divisors);
      if (!div) {
        rem.push(std::move(p.coef[head]), lt);
        ++head;
        continue;
      }
      const IPoly& d = *div->poly;
      auto lm = d.mono(0);
      for (unsigned k = 0; k < p.nv; ++k) quotient[k] = lt[k] - lm[k];
      mpz_gcd(g.get_mpz_t(), p.coef[head].get_mpz_t(), d.coef[0].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), d.coef[0].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), p.coef[head].get_mpz_t(), g.get_mpz_t());
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
      if (a != 1) {
        for (auto& c : rem.coef) c *= a;
        if (scale) *scale *= a;
      }
      p = combine(order_, a, {}, p, head + 1, true, b, quotient, d, 1);
      head = 0;
      strip_content(rem, p, scale);
      if ((++local_steps & 63U) == 0) deadline_.check();
    }
    if (steps) *steps += local_steps;
    return rem;
  }

 private:
  const Divisor* find_divisor(std::span<const Exp> lt, const std::vector<Divisor>& divisors) const {
    const std::uint64_t mask = support_mask(lt);
    const Divisor* best = nullptr;
    for (const auto& d : divisors) {
      if ((d.mask & ~mask) != 0) continue;
      if (!divides(d.poly->mono(0), lt)) continue;
      if (choice_ == ReducerChoice::First) return &d;
      if (!best || d.poly->size() < best->poly->size()) best = &d;
    }
    return best;
  }

  static void strip_content(IPoly& rem, IPoly& p, Rational* scale) {
    mpz_class g = 0;
    auto fold = [&g](const IPoly& x) {
      for (const auto& c : x.coef) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return true;
      }
      return false;
    };
    if (fold(p) || fold(rem) || g == 0) return;
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : rem.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (scale) *scale /= g;
  }

  const MonomialOrder& order_;
  const Deadline& deadline_;
  ReducerChoice choice_;
};

struct Element {
  IPoly poly;
  std::uint64_t mask = 0;
  unsigned sugar = 0;
  bool active = true;
  std::span<const Exp> lm() const { return poly.mono(0); }
};

struct Pair {
  std::size_t i, j;
  std::vector<Exp> lcm;
  unsigned lcm_degree;
  unsigned sugar;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const ResourceLimits& limits, unsigned nv)
      : order_(order), limits_(limits), deadline_(limits), nv_(nv) {}

  // Returns true when the ideal turned out to be the unit ideal.
  bool run(std::vector<IPoly> inputs) {
    std::sort(inputs.begin(), inputs.end(), [](const IPoly& a, const IPoly& b) {
      return a.degree() < b.degree();
    });
    Reducer reducer(order_, deadline_, ReducerChoice::Shortest);
    for (auto& f : inputs) {
      IPoly r = reducer.reduce(std::move(f), divisors(), false, nullptr, &stats_.reduction_steps);
      if (r.empty()) continue;
      make_primitive(r);
      if (r.is_constant()) return set_unit();
      insert(std::move(r), 0);
    }
    while (!pairs_.empty()) {
      deadline_.check();
      Pair pair = pop_pair();
      if (++stats_.pairs_processed > limits_.max_pairs) {
        throw ResourceExceeded(ResourceExceeded::Kind::Pairs, "Groebner computation exceeded its pair limit");
      }
      if (pair.lcm_degree > limits_.max_degree) {
        throw ResourceExceeded(ResourceExceeded::Kind::Degree, "Groebner computation exceeded its degree limit");
      }
      stats_.max_degree = std::max(stats_.max_degree, pair.lcm_degree);
      IPoly s = s_poly(elems_[pair.i].poly, elems_[pair.j].poly, pair.lcm);
      IPoly r = reducer.reduce(std::move(s), divisors(), false, nullptr, &stats_.reduction_steps);
      if (r.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_primitive(r);
      if (r.is_constant()) return set_unit();
      insert(std::move(r), pair.sugar);
    }
    return false;
  }

  // Minimal, tail-reduced, primitive basis sorted by ascending leading
  // monomial.
  std::vector<IPoly> reduced_basis() const {
    std::vector<const Element*> keep;
    for (const auto& e : elems_) {
      if (e.active) keep.push_back(&e);
    }
    std::vector<const Element*> minimal;
    for (std::size_t a = 0; a < keep.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < keep.size() && !redundant; ++b) {
        if (a == b) continue;
        const auto la = keep[a]->lm();
        const auto lb = keep[b]->lm();
        if (divides(lb, la) && (!std::equal(la.begin(), la.end(), lb.begin()) || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(keep[a]);
    }
    std::sort(minimal.begin(), minimal.end(), [this](const Element* x, const Element* y) {
      return order_.compare(x->lm(), y->lm()) < 0;
    });
    std::vector<IPoly> out;
    Reducer reducer(order_, deadline_, ReducerChoice::First);
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<Divisor> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b != a) others.push_back({&minimal[b]->poly, minimal[b]->mask});
      }
      IPoly r = reducer.reduce(minimal[a]->poly, others, true, nullptr, nullptr);
      make_primitive(r);
      out.push_back(std::move(r));
    }
    return out;
  }

  GroebnerStats& stats() { return stats_; }

 private:
  bool set_unit() {
    elems_.clear();
    pairs_.clear();
    IPoly one;
    one.nv = nv_;
    one.push(mpz_class(1), std::vector<Exp>(nv_, 0));
    elems_.push_back({std::move(one), 0, 0, true});
    return true;
  }

  std::vector<Divisor> divisors() const {
    std::vector<Divisor> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) {
      if (e.active) out.push_back({&e.poly, e.mask});
    }
    return out;
  }

  IPoly s_poly(const IPoly& f, const IPoly& g, const std::vector<Exp>& l) const {
    std::vector<Exp> mf(nv_), mg(nv_);
    auto lf = f.mono(0);
    auto lg = g.mono(0);
    for (unsigned k = 0; k < nv_; ++k) {
      mf[k] = l[k] - lf[k];
      mg[k] = l[k] - lg[k];
    }
    mpz_class gg, a, b;
    mpz_gcd(gg.get_mpz_t(), f.coef[0].get_mpz_t(), g.coef[0].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), g.coef[0].get_mpz_t(), gg.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), f.coef[0].get_mpz_t(), gg.get_mpz_t());
    IPoly fc = f;
    return combine(order_, a, mf, fc, 1, true, b, mg, g, 1);
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Pair p{i, j, lcm_of(elems_[i].lm(), elems_[j].lm()), 0, 0};
    p.lcm_degree = total_degree(p.lcm);
    const unsigned di = total_degree(elems_[i].lm());
    const unsigned dj = total_degree(elems_[j].lm());
    p.sugar = std::max(elems_[i].sugar + p.lcm_degree - di, elems_[j].sugar + p.lcm_degree - dj);
    return p;
  }

  bool pair_before(const Pair& x, const Pair& y) const {
    if (x.lcm_degree != y.lcm_degree) return x.lcm_degree < y.lcm_degree;
    if (x.sugar != y.sugar) return x.sugar < y.sugar;
    if (int c = order_.compare(x.lcm, y.lcm)) return c < 0;
    if (x.j != y.j) return x.j < y.j;
    return x.i < y.i;
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (pair_before(pairs_[k], pairs_[best])) best = k;
    }
    Pair out = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return out;
  }

  // Gebauer-Moeller update.
  void insert(IPoly h, unsigned sugar) {
    const std::size_t hi = elems_.size();
    Element e;
    e.poly = std::move(h);
    e.mask = support_mask(e.poly.mono(0));
    e.sugar = std::max(sugar, e.poly.degree());
    elems_.push_back(std::move(e));
    const auto lh = elems_[hi].lm();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (elems_[g].active) candidates.push_back(make_pair(g, hi));
    }
    std::vector<bool> alive(candidates.size(), true);
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      alive[c] = false;
      const auto& pc = candidates[c];
      bool keep = disjoint(lh, elems_[pc.i].lm());
      if (!keep) {
        keep = true;
        for (std::size_t o = 0; o < candidates.size() && keep; ++o) {
          if (alive[o] && divides(candidates[o].lcm, pc.lcm)) keep = false;
        }
        for (std::size_t o : kept) {
          if (!keep) break;
          if (divides(candidates[o].lcm, pc.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }
    std::size_t pruned = candidates.size();
    std::vector<Pair> fresh;
    for (std::size_t c : kept) {
      if (!disjoint(lh, elems_[candidates[c].i].lm())) {
        fresh.push_back(std::move(candidates[c]));
        --pruned;
      }
    }
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      const bool drop = divides(lh, p.lcm) && lcm_of(elems_[p.i].lm(), lh) != p.lcm &&
                        lcm_of(lh, elems_[p.j].lm()) != p.lcm;
      if (drop) {
        ++pruned;
      } else {
        survivors.push_back(std::move(p));
      }
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs_ = std::move(survivors);
    stats_.pairs_pruned += pruned;
    for (std::size_t g = 0; g < hi; ++g) {
      if (elems_[g].active && divides(lh, elems_[g].lm())) elems_[g].active = false;
    }
  }

  const MonomialOrder& order_;
  const ResourceLimits& limits_;
  Deadline deadline_;
  unsigned nv_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

std::vector<IPoly> to_ipolys(const Ideal& ideal, const MonomialOrder& order) {
  std::vector<IPoly> out;
  for (const auto& g : ideal.generators()) out.push_back(to_ipoly(g, order));
  return out;
}

GroebnerBasis run_engine(const Ideal& ideal, const MonomialOrder& order, const ResourceLimits& limits) {
  const auto& vars = ideal.variables();
  const unsigned nv = static_cast<unsigned>(vars->size());
  Engine engine(order, limits, nv);
  engine.run(to_ipolys(ideal, order));
  std::vector<Polynomial> basis;
  for (const auto& p : engine.reduced_basis()) basis.push_back(from_ipoly(p, vars, order));
  GroebnerStats stats = engine.stats();
  stats.basis_size = basis.size();
  return GroebnerBasis(vars, order, std::move(basis), stats);
}

}  // namespace

// ---------------------------------------------------------------------------

namespace {

VarSetPtr first_variables(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("an ideal needs at least one generator");
  return generators.front().variables();
}

}  // namespace

Ideal::Ideal(std::vector<Polynomial> generators) : vars_(first_variables(generators)) {
  for (auto& g : generators) {
    if (!same_variables(g.variables(), vars_)) throw std::invalid_argument("generators over different variable sets");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(VarSetPtr vars, std::vector<Polynomial> generators) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("an ideal needs a variable set");
  for (auto& g : generators) {
    if (!same_variables(g.variables(), vars_)) throw std::invalid_argument("generators over different variable sets");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(VarSetPtr vars, MonomialOrder order, std::vector<Polynomial> basis,
                             GroebnerStats stats)
    : vars_(std::move(vars)), order_(order), basis_(std::move(basis)), stats_(stats) {}

bool GroebnerBasis::is_unit() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const ResourceLimits& limits) {
  return run_engine(ideal, order, limits);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  if (f.is_zero()) return f.with_order(order);
  std::vector<IPoly> storage;
  storage.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (!same_variables(d.variables(), f.variables())) throw std::invalid_argument("divisor over different variables");
    if (!d.is_zero()) storage.push_back(to_ipoly(d, order));
  }
  std::vector<Divisor> divs;
  for (const auto& s : storage) divs.push_back({&s, support_mask(s.mono(0))});
  // f = content * primitive(f)
  const Polynomial prim = f.primitive();
  const Rational content = f.with_order(prim.order()).terms().front().coef / prim.terms().front().coef;
  ResourceLimits unlimited;
  Deadline deadline(unlimited);
  Reducer reducer(order, deadline, ReducerChoice::First);
  Rational scale = 1;
  IPoly r = reducer.reduce(to_ipoly(prim, order), divs, false, &scale, nullptr);
  return from_ipoly(r, f.variables(), order).scaled(content / scale);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis.polynomials(), basis.order());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term lf = leading_term(f, order);
  const Term lg = leading_term(g, order);
  const Monomial l = lcm(lf.mono, lg.mono);
  const auto vars = f.variables();
  Polynomial mf = Polynomial::from_terms(vars, {{Rational(1) / lf.coef, l / lf.mono}}, order);
  Polynomial mg = Polynomial::from_terms(vars, {{Rational(1) / lg.coef, l / lg.mono}}, order);
  return subtract(multiply(mf, f.with_order(order)), multiply(mg, g.with_order(order)));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& polys = basis.polynomials();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const Polynomial s = s_polynomial(polys[i], polys[j], basis.order());
      if (!normal_form(s, basis).is_zero()) return false;
    }
  }
  return true;
}

bool contains_one(const Ideal& ideal, const MonomialOrder& order, const ResourceLimits& limits) {
  if (ideal.is_zero()) return false;
  Engine engine(order, limits, static_cast<unsigned>(ideal.variables()->size()));
  return engine.run(to_ipolys(ideal, order));
}

EliminationResult elimination_ideal(const Ideal& ideal, std::span<const std::size_t> keep,
                                    const ResourceLimits& limits) {
  const auto& vars = ideal.variables();
  const std::size_t n = vars->size();
  std::vector<bool> kept(n, false);
  for (auto k : keep) {
    if (k >= n) throw std::out_of_range("kept variable index out of range");
    if (kept[k]) throw std::invalid_argument("kept variable listed twice");
    kept[k] = true;
  }
  std::vector<std::size_t> perm;  // new position -> old index
  for (std::size_t v = 0; v < n; ++v) {
    if (!kept[v]) perm.push_back(v);
  }
  const std::size_t split = perm.size();
  perm.insert(perm.end(), keep.begin(), keep.end());
  std::vector<std::string> names;
  for (auto v : perm) names.push_back(vars->name(v));
  auto permuted = make_variables(names);
  const auto order = MonomialOrder::block(split);

  std::vector<Polynomial> images(n, Polynomial(permuted, order));
  for (std::size_t pos = 0; pos < n; ++pos) images[perm[pos]] = Polynomial::variable(permuted, pos, order);

  EliminationResult result;
  std::vector<std::string> kept_names(names.begin() + static_cast<std::ptrdiff_t>(split), names.end());
  result.kept = make_variables(kept_names);
  if (ideal.is_zero()) return result;

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, permuted, images));
  GroebnerBasis gb = buchberger(Ideal(std::move(gens)), order, limits);
  result.stats = gb.stats();

  for (const auto& g : gb.polynomials()) {
    bool only_kept = true;
    for (const auto& t : g.terms()) {
      for (std::size_t v = 0; v < split && only_kept; ++v) {
        if (t.mono[v] != 0) only_kept = false;
      }
    }
    if (!only_kept) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      auto e = t.mono.exponents();
      terms.push_back({t.coef, Monomial(std::vector<Exp>(e.begin() + static_cast<std::ptrdiff_t>(split), e.end()))});
    }
    result.generators.push_back(Polynomial::from_terms(result.kept, std::move(terms)).primitive());
  }
  std::stable_sort(result.generators.begin(), result.generators.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  return result;
}

EliminationResult elimination_ideal(const Ideal& ideal, std::span<const std::string> keep,
                                    const ResourceLimits& limits) {
  std::vector<std::size_t> idx;
  for (const auto& name : keep) {
    auto i = ideal.variables()->index_of(name);
    if (!i) throw std::invalid_argument("unknown kept variable '" + name + "'");
    idx.push_back(*i);
  }
  return elimination_ideal(ideal, idx, limits);
}

std::string dump_basis(const GroebnerBasis& basis) {
  std::ostringstream out;
  out << "# order: " << basis.order().describe() << "\n# variables:";
  for (const auto& n : basis.variables()->names()) out << ' ' << n;
  out << '\n';
  for (const auto& p : basis.polynomials()) out << to_string(p) << '\n';
  return out.str();
}

BasisDump parse_basis_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  BasisDump dump;
  std::optional<MonomialOrder> order;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# order:", 0) == 0) {
      std::istringstream ls(line.substr(8));
      std::string word;
      ls >> word;
      if (word == "grevlex") {
        order = MonomialOrder::grevlex();
      } else if (word == "lex") {
        order = MonomialOrder::lex();
      } else if (word.rfind("block:", 0) == 0) {
        order = MonomialOrder::block(std::stoul(word.substr(6)));
      } else {
        throw ParseError("unknown monomial order", word);
      }
    } else if (line.rfind("# variables:", 0) == 0) {
      std::istringstream ls(line.substr(12));
      std::vector<std::string> names;
      for (std::string w; ls >> w;) names.push_back(w);
      dump.variables = make_variables(std::move(names));
    } else {
      if (!dump.variables || !order) throw ParseError("basis dump is missing its header", line);
      dump.polynomials.push_back(parse_polynomial(line, dump.variables, *order));
    }
  }
  if (!dump.variables || !order) throw ParseError("basis dump is missing its header", "");
  dump.order = *order;
  return dump;
}

}  // namespace lowrank
