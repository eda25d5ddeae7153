#include "lowrank/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "lowrank/errors.hpp"

namespace lowrank {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw std::invalid_argument("invalid variable name '" + n + "'");
    }
    for (char c : n) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw std::invalid_argument("invalid variable name '" + n + "'");
      }
    }
    if (!index_.emplace(n, i).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarSetPtr make_variables(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

bool same_variables(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  std::vector<Exponent> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::domain_error("monomial does not divide");
    e[i] = exps_[i] - divisor.exps_[i];
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
  return h;
}

// ---------------------------------------------------------------------------

namespace {

using Exps = std::span<const Monomial::Exponent>;

int grevlex_range(Exps a, Exps b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(Exps a, Exps b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::Block: {
      const std::size_t s = std::min(split_, a.size());
      if (int c = grevlex_range(a, b, 0, s)) return c;
      return grevlex_range(a, b, s, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block:" + std::to_string(split_);
  }
  return "?";
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(VarSetPtr vars, MonomialOrder order) : vars_(std::move(vars)), order_(order) {
  if (!vars_) throw std::invalid_argument("polynomial needs a variable set");
}

Polynomial::Polynomial(VarSetPtr vars, MonomialOrder order, std::vector<Term> sorted_terms)
    : vars_(std::move(vars)), order_(order), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(VarSetPtr vars, const Rational& c, MonomialOrder order) {
  Polynomial p(std::move(vars), order);
  if (sgn(c) != 0) p.terms_.push_back({c, Monomial(p.vars_->size())});
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index, MonomialOrder order) {
  Polynomial p(std::move(vars), order);
  if (index >= p.vars_->size()) throw std::out_of_range("variable index out of range");
  p.terms_.push_back({Rational(1), Monomial::variable(p.vars_->size(), index)});
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::string_view name, MonomialOrder order) {
  auto idx = vars->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *idx, order);
}

Polynomial Polynomial::from_terms(VarSetPtr vars, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(std::move(vars), order);
  for (const auto& t : terms) {
    if (t.mono.size() != p.vars_->size()) throw std::invalid_argument("monomial arity mismatch");
  }
  p.terms_ = std::move(terms);
  p.sort_and_merge();
  return p;
}

void Polynomial::sort_and_merge() {
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coef) == 0; });
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

int Polynomial::degree() const noexcept {
  if (terms_.empty()) return kZeroPolynomialDegree;
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return static_cast<int>(d);
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return kZeroPolynomialDegree;
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return static_cast<int>(d);
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    if (std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] > 0; })) {
      out.push_back(v);
    }
  }
  return out;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p(vars_, order, terms_);
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return p;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  BigInt den_lcm = 1;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  BigInt content = 0;
  std::vector<BigInt> ints;
  ints.reserve(terms_.size());
  for (const auto& t : terms_) {
    BigInt v = t.coef.get_num() * (den_lcm / t.coef.get_den());
    content = gcd(content, v);
    ints.push_back(std::move(v));
  }
  if (sgn(terms_.front().coef) < 0) content = -content;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), ints[i].get_mpz_t(), content.get_mpz_t());
    out.push_back({Rational(q), terms_[i].mono});
  }
  return Polynomial(vars_, order_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(vars_, order_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_variables(a.vars_, b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  if (a.order_ == b.order_) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    }
    return true;
  }
  return a == b.with_order(a.order_);
}

// ---------------------------------------------------------------------------

namespace {

void require_same_vars(const Polynomial& p, const Polynomial& q) {
  if (!same_variables(p.variables(), q.variables())) {
    throw std::invalid_argument("polynomials over different variable sets");
  }
}

Polynomial combine(const Polynomial& p, const Polynomial& q, bool negate_q) {
  require_same_vars(p, q);
  const Polynomial qq = q.with_order(p.order());
  const auto& a = p.terms();
  const auto& b = qq.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& ord = p.order();
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negate_q) out.back().coef = -out.back().coef;
    } else {
      Rational s = negate_q ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (sgn(s) != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_terms(p.variables(), std::move(out), p.order());
}

}  // namespace

Polynomial add(const Polynomial& p, const Polynomial& q) { return combine(p, q, false); }
Polynomial subtract(const Polynomial& p, const Polynomial& q) { return combine(p, q, true); }

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  require_same_vars(p, q);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(p.size() * q.size());
  for (const auto& s : p.terms()) {
    for (const auto& t : q.terms()) {
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono, s.coef * t.coef);
      if (!fresh) it->second += s.coef * t.coef;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({std::move(c), m});
  return Polynomial::from_terms(p.variables(), std::move(terms), p.order());
}

Polynomial power(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.variables(), Rational(1), p.order());
  Polynomial base = p;
  while (exponent) {
    if (exponent & 1U) result = multiply(result, base);
    exponent >>= 1U;
    if (exponent) base = multiply(base, base);
  }
  return result;
}

Polynomial map_variables(const Polynomial& p, const VarSetPtr& target, std::span<const Polynomial> images) {
  if (images.size() != p.variables()->size()) throw std::invalid_argument("one image per variable required");
  MonomialOrder order = images.empty() ? MonomialOrder::grevlex() : images.front().order();
  for (const auto& img : images) {
    if (!same_variables(img.variables(), target)) throw std::invalid_argument("image over wrong variable set");
  }
  // Powers are cached per variable; most images are reused many times.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t v, Monomial::Exponent e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1), order));
    while (cache.size() <= e) cache.push_back(multiply(cache.back(), images[v].with_order(order)));
    return cache[e];
  };
  Polynomial out(target, order);
  std::vector<Term> accumulated;
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coef, order);
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      term = multiply(term, power_of(v, t.mono[v]));
    }
    for (auto& tt : term.terms()) accumulated.push_back(tt);
  }
  return Polynomial::from_terms(target, std::move(accumulated), order);
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment) {
  const auto& vars = p.variables();
  std::vector<Polynomial> images;
  images.reserve(vars->size());
  for (std::size_t v = 0; v < vars->size(); ++v) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      images.push_back(Polynomial::variable(vars, v, p.order()));
    } else {
      require_same_vars(p, it->second);
      images.push_back(it->second.with_order(p.order()));
    }
  }
  return map_variables(p, vars, images);
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
  std::map<std::size_t, Polynomial> by_index;
  for (const auto& [name, img] : assignment) {
    auto idx = p.variables()->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
    by_index.emplace(*idx, img);
  }
  return substitute(p, by_index);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.variables()->size()) throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Monomial::Exponent k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  if (order == p.order()) return p.terms().front();
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Polynomial dehomogenize(const Polynomial& bivariate) {
  const auto& vars = bivariate.variables();
  if (vars->size() != 2) throw std::invalid_argument("dehomogenize expects a polynomial in exactly two variables");
  auto target = make_variables({vars->name(0)});
  std::vector<Term> terms;
  terms.reserve(bivariate.size());
  for (const auto& t : bivariate.terms()) terms.push_back({t.coef, Monomial(std::vector<Monomial::Exponent>{t.mono[0]})});
  return Polynomial::from_terms(target, std::move(terms), bivariate.order());
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.mono[var] == 0) continue;
    std::vector<Monomial::Exponent> e(t.mono.exponents().begin(), t.mono.exponents().end());
    Rational c = t.coef * static_cast<unsigned long>(e[var]);
    --e[var];
    terms.push_back({std::move(c), Monomial(std::move(e))});
  }
  return Polynomial::from_terms(p.variables(), std::move(terms), p.order());
}

// ---------------------------------------------------------------------------

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      out += to_string(c);
      wrote = true;
    }
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (wrote) out += "*";
      out += p.variables()->name(v);
      if (t.mono[v] > 1) out += "^" + std::to_string(t.mono[v]);
      wrote = true;
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarSetPtr& vars) : vars_(vars) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }
  }

  std::vector<Term> parse() {
    std::vector<Term> terms;
    if (src_.empty()) throw ParseError("empty polynomial", "");
    bool first = true;
    while (pos_ < src_.size()) {
      bool negative = false;
      if (src_[pos_] == '+' || src_[pos_] == '-') {
        negative = src_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", token_at(pos_));
      }
      first = false;
      Term t = parse_term();
      if (negative) t.coef = -t.coef;
      terms.push_back(std::move(t));
    }
    return terms;
  }

 private:
  std::string token_at(std::size_t p) const {
    std::size_t end = p;
    while (end < src_.size() && src_[end] != '+' && src_[end] != '-') ++end;
    if (end == p && end < src_.size()) ++end;
    return src_.substr(p, end - p);
  }

  Term parse_term() {
    Rational coef = 1;
    std::vector<Monomial::Exponent> exps(vars_->size(), 0);
    bool have_factor = false;
    while (true) {
      const std::size_t start = pos_;
      if (pos_ >= src_.size()) throw ParseError("missing factor", token_at(start));
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '/')) ++end;
        try {
          coef *= parse_rational(std::string_view(src_).substr(pos_, end - pos_));
        } catch (const ParseError&) {
          throw ParseError("bad coefficient", src_.substr(pos_, end - pos_));
        } catch (const std::domain_error&) {
          throw ParseError("bad coefficient", src_.substr(pos_, end - pos_));
        }
        pos_ = end;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
        const std::string name = src_.substr(pos_, end - pos_);
        auto idx = vars_->index_of(name);
        if (!idx) throw ParseError("unknown variable", name);
        pos_ = end;
        unsigned long e = 1;
        if (pos_ < src_.size() && src_[pos_] == '^') {
          ++pos_;
          std::size_t dend = pos_;
          while (dend < src_.size() && std::isdigit(static_cast<unsigned char>(src_[dend]))) ++dend;
          if (dend == pos_ || dend - pos_ > 6) throw ParseError("bad exponent", token_at(start));
          e = std::stoul(src_.substr(pos_, dend - pos_));
          pos_ = dend;
        }
        exps[*idx] += static_cast<Monomial::Exponent>(e);
      } else {
        throw ParseError("unexpected character", token_at(start));
      }
      have_factor = true;
      if (pos_ < src_.size() && src_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError("empty term", token_at(pos_));
    if (pos_ < src_.size() && src_[pos_] != '+' && src_[pos_] != '-') {
      throw ParseError("unexpected character", token_at(pos_));
    }
    return Term{std::move(coef), Monomial(std::move(exps))};
  }

  const VarSetPtr& vars_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSetPtr& vars, MonomialOrder order) {
  PolyParser parser(text, vars);
  return Polynomial::from_terms(vars, parser.parse(), order);
}

bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return false;
  if (!same_variables(p.variables(), q.variables())) return false;
  return p.primitive() == q.primitive().with_order(p.order());
}

}  // namespace lowrank
