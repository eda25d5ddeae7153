#include "lowrank/certify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lowrank/random.hpp"
#include "lowrank/realroots.hpp"

namespace lowrank {

void MeasurementEnsemble::validate() const {
  if (n < 2) throw std::invalid_argument("ensemble needs n >= 2");
  if (r < 1) throw std::invalid_argument("ensemble needs r >= 1");
  if (matrices.empty()) throw std::invalid_argument("ensemble needs at least one matrix");
  for (const auto& a : matrices) {
    if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("measurement matrix is not " + std::to_string(n) + "x" + std::to_string(n));
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string entry_name(int n, int i, int j) {
  if (n <= 9) return "x" + std::to_string(i + 1) + std::to_string(j + 1);
  return "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

SymbolicMatrix::SymbolicMatrix(int n, bool symmetric) : n_(n), symmetric_(symmetric) {
  if (n < 2) throw std::invalid_argument("symbolic unknown needs n >= 2");
  std::vector<std::string> names;
  const auto un = static_cast<std::size_t>(n);
  grid_.assign(un * un, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (symmetric && j < i) {
        grid_[static_cast<std::size_t>(i * n + j)] = grid_[static_cast<std::size_t>(j * n + i)];
        continue;
      }
      grid_[static_cast<std::size_t>(i * n + j)] = names.size();
      names.push_back(entry_name(n, i, j));
    }
  }
  vars_ = make_variables(std::move(names));
}

Polynomial SymbolicMatrix::entry(int row, int col) const { return Polynomial::variable(vars_, var_index(row, col)); }

SymbolicMatrix symbolic_unknown(int n, bool symmetric) { return SymbolicMatrix(n, symmetric); }

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Polynomial symbolic_determinant(const SymbolicMatrix& q, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t s = rows.size();
  const std::size_t nv = q.variables()->size();
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    std::vector<Monomial::Exponent> e(nv, 0);
    for (std::size_t a = 0; a < s; ++a) ++e[q.var_index(rows[a], cols[perm[a]])];
    terms.push_back({Rational(inversions % 2 == 0 ? 1 : -1), Monomial(std::move(e))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(q.variables(), std::move(terms));
}

}  // namespace

std::vector<Polynomial> minors(const SymbolicMatrix& q, int s) {
  if (s < 1 || s > q.n()) throw std::invalid_argument("minor size out of range");
  const auto subsets = combinations(q.n(), s);
  std::vector<Polynomial> out;
  for (const auto& rows : subsets) {
    for (const auto& cols : subsets) {
      Polynomial d = symbolic_determinant(q, rows, cols);
      if (d.is_zero()) continue;
      if (q.symmetric() && std::find(out.begin(), out.end(), d) != out.end()) continue;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<Polynomial> measurement_forms(const MeasurementEnsemble& ensemble, const SymbolicMatrix& q) {
  if (ensemble.n != q.n()) throw std::invalid_argument("ensemble and unknown have different sizes");
  const std::size_t nv = q.variables()->size();
  std::vector<Polynomial> out;
  for (const auto& a : ensemble.matrices) {
    if (a.rows() != static_cast<std::size_t>(q.n()) || a.cols() != static_cast<std::size_t>(q.n())) {
      throw std::invalid_argument("measurement matrix has the wrong shape");
    }
    std::vector<Term> terms;
    for (int i = 0; i < q.n(); ++i) {
      for (int k = 0; k < q.n(); ++k) {
        const Rational& c = a(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
        if (sgn(c) == 0) continue;
        terms.push_back({c, Monomial::variable(nv, q.var_index(i, k))});
      }
    }
    out.push_back(Polynomial::from_terms(q.variables(), std::move(terms)));
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial LinearReduction::apply(const Polynomial& p) const {
  return map_variables(p.with_order(MonomialOrder::grevlex()), reduced, variable_images);
}

Polynomial LinearReduction::substitution_for(std::size_t pivot) const {
  if (std::find(pivots.begin(), pivots.end(), pivot) == pivots.end()) {
    throw std::invalid_argument("not a pivot variable");
  }
  // Rewrite the reduced image in the original variable set.
  std::vector<Polynomial> back;
  for (const auto& name : reduced->names()) back.push_back(Polynomial::variable(original, name));
  return map_variables(variable_images[pivot], original, back);
}

LinearReduction linear_preprocess(const std::vector<Polynomial>& linears, const std::vector<Polynomial>& others,
                                  const std::vector<std::size_t>& keep) {
  VarSetPtr vars;
  if (!linears.empty()) {
    vars = linears.front().variables();
  } else if (!others.empty()) {
    vars = others.front().variables();
  } else {
    throw std::invalid_argument("linear_preprocess needs at least one polynomial");
  }
  const std::size_t nv = vars->size();
  std::vector<bool> protected_var(nv, false);
  for (auto k : keep) protected_var.at(k) = true;

  std::vector<std::vector<Rational>> rows;
  for (const auto& l : linears) {
    if (!same_variables(l.variables(), vars)) throw std::invalid_argument("linear form over different variables");
    std::vector<Rational> row(nv);
    for (const auto& t : l.terms()) {
      if (t.mono.degree() != 1) throw std::invalid_argument("expected homogeneous linear forms");
      for (std::size_t v = 0; v < nv; ++v) {
        if (t.mono[v] == 1) row[v] = t.coef;
      }
    }
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form, pivoting only on unprotected columns.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nv && rank < rows.size(); ++col) {
    if (protected_var[col]) continue;
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Rational p = rows[rank][col];
    for (auto& v : rows[rank]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][col]) == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < nv; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  LinearReduction out;
  out.original = vars;
  out.pivots = pivot_cols;
  std::vector<bool> is_pivot(nv, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!is_pivot[v]) names.push_back(vars->name(v));
  }
  out.reduced = make_variables(names);

  auto reduced_linear = [&](const std::vector<Rational>& row, std::size_t skip, bool negate) {
    std::vector<Term> terms;
    for (std::size_t v = 0; v < nv; ++v) {
      if (v == skip || is_pivot[v] || sgn(row[v]) == 0) continue;
      const auto idx = *out.reduced->index_of(vars->name(v));
      terms.push_back({negate ? Rational(-row[v]) : row[v], Monomial::variable(out.reduced->size(), idx)});
    }
    return Polynomial::from_terms(out.reduced, std::move(terms));
  };

  out.variable_images.assign(nv, Polynomial(out.reduced));
  for (std::size_t v = 0; v < nv; ++v) {
    if (!is_pivot[v]) out.variable_images[v] = Polynomial::variable(out.reduced, vars->name(v));
  }
  for (std::size_t i = 0; i < rank; ++i) {
    out.variable_images[pivot_cols[i]] = reduced_linear(rows[i], pivot_cols[i], true);
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    Polynomial residual = reduced_linear(rows[i], nv, false);
    if (!residual.is_zero()) out.residual_linears.push_back(residual.primitive());
  }
  for (const auto& p : others) out.images.push_back(out.apply(p));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Injective: return "INJECTIVE";
    case Verdict::Fail: return "FAIL";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "INJECTIVE") return Verdict::Injective;
  if (text == "FAIL") return Verdict::Fail;
  if (text == "INDETERMINATE") return Verdict::Indeterminate;
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

namespace {

std::array<std::string, 2> resolve_keep(const SymbolicMatrix& q, const CertifyConfig& config) {
  const auto& vars = q.variables();
  std::array<std::string, 2> kept;
  if (config.keep) {
    kept = *config.keep;
    for (const auto& k : kept) {
      if (!vars->index_of(k)) throw std::invalid_argument("kept variable '" + k + "' is not an entry of the unknown");
    }
    if (kept[0] == kept[1]) throw std::invalid_argument("kept variables must differ");
  } else {
    kept = {vars->name(vars->size() - 2), vars->name(vars->size() - 1)};
  }
  return kept;
}

// Smaller degree first, then the smaller coefficient sequence.
bool f0_preferred(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (int c = a.order().compare(ta[i].mono, tb[i].mono)) return c > 0;
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef;
  }
  return ta.size() < tb.size();
}

// Homogeneous element whose real zeros are the common real zeros of all
// generators: sum of squares of powers brought to a common degree.
Polynomial sum_of_squares(const std::vector<Polynomial>& gens) {
  long common = 1;
  for (const auto& g : gens) common = std::lcm(common, static_cast<long>(g.degree()));
  Polynomial sum(gens.front().variables(), gens.front().order());
  for (const auto& g : gens) {
    const Polynomial p = power(g, static_cast<unsigned>(common / g.degree()));
    sum = add(sum, multiply(p, p));
  }
  return sum.primitive();
}

struct Problem {
  SymbolicMatrix q;
  std::vector<Polynomial> minors;
  std::vector<Polynomial> linears;
};

Problem build_problem(const MeasurementEnsemble& ensemble) {
  ensemble.validate();
  if (2 * ensemble.r > ensemble.n) throw std::invalid_argument("certification needs r <= n/2");
  Problem p{SymbolicMatrix(ensemble.n, ensemble.symmetric), {}, {}};
  // Rank <= 2r is automatic when 2r + 1 > n; then only the linear forms remain.
  const int s = 2 * ensemble.r + 1;
  if (s <= ensemble.n) p.minors = minors(p.q, s);
  p.linears = measurement_forms(ensemble, p.q);
  return p;
}

std::vector<SliceResult> run_slices(const Problem& problem, const std::array<std::string, 2>& kept,
                                    const CertifyConfig& config) {
  const auto& vars = problem.q.variables();
  std::vector<Polynomial> homogeneous_linears = problem.linears;
  homogeneous_linears.push_back(Polynomial::variable(vars, kept[0]));
  homogeneous_linears.push_back(Polynomial::variable(vars, kept[1]));

  std::vector<Polynomial> base;
  VarSetPtr ring = vars;
  std::optional<LinearReduction> reduction;
  if (config.preprocess_linear) {
    reduction = linear_preprocess(homogeneous_linears, problem.minors, {});
    ring = reduction->reduced;
    base = reduction->images;
    base.insert(base.end(), reduction->residual_linears.begin(), reduction->residual_linears.end());
  } else {
    base = problem.minors;
    base.insert(base.end(), homogeneous_linears.begin(), homogeneous_linears.end());
  }

  std::vector<SliceResult> results(vars->size());
  for_each_index(vars->size(), config.execution, [&](std::size_t v) {
    results[v].variable = vars->name(v);
    Polynomial slice = Polynomial::variable(vars, v) - Polynomial::constant(vars, Rational(1));
    if (reduction) slice = reduction->apply(slice);
    std::vector<Polynomial> gens = base;
    gens.push_back(std::move(slice));
    try {
      results[v].contains_one = contains_one(Ideal(ring, std::move(gens)), MonomialOrder::grevlex(), config.limits);
    } catch (const ResourceExceeded&) {
      results[v].contains_one = std::nullopt;
    }
  });
  return results;
}

}  // namespace

std::vector<SliceResult> slice_checks(const MeasurementEnsemble& ensemble, const std::array<std::string, 2>& kept,
                                      const CertifyConfig& config) {
  const Problem problem = build_problem(ensemble);
  return run_slices(problem, kept, config);
}

Certificate vinzant_certify(const MeasurementEnsemble& ensemble, const CertifyConfig& config) {
  const Problem problem = build_problem(ensemble);
  Certificate cert;
  cert.n = ensemble.n;
  cert.r = ensemble.r;
  cert.symmetric = ensemble.symmetric;
  cert.m = ensemble.size();
  cert.kept = resolve_keep(problem.q, config);

  try {
    VarSetPtr ring = problem.q.variables();
    std::vector<Polynomial> gens;
    if (config.preprocess_linear) {
      std::vector<std::size_t> keep_idx{*ring->index_of(cert.kept[0]), *ring->index_of(cert.kept[1])};
      const LinearReduction red = linear_preprocess(problem.linears, problem.minors, keep_idx);
      ring = red.reduced;
      gens = red.images;
      gens.insert(gens.end(), red.residual_linears.begin(), red.residual_linears.end());
      cert.stats.linear_pivots = red.pivots.size();
    } else {
      gens = problem.minors;
      gens.insert(gens.end(), problem.linears.begin(), problem.linears.end());
    }
    cert.stats.reduced_variables = ring->size();

    const std::vector<std::string> keep_names{cert.kept[0], cert.kept[1]};
    const EliminationResult elim = elimination_ideal(Ideal(ring, std::move(gens)), keep_names, config.limits);
    cert.stats.elimination_pairs = elim.stats.pairs_processed;
    cert.stats.elimination_basis_size = elim.stats.basis_size;
    cert.stats.elimination_max_degree = elim.stats.max_degree;
    cert.stats.elimination_generators = elim.generators.size();

    if (elim.generators.empty()) {
      cert.verdict = Verdict::Fail;
      cert.reason = "zero elimination ideal";
      return cert;
    }
    std::vector<Polynomial> candidates = elim.generators;
    std::sort(candidates.begin(), candidates.end(), f0_preferred);
    for (const auto& g : candidates) {
      if (!g.is_homogeneous()) throw std::logic_error("elimination ideal of a homogeneous ideal has an inhomogeneous generator");
    }
    for (const auto& g : candidates) {
      if (!homogeneous_has_nonzero_real_root(g)) {
        cert.f0 = g;
        break;
      }
    }
    if (!cert.f0 && candidates.size() > 1) {
      Polynomial combined = sum_of_squares(candidates);
      if (!homogeneous_has_nonzero_real_root(combined)) cert.f0 = std::move(combined);
    }
    const bool f0_ok = cert.f0.has_value();
    if (!f0_ok) cert.f0 = candidates.front();
    cert.real_root_count = count_real_roots(dehomogenize(*cert.f0));
    if (!f0_ok) {
      cert.verdict = Verdict::Fail;
      cert.reason = "f0 has a nonzero real root";
      return cert;
    }

    cert.slices = run_slices(problem, cert.kept, config);
    for (const auto& s : cert.slices) {
      if (!s.contains_one) {
        cert.verdict = Verdict::Indeterminate;
        cert.reason = "slice " + s.variable + " = 1 exceeded the resource limits";
        return cert;
      }
    }
    for (const auto& s : cert.slices) {
      if (!*s.contains_one) {
        cert.verdict = Verdict::Fail;
        cert.reason = "slice " + s.variable + " = 1 has solutions";
        return cert;
      }
    }
    cert.verdict = Verdict::Injective;
  } catch (const ResourceExceeded& e) {
    cert.verdict = Verdict::Indeterminate;
    cert.reason = e.what();
  }
  return cert;
}

std::vector<Rational> evaluate_measurements(const MeasurementEnsemble& ensemble, const RationalMatrix& m) {
  std::vector<Rational> out;
  out.reserve(ensemble.size());
  for (const auto& a : ensemble.matrices) out.push_back(frobenius_inner(a, m));
  return out;
}

// ---------------------------------------------------------------------------

AuditReport audit_certificate(const MeasurementEnsemble& ensemble, const Certificate& cert,
                              const ResourceLimits& limits, Execution execution) {
  AuditReport report;
  const Problem problem = build_problem(ensemble);
  if (!cert.f0 || cert.f0->is_zero()) {
    report.failures.push_back("f0 missing");
    return report;
  }
  report.f0_present = true;
  const Polynomial& f0 = *cert.f0;
  const auto& vars = problem.q.variables();

  report.f0_homogeneous = f0.is_homogeneous();
  if (!report.f0_homogeneous) report.failures.push_back("f0 is not homogeneous");

  const auto d = static_cast<Monomial::Exponent>(f0.degree());
  report.pure_power_nonzero = std::any_of(f0.terms().begin(), f0.terms().end(),
                                          [d](const Term& t) { return t.mono[0] == d; });
  if (!report.pure_power_nonzero) report.failures.push_back("coefficient of a^deg(f0) is zero");

  if (report.f0_homogeneous) {
    report.no_nonzero_real_root = !homogeneous_has_nonzero_real_root(f0);
    if (!report.no_nonzero_real_root) report.failures.push_back("f0 has a nonzero real root");
  }

  std::vector<Polynomial> embed;
  for (const auto& name : f0.variables()->names()) {
    if (!vars->index_of(name)) {
      report.failures.push_back("f0 uses a variable that is not an entry of the unknown");
      return report;
    }
    embed.push_back(Polynomial::variable(vars, name));
  }
  const Polynomial lifted = map_variables(f0, vars, embed);
  std::vector<Polynomial> gens = problem.minors;
  gens.insert(gens.end(), problem.linears.begin(), problem.linears.end());
  const GroebnerBasis full = buchberger(Ideal(vars, std::move(gens)), MonomialOrder::grevlex(), limits);
  report.f0_in_ideal = normal_form(lifted, full).is_zero();
  if (!report.f0_in_ideal) report.failures.push_back("f0 is not in the ideal");

  CertifyConfig plain;
  plain.preprocess_linear = false;
  plain.limits = limits;
  plain.execution = execution;
  const auto slices = run_slices(problem, cert.kept, plain);
  report.slices_recomputed = std::all_of(slices.begin(), slices.end(),
                                         [](const SliceResult& s) { return s.contains_one.value_or(false); });
  if (!report.slices_recomputed) report.failures.push_back("a recomputed slice check did not contain 1");
  if (cert.slices.size() != slices.size() ||
      !std::all_of(cert.slices.begin(), cert.slices.end(),
                   [](const SliceResult& s) { return s.contains_one.value_or(false); })) {
    report.failures.push_back("certificate does not record every slice as containing 1");
  }
  return report;
}

RationalMatrix random_low_rank_matrix(int n, int rank, bool symmetric, std::uint64_t seed, std::uint64_t index) {
  StreamRng rng(seed, index);
  const auto un = static_cast<std::size_t>(n);
  auto vec = [&] {
    std::vector<Rational> v(un);
    for (auto& x : v) x = static_cast<long>(rng.uniform(-5, 5));
    return v;
  };
  while (true) {
    RationalMatrix m(un, un);
    for (int k = 0; k < rank; ++k) {
      const auto u = vec();
      if (symmetric) {
        const RationalMatrix uu = RationalMatrix::outer(u, u);
        m = rng.uniform(0, 1) == 0 ? m + uu : m - uu;
      } else {
        m = m + RationalMatrix::outer(u, vec());
      }
    }
    if (!m.is_zero()) return m;
  }
}

std::size_t count_kernel_hits(const MeasurementEnsemble& ensemble, std::size_t samples, std::uint64_t seed,
                              Execution execution) {
  std::vector<char> hit(samples, 0);
  for_each_index(samples, execution, [&](std::size_t i) {
    const RationalMatrix m = random_low_rank_matrix(ensemble.n, 2 * ensemble.r, ensemble.symmetric, seed, i);
    const auto values = evaluate_measurements(ensemble, m);
    hit[i] = std::all_of(values.begin(), values.end(), [](const Rational& v) { return sgn(v) == 0; });
  });
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
}

}  // namespace lowrank
