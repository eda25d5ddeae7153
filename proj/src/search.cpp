#include "lowrank/search.hpp"

#include <stdexcept>

#include "lowrank/random.hpp"

namespace lowrank {

void SearchConfig::validate() const {
  if (n < 2) throw std::invalid_argument("search: n must be >= 2");
  if (r < 1 || 2 * r > n) throw std::invalid_argument("search: r must satisfy 1 <= r <= n/2");
  if (m < 1) throw std::invalid_argument("search: m must be >= 1");
  if (lo > hi) throw std::invalid_argument("search: range lo > hi");
  if (trials < 1) throw std::invalid_argument("search: trials must be >= 1");
}

MeasurementEnsemble random_ensemble(const SearchConfig& config, std::size_t trial) {
  config.validate();
  StreamRng rng(config.seed, trial);
  MeasurementEnsemble e;
  e.n = config.n;
  e.r = config.r;
  e.symmetric = config.symmetric;
  const auto un = static_cast<std::size_t>(config.n);
  for (std::size_t j = 0; j < config.m; ++j) {
    RationalMatrix a(un, un);
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t k = 0; k < un; ++k) a(i, k) = static_cast<long>(rng.uniform(config.lo, config.hi));
    }
    e.matrices.push_back(std::move(a));
  }
  return e;
}

SearchReport search_minimal(const SearchConfig& config) {
  config.validate();
  struct Outcome {
    MeasurementEnsemble ensemble;
    Certificate certificate;
  };
  std::vector<Outcome> outcomes(config.trials);
  CertifyConfig cc;
  cc.limits = config.limits;
  cc.execution = Execution::Serial;
  for_each_index(config.trials, config.execution, [&](std::size_t t) {
    outcomes[t].ensemble = random_ensemble(config, t);
    try {
      outcomes[t].certificate = vinzant_certify(outcomes[t].ensemble, cc);
    } catch (const std::exception& e) {
      outcomes[t].certificate.verdict = Verdict::Indeterminate;
      outcomes[t].certificate.reason = std::string("error: ") + e.what();
    }
  });

  SearchReport report;
  report.config = config;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    auto& o = outcomes[t];
    switch (o.certificate.verdict) {
      case Verdict::Injective:
        ++report.injective;
        report.hits.push_back({t, std::move(o.ensemble), std::move(o.certificate)});
        break;
      case Verdict::Fail:
        ++report.fail;
        ++report.reasons[o.certificate.reason];
        break;
      case Verdict::Indeterminate:
        ++report.indeterminate;
        ++report.reasons[o.certificate.reason];
        break;
    }
  }
  return report;
}

}  // namespace lowrank
