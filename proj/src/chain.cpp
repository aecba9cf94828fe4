#include "runsrules/chain.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace runsrules {

namespace {

constexpr int kDenseLimit = 3000;       // dense factorization below, Jacobi above
constexpr double kResidualTol = 1e-10;  // scaled residual for the iterative path
constexpr long kPercentileCap = 10'000'000;

void require_can_signal(const TransientChain& chain) {
  const double total =
      std::accumulate(chain.absorb.begin(), chain.absorb.end(), 0.0);
  if (!(total > 0.0)) {
    throw std::runtime_error("scheme cannot signal under this distribution");
  }
}

// Solves (I - Q) x = rhs for one or more right-hand sides.
class FundamentalSolver {
 public:
  explicit FundamentalSolver(const TransientChain& chain) : chain_(chain) {
    if (chain.state_count <= kDenseLimit) {
      Eigen::MatrixXd system =
          Eigen::MatrixXd::Identity(chain.state_count, chain.state_count);
      for (int i = 0; i < chain.state_count; ++i) {
        for (const auto& [j, p] : chain.rows[i]) system(i, j) -= p;
      }
      lu_ = Eigen::PartialPivLU<Eigen::MatrixXd>(system);
      dense_ = true;
    }
  }

  std::vector<double> solve(const std::vector<double>& rhs) const {
    return dense_ ? solve_dense(rhs) : solve_jacobi(rhs);
  }

 private:
  std::vector<double> solve_dense(const std::vector<double>& rhs) const {
    Eigen::VectorXd b =
        Eigen::Map<const Eigen::VectorXd>(rhs.data(), rhs.size());
    Eigen::VectorXd x = lu_.solve(b);
    if (!x.allFinite()) {
      throw std::runtime_error("scheme cannot signal under this distribution");
    }
    return {x.data(), x.data() + x.size()};
  }

  // Stationary iteration x <- rhs + Q x on the M-matrix I - Q. Q is strictly
  // sub-stochastic on every absorbing path, so this converges at a rate set
  // by the spectral radius of Q.
  std::vector<double> solve_jacobi(const std::vector<double>& rhs) const {
    const int n = chain_.state_count;
    std::vector<double> x(rhs);
    std::vector<double> next(n);
    const long max_sweeps = 2'000'000;
    for (long sweep = 0; sweep < max_sweeps; ++sweep) {
      for (int i = 0; i < n; ++i) {
        double acc = rhs[i];
        for (const auto& [j, p] : chain_.rows[i]) acc += p * x[j];
        next[i] = acc;
      }
      double residual = 0.0;
      double scale = 1.0;
      for (int i = 0; i < n; ++i) {
        residual = std::max(residual, std::abs(next[i] - x[i]));
        scale = std::max(scale, std::abs(next[i]));
      }
      x.swap(next);
      if (residual <= kResidualTol * scale) return x;
    }
    throw std::runtime_error("run-length solve did not converge");
  }

  const TransientChain& chain_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  bool dense_ = false;
};

std::vector<double> expected_steps(const TransientChain& chain,
                                   const FundamentalSolver& solver) {
  require_can_signal(chain);
  std::vector<double> ones(chain.state_count, 1.0);
  std::vector<double> a = solver.solve(ones);
  if (!(a[chain.initial] >= 1.0 - 1e-9)) {
    throw std::runtime_error("scheme cannot signal under this distribution");
  }
  return a;
}

// Advances the state-occupancy row vector by one observation.
void advance(const TransientChain& chain, const std::vector<double>& v,
             std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (int i = 0; i < chain.state_count; ++i) {
    const double mass = v[i];
    if (mass == 0.0) continue;
    for (const auto& [j, p] : chain.rows[i]) out[j] += mass * p;
  }
}

// Smallest n >= 1 with CDF(n) >= level, for each requested level.
std::map<double, long> percentile_sweep(const TransientChain& chain,
                                        std::vector<double> levels) {
  for (double level : levels) {
    if (!(level > 0.0 && level < 1.0)) {
      throw std::invalid_argument("percentile level must lie in (0, 1)");
    }
  }
  std::sort(levels.begin(), levels.end());
  require_can_signal(chain);

  std::map<double, long> result;
  std::vector<double> v(chain.state_count, 0.0);
  v[chain.initial] = 1.0;
  std::vector<double> next(chain.state_count);
  std::size_t served = 0;
  for (long n = 1; served < levels.size(); ++n) {
    if (n > kPercentileCap) {
      throw std::runtime_error("percentile iteration cap exceeded");
    }
    advance(chain, v, next);
    v.swap(next);
    const double surv = std::accumulate(v.begin(), v.end(), 0.0);
    while (served < levels.size() && 1.0 - surv >= levels[served]) {
      result[levels[served]] = n;
      ++served;
    }
  }
  return result;
}

}  // namespace

TransientChain chain_from(const LabeledAutomaton& a,
                          std::span<const double> zone_probs) {
  if (static_cast<int>(zone_probs.size()) != a.alphabet) {
    throw std::invalid_argument(
        "zone probability vector does not match the automaton alphabet");
  }
  TransientChain chain;
  chain.state_count = a.state_count;
  chain.initial = a.initial;
  chain.rows.resize(a.state_count);
  chain.absorb.assign(a.state_count, 0.0);
  std::vector<double> dense_row(a.state_count);
  for (int s = 0; s < a.state_count; ++s) {
    std::fill(dense_row.begin(), dense_row.end(), 0.0);
    for (int label = 0; label < a.alphabet; ++label) {
      const int t = a.next(s, label);
      if (t == LabeledAutomaton::kSignal) {
        chain.absorb[s] += zone_probs[label];
      } else {
        dense_row[t] += zone_probs[label];
      }
    }
    for (int t = 0; t < a.state_count; ++t) {
      if (dense_row[t] != 0.0) chain.rows[s].emplace_back(t, dense_row[t]);
    }
  }
  return chain;
}

namespace {

double sd_from(const TransientChain& chain, const FundamentalSolver& solver,
               const std::vector<double>& a) {
  // Second moment via the first-step decomposition: (I - Q) s = 1 + 2 Q a.
  std::vector<double> rhs(chain.state_count, 1.0);
  for (int i = 0; i < chain.state_count; ++i) {
    for (const auto& [j, p] : chain.rows[i]) rhs[i] += 2.0 * p * a[j];
  }
  const std::vector<double> s = solver.solve(rhs);

  const double mean = a[chain.initial];
  double variance = s[chain.initial] - mean * mean;
  if (variance < 0.0) {
    if (variance < -1e-9) {
      throw std::logic_error("run-length variance came out negative");
    }
    variance = 0.0;
  }
  return std::sqrt(variance);
}

}  // namespace

double arl(const TransientChain& chain) {
  FundamentalSolver solver(chain);
  return expected_steps(chain, solver)[chain.initial];
}

double sd(const TransientChain& chain) {
  FundamentalSolver solver(chain);
  return sd_from(chain, solver, expected_steps(chain, solver));
}

double survival(const TransientChain& chain, long n) {
  if (n < 0) throw std::invalid_argument("survival: n must be >= 0");
  std::vector<double> v(chain.state_count, 0.0);
  v[chain.initial] = 1.0;
  std::vector<double> next(chain.state_count);
  for (long step = 0; step < n; ++step) {
    advance(chain, v, next);
    v.swap(next);
  }
  return std::accumulate(v.begin(), v.end(), 0.0);
}

long percentile(const TransientChain& chain, double level) {
  return percentile_sweep(chain, {level}).at(level);
}

double sir(const TransientChain& chain) {
  const auto quartiles = percentile_sweep(chain, {0.25, 0.75});
  return (quartiles.at(0.75) - quartiles.at(0.25)) / 2.0;
}

RunLengthSummary summarize(const LabeledAutomaton& a, const SchemeSpec& scheme,
                           double shift, std::span<const double> levels) {
  // Symmetric limits and a mirror-invariant predicate make the run-length
  // distribution an even function of the shift; canonicalizing keeps the
  // +delta and -delta results bit-identical.
  const ZonePartition partition = zone_partition(scheme);
  const auto probs =
      zone_probabilities(partition, ShiftedProcess{std::fabs(shift)});
  const TransientChain chain = chain_from(a, probs);

  RunLengthSummary summary;
  {
    const FundamentalSolver solver(chain);
    const std::vector<double> steps = expected_steps(chain, solver);
    summary.arl = steps[chain.initial];
    summary.sd = sd_from(chain, solver, steps);
  }
  std::vector<double> wanted(levels.begin(), levels.end());
  for (double q : {0.25, 0.75}) {
    if (std::find(wanted.begin(), wanted.end(), q) == wanted.end()) {
      wanted.push_back(q);
    }
  }
  summary.percentiles = percentile_sweep(chain, wanted);
  summary.sir =
      (summary.percentiles.at(0.75) - summary.percentiles.at(0.25)) / 2.0;
  for (double q : {0.25, 0.75}) {
    if (std::find(levels.begin(), levels.end(), q) == levels.end()) {
      summary.percentiles.erase(q);
    }
  }
  return summary;
}

RunLengthSummary summarize(const SchemeSpec& scheme, double shift,
                           std::span<const double> levels) {
  return summarize(compile_scheme(scheme), scheme, shift, levels);
}

}  // namespace runsrules
