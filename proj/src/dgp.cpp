#include "pcpt/dgp.hpp"

#include <cmath>

#include "pcpt/error.hpp"

namespace pcpt {

const char* to_string(ErrorLaw law) noexcept {
  return law == ErrorLaw::Normal ? "normal" : "t5";
}

const char* to_string(BreakSpec spec) noexcept {
  switch (spec) {
    case BreakSpec::None: return "none";
    case BreakSpec::CancellingUniform: return "cancel";
    case BreakSpec::NonCancellingUniform: return "noncancel";
  }
  return "unknown";
}

std::size_t DgpConfig::t0() const noexcept {
  return static_cast<std::size_t>(std::floor(t0_fraction * static_cast<double>(t)));
}

void DgpConfig::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidConfig, "n must be at least 1");
  if (t < 2) throw Error(ErrorCode::InvalidConfig, "t must be at least 2");
  auto check_rho = [](double r) {
    if (!(std::abs(r) < 1.0)) {
      throw Error(ErrorCode::InvalidConfig, "rho must satisfy |rho| < 1");
    }
  };
  check_rho(rho);
  if (!std::isfinite(beta)) throw Error(ErrorCode::InvalidConfig, "beta must be finite");
  auto check_len = [&](const std::optional<std::vector<double>>& v, const char* name) {
    if (v && v->size() != n) {
      throw Error(ErrorCode::InvalidConfig,
                  std::string(name) + " must have one entry per series");
    }
  };
  check_len(rho_i, "rho_i");
  check_len(beta_i, "beta_i");
  check_len(delta_i, "delta_i");
  if (rho_i) {
    for (double r : *rho_i) check_rho(r);
  }
  if (break_spec != BreakSpec::None || delta_i) {
    if (!(t0_fraction > 0.0 && t0_fraction < 1.0)) {
      throw Error(ErrorCode::InvalidConfig, "t0 fraction must lie in (0, 1)");
    }
    const std::size_t k = t0();
    if (k < 1 || k > t - 1) {
      throw Error(ErrorCode::InvalidConfig, "break location t0 must lie in 1..T-1");
    }
  }
}

std::vector<double> draw_deltas(BreakSpec spec, std::size_t n, rng::Engine& eng) {
  double lo = 0.0;
  double hi = 0.0;
  switch (spec) {
    case BreakSpec::CancellingUniform: lo = -0.5; hi = 0.5; break;
    case BreakSpec::NonCancellingUniform: lo = 0.1; hi = 0.5; break;
    case BreakSpec::None:
      throw Error(ErrorCode::InvalidConfig, "draw_deltas called without a break");
  }
  std::vector<double> d(n);
  for (double& v : d) v = rng::uniform(eng, lo, hi);
  return d;
}

namespace {

double draw(ErrorLaw law, rng::Engine& eng) {
  return law == ErrorLaw::Normal ? rng::standard_normal(eng)
                                 : rng::student_t5_standardized(eng);
}

}  // namespace

Panel simulate_panel(const DgpConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.n;
  const std::size_t t = cfg.t;
  const std::size_t steps = cfg.burn_in + t;

  std::vector<double> deltas(n, 0.0);
  if (cfg.delta_i) {
    deltas = *cfg.delta_i;
  } else if (cfg.break_spec != BreakSpec::None) {
    auto eng = rng::make_engine(rng::derive_seed(cfg.seed, {rng::label(rng::Purpose::Deltas)}));
    deltas = draw_deltas(cfg.break_spec, n, eng);
  }

  std::vector<double> factor(steps);
  {
    auto eng = rng::make_engine(rng::derive_seed(cfg.seed, {rng::label(rng::Purpose::Factor)}));
    for (double& f : factor) f = draw(cfg.error_law, eng);
  }

  const std::size_t t0 = cfg.t0();
  const bool shifted = cfg.delta_i || cfg.break_spec != BreakSpec::None;
  std::vector<double> values(n * t);
  for (std::size_t i = 0; i < n; ++i) {
    auto eng = rng::make_engine(rng::derive_seed(
        cfg.seed, {rng::label(rng::Purpose::Idiosyncratic), static_cast<std::uint64_t>(i)}));
    const double rho = cfg.rho_i ? (*cfg.rho_i)[i] : cfg.rho;
    const double beta = cfg.beta_i ? (*cfg.beta_i)[i] : cfg.beta;
    double e = 0.0;
    double* row = values.data() + i * t;
    for (std::size_t s = 0; s < steps; ++s) {
      e = rho * e + draw(cfg.error_law, eng) + beta * factor[s];
      if (s >= cfg.burn_in) {
        const std::size_t time = s - cfg.burn_in + 1;  // 1-based
        row[time - 1] = e + ((shifted && time > t0) ? deltas[i] : 0.0);
      }
    }
  }
  return Panel(n, t, std::move(values));
}

}  // namespace pcpt
