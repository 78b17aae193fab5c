#include "progmix/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "progmix/borel.hpp"
#include "progmix/matrix_group.hpp"
#include "progmix/measures.hpp"
#include "progmix/mixing_forms.hpp"
#include "progmix/rng.hpp"
#include "progmix/spectral.hpp"
#include "progmix/szemeredi.hpp"
#include "progmix/varieties.hpp"

namespace progmix {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ExperimentReport::write_csv(std::ostream& os) const {
  os << "experiment,p,d,group_order,statistic,value,bound,samples,seed\n";
  for (const auto& r : rows_) {
    os << r.experiment << ',' << r.p << ',' << r.d << ',' << r.group_order << ',' << r.statistic
       << ',' << format_number(r.value) << ',' << (r.bound ? format_number(*r.bound) : "") << ','
       << (r.samples ? std::to_string(*r.samples) : "exact") << ',' << r.seed << '\n';
  }
}

void ExperimentReport::write_json(std::ostream& os) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows_) {
    nlohmann::ordered_json o;
    o["experiment"] = r.experiment;
    o["p"] = r.p;
    o["d"] = r.d;
    o["group_order"] = r.group_order;
    o["statistic"] = r.statistic;
    o["value"] = r.value;
    o["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
    o["samples"] = r.samples ? nlohmann::ordered_json(*r.samples) : nlohmann::ordered_json("exact");
    o["seed"] = r.seed;
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

FunctionSpec FunctionSpec::parse(const std::string& text) {
  if (text == "random-sign") return {FunctionKind::kRandomSign, 0.5};
  if (text == "coset-borel") return {FunctionKind::kCosetBorel, 0.5};
  const std::string prefix = "indicator:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string tail = text.substr(prefix.size());
    std::size_t used = 0;
    double density = 0.0;
    try {
      density = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size() || !(density >= 0.0 && density <= 1.0)) {
      throw std::invalid_argument("indicator density must be a number in [0, 1], got '" + tail + "'");
    }
    return {FunctionKind::kIndicator, density};
  }
  throw std::invalid_argument("unknown function family '" + text +
                              "' (expected random-sign, coset-borel or indicator:<density>)");
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"mixing3",  "mixing4-diag", "borel4",
                                              "spectral-class", "mu-scan", "szemeredi",
                                              "conic", "elim-constants", "varieties"};
  return names;
}

namespace {

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

double maximum(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end());
}

// Trial streams for prime p; separate from the Monte-Carlo sample streams.
Rng trial_stream(std::uint64_t seed, std::int64_t p, std::uint64_t trial) {
  return substream(mix64(seed ^ mix64(static_cast<std::uint64_t>(p))), trial);
}

std::uint64_t sample_seed(std::uint64_t seed, std::int64_t p, std::uint64_t trial) {
  return mix64(mix64(seed + static_cast<std::uint64_t>(p)) ^ (trial + 1));
}

// `coset_of` is the subgroup whose left cosets the coset-borel family uses.
std::vector<GroupFunction> make_functions(const GroupTable& group, const GroupTable* coset_of,
                                          const FunctionSpec& spec, std::size_t count, Rng& rng) {
  std::vector<GroupFunction> fs;
  for (std::size_t i = 0; i < count; ++i) {
    switch (spec.kind) {
      case FunctionKind::kRandomSign:
        fs.push_back(random_sign(group, rng));
        break;
      case FunctionKind::kIndicator:
        fs.push_back(random_indicator(group, rng, spec.density));
        break;
      case FunctionKind::kCosetBorel:
        if (coset_of == nullptr) {
          throw std::invalid_argument("coset-borel functions need d = 2");
        }
        fs.push_back(random_coset_indicator(group, *coset_of, rng));
        break;
    }
  }
  return fs;
}

void require_d2(const ExperimentConfig& c, const std::string& name) {
  if (c.d != 2) throw std::invalid_argument(name + " is defined for d = 2 only");
}

struct Emitter {
  ExperimentReport& report;
  std::string experiment;
  std::uint64_t seed;

  void operator()(std::int64_t p, int d, std::uint64_t order, const std::string& stat, double value,
                  std::optional<double> bound = std::nullopt,
                  std::optional<std::uint64_t> samples = std::nullopt) const {
    report.add({experiment, p, d, order, stat, value, bound, samples, seed});
  }
};

void run_mixing3(const ExperimentConfig& c, ExperimentReport& rep) {
  const Emitter emit{rep, "mixing3", c.seed};
  for (std::int64_t p : c.primes) {
    const GroupTable g = enumerate_group(c.d, p);
    std::optional<GroupTable> b;
    if (c.functions.kind == FunctionKind::kCosetBorel && c.d == 2) b = borel_subgroup(p);
    std::vector<double> star, dev;
    std::uint64_t violations = 0;
    for (std::uint64_t trial = 0; trial < c.trials; ++trial) {
      Rng rng = trial_stream(c.seed, p, trial);
      const auto fs = make_functions(g, b ? &*b : nullptr, c.functions, 3, rng);
      const MixingResult r =
          c.samples ? lambda_star_k_sampled(g, fs, {*c.samples, sample_seed(c.seed, p, trial)})
                    : lambda_star_k(g, fs);
      const double gap = std::abs(r.lambda_value - r.product_of_means);
      if (gap > r.value + 1e-12) ++violations;
      star.push_back(r.value);
      dev.push_back(gap);
    }
    const double med = median(star);
    emit(p, c.d, g.size(), "lambda_star_3_median", med, std::nullopt, c.samples);
    emit(p, c.d, g.size(), "lambda_star_3_max", maximum(star), std::nullopt, c.samples);
    emit(p, c.d, g.size(), "lambda_3_deviation_median", median(dev), std::nullopt, c.samples);
    emit(p, c.d, g.size(), "p_eighth_scaled_median", std::pow(static_cast<double>(p), 0.125) * med,
         std::nullopt, c.samples);
    if (b) {
      emit(p, c.d, g.size(), "borel_density", static_cast<double>(b->size()) / static_cast<double>(g.size()));
    }
    emit(p, c.d, g.size(), "tri_eq_violations", static_cast<double>(violations), 0.0, c.samples);
  }
}

void run_mixing4_diag(const ExperimentConfig& c, ExperimentReport& rep) {
  require_d2(c, "mixing4-diag");
  if (c.samples) throw std::invalid_argument("mixing4-diag is evaluated exactly; drop --samples");
  const Emitter emit{rep, "mixing4-diag", c.seed};
  for (std::int64_t p : c.primes) {
    const GroupTable g = enumerate_group(2, p);
    const GroupTable s = diagonalisable_set(p);
    std::optional<GroupTable> b;
    if (c.functions.kind == FunctionKind::kCosetBorel) b = borel_subgroup(p);
    std::vector<double> unsigned_vals, signed_vals;
    std::uint64_t violations = 0;
    for (std::uint64_t trial = 0; trial < c.trials; ++trial) {
      Rng rng = trial_stream(c.seed, p, trial);
      const auto fs = make_functions(g, b ? &*b : nullptr, c.functions, 4, rng);
      const double u = lambda_star_restricted(g, s, fs, false).value;
      const double sg = lambda_star_restricted(g, s, fs, true).value;
      if (sg > u + 1e-12) ++violations;
      unsigned_vals.push_back(u);
      signed_vals.push_back(sg);
    }
    emit(p, 2, g.size(), "diag_set_density", static_cast<double>(s.size()) / static_cast<double>(g.size()));
    emit(p, 2, g.size(), "restricted_unsigned_median", median(unsigned_vals));
    emit(p, 2, g.size(), "restricted_signed_median", median(signed_vals));
    emit(p, 2, g.size(), "signed_exceeds_unsigned", static_cast<double>(violations), 0.0);
  }
}

void run_borel4(const ExperimentConfig& c, ExperimentReport& rep) {
  require_d2(c, "borel4");
  if (c.samples) throw std::invalid_argument("borel4 is evaluated exactly; drop --samples");
  const Emitter emit{rep, "borel4", c.seed};
  for (std::int64_t p : c.primes) {
    const BorelContext ctx(p);
    const std::uint64_t order = ctx.B().size();
    std::vector<double> lambda, gap;
    double rewrite_diff = 0.0;
    const bool rewrite = p <= 13;
    std::uint64_t h_failures = 0;
    for (std::uint64_t trial = 0; trial < c.trials; ++trial) {
      Rng rng = trial_stream(c.seed, p, trial);
      const auto fs = make_functions(ctx.B(), &ctx.U(), c.functions, 4, rng);
      const double l = lambda4_borel(ctx, fs).value;
      lambda.push_back(l);
      gap.push_back(theorem_fourth_gap(ctx, fs));
      if (rewrite) rewrite_diff = std::max(rewrite_diff, std::abs(rewritten_form(ctx, fs).value - l));
      h_failures += h_invariance_check(ctx, fs[0], 5, sample_seed(c.seed, p, trial)).failures;
    }
    emit(p, 2, order, "lambda4_median", median(lambda));
    emit(p, 2, order, "theorem_fourth_gap_median", median(gap));
    if (rewrite) emit(p, 2, order, "rewritten_form_max_difference", rewrite_diff, 1e-10);
    emit(p, 2, order, "h_invariance_failures", static_cast<double>(h_failures), 0.0);
  }
}

void run_spectral_class(const ExperimentConfig& c, ExperimentReport& rep) {
  require_d2(c, "spectral-class");
  const Emitter emit{rep, "spectral-class", c.seed};
  const ClassExpansionReport r = class_expansion(c.primes, ClassSelector::unipotent());
  for (const auto& row : r.rows) {
    emit(row.p, 2, row.group_order, "class_size", static_cast<double>(row.class_size));
    emit(row.p, 2, row.group_order, "class_spectral_norm", row.norm);
    emit(row.p, 2, row.group_order, "class_norm_ratio", row.ratio, 1.0);
  }
  if (r.rows.size() >= 2) {
    const auto& last = r.rows.back();
    emit(last.p, 2, last.group_order, "fitted_exponent", r.exponent(), 0.0);
  }
}

void run_mu_scan(const ExperimentConfig& c, ExperimentReport& rep) {
  require_d2(c, "mu-scan");
  const std::uint64_t samples = c.samples.value_or(50);
  const Emitter emit{rep, "mu-scan", c.seed};
  for (std::int64_t p : c.primes) {
    const GroupTable g = enumerate_group(2, p);
    const auto D = QuasirandomnessParameter::classical_sl2(p);
    const PropGenEstimate est = prop_gen_rhs(g, c.c0, D.D, samples, sample_seed(c.seed, p, 0));
    const double pd = static_cast<double>(p);
    emit(p, 2, g.size(), "heavy_mass_mean", est.heavy_mean, 5.0 / pd, samples);
    emit(p, 2, g.size(), "heavy_mass_se", est.heavy_se, std::nullopt, samples);
    emit(p, 2, g.size(), "prop_gen_rhs", est.value, std::nullopt, samples);
    emit(p, 2, g.size(), "prop_gen_rhs_se", est.standard_error, std::nullopt, samples);
    if (p >= 5) {
      double worst = 0.0;
      std::uint64_t drawn = 0;
      for (std::uint64_t trial = 0; drawn < c.trials; ++trial) {
        Rng rng = trial_stream(c.seed, p, trial);
        const GroupElement b = g.element(uniform_index(rng, g.size()));
        const GroupElement h = g.element(uniform_index(rng, g.size()));
        if (!is_regular_semisimple(b)) continue;
        ++drawn;
        worst = std::max(worst, static_cast<double>(y_set(g, b, h).size()) / pd);
      }
      emit(p, 2, g.size(), "y_set_max_over_p", worst, 4.0, c.trials);
    }
  }
}

void run_szemeredi(const ExperimentConfig& c, ExperimentReport& rep) {
  const Emitter emit{rep, "szemeredi", c.seed};
  const int k = static_cast<int>(c.k.value_or(1));
  const PatternSet a = PatternSet::parse(c.m, c.n, c.set);
  const auto order = static_cast<std::uint64_t>(a.universe());
  emit(c.n, c.m, order, "set_size", static_cast<double>(a.count()));
  emit(c.n, c.m, order, "corners", static_cast<double>(count_corners(a)));
  const std::uint64_t grid = count_grid(a, k);
  emit(c.n, c.m, order, "grid_k" + std::to_string(k), static_cast<double>(grid));
  // Lift only when the lifted universe is small.
  const double big_k = std::pow(2.0 * k + 1.0, c.m);
  if (std::pow(static_cast<double>(c.n), c.m + big_k + 1) * (c.m + big_k) <= 1e8) {
    const PatternSet lifted = lift(a, k);
    const double normalised =
        static_cast<double>(count_corners(lifted)) / std::pow(static_cast<double>(c.n), big_k);
    emit(c.n, c.m, order, "lifted_corners_over_nK", normalised, static_cast<double>(grid));
  }
}

void run_conic(const ExperimentConfig& c, ExperimentReport& rep) {
  const Emitter emit{rep, "conic", c.seed};
  const std::int64_t k = c.k.value_or(2);
  for (std::int64_t p : c.primes) {
    const std::int64_t kk = ((k % p) + p) % p;
    if (kk == 0 || kk == 1) continue;
    const ConicReport r = conic_analysis(p, k);
    const double pd = static_cast<double>(p);
    const auto size = static_cast<double>(r.conic_size);
    emit(p, 2, r.conic_size, "conic_size", size, pd + 1.0);
    emit(p, 2, r.conic_size, "max_fibre", static_cast<double>(r.max_fibre), 2.0);
    emit(p, 2, r.conic_size, "max_representations", static_cast<double>(r.max_representations));
    emit(p, 2, r.conic_size, "max_representations_off_centre",
         static_cast<double>(r.max_representations_off_centre), 2.0);
    emit(p, 2, r.conic_size, "additive_energy", static_cast<double>(r.energy), 3.0 * size * size);
    emit(p, 2, r.conic_size, "degenerate_t", static_cast<double>(r.degenerate_t), 4.0);
  }
}

void run_elim(const ExperimentConfig& c, ExperimentReport& rep) {
  const Emitter emit{rep, "elim-constants", c.seed};
  const EliminationConstants e = elimination_constants(BigRational(c.r), BigRational(c.t));
  const auto [al, ar] = alpha_identity(e, 1);
  emit(0, 2, 0, "lhs", e.lhs.to_double());
  emit(0, 2, 0, "rhs", e.rhs.to_double());
  emit(0, 2, 0, "alpha_identity_j1_lhs", al.to_double());
  emit(0, 2, 0, "alpha_identity_j1_rhs", ar.to_double());
}

void run_varieties(const ExperimentConfig& c, ExperimentReport& rep) {
  const Emitter emit{rep, "varieties", c.seed};
  for (std::int64_t p : c.primes) {
    for (const auto& v : variety_counts(p, c.d, c.k.value_or(2))) {
      emit(p, c.d, v.count, v.variety + "_count", static_cast<double>(v.count), v.upper_bound);
      emit(p, c.d, v.count, v.variety + "_normalised", v.normalised());
      emit(p, c.d, v.count, v.variety + "_lang_weil_error", v.lang_weil_error());
    }
  }
}

}  // namespace

ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& config) {
  if (config.d != 2 && config.d != 3) throw std::invalid_argument("--d must be 2 or 3");
  for (std::int64_t p : config.primes) require_odd_prime(p);
  if (config.trials == 0) throw std::invalid_argument("--trials must be positive");
  ExperimentReport rep;
  if (name == "mixing3") run_mixing3(config, rep);
  else if (name == "mixing4-diag") run_mixing4_diag(config, rep);
  else if (name == "borel4") run_borel4(config, rep);
  else if (name == "spectral-class") run_spectral_class(config, rep);
  else if (name == "mu-scan") run_mu_scan(config, rep);
  else if (name == "szemeredi") run_szemeredi(config, rep);
  else if (name == "conic") run_conic(config, rep);
  else if (name == "elim-constants") run_elim(config, rep);
  else if (name == "varieties") run_varieties(config, rep);
  else throw std::invalid_argument("unknown experiment '" + name + "'");
  return rep;
}

std::string elimination_constants_json(std::int64_t r, std::int64_t t) {
  const EliminationConstants e = elimination_constants(BigRational(r), BigRational(t));
  nlohmann::ordered_json o;
  o["experiment"] = "elim-constants";
  o["r"] = e.r.str();
  o["t"] = e.t.str();
  o["lhs"] = e.lhs.str();
  o["rhs"] = e.rhs.str();
  o["lhs_approx"] = e.lhs.to_double();
  o["rhs_approx"] = e.rhs.to_double();
  const auto [al, ar] = alpha_identity(e, 1);
  o["alpha_identity_j1"] = {{"lhs", al.str()}, {"rhs", ar.str()}, {"equal", al == ar}};
  nlohmann::ordered_json alpha, beta_prime;
  for (int j = EliminationConstants::kMinIndex; j <= EliminationConstants::kMaxIndex; ++j) {
    alpha[std::to_string(j)] = e.alpha(j).str();
    beta_prime[std::to_string(j)] = e.beta_prime(j).str();
  }
  o["alpha"] = alpha;
  o["beta_prime"] = beta_prime;
  return o.dump(2);
}

}  // namespace progmix
