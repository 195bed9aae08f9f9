#include "banditlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string_view>
#include <system_error>
#include <utility>

#include "banditlab/errors.hpp"

namespace banditlab {
namespace {

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
  int key_col = 0;
  int value_col = 0;
};

struct RawSection {
  std::string name;
  int line = 0;
  int col = 0;
  std::vector<Entry> entries;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t first = 0;
  while (first < s.size() && is_space(s[first])) ++first;
  std::size_t last = s.size();
  while (last > first && is_space(s[last - 1])) --last;
  if (lead != nullptr) *lead = first;
  return s.substr(first, last - first);
}

bool known_section(std::string_view name) {
  return name == "env" || name == "run" || name == "output" ||
         name == "bound" || name == "policy";
}

std::vector<RawSection> tokenize(const std::string& text) {
  std::vector<RawSection> sections;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    const std::size_t eol = text.find('\n', pos);
    std::string_view line(
        text.data() + pos,
        (eol == std::string::npos ? text.size() : eol) - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t lead = 0;
    const std::string_view body = trim(line, &lead);
    if (body.empty()) continue;
    const int col = static_cast<int>(lead) + 1;

    if (body.front() == '[') {
      if (body.back() != ']') {
        throw ConfigError("section header must end with ']'", line_no, col);
      }
      const std::string name{trim(body.substr(1, body.size() - 2))};
      if (name.empty()) {
        throw ConfigError("empty section name", line_no, col);
      }
      if (!known_section(name)) {
        throw ConfigError("unknown section [" + name + "]", line_no, col);
      }
      sections.push_back({name, line_no, col, {}});
      continue;
    }

    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value' or '[section]'", line_no, col);
    }
    const std::string key{trim(body.substr(0, eq))};
    std::size_t value_lead = 0;
    const std::string value{trim(body.substr(eq + 1), &value_lead)};
    if (key.empty()) {
      throw ConfigError("missing key before '='", line_no, col);
    }
    if (value.empty()) {
      throw ConfigError("missing value for key '" + key + "'", line_no, col);
    }
    if (sections.empty()) {
      throw ConfigError("key '" + key + "' appears outside any section",
                        line_no, col);
    }
    for (const Entry& existing : sections.back().entries) {
      if (existing.key == key) {
        throw ConfigError("duplicate key '" + key + "' in [" +
                              sections.back().name + "]",
                          line_no, col);
      }
    }
    const int value_col = col + static_cast<int>(eq + 1 + value_lead);
    sections.back().entries.push_back({key, value, line_no, col, value_col});
  }
  return sections;
}

// Tracks which keys were consumed so leftovers become unknown-key errors.
class SectionReader {
 public:
  explicit SectionReader(const RawSection& raw)
      : raw_(raw), used_(raw.entries.size(), false) {}

  const RawSection& raw() const { return raw_; }

  const Entry* find(std::string_view key) {
    for (std::size_t i = 0; i < raw_.entries.size(); ++i) {
      if (raw_.entries[i].key == key) {
        used_[i] = true;
        return &raw_.entries[i];
      }
    }
    return nullptr;
  }

  const Entry& require(std::string_view key) {
    const Entry* entry = find(key);
    if (entry == nullptr) {
      throw ConfigError("missing required key '" + std::string(key) +
                            "' in [" + raw_.name + "]",
                        raw_.line, raw_.col);
    }
    return *entry;
  }

  void finish() const {
    for (std::size_t i = 0; i < raw_.entries.size(); ++i) {
      if (!used_[i]) {
        throw ConfigError("unknown key '" + raw_.entries[i].key + "' in [" +
                              raw_.name + "]",
                          raw_.entries[i].line, raw_.entries[i].key_col);
      }
    }
  }

 private:
  const RawSection& raw_;
  std::vector<bool> used_;
};

std::int64_t to_int(const Entry& entry) {
  std::int64_t value = 0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("value of '" + entry.key + "' must be an integer",
                      entry.line, entry.value_col);
  }
  return value;
}

std::uint64_t to_uint(const Entry& entry) {
  std::uint64_t value = 0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(
        "value of '" + entry.key + "' must be an unsigned integer", entry.line,
        entry.value_col);
  }
  return value;
}

double parse_real(std::string_view token, const Entry& entry, int col) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError("value of '" + entry.key + "' must be a finite real",
                      entry.line, col);
  }
  return value;
}

double to_real(const Entry& entry) {
  return parse_real(entry.value, entry, entry.value_col);
}

std::vector<double> to_real_list(const Entry& entry) {
  std::vector<double> values;
  std::string_view rest = entry.value;
  std::size_t offset = 0;
  for (;;) {
    const std::size_t comma = rest.find(',');
    const std::string_view raw_token = rest.substr(0, comma);
    std::size_t lead = 0;
    const std::string_view token = trim(raw_token, &lead);
    const int col = entry.value_col + static_cast<int>(offset + lead);
    if (token.empty()) {
      throw ConfigError("empty element in list value of '" + entry.key + "'",
                        entry.line, col);
    }
    values.push_back(parse_real(token, entry, col));
    if (comma == std::string_view::npos) break;
    offset += comma + 1;
    rest = rest.substr(comma + 1);
  }
  return values;
}

int to_count(const Entry& entry, std::int64_t min_value) {
  const std::int64_t value = to_int(entry);
  if (value < min_value || value > std::numeric_limits<int>::max()) {
    throw ConfigError("value of '" + entry.key + "' must be >= " +
                          std::to_string(min_value),
                      entry.line, entry.value_col);
  }
  return static_cast<int>(value);
}

// Length 1 or K, with positivity constraints checked element-wise.
enum class Sign { any, non_negative, positive };

std::vector<double> arm_list(const Entry& entry, int arms, Sign sign) {
  std::vector<double> values = to_real_list(entry);
  if (values.size() != 1 && values.size() != static_cast<std::size_t>(arms)) {
    throw ConfigError("value of '" + entry.key + "' must be a scalar or " +
                          std::to_string(arms) + " comma-separated values",
                      entry.line, entry.value_col);
  }
  for (double v : values) {
    if (sign == Sign::positive && !(v > 0.0)) {
      throw ConfigError("value of '" + entry.key + "' must be positive",
                        entry.line, entry.value_col);
    }
    if (sign == Sign::non_negative && !(v >= 0.0)) {
      throw ConfigError("value of '" + entry.key + "' must be >= 0",
                        entry.line, entry.value_col);
    }
  }
  return values;
}

EnvConfig read_env(SectionReader& reader) {
  EnvConfig env;
  const Entry& kind = reader.require("kind");
  env.kind = kind.value;
  if (env.kind != "bernoulli" && env.kind != "beta" && env.kind != "gaussian" &&
      env.kind != "gaussian_known") {
    throw ConfigError("unknown env kind '" + env.kind + "'", kind.line,
                      kind.value_col);
  }
  env.arms = to_count(reader.require("k"), 1);
  if (env.kind == "beta") {
    if (const Entry* scale = reader.find("scale")) {
      const double value = to_real(*scale);
      if (!(value > 0.0)) {
        throw ConfigError("value of 'scale' must be positive", scale->line,
                          scale->value_col);
      }
      env.scale = value;
    }
  } else if (env.kind == "gaussian") {
    if (const Entry* e = reader.find("mu0")) {
      env.mu0 = arm_list(*e, env.arms, Sign::any);
    }
    if (const Entry* e = reader.find("kappa0")) {
      env.kappa0 = arm_list(*e, env.arms, Sign::positive);
    }
    if (const Entry* e = reader.find("alpha0")) {
      env.alpha0 = arm_list(*e, env.arms, Sign::positive);
    }
    if (const Entry* e = reader.find("beta0")) {
      env.beta0 = arm_list(*e, env.arms, Sign::positive);
    }
  } else if (env.kind == "gaussian_known") {
    if (const Entry* e = reader.find("prior_mean")) {
      env.prior_mean = arm_list(*e, env.arms, Sign::any);
    }
    if (const Entry* e = reader.find("prior_var")) {
      env.prior_var = arm_list(*e, env.arms, Sign::non_negative);
    }
    if (const Entry* e = reader.find("reward_var")) {
      env.reward_var = arm_list(*e, env.arms, Sign::non_negative);
    }
  }
  reader.finish();
  return env;
}

PolicyConfig read_policy(SectionReader& reader, int arms) {
  PolicyConfig policy;
  const Entry& kind = reader.require("kind");
  bool found = false;
  for (const PolicyKind candidate :
       {PolicyKind::gaussian_ts, PolicyKind::varts, PolicyKind::ts14,
        PolicyKind::ts20, PolicyKind::bernoulli_ts, PolicyKind::ucb1,
        PolicyKind::ucb1_tuned, PolicyKind::ucb_v}) {
    if (kind.value == policy_kind_name(candidate)) {
      policy.kind = candidate;
      found = true;
      break;
    }
  }
  if (!found) {
    throw ConfigError("unknown policy kind '" + kind.value + "'", kind.line,
                      kind.value_col);
  }

  switch (policy.kind) {
    case PolicyKind::gaussian_ts:
      if (const Entry* e = reader.find("prior_mean")) {
        policy.prior_mean = arm_list(*e, arms, Sign::any);
      }
      if (const Entry* e = reader.find("prior_var")) {
        policy.prior_var = arm_list(*e, arms, Sign::non_negative);
      }
      if (const Entry* e = reader.find("reward_var")) {
        policy.reward_var = arm_list(*e, arms, Sign::positive);
      }
      break;
    case PolicyKind::varts: {
      const Entry* mu0 = reader.find("mu0");
      const Entry* kappa0 = reader.find("kappa0");
      const Entry* alpha0 = reader.find("alpha0");
      const Entry* beta0 = reader.find("beta0");
      const Entry* source = reader.find("prior");
      const bool any_explicit = mu0 || kappa0 || alpha0 || beta0;
      if (any_explicit) {
        if (!(mu0 && kappa0 && alpha0 && beta0)) {
          throw ConfigError(
              "varts explicit prior needs all of mu0, kappa0, alpha0, beta0",
              reader.raw().line, reader.raw().col);
        }
        if (source != nullptr) {
          throw ConfigError(
              "'prior' cannot be combined with explicit prior parameters",
              source->line, source->key_col);
        }
        policy.mu0 = arm_list(*mu0, arms, Sign::any);
        policy.kappa0 = arm_list(*kappa0, arms, Sign::non_negative);
        policy.alpha0 = arm_list(*alpha0, arms, Sign::positive);
        policy.beta0 = arm_list(*beta0, arms, Sign::non_negative);
        policy.varts_prior = VartsPriorSource::explicit_params;
      } else if (source != nullptr) {
        if (source->value == "env") {
          policy.varts_prior = VartsPriorSource::env;
        } else if (source->value == "fit") {
          policy.varts_prior = VartsPriorSource::fit;
        } else {
          throw ConfigError("value of 'prior' must be 'env' or 'fit'",
                            source->line, source->value_col);
        }
      }
      if (const Entry* e = reader.find("fit_samples")) {
        policy.fit_samples = to_count(*e, 2);
      }
      if (const Entry* e = reader.find("forced_pulls")) {
        policy.forced_pulls = to_count(*e, 0);
      }
      break;
    }
    case PolicyKind::ts14:
      if (const Entry* e = reader.find("alpha")) {
        policy.ts14_alpha = to_real(*e);
        if (!(policy.ts14_alpha > 0.0)) {
          throw ConfigError("value of 'alpha' must be positive", e->line,
                            e->value_col);
        }
      }
      break;
    case PolicyKind::ucb_v:
      if (const Entry* e = reader.find("b")) {
        policy.ucb_b = to_real(*e);
        if (!(policy.ucb_b > 0.0)) {
          throw ConfigError("value of 'b' must be positive", e->line,
                            e->value_col);
        }
      }
      if (const Entry* e = reader.find("zeta")) {
        policy.ucb_zeta = to_real(*e);
        if (!(policy.ucb_zeta > 0.0)) {
          throw ConfigError("value of 'zeta' must be positive", e->line,
                            e->value_col);
        }
      }
      break;
    default:
      break;
  }
  reader.finish();
  return policy;
}

// Broadcast a configured list (possibly empty = default) to K arms.
std::vector<double> expand(const std::vector<double>& values, int arms,
                           double fallback, const char* key) {
  if (values.empty()) {
    return std::vector<double>(static_cast<std::size_t>(arms), fallback);
  }
  if (values.size() == 1) {
    return std::vector<double>(static_cast<std::size_t>(arms), values[0]);
  }
  if (values.size() != static_cast<std::size_t>(arms)) {
    throw DomainError(std::string("env/policy parameter '") + key +
                      "' has per-arm length that does not match K; use a "
                      "scalar when overriding K");
  }
  return values;
}

}  // namespace

CliConfig parse_config(const std::string& text) {
  const std::vector<RawSection> sections = tokenize(text);

  const RawSection* env_section = nullptr;
  const RawSection* run_section = nullptr;
  const RawSection* output_section = nullptr;
  const RawSection* bound_section = nullptr;
  std::vector<const RawSection*> policy_sections;

  const auto claim_unique = [](const RawSection*& slot,
                               const RawSection& section) {
    if (slot != nullptr) {
      throw ConfigError("duplicate section [" + section.name + "]",
                        section.line, section.col);
    }
    slot = &section;
  };

  for (const RawSection& section : sections) {
    if (section.name == "env") {
      claim_unique(env_section, section);
    } else if (section.name == "run") {
      claim_unique(run_section, section);
    } else if (section.name == "output") {
      claim_unique(output_section, section);
    } else if (section.name == "bound") {
      claim_unique(bound_section, section);
    } else {
      policy_sections.push_back(&section);
    }
  }

  if (env_section == nullptr) {
    throw ConfigError("missing required section [env]", 1, 1);
  }
  if (run_section == nullptr) {
    throw ConfigError("missing required section [run]", 1, 1);
  }

  CliConfig config;
  {
    SectionReader reader(*env_section);
    config.env = read_env(reader);
  }
  {
    SectionReader reader(*run_section);
    config.seed = to_uint(reader.require("seed"));
    if (const Entry* e = reader.find("horizon")) {
      config.horizon = to_count(*e, 1);
    }
    if (const Entry* e = reader.find("runs")) config.runs = to_count(*e, 1);
    if (const Entry* e = reader.find("record_every")) {
      config.record_every = to_count(*e, 1);
    }
    reader.finish();
  }
  if (output_section != nullptr) {
    SectionReader reader(*output_section);
    config.out_dir = reader.require("dir").value;
    reader.finish();
  }
  if (bound_section != nullptr) {
    SectionReader reader(*bound_section);
    const Entry& delta = reader.require("delta");
    const double value = to_real(delta);
    if (!(value > 0.0 && value <= 1.0)) {
      throw ConfigError("value of 'delta' must lie in (0, 1]", delta.line,
                        delta.value_col);
    }
    config.bound_delta = value;
    reader.finish();
  }
  for (const RawSection* section : policy_sections) {
    SectionReader reader(*section);
    config.policies.push_back(read_policy(reader, config.env.arms));
  }
  return config;
}

EnvSpec build_env(const EnvConfig& env, int arms_override) {
  const int arms = arms_override > 0 ? arms_override : env.arms;
  if (arms < 1) throw DomainError("build_env: K must be >= 1");

  if (env.kind == "bernoulli") {
    return make_env_spec(EnvKind::bernoulli, arms);
  }
  if (env.kind == "beta") {
    EnvSpec base = make_env_spec(EnvKind::beta, arms);
    if (!env.scale.has_value()) return base;
    BetaScaledEnv family = std::get<BetaScaledEnv>(base.family());
    family.scale = *env.scale;
    return EnvSpec(std::move(family));
  }
  if (env.kind == "gaussian") {
    EnvSpec base = make_env_spec(EnvKind::gaussian, arms);
    if (env.mu0.empty() && env.kappa0.empty() && env.alpha0.empty() &&
        env.beta0.empty()) {
      return base;
    }
    GaussianNgEnv family = std::get<GaussianNgEnv>(base.family());
    const std::vector<double> mu0 =
        env.mu0.empty() ? std::vector<double>{} : expand(env.mu0, arms, 0, "mu0");
    const std::vector<double> kappa0 =
        env.kappa0.empty() ? std::vector<double>{}
                           : expand(env.kappa0, arms, 0, "kappa0");
    const std::vector<double> alpha0 =
        env.alpha0.empty() ? std::vector<double>{}
                           : expand(env.alpha0, arms, 0, "alpha0");
    const std::vector<double> beta0 =
        env.beta0.empty() ? std::vector<double>{}
                          : expand(env.beta0, arms, 0, "beta0");
    for (int i = 0; i < arms; ++i) {
      NormalGammaParams& p = family.prior[static_cast<std::size_t>(i)];
      if (!mu0.empty()) p.mu0 = mu0[static_cast<std::size_t>(i)];
      if (!kappa0.empty()) p.kappa0 = kappa0[static_cast<std::size_t>(i)];
      if (!alpha0.empty()) p.alpha0 = alpha0[static_cast<std::size_t>(i)];
      if (!beta0.empty()) p.beta0 = beta0[static_cast<std::size_t>(i)];
    }
    return EnvSpec(std::move(family));
  }
  if (env.kind == "gaussian_known") {
    const std::vector<double> mean = expand(env.prior_mean, arms, 0.0, "prior_mean");
    const std::vector<double> variance =
        expand(env.prior_var, arms, 1.0, "prior_var");
    const std::vector<double> reward = expand(env.reward_var, arms, 1.0, "reward_var");
    GaussianKnownVarEnv family;
    family.prior.resize(static_cast<std::size_t>(arms));
    for (int i = 0; i < arms; ++i) {
      family.prior[static_cast<std::size_t>(i)] = {
          mean[static_cast<std::size_t>(i)], variance[static_cast<std::size_t>(i)]};
    }
    family.sigma2 = reward;
    return EnvSpec(std::move(family));
  }
  throw DomainError("build_env: unknown env kind '" + env.kind + "'");
}

std::vector<NormalGammaParams> fit_varts_priors(const EnvSpec& env,
                                                int samples, RngStream rng) {
  if (samples < 2) {
    throw DomainError("fit_varts_priors: needs at least 2 samples");
  }
  const std::size_t arms = static_cast<std::size_t>(env.arms());
  std::vector<std::vector<double>> means(arms);
  std::vector<std::vector<double>> variances(arms);
  for (std::size_t i = 0; i < arms; ++i) {
    means[i].reserve(static_cast<std::size_t>(samples));
    variances[i].reserve(static_cast<std::size_t>(samples));
  }
  for (int s = 0; s < samples; ++s) {
    const BanditInstance instance = sample_instance(env, rng);
    for (std::size_t i = 0; i < arms; ++i) {
      means[i].push_back(instance.mu[i]);
      variances[i].push_back(instance.sigma2[i]);
    }
  }
  std::vector<NormalGammaParams> priors;
  priors.reserve(arms);
  for (std::size_t i = 0; i < arms; ++i) {
    priors.push_back(fit_from_variance_moments(means[i], variances[i]));
  }
  return priors;
}

ExperimentConfig build_experiment(const CliConfig& config, int arms_override) {
  EnvSpec env = build_env(config.env, arms_override);
  const int arms = env.arms();
  if (config.policies.empty()) {
    throw DomainError("config declares no [policy] sections");
  }

  // Fits are deterministic in (seed, fit_samples); share them across
  // policies requesting the same sample count.
  std::vector<std::pair<int, std::vector<NormalGammaParams>>> fit_cache;
  const auto fitted_prior =
      [&](int samples) -> const std::vector<NormalGammaParams>& {
    for (const auto& [count, priors] : fit_cache) {
      if (count == samples) return priors;
    }
    fit_cache.emplace_back(
        samples,
        fit_varts_priors(env, samples, RngStream(config.seed).derive(1)));
    return fit_cache.back().second;
  };

  std::vector<PolicySpec> policies;
  policies.reserve(config.policies.size());
  for (const PolicyConfig& pc : config.policies) {
    switch (pc.kind) {
      case PolicyKind::gaussian_ts: {
        const std::vector<double> mean = expand(pc.prior_mean, arms, 0.0, "prior_mean");
        const std::vector<double> variance =
            expand(pc.prior_var, arms, 1.0, "prior_var");
        const std::vector<double> reward =
            expand(pc.reward_var, arms, 1.0, "reward_var");
        std::vector<GaussianParams> prior(static_cast<std::size_t>(arms));
        for (int i = 0; i < arms; ++i) {
          prior[static_cast<std::size_t>(i)] = {
              mean[static_cast<std::size_t>(i)],
              variance[static_cast<std::size_t>(i)]};
        }
        policies.push_back(PolicySpec::gaussian_ts(std::move(prior), reward));
        break;
      }
      case PolicyKind::varts: {
        VartsPriorSource source = pc.varts_prior;
        if (source == VartsPriorSource::automatic) {
          source = std::holds_alternative<GaussianNgEnv>(env.family())
                       ? VartsPriorSource::env
                       : VartsPriorSource::fit;
        }
        std::vector<NormalGammaParams> prior;
        if (source == VartsPriorSource::explicit_params) {
          const std::vector<double> mu0 = expand(pc.mu0, arms, 0.0, "mu0");
          const std::vector<double> kappa0 = expand(pc.kappa0, arms, 1.0, "kappa0");
          const std::vector<double> alpha0 = expand(pc.alpha0, arms, 1.0, "alpha0");
          const std::vector<double> beta0 = expand(pc.beta0, arms, 1.0, "beta0");
          prior.resize(static_cast<std::size_t>(arms));
          for (int i = 0; i < arms; ++i) {
            const std::size_t j = static_cast<std::size_t>(i);
            prior[j] = {mu0[j], kappa0[j], alpha0[j], beta0[j]};
          }
        } else if (source == VartsPriorSource::env) {
          const auto* family = std::get_if<GaussianNgEnv>(&env.family());
          if (family == nullptr) {
            throw DomainError(
                "varts prior = env requires env kind 'gaussian'");
          }
          prior = family->prior;
        } else {
          prior = fitted_prior(pc.fit_samples);
        }
        policies.push_back(
            PolicySpec::varts(std::move(prior), pc.forced_pulls));
        break;
      }
      case PolicyKind::ts14:
        policies.push_back(PolicySpec::ts14(pc.ts14_alpha));
        break;
      case PolicyKind::ts20:
        policies.push_back(PolicySpec::ts20());
        break;
      case PolicyKind::bernoulli_ts:
        policies.push_back(PolicySpec::bernoulli_ts());
        break;
      case PolicyKind::ucb1:
        policies.push_back(PolicySpec::ucb1());
        break;
      case PolicyKind::ucb1_tuned:
        policies.push_back(PolicySpec::ucb1_tuned());
        break;
      case PolicyKind::ucb_v:
        policies.push_back(PolicySpec::ucb_v(pc.ucb_b, pc.ucb_zeta));
        break;
    }
  }

  return {std::move(env),     std::move(policies), config.horizon,
          config.runs,        config.seed,         config.record_every};
}

std::vector<double> read_sample_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open sample file: " + path.string());
  }
  std::vector<double> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const std::size_t hash = view.find('#');
        hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    const std::string_view token = trim(view);
    if (token.empty()) continue;
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected one finite real per line");
    }
    samples.push_back(value);
  }
  if (samples.empty()) {
    throw DataError("sample file contains no values: " + path.string());
  }
  return samples;
}

}  // namespace banditlab
