// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperon/cascade.hpp"
#include "hyperon/dataio.hpp"
#include "hyperon/errors.hpp"
#include "hyperon/inequalities.hpp"
#include "hyperon/mc.hpp"
#include "hyperon/pairs.hpp"

namespace {

using namespace hyperon;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kReportDigits = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

using Value = std::variant<std::string, double, std::int64_t, bool>;

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  void add(std::vector<Value> row) { rows.push_back(std::move(row)); }
};

std::string csv_cell(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_significant(x, kReportDigits);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return std::to_string(x);
        }
      },
      v);
}

nlohmann::ordered_json json_cell(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return round_significant(x, kReportDigits);
        } else {
          return x;
        }
      },
      v);
}

void emit(const Report& report, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < report.columns.size(); ++i)
      out << (i ? "," : "") << report.columns[i];
    out << '\n';
    for (const auto& row : report.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json object;
    for (std::size_t i = 0; i < row.size(); ++i) object[report.columns[i]] = json_cell(row[i]);
    array.push_back(std::move(object));
  }
  out << array.dump(2) << '\n';
}

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string format = "csv";
  std::string params;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw DataError("cannot open output file '" + path + "'");
    path_ = path;
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw DataError("failed writing output" + (path_.empty() ? "" : " '" + path_ + "'"));
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

Format parse_format(const std::string& text) { return text == "json" ? Format::Json : Format::Csv; }

std::string params_path(const Globals& g) {
  if (!g.params.empty()) return g.params;
  if (const char* env = std::getenv("HYPERON_PARAMS"); env != nullptr && *env != '\0') return env;
  return HYPERON_DEFAULT_PARAMS;
}

const ParameterRow& lookup(const ParameterTable& table, const std::string& parent,
                           const std::string& channel) {
  const ParameterRow* row = table.find(parent, channel);
  if (row == nullptr)
    throw UsageError("no parameters for '" + parent + (channel.empty() ? "" : " -> " + channel) +
                     "'");
  return *row;
}

Vec3 polarization(const std::vector<double>& components) {
  if (components.empty()) return Vec3::Zero();
  if (components.size() != 3) throw UsageError("--pol expects three components x,y,z");
  const Vec3 s(components[0], components[1], components[2]);
  if (s.norm() > 1.0 + tolerance::kUnitNorm) throw DomainError("--pol is longer than 1");
  return s;
}

// Decay selection shared by several subcommands: a named row of the parameter
// table, or explicit alpha/phi.
struct DecaySelection {
  std::string hyperon;
  std::string channel;
  std::optional<double> alpha;
  double phi_pi = 0.0;
  std::string gamma_sign = "+";

  void attach(CLI::App* cmd, const std::string& prefix, const std::string& default_hyperon) {
    hyperon = default_hyperon;
    cmd->add_option("--" + prefix + (prefix.empty() ? "hyperon" : ""), hyperon,
                    "Parent hyperon in the parameter table")
        ->capture_default_str();
    cmd->add_option("--" + (prefix.empty() ? std::string() : prefix + "-") + "channel", channel,
                    "Decay channel; defaults to the dominant one");
    cmd->add_option("--" + (prefix.empty() ? std::string() : prefix + "-") + "alpha", alpha,
                    "Explicit asymmetry parameter instead of the table");
    cmd->add_option("--" + (prefix.empty() ? std::string() : prefix + "-") + "phi", phi_pi,
                    "Explicit phase phi in units of pi");
    cmd->add_option("--" + (prefix.empty() ? std::string() : prefix + "-") + "gamma-sign",
                    gamma_sign, "Sign of gamma for explicit parameters")
        ->check(CLI::IsMember({"+", "-"}));
  }

  struct Resolved {
    std::string label;
    DecayParameters params;
  };

  Resolved resolve(const Globals& g) const {
    if (alpha) {
      const GammaSign sign = gamma_sign == "-" ? GammaSign::Minus : GammaSign::Plus;
      return {"custom", params_from_alpha_phi(*alpha, phi_pi * std::numbers::pi, sign)};
    }
    const ParameterTable table = load_parameters(params_path(g));
    const ParameterRow& row = lookup(table, hyperon, channel);
    return {row.parent + " " + row.channel, row.params()};
  }
};

void add_settings(Report& report, std::vector<Value>& row, const BellSettings& settings) {
  auto add_vectors = [&](const std::vector<Vec3>& vs, const char* side) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (int c = 0; c < 3; ++c) {
        report.columns.push_back(std::string(side) + std::to_string(i + 1) + "_" + "xyz"[c]);
        row.push_back(vs[i](c));
      }
    }
  };
  add_vectors(settings.a, "a");
  add_vectors(settings.b, "b");
}

std::vector<EventRecord> load_event_file(const std::string& path) {
  if (path.empty()) throw UsageError("--events is required");
  return read_events(std::filesystem::path(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperon decays as quantum channels: tables, simulation and analysis."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output path; stdout when omitted");
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--params", g.params, "Parameter table (default: $HYPERON_PARAMS or bundled)");

  std::function<void()> action;

  // table
  auto* table_cmd = app.add_subcommand("table", "Recompute interferometric quantities per channel");
  table_cmd->callback([&] {
    action = [&] {
      const ParameterTable table = load_parameters(params_path(g));
      for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
      Report report;
      report.columns = {"parent", "quarks",   "channel",    "branching",      "alpha",  "beta",
                        "gamma",  "chi_sp_pi", "visibility", "predictability", "deduced"};
      for (const auto& r : reproduce_table(table))
        report.add({r.parent, r.quarks, r.channel, r.branching, r.params.alpha, r.params.beta,
                    r.params.gamma, r.params.tabulated_phase() / std::numbers::pi,
                    r.params.visibility, r.params.predictability,
                    static_cast<std::int64_t>(r.deduced)});
      Output out(g.out);
      emit(report, parse_format(g.format), out.stream());
      out.finish();
    };
  });

  // complementarity
  auto* comp_cmd =
      app.add_subcommand("complementarity", "Visibility and predictability of a decay");
  DecaySelection comp_decay;
  comp_decay.attach(comp_cmd, "", "Lambda");
  std::optional<double> norm_a, norm_b;
  comp_cmd->add_option("--ta-norm", norm_a, "Norm of the first amplitude operator");
  comp_cmd->add_option("--tb-norm", norm_b, "Norm of the second amplitude operator");
  comp_cmd->callback([&] {
    action = [&] {
      Report report;
      if (norm_a || norm_b) {
        if (!(norm_a && norm_b)) throw UsageError("--ta-norm and --tb-norm go together");
        const Complementarity c = complementarity_from_norms(*norm_a, *norm_b);
        report.columns = {"ta_norm", "tb_norm", "visibility", "predictability", "v2_plus_p2"};
        report.add({*norm_a, *norm_b, c.visibility, c.predictability,
                    c.visibility * c.visibility + c.predictability * c.predictability});
      } else {
        const auto d = comp_decay.resolve(g);
        const DecayParameters& p = d.params;
        report.columns = {"decay", "alpha",          "beta",      "gamma",
                          "chi_sp_pi", "visibility", "predictability", "v2_plus_p2"};
        report.add({d.label, p.alpha, p.beta, p.gamma, p.tabulated_phase() / std::numbers::pi,
                    p.visibility, p.predictability,
                    p.visibility * p.visibility + p.predictability * p.predictability});
      }
      Output out(g.out);
      emit(report, parse_format(g.format), out.stream());
      out.finish();
    };
  });

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Generate decay events");
  sim_cmd->require_subcommand(1);
  std::uint64_t events = 0;
  auto add_events = [&](CLI::App* cmd) {
    cmd->add_option("--events", events, "Number of events")->required();
  };
  auto write_simulation = [&](SampleModel model) {
    SampleConfig config;
    config.seed = g.seed;
    config.events = events;
    config.model = std::move(model);
    config.workers = g.threads;
    config.validate();
    Output out(g.out);
    EventWriter writer(out.stream());
    generate(config, [&](std::span<const EventRecord> block) { writer.write(block); });
    out.finish();
  };

  auto* sim_single = sim_cmd->add_subcommand("single", "Single polarized decays");
  DecaySelection single_decay;
  single_decay.attach(sim_single, "", "Lambda");
  std::vector<double> single_pol;
  sim_single->add_option("--pol", single_pol, "Parent polarization x,y,z")->delimiter(',');
  add_events(sim_single);
  sim_single->callback([&] {
    action = [&] {
      const Vec3 s = polarization(single_pol);
      const auto d = single_decay.resolve(g);
      write_simulation(SingleModel{d.label, d.params, s});
    };
  });

  auto* sim_pair = sim_cmd->add_subcommand("pair", "Singlet pair decays");
  double pair_k = 0.0;
  std::string pair_label = "Lambda antiLambda";
  sim_pair->add_option("--k", pair_k, "Product of the two asymmetry parameters")->required();
  sim_pair->add_option("--label", pair_label, "Channel label written to the events")
      ->capture_default_str();
  add_events(sim_pair);
  sim_pair->callback([&] {
    action = [&] {
      if (!(std::abs(pair_k) <= 1.0)) throw DomainError("|k| must not exceed 1");
      write_simulation(PairSampleModel{pair_label, pair_k});
    };
  });

  auto* sim_cascade = sim_cmd->add_subcommand("cascade", "Two-step cascade decays");
  DecaySelection first_decay, second_decay;
  first_decay.attach(sim_cascade, "first", "Xi-");
  second_decay.attach(sim_cascade, "second", "Lambda");
  std::vector<double> cascade_pol;
  sim_cascade->add_option("--pol", cascade_pol, "Parent polarization x,y,z")->delimiter(',');
  add_events(sim_cascade);
  sim_cascade->callback([&] {
    action = [&] {
      const Vec3 s = polarization(cascade_pol);
      const auto mu = first_decay.resolve(g);
      const auto nu = second_decay.resolve(g);
      write_simulation(CascadeModel{mu.label + " > " + nu.label, mu.params, nu.params, s});
    };
  });

  // analyze
  auto* an_cmd = app.add_subcommand("analyze", "Estimators on pair event files");
  an_cmd->require_subcommand(1);
  std::string event_path;

  auto* an_witness = an_cmd->add_subcommand("witness", "Entanglement witness estimate");
  an_witness->add_option("--events", event_path, "Pair event file")->required();
  an_witness->callback([&] {
    action = [&] {
      const auto pairs = collect_pairs(load_event_file(event_path));
      const Estimate w = witness_estimate(pairs);
      const double significance = w.standard_error > 0 ? -w.value / w.standard_error : 0.0;
      const bool entangled = w.value < 0 && significance >= 3.0;
      Report report;
      report.columns = {"pairs", "witness", "standard_error", "significance", "verdict"};
      report.add({static_cast<std::int64_t>(pairs.size()), w.value, w.standard_error, significance,
                  std::string(entangled ? "entangled" : "not detected")});
      Output out(g.out);
      emit(report, parse_format(g.format), out.stream());
      out.finish();
    };
  });

  auto* an_corr = an_cmd->add_subcommand("correlations", "Spin correlation matrix");
  an_corr->add_option("--events", event_path, "Pair event file")->required();
  std::optional<double> corr_k;
  bool renormalize = false;
  an_corr->add_flag("--renormalize", renormalize,
                    "Divide by the asymmetry product (not admissible for Bell tests)");
  an_corr->add_option("--k", corr_k, "Asymmetry product used by --renormalize");
  an_corr->callback([&] {
    action = [&] {
      if (renormalize && !corr_k) throw UsageError("--renormalize needs --k");
      const auto pairs = collect_pairs(load_event_file(event_path));
      const PairModel model = PairModel::from_product(corr_k.value_or(0.0));
      const CorrelationEstimate c = correlation_estimate(pairs, model, renormalize);
      Report report;
      report.columns = {"i", "j", "value", "standard_error", "bell_admissible"};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          report.add({std::string(1, "xyz"[i]), std::string(1, "xyz"[j]), c.value(i, j),
                      c.standard_error(i, j), c.bell_admissible});
      Output out(g.out);
      emit(report, parse_format(g.format), out.stream());
      out.finish();
    };
  });

  // bell
  auto* bell_cmd = app.add_subcommand("bell", "Maximize a Bell expression or find its threshold");
  std::string inequality = "I2";
  std::optional<double> bell_k;
  bool want_threshold = false;
  int starts = 32;
  bell_cmd->add_option("--inequality", inequality, "Bell expression")
      ->check(CLI::IsMember({"I2", "I3", "I4"}))
      ->capture_default_str();
  bell_cmd->add_option("--k", bell_k, "Correlation scale in [0, 1]");
  bell_cmd->add_flag("--threshold", want_threshold, "Find the smallest violating k");
  bell_cmd->add_option("--starts", starts, "Optimizer starts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bell_cmd->callback([&] {
    action = [&] {
      if (want_threshold == bell_k.has_value())
        throw UsageError("bell needs exactly one of --k or --threshold");
      const InequalitySpec spec = InequalitySpec::by_name(inequality);
      OptimizerOptions options;
      options.seed = g.seed;
      options.threads = g.threads;
      options.starts = starts;
      Report report;
      if (want_threshold) {
        report.columns = {"inequality", "threshold"};
        report.add({inequality, threshold(spec, options)});
      } else {
        const ProbModel model{*bell_k};
        model.validate();
        const BellMaximum m = maximize(spec, model, options);
        report.columns = {"inequality", "k", "max_value", "verdict"};
        std::vector<Value> row{inequality, *bell_k, m.value,
                               std::string(m.value > 0 ? "violation" : "no violation possible")};
        add_settings(report, row, m.settings);
        report.add(std::move(row));
      }
      Output out(g.out);
      emit(report, parse_format(g.format), out.stream());
      out.finish();
    };
  });

  // context
  auto* ctx_cmd = app.add_subcommand("context", "Mermin-Peres contextuality value");
  double ctx_alpha = 0.0, ctx_alphabar = 0.0;
  ctx_cmd->add_option("--alpha", ctx_alpha, "Asymmetry of the first particle")
      ->required()
      ->check(CLI::Range(-1.0, 1.0));
  ctx_cmd->add_option("--alphabar", ctx_alphabar, "Asymmetry of the second particle")
      ->required()
      ->check(CLI::Range(-1.0, 1.0));
  ctx_cmd->callback([&] {
    action = [&] {
      const double value = contextuality_value(ctx_alpha, ctx_alphabar);
      Report report;
      report.columns = {"alpha",          "alphabar",          "value",
                        "bound",          "verdict",           "square_value",
                        "equal_alpha_root", "quoted_threshold", "threshold_consistent"};
      const double root = contextuality_equal_alpha_root();
      report.add({ctx_alpha, ctx_alphabar, value, kContextualityBound,
                  std::string(value > kContextualityBound ? "contextual" : "not contextual"),
                  mermin_peres_quantum_value(ctx_alpha, ctx_alphabar), root,
                  kQuotedContextualityThreshold,
                  std::abs(root - kQuotedContextualityThreshold) < 1e-3});
      Output out(g.out);
      emit(report, parse_format(g.format), out.stream());
      out.finish();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
