#pragma once

// Command-line front end. Everything routes through run(), which parses an
// argument vector and writes to the supplied streams, so the whole surface
// is testable in-process. Subcommands:
//
//   prob X Y                      P(x -> y), critical set, admissibility
//   region2 X Y                   the set S of useful 2-d catalyst ratios
//   exists X Y                    catalyst existence (any dimension, and 2-d)
//   construct X Y [--theta R] [--alpha R]
//   verify X Y C [--mode ...]     direct evaluation of one catalyst
//   sweep {grid|random} [X Y] [--resolution N] [--pairs N] [--dmax N]
//         [--seed S] [--csv PATH] [--mode ...]
//
// Vector literals are comma-separated decimals or fractions ("0.6,0.2,1/5").
// Exit codes: 0 success, 1 negative mathematical answer (empty region, no
// catalyst, catalyst not useful), 2 input error, 3 internal consistency
// violation (oracle and theorem disagree).

#include "entcat/catalyst2d.hpp"
#include "entcat/catalystnd.hpp"
#include "entcat/oracle.hpp"
#include "entcat/probvec.hpp"
#include "entcat/rational.hpp"
#include "entcat/vidal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace entcat::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_mismatch = 3;

struct run_config {
  bool exact = true;
  bool json = false;
  bool strict = false;
  std::uint64_t seed = 0;
  Rat theta = Rat(1, 1000);
  unsigned resolution = 50;
  unsigned dmax = 4;
  unsigned pairs = 20;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

/// Parses a vector literal; a sum other than 1 is renormalized with a
/// warning unless strict mode rejects it.
inline ProbVec read_vector(const std::string& literal, const std::string& name,
                           bool strict, std::ostream& err) {
  std::vector<Rat> entries;
  try {
    entries = parse_vector_literal(literal);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(name + ": " + e.what());
  }
  Rat sum = 0;
  for (const Rat& e : entries) sum += e;
  try {
    if (sum == 1) return ProbVec::from_components(std::move(entries), false);
    if (strict)
      throw std::invalid_argument("components must sum to exactly 1 (got " +
                                  to_fraction_string(sum) + ")");
    err << "warning: " << name << " sums to " << to_fraction_string(sum)
        << "; renormalizing\n";
    return ProbVec::from_components(std::move(entries), true);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(name + ": " + e.what());
  }
}

inline std::string fraction_list(const ProbVec& v) {
  std::string s = "(";
  for (std::size_t i = 1; i <= v.dimension(); ++i) {
    if (i > 1) s += ", ";
    s += to_fraction_string(v.component(i));
  }
  return s + ")";
}

inline std::string decimal_list(const ProbVec& v) {
  std::string s = "(";
  for (std::size_t i = 1; i <= v.dimension(); ++i) {
    if (i > 1) s += ", ";
    s += to_decimal_string(v.component(i));
  }
  return s + ")";
}

inline std::string prob_line(const Rat& p) {
  return to_fraction_string(p) + " (" + to_decimal_string(p) + ")";
}

inline std::string double_str(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

inline ordered_json vec_json(const ProbVec& v) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 1; i <= v.dimension(); ++i)
    a.push_back(to_fraction_string(v.component(i)));
  return a;
}

inline ordered_json rat_json(const Rat& r) {
  return ordered_json{{"fraction", to_fraction_string(r)},
                      {"decimal", to_decimal_string(r)}};
}

inline ordered_json region_json(const RatioRegion& region) {
  ordered_json a = ordered_json::array();
  for (const auto& iv : region.intervals())
    a.push_back(ordered_json::array({to_fraction_string(iv.lo), to_fraction_string(iv.hi)}));
  return a;
}

/// t = c2/c1 in (lo, hi) corresponds to c1 in (1/(1+hi), 1/(1+lo)).
inline std::vector<ratio_interval<Rat>> c1_intervals(const RatioRegion& region) {
  std::vector<ratio_interval<Rat>> out;
  out.reserve(region.intervals().size());
  for (const auto& iv : region.intervals())
    out.push_back({Rat(1) / (1 + iv.hi), Rat(1) / (1 + iv.lo)});
  return out;
}

inline std::string interval_list(const std::vector<ratio_interval<Rat>>& intervals) {
  if (intervals.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i > 0) s += " u ";
    s += "(" + to_fraction_string(intervals[i].lo) + ", " +
         to_fraction_string(intervals[i].hi) + ")";
  }
  return s;
}

inline void emit_json(const ordered_json& doc, std::ostream& out) {
  out << doc.dump(2) << "\n";
}

inline basic_prob_vec<double> to_double_vec(const ProbVec& v) {
  std::vector<double> comps;
  comps.reserve(v.dimension());
  for (const Rat& r : v) comps.push_back(scalar_traits<double>::from_rat(r));
  return basic_prob_vec<double>::from_sorted_unchecked(std::move(comps));
}

inline int cmd_prob(const ProbVec& x, const ProbVec& y, const run_config& cfg,
                    std::ostream& out) {
  const TransformPair pair = TransformPair::make(x, y);
  const CriticalSet critical = critical_set(pair);
  const bool admissible = catalysis_admissible(pair);
  if (cfg.json) {
    ordered_json doc{{"command", "prob"},
                     {"x", vec_json(pair.x())},
                     {"y", vec_json(pair.y())},
                     {"n", pair.dimension()},
                     {"p", rat_json(pair.max_probability())},
                     {"critical_set", critical},
                     {"admissible", admissible}};
    emit_json(doc, out);
  } else {
    out << "x = " << fraction_list(pair.x()) << "\n";
    out << "y = " << fraction_list(pair.y()) << "\n";
    out << "n = " << pair.dimension() << "\n";
    out << "P(x -> y) = " << prob_line(pair.max_probability()) << "\n";
    out << "critical set L = {";
    for (std::size_t i = 0; i < critical.size(); ++i)
      out << (i ? ", " : "") << critical[i];
    out << "}\n";
    out << "admissible for catalysis: " << (admissible ? "yes" : "no") << "\n";
  }
  return exit_ok;
}

inline int cmd_region2(const ProbVec& x, const ProbVec& y, const run_config& cfg,
                       std::ostream& out) {
  const TransformPair pair = TransformPair::make(x, y);
  const RatioRegion region = region2(pair);
  const auto c1 = c1_intervals(region);
  if (cfg.json) {
    ordered_json doc{{"command", "region2"},
                     {"p", rat_json(pair.max_probability())},
                     {"admissible", catalysis_admissible(pair)},
                     {"region", region_json(region)},
                     {"c1_region", ordered_json::array()},
                     {"empty", region.empty()}};
    for (const auto& iv : c1)
      doc["c1_region"].push_back(
          ordered_json::array({to_fraction_string(iv.lo), to_fraction_string(iv.hi)}));
    emit_json(doc, out);
  } else {
    out << "P(x -> y) = " << prob_line(pair.max_probability()) << "\n";
    out << "useful 2-d catalyst ratios t = c2/c1: "
        << interval_list(region.intervals()) << "\n";
    if (!region.empty()) out << "equivalent c1 ranges: " << interval_list(c1) << "\n";
  }
  return region.empty() ? exit_negative : exit_ok;
}

inline int cmd_exists(const ProbVec& x, const ProbVec& y, const run_config& cfg,
                      std::ostream& out) {
  const TransformPair pair = TransformPair::make(x, y);
  const bool any = exists_catalyst(pair);
  const bool two = exists_2d(pair);
  if (cfg.json) {
    ordered_json doc{{"command", "exists"},
                     {"p", rat_json(pair.max_probability())},
                     {"admissible", catalysis_admissible(pair)},
                     {"exists_catalyst", any},
                     {"exists_2d", two}};
    emit_json(doc, out);
  } else {
    out << "P(x -> y) = " << prob_line(pair.max_probability()) << "\n";
    out << "useful catalyst exists: " << (any ? "yes" : "no") << "\n";
    out << "useful 2-d catalyst exists: " << (two ? "yes" : "no") << "\n";
  }
  return any ? exit_ok : exit_negative;
}

inline int cmd_construct(const ProbVec& x, const ProbVec& y,
                         const std::optional<Rat>& alpha_override, const run_config& cfg,
                         std::ostream& out) {
  const TransformPair pair = TransformPair::make(x, y);
  if (!exists_catalyst(pair)) {
    const Rat& xn = pair.x().component(pair.dimension());
    const Rat& yn = pair.y().component(pair.dimension());
    out << "no useful catalyst exists: P(x -> y) = "
        << prob_line(pair.max_probability())
        << " does not satisfy P < min{x_n/y_n, 1}"
        << " (x_n = " << to_fraction_string(xn)
        << ", y_n = " << to_fraction_string(yn) << ")\n";
    return exit_negative;
  }
  const construction_trace trace = construct_catalyst(pair, cfg.theta, alpha_override);
  if (cfg.json) {
    ordered_json doc{
        {"command", "construct"},
        {"p_before", rat_json(trace.p_before)},
        {"h", trace.h},
        {"bound_tail", to_fraction_string(trace.bound_tail)},
        {"bound_h_over", trace.bound_h_over
                             ? ordered_json(to_fraction_string(*trace.bound_h_over))
                             : ordered_json(nullptr)},
        {"bound_h_under", to_fraction_string(trace.bound_h_under)},
        {"branch", trace.p_exceeds_h_ratio ? "over" : "under"},
        {"alpha_min", to_fraction_string(trace.alpha_min)},
        {"alpha", to_fraction_string(trace.alpha)},
        {"k", trace.k},
        {"catalyst", vec_json(trace.catalyst)},
        {"p_after", rat_json(trace.p_after)}};
    emit_json(doc, out);
  } else {
    out << "P(x -> y) = " << prob_line(trace.p_before) << "\n";
    out << "h = " << trace.h << "\n";
    out << "alpha bounds: tail " << to_fraction_string(trace.bound_tail) << ", h-branch "
        << to_fraction_string(trace.p_exceeds_h_ratio ? *trace.bound_h_over
                                                      : trace.bound_h_under)
        << "\n";
    out << "alpha_min = " << to_fraction_string(trace.alpha_min) << "\n";
    out << "alpha = " << to_fraction_string(trace.alpha) << " ("
        << to_decimal_string(trace.alpha) << ")\n";
    out << "k = " << trace.k << "\n";
    out << "catalyst = " << fraction_list(trace.catalyst) << "\n";
    out << "         ~= " << decimal_list(trace.catalyst) << "\n";
    out << "catalyzed P = " << prob_line(trace.p_after) << "\n";
  }
  return exit_ok;
}

inline int cmd_verify(const ProbVec& x, const ProbVec& y, const ProbVec& c,
                      const run_config& cfg, std::ostream& out) {
  if (cfg.exact) {
    const TransformPair pair = TransformPair::make(x, y);
    const CatalystReport report = verify_useful(pair, c);
    if (cfg.json) {
      ordered_json doc{{"command", "verify"},
                       {"catalyst", vec_json(report.catalyst)},
                       {"p_before", rat_json(report.p_before)},
                       {"p_after", rat_json(report.p_after)},
                       {"useful", report.useful},
                       {"witness_index", report.witness_index
                                             ? ordered_json(*report.witness_index)
                                             : ordered_json(nullptr)}};
      emit_json(doc, out);
    } else {
      out << "P(x -> y) = " << prob_line(report.p_before) << "\n";
      out << "catalyst = " << fraction_list(report.catalyst) << "\n";
      out << "catalyzed P = " << prob_line(report.p_after) << "\n";
      out << "useful: " << (report.useful ? "yes" : "no") << "\n";
    }
    return report.useful ? exit_ok : exit_negative;
  }
  const auto pair = basic_transform_pair<double>::make(to_double_vec(x), to_double_vec(y));
  const auto report = verify_useful(pair, to_double_vec(c));
  if (cfg.json) {
    ordered_json doc{{"command", "verify"},
                     {"p_before", double_str(report.p_before)},
                     {"p_after", double_str(report.p_after)},
                     {"useful", report.useful}};
    emit_json(doc, out);
  } else {
    out << "P(x -> y) = " << double_str(report.p_before) << "\n";
    out << "catalyzed P = " << double_str(report.p_after) << "\n";
    out << "useful: " << (report.useful ? "yes" : "no") << "\n";
  }
  return report.useful ? exit_ok : exit_negative;
}

struct sweep_row {
  std::string pair_id;
  std::string catalyst;
  std::string p_before;
  std::string p_after;
  bool useful_oracle = false;
  bool useful_theorem = false;
  bool agree = false;
};

template <class S>
void append_grid_rows(const basic_transform_pair<S>& pair, const std::string& pair_id,
                      unsigned resolution, std::vector<sweep_row>& rows) {
  using traits = scalar_traits<S>;
  for (unsigned i = 1; i < resolution; ++i) {
    const S t = traits::from_fraction(static_cast<long>(i), static_cast<long>(resolution));
    const S c1 = S{1} / (S{1} + t);
    const auto c = basic_prob_vec<S>::from_sorted_unchecked({c1, t * c1});
    const auto report = verify_useful(pair, c);
    const bool theorem = is_useful_2d(pair, c);
    sweep_row row;
    row.pair_id = pair_id;
    if constexpr (traits::is_exact) {
      row.catalyst = to_fraction_string(c.component(1)) + ";" +
                     to_fraction_string(c.component(2));
      row.p_before = to_fraction_string(report.p_before);
      row.p_after = to_fraction_string(report.p_after);
    } else {
      row.catalyst = double_str(c.component(1)) + ";" + double_str(c.component(2));
      row.p_before = double_str(report.p_before);
      row.p_after = double_str(report.p_after);
    }
    row.useful_oracle = report.useful;
    row.useful_theorem = theorem;
    row.agree = report.useful == theorem;
    rows.push_back(std::move(row));
  }
}

inline void write_csv(const std::vector<sweep_row>& rows, std::ostream& os) {
  os << "pair_id,catalyst,p_before,p_after,useful_oracle,useful_theorem,agree\n";
  for (const auto& r : rows)
    os << r.pair_id << ',' << r.catalyst << ',' << r.p_before << ',' << r.p_after << ','
       << (r.useful_oracle ? "true" : "false") << ','
       << (r.useful_theorem ? "true" : "false") << ',' << (r.agree ? "true" : "false")
       << "\n";
}

/// Cross-check of the existence verdict for one random pair: a constructed
/// catalyst when one must exist, otherwise a bounded search that must come
/// back empty. Exact mode only.
inline sweep_row existence_row(const TransformPair& pair, const std::string& pair_id,
                               const run_config& cfg) {
  sweep_row row;
  row.pair_id = pair_id;
  row.p_before = to_fraction_string(pair.max_probability());
  if (exists_catalyst(pair)) {
    const construction_trace trace = construct_catalyst(pair, cfg.theta);
    std::string c;
    for (std::size_t i = 1; i <= trace.catalyst.dimension(); ++i) {
      if (i > 1) c += ';';
      c += to_fraction_string(trace.catalyst.component(i));
    }
    row.catalyst = c;
    row.p_after = to_fraction_string(trace.p_after);
    row.useful_oracle = trace.p_after > trace.p_before;
    row.useful_theorem = true;
  } else {
    const auto found = search_catalyst(pair, cfg.dmax, cfg.resolution);
    if (found) {
      std::string c;
      for (std::size_t i = 1; i <= found->catalyst.dimension(); ++i) {
        if (i > 1) c += ';';
        c += to_fraction_string(found->catalyst.component(i));
      }
      row.catalyst = c;
      row.p_after = to_fraction_string(found->p_after);
      row.useful_oracle = true;
    } else {
      row.catalyst = "none";
      row.p_after = row.p_before;
      row.useful_oracle = false;
    }
    row.useful_theorem = false;
  }
  row.agree = row.useful_oracle == row.useful_theorem;
  return row;
}

inline int cmd_sweep(const std::string& source, const std::optional<ProbVec>& x,
                     const std::optional<ProbVec>& y, const std::string& csv_path,
                     const run_config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<sweep_row> rows;
  if (source == "grid") {
    if (!x || !y) throw std::invalid_argument("sweep grid needs the vectors X and Y");
    if (cfg.exact) {
      append_grid_rows(TransformPair::make(*x, *y), "0", cfg.resolution, rows);
    } else {
      append_grid_rows(
          basic_transform_pair<double>::make(to_double_vec(*x), to_double_vec(*y)), "0",
          cfg.resolution, rows);
    }
  } else {  // random campaign over seeded pairs, dimensions cycling 3,4,5
    std::mt19937_64 rng(cfg.seed);
    for (unsigned i = 0; i < cfg.pairs; ++i) {
      const std::size_t n = 3 + i % 3;
      const TransformPair pair = random_pair(rng, n);
      if (cfg.exact) {
        append_grid_rows(pair, std::to_string(i), cfg.resolution, rows);
        rows.push_back(existence_row(pair, std::to_string(i), cfg));
      } else {
        append_grid_rows(basic_transform_pair<double>::make(to_double_vec(pair.x()),
                                                            to_double_vec(pair.y())),
                         std::to_string(i), cfg.resolution, rows);
      }
    }
  }

  std::size_t disagreements = 0;
  for (const auto& r : rows)
    if (!r.agree) ++disagreements;

  if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) throw std::invalid_argument("cannot open CSV output file " + csv_path);
    write_csv(rows, file);
  }
  if (cfg.json) {
    ordered_json doc{{"command", "sweep"},
                     {"source", source},
                     {"mode", cfg.exact ? "exact" : "float"},
                     {"resolution", cfg.resolution},
                     {"seed", cfg.seed},
                     {"rows", ordered_json::array()},
                     {"disagreements", disagreements}};
    for (const auto& r : rows)
      doc["rows"].push_back(ordered_json{{"pair_id", r.pair_id},
                                         {"catalyst", r.catalyst},
                                         {"p_before", r.p_before},
                                         {"p_after", r.p_after},
                                         {"useful_oracle", r.useful_oracle},
                                         {"useful_theorem", r.useful_theorem},
                                         {"agree", r.agree}});
    emit_json(doc, out);
  } else if (csv_path.empty()) {
    write_csv(rows, out);
  } else {
    out << rows.size() << " rows written to " << csv_path << "\n";
  }
  if (disagreements > 0) {
    err << "error: oracle and theorem disagree on " << disagreements
        << " sample(s); this indicates a defect\n";
    return exit_mismatch;
  }
  return exit_ok;
}

}  // namespace detail

/// Parses and runs one invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"catalysis analysis for probabilistic entanglement transformations",
               "entcat"};
  app.require_subcommand(1);

  run_config cfg;
  std::string x_lit, y_lit, c_lit;
  std::string theta_lit, alpha_lit;
  std::string mode = "exact";
  std::string csv_path;
  std::string sweep_source;

  const std::string vec_help = "vector literal: comma-separated decimals or fractions";

  auto add_strict = [&](CLI::App* cmd) {
    cmd->add_flag("--strict", cfg.strict, "reject vectors whose sum is not exactly 1");
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", cfg.json, "structured output with fixed keys");
  };

  CLI::App* prob = app.add_subcommand("prob", "maximal transformation probability");
  prob->add_option("X", x_lit, vec_help)->required();
  prob->add_option("Y", y_lit, vec_help)->required();
  add_json(prob);
  add_strict(prob);

  CLI::App* region = app.add_subcommand("region2", "useful 2-d catalyst ratio region");
  region->add_option("X", x_lit, vec_help)->required();
  region->add_option("Y", y_lit, vec_help)->required();
  add_json(region);
  add_strict(region);

  CLI::App* exists = app.add_subcommand("exists", "does a useful catalyst exist");
  exists->add_option("X", x_lit, vec_help)->required();
  exists->add_option("Y", y_lit, vec_help)->required();
  add_json(exists);
  add_strict(exists);

  CLI::App* construct = app.add_subcommand("construct", "build a useful catalyst");
  construct->add_option("X", x_lit, vec_help)->required();
  construct->add_option("Y", y_lit, vec_help)->required();
  construct->add_option("--theta", theta_lit,
                        "position of alpha inside its open interval (default 1/1000)");
  construct->add_option("--alpha", alpha_lit, "exact alpha override");
  add_json(construct);
  add_strict(construct);

  CLI::App* verify = app.add_subcommand("verify", "evaluate one catalyst directly");
  verify->add_option("X", x_lit, vec_help)->required();
  verify->add_option("Y", y_lit, vec_help)->required();
  verify->add_option("C", c_lit, vec_help)->required();
  verify->add_option("--mode", mode, "arithmetic backend: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  add_json(verify);
  add_strict(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "scan catalyst grids, cross-checking "
                                                "oracle against theorem");
  sweep->add_option("source", sweep_source, "grid (one pair) or random (seeded pairs)")
      ->required()
      ->check(CLI::IsMember({"grid", "random"}));
  sweep->add_option("X", x_lit, vec_help);
  sweep->add_option("Y", y_lit, vec_help);
  sweep->add_option("--resolution", cfg.resolution, "ratio grid resolution (default 50)");
  sweep->add_option("--pairs", cfg.pairs, "number of random pairs (default 20)");
  sweep->add_option("--dmax", cfg.dmax,
                    "catalyst dimension limit for the existence cross-check rows of "
                    "random campaigns (default 4)");
  sweep->add_option("--seed", cfg.seed, "64-bit seed; same seed, same samples");
  sweep->add_option("--csv", csv_path, "write rows to this file instead of stdout");
  sweep->add_option("--mode", mode, "arithmetic backend: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  add_json(sweep);
  add_strict(sweep);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  cfg.exact = mode == "exact";

  try {
    auto vec = [&](const std::string& lit, const std::string& name) {
      return detail::read_vector(lit, name, cfg.strict, err);
    };
    if (prob->parsed()) return detail::cmd_prob(vec(x_lit, "x"), vec(y_lit, "y"), cfg, out);
    if (region->parsed())
      return detail::cmd_region2(vec(x_lit, "x"), vec(y_lit, "y"), cfg, out);
    if (exists->parsed())
      return detail::cmd_exists(vec(x_lit, "x"), vec(y_lit, "y"), cfg, out);
    if (construct->parsed()) {
      if (!theta_lit.empty()) {
        cfg.theta = parse_rational(theta_lit);
        if (cfg.theta <= 0 || cfg.theta >= 1)
          throw std::invalid_argument("theta must lie strictly between 0 and 1");
      }
      std::optional<Rat> alpha_override;
      if (!alpha_lit.empty()) alpha_override = parse_rational(alpha_lit);
      return detail::cmd_construct(vec(x_lit, "x"), vec(y_lit, "y"), alpha_override, cfg,
                                   out);
    }
    if (verify->parsed())
      return detail::cmd_verify(vec(x_lit, "x"), vec(y_lit, "y"), vec(c_lit, "c"), cfg,
                                out);
    if (sweep->parsed()) {
      std::optional<ProbVec> x, y;
      if (!x_lit.empty()) x = vec(x_lit, "x");
      if (!y_lit.empty()) y = vec(y_lit, "y");
      return detail::cmd_sweep(sweep_source, x, y, csv_path, cfg, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_input;
}

}  // namespace entcat::cli
