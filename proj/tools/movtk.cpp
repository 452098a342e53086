#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "movtk.hpp"

using namespace movtk;
using json = nlohmann::ordered_json;

namespace {

constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;

struct RunConfig {
  std::string tournament_path;
  std::string weights_path;
  std::string solution = "uc";
  int k = 0;
  std::string alt;
  bool all = false;
  bool all_solutions = false;
  std::string format = "table";
  std::uint64_t seed = 1;
  std::uint64_t budget = std::uint64_t{1} << 24;

  // verify / gen
  int n = 0;
  bool exhaustive = false;
  int count = 100;
  int max_weight = 0;
  std::string family = "uniform";
  std::string out = "instance";
};

const std::vector<SolutionId> kDefaultSolutions{SolutionId::copeland(), SolutionId::top_cycle(),
                                                SolutionId::uncovered_set(), SolutionId::kings(3),
                                                SolutionId::banks()};

SolutionId solution_id(const RunConfig& cfg) {
  if (cfg.solution == "co") return SolutionId::copeland();
  if (cfg.solution == "tc") return SolutionId::top_cycle();
  if (cfg.solution == "uc") return SolutionId::uncovered_set();
  if (cfg.solution == "ba") return SolutionId::banks();
  if (cfg.k == 0) throw InvalidArgument("--solution kkings needs --k");
  return SolutionId::kings(cfg.k);
}

std::string number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json json_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) return static_cast<std::int64_t>(v);
  return v;
}

std::vector<int> selected_alternatives(const Tournament& t, const RunConfig& cfg) {
  if (cfg.all || cfg.alt.empty()) {
    std::vector<int> all(t.size());
    for (int i = 0; i < t.size(); ++i) all[i] = i;
    return all;
  }
  int idx = t.find_label(cfg.alt);
  if (idx < 0) {
    int parsed = -1;
    auto res = std::from_chars(cfg.alt.data(), cfg.alt.data() + cfg.alt.size(), parsed);
    if (res.ec == std::errc{} && res.ptr == cfg.alt.data() + cfg.alt.size()) idx = parsed;
  }
  if (idx < 0 || idx >= t.size()) throw InvalidArgument("unknown alternative '" + cfg.alt + "'");
  return {idx};
}

struct Instance {
  Tournament tournament;
  Weighting weights;
};

Instance load(const RunConfig& cfg) {
  Tournament t = io::load_tournament(cfg.tournament_path);
  Weighting w = cfg.weights_path.empty() ? Weighting::unit(t) : io::load_weights(cfg.weights_path, t);
  return {std::move(t), std::move(w)};
}

int cmd_solve(const RunConfig& cfg) {
  const Instance in = load(cfg);
  const SolutionId s = solution_id(cfg);
  const ChoiceSet cs = choice_set(in.tournament, s.normalized(in.tournament.size()));
  if (cfg.format == "json") {
    json j;
    j["solution"] = s.name();
    j["members"] = json::array();
    for (int v : cs.members) j["members"].push_back(in.tournament.label(v));
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < cs.members.size(); ++i)
      std::cout << (i ? " " : "") << in.tournament.label(cs.members[i]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_mov(const RunConfig& cfg) {
  const Instance in = load(cfg);
  const Tournament& t = in.tournament;
  const std::vector<SolutionId> sols = cfg.all_solutions ? kDefaultSolutions : std::vector{solution_id(cfg)};
  const bool weighted = !in.weights.is_unit();
  MovOptions opts;
  opts.search.budget = cfg.budget;

  json rows = json::array();
  bool exceeded = false;
  for (const SolutionId& s : sols) {
    for (int x : selected_alternatives(t, cfg)) {
      json row;
      row["solution"] = s.name();
      row["alternative"] = t.label(x);
      row["index"] = x;
      row["winner"] = is_winner(t, s.normalized(t.size()), x);
      try {
        const MovResult r = mov(t, in.weights, x, s, opts);
        row["value"] = json_number(r.value);
        row["witness"] = json::array();
        for (const Edge& e : r.witness.edges) row["witness"].push_back({t.label(e.from), t.label(e.to)});
        row["method"] = r.method;
        if (!weighted) {
          try {
            row["relative"] = relative_mov(t, x, s, r.value);
          } catch (const InvalidArgument&) {
            row["relative"] = nullptr;
          }
        }
        row["status"] = "ok";
      } catch (const BudgetExceeded& e) {
        exceeded = true;
        row["status"] = "budget-exceeded";
        row["error"] = e.what();
      }
      rows.push_back(row);
    }
  }

  if (cfg.format == "json") {
    json j;
    j["n"] = t.size();
    j["weighted"] = weighted;
    j["results"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const json& row : rows) {
      if (cfg.all_solutions) std::cout << row["solution"].get<std::string>() << "\t";
      std::cout << row["alternative"].get<std::string>() << "\t";
      if (row["status"] != "ok") {
        std::cout << "budget-exceeded\n";
        continue;
      }
      std::cout << number(row["value"].get<double>()) << "\t";
      if (row.contains("relative"))
        std::cout << (row["relative"].is_null() ? "-" : number(std::round(row["relative"].get<double>() * 1e4) / 1e4))
                  << "\t";
      std::cout << row["method"].get<std::string>() << "\t";
      std::string wit;
      for (const json& e : row["witness"])
        wit += (wit.empty() ? "" : " ") + ("(" + e[0].get<std::string>() + "," + e[1].get<std::string>() + ")");
      std::cout << (wit.empty() ? "-" : wit) << "\n";
    }
  }
  return exceeded ? kBudgetExceeded : 0;
}

int cmd_count(const RunConfig& cfg) {
  const Instance in = load(cfg);
  const Tournament& t = in.tournament;
  const SolutionId s = solution_id(cfg);
  json rows = json::array();
  for (int x : selected_alternatives(t, cfg)) {
    const OracleReport rep = brute_force_mov(t, in.weights, x, s, cfg.budget);
    json row;
    row["alternative"] = t.label(x);
    row["winner"] = rep.winner;
    row["mov"] = json_number(rep.mov);
    row["count"] = rep.count;
    row["sets"] = json::array();
    for (const ReversalSet& r : rep.all_min_witnesses) {
      json set = json::array();
      for (const Edge& e : r.edges) set.push_back({t.label(e.from), t.label(e.to)});
      row["sets"].push_back(set);
    }
    rows.push_back(row);
  }
  if (cfg.format == "json") {
    json j;
    j["solution"] = s.name();
    j["results"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const json& row : rows)
      std::cout << row["alternative"].get<std::string>() << ":" << row["count"].get<std::size_t>() << "\t"
                << (row["winner"].get<bool>() ? "winner" : "non-winner") << "\tmov "
                << number(row["mov"].get<double>()) << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 7) throw InvalidArgument("--n must be between 2 and 7");
  std::vector<SolutionId> sols;
  if (cfg.solution == "all") {
    sols = kDefaultSolutions;
  } else {
    sols = {solution_id(cfg)};
  }
  SearchOptions opts;
  opts.budget = cfg.budget;
  VerifyReport rep;
  if (cfg.exhaustive) {
    if (cfg.max_weight > 0) throw InvalidArgument("--exhaustive runs unweighted; drop --max-weight");
    if (cfg.n > 5) throw InvalidArgument("--exhaustive supports n <= 5");
    rep = verify_exhaustive(cfg.n, sols, opts);
  } else {
    std::optional<WeightRange> range;
    if (cfg.max_weight > 0) range = WeightRange{1, cfg.max_weight};
    rep = verify_random(cfg.n, cfg.count, cfg.seed, sols, range, opts);
  }
  if (cfg.format == "json") {
    json j;
    j["ok"] = rep.ok();
    j["tournaments"] = rep.tournaments;
    j["checks"] = rep.checks;
    j["failures"] = json::array();
    for (const CheckFailure& f : rep.failures)
      j["failures"].push_back({{"algorithm", f.algorithm}, {"solution", f.solution}, {"alternative", f.alternative},
                               {"expected", f.expected}, {"got", f.got}, {"reason", f.reason},
                               {"tournament", f.tournament}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.summary() << "\n";
    for (const CheckFailure& f : rep.failures)
      std::cout << "  " << f.algorithm << " " << f.solution << " alternative " << f.alternative << ": expected "
                << number(f.expected) << ", got " << number(f.got) << " (" << f.reason << ")\n"
                << f.tournament;
  }
  return rep.ok() ? 0 : 1;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

int cmd_gen(const RunConfig& cfg) {
  std::optional<TightInstance> inst;
  if (cfg.family == "uniform") {
    if (cfg.n < 1) throw InvalidArgument("--n must be at least 1");
    inst = TightInstance{generate_uniform(cfg.n, cfg.seed), -1};
  } else if (cfg.family == "tight-destructive") {
    inst = generate_tight_destructive(cfg.n);
  } else if (cfg.family == "tight-co-constructive") {
    inst = generate_tight_co_constructive(cfg.n);
  } else {
    throw InvalidArgument("unknown family '" + cfg.family + "'");
  }
  const Tournament& t = inst->tournament;
  write_file(cfg.out + ".trn", io::serialize(t));
  write_file(cfg.out + ".wts", io::serialize(Weighting::unit(t)));
  std::cout << "wrote " << cfg.out << ".trn and " << cfg.out << ".wts";
  if (inst->x >= 0) std::cout << " (distinguished alternative " << t.label(inst->x) << ")";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournament solutions and margins of victory"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_solution = [&](CLI::App* sub) {
    sub->add_option("--solution", cfg.solution, "Tournament solution")
        ->check(CLI::IsMember({"co", "tc", "uc", "kkings", "ba"}));
    sub->add_option("--k", cfg.k, "Path-length bound for --solution kkings");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("tournament", cfg.tournament_path, "Tournament file (.trn)")->required();
    sub->add_option("--weights", cfg.weights_path, "Edge weights file (.wts)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_selector = [&](CLI::App* sub) {
    auto* alt = sub->add_option("--alt", cfg.alt, "Alternative by label or index");
    auto* all = sub->add_flag("--all", cfg.all, "Every alternative (default)");
    alt->excludes(all);
  };

  CLI::App* solve = app.add_subcommand("solve", "Print the choice set");
  add_input(solve);
  add_solution(solve);
  add_format(solve);

  CLI::App* movc = app.add_subcommand("mov", "Margin of victory with witness reversal sets");
  add_input(movc);
  add_solution(movc);
  add_selector(movc);
  add_format(movc);
  movc->add_flag("--all-solutions", cfg.all_solutions, "CO, TC, UC, 3-kings and BA in turn")
      ->excludes(movc->get_option("--solution"));
  movc->add_option("--budget", cfg.budget, "Reversal sets an exact search may examine");

  CLI::App* count = app.add_subcommand("count", "Count minimum reversal sets by enumeration");
  add_input(count);
  add_solution(count);
  add_selector(count);
  add_format(count);
  count->add_option("--budget", cfg.budget, "Subsets the enumeration may examine");

  CLI::App* verify = app.add_subcommand("verify", "Cross-check every algorithm against enumeration");
  verify->add_option("--n", cfg.n, "Number of alternatives")->required();
  verify->add_option("--solution", cfg.solution, "Tournament solution, or all")
      ->check(CLI::IsMember({"co", "tc", "uc", "kkings", "ba", "all"}));
  verify->add_option("--k", cfg.k, "Path-length bound for --solution kkings");
  verify->add_flag("--exhaustive", cfg.exhaustive, "All labelled tournaments on n alternatives");
  verify->add_option("--count", cfg.count, "Random tournaments to check");
  verify->add_option("--seed", cfg.seed, "Seed of the first random tournament");
  verify->add_option("--max-weight", cfg.max_weight, "Random integer weights in 1..W (0: unweighted)");
  verify->add_option("--budget", cfg.budget, "Subsets the enumeration may examine");
  add_format(verify);

  CLI::App* gen = app.add_subcommand("gen", "Write an instance (.trn and a unit .wts)");
  gen->add_option("--family", cfg.family, "Instance family")
      ->check(CLI::IsMember({"uniform", "tight-destructive", "tight-co-constructive"}));
  gen->add_option("--n", cfg.n, "Number of alternatives")->required();
  gen->add_option("--seed", cfg.seed, "Seed for --family uniform");
  gen->add_option("--out", cfg.out, "Output path prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve) return cmd_solve(cfg);
    if (*movc) return cmd_mov(cfg);
    if (*count) return cmd_count(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*gen) return cmd_gen(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
