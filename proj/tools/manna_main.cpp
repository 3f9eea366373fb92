#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "manna/algorithms.hpp"
#include "manna/envy_graph.hpp"
#include "manna/generator.hpp"
#include "manna/json_io.hpp"
#include "manna/oracle.hpp"

namespace {

using manna::Errc;
using manna::Error;

// Stable exit-code contract: 0 ok, 1 parse/input, 2 inapplicable or violated
// precondition, 3 violated guarantee or failed verification, 4 budget.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::Parse:
      return 1;
    case Errc::PreconditionViolated:
    case Errc::NoApplicableAlgorithm:
    case Errc::AllAgentsInactive:
    case Errc::NotionInapplicable:
      return 2;
    case Errc::GuaranteeViolated:
      return 3;
    case Errc::BudgetExceeded:
      return 4;
    default:
      return 1;
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) manna::fail(Errc::Parse, "cannot write " + path);
  out << text;
}

std::vector<manna::FairnessNotion> parse_notion_list(const std::string& list) {
  std::vector<manna::FairnessNotion> notions;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string token = list.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!token.empty()) {
      auto notion = manna::parse_notion(token);
      if (!notion) manna::fail(Errc::Parse, "unknown notion \"" + token + "\"");
      notions.push_back(*notion);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return notions;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  std::size_t sep = text.find("..");
  if (sep == std::string::npos) {
    manna::fail(Errc::Parse, "value range must look like LO..HI, got \"" + text + "\"");
  }
  return {manna::Rational::parse(text.substr(0, sep)).num(),
          manna::Rational::parse(text.substr(sep + 2)).num()};
}

nlohmann::json trace_to_json(const manna::SolveResult& result, const manna::NamedInstance& named) {
  auto arr = nlohmann::json::array();
  for (const auto& step : result.trace) {
    nlohmann::json entry;
    entry["step"] = step.step;
    entry["rule"] = step.rule;
    if (step.item >= 0) entry["item"] = named.item_name(step.item);
    if (step.agent >= 0) entry["agent"] = named.agent_name(step.agent);
    if (!step.cycle.empty()) {
      auto cycle = nlohmann::json::array();
      for (int a : step.cycle) cycle.push_back(named.agent_name(a));
      entry["cycle"] = std::move(cycle);
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

int cmd_solve(const std::string& instance_path, const std::string& algorithm, bool verify,
              const std::string& report_path, long long budget, const std::string& dot_path) {
  manna::NamedInstance named = manna::load_instance_file(instance_path);
  auto algo = manna::parse_algorithm(algorithm);
  if (!algo) manna::fail(Errc::Parse, "unknown algorithm \"" + algorithm + "\"");

  manna::SolveResult result = manna::solve(named.inst, *algo);

  nlohmann::json report;
  report["algorithm"] = manna::algorithm_name(result.algorithm);
  report["class"] = manna::class_to_json(manna::classify(named.inst));
  report["allocation"] = manna::allocation_to_json(result.allocation, named);

  nlohmann::json guarantees;
  bool claims_po = false;
  for (manna::Guarantee g : result.guarantees) {
    // solve() already re-checked every claim it prints here.
    guarantees[manna::guarantee_name(g)] = {{"holds", true},
                                            {"witnesses", nlohmann::json::array()}};
    if (g == manna::Guarantee::Po) claims_po = true;
  }

  if (verify && claims_po) {
    manna::Instance sub = manna::row_subinstance(named.inst, result.active_agents);
    manna::Allocation sub_alloc(sub.agents(), named.inst.items());
    for (int si = 0; si < int(result.active_agents.size()); ++si) {
      for (int item : result.allocation.bundle(result.active_agents[si])) {
        sub_alloc.assign(item, si);
      }
    }
    manna::OracleBudget ob{budget};
    if (manna::allocation_count(sub, ob)) {
      bool po = manna::is_pareto_optimal_exact(sub, sub_alloc, ob);
      guarantees["PO_EXACT"] = {{"holds", po}, {"witnesses", nlohmann::json::array()}};
      if (!po) {
        manna::fail(Errc::GuaranteeViolated, "oracle found a Pareto-dominating allocation");
      }
    } else {
      std::cerr << "note: exact-PO check skipped, " << sub.agents() << "^" << sub.items()
                << " allocations exceed budget " << budget << "\n";
    }
  }
  report["guarantees"] = std::move(guarantees);

  manna::Rational sw = manna::social_welfare(named.inst, result.allocation);
  manna::NashSignature nw = manna::nash_welfare_signature(named.inst, result.allocation);
  report["welfare"] = {{"sw", sw.str()},
                       {"nw_product", nw.product_str()},
                       {"nw_nonpositive", nw.nonpositive}};

  auto active = nlohmann::json::array();
  for (int a : result.active_agents) active.push_back(named.agent_name(a));
  report["active_agents"] = std::move(active);
  report["trace"] = trace_to_json(result, named);

  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!report_path.empty()) write_text(report_path, text);
  if (!dot_path.empty()) {
    write_text(dot_path,
               manna::to_dot(manna::build_envy_graph(named.inst, result.allocation,
                                                     manna::EnvyMode::Plain)));
  }
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& allocation_path,
               const std::string& notion_list, bool exact_po, long long budget) {
  manna::NamedInstance named = manna::load_instance_file(instance_path);
  manna::Allocation alloc = manna::load_allocation_file(allocation_path, named);
  if (!alloc.complete()) {
    manna::fail(Errc::Parse, "allocation must cover every item");
  }
  std::vector<manna::FairnessNotion> notions = parse_notion_list(notion_list);
  if (exact_po) notions.push_back(manna::FairnessNotion::PO_EXACT);

  bool all_hold = true;
  nlohmann::json out;
  for (manna::FairnessNotion notion : notions) {
    manna::FairnessReport rep =
        manna::evaluate_notion(named.inst, alloc, notion, manna::OracleBudget{budget});
    all_hold = all_hold && rep.holds;
    out[manna::notion_name(notion)] = {
        {"holds", rep.holds}, {"witnesses", manna::witnesses_to_json(rep.witnesses, named)}};
  }
  std::cout << nlohmann::json{{"notions", out}, {"all_hold", all_hold}}.dump(2) << "\n";
  return all_hold ? 0 : 3;
}

int cmd_oracle(const std::string& instance_path, const std::string& exists_list, bool mnw,
               long long budget) {
  manna::NamedInstance named = manna::load_instance_file(instance_path);
  manna::OracleBudget ob{budget};
  if (!exists_list.empty()) {
    manna::PredicateSet preds{parse_notion_list(exists_list)};
    auto count = manna::allocation_count(named.inst, ob);
    if (!count) {
      manna::fail(Errc::BudgetExceeded, "instance exceeds the enumeration budget");
    }
    auto witness = manna::exists_allocation(named.inst, preds, ob);
    if (witness) {
      nlohmann::json j;
      j["exists"] = true;
      j["searched"] = *count;
      j["witness"] = manna::allocation_to_json(*witness, named);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "NONE (exhaustive over " << *count << " allocations)\n";
    }
  }
  if (mnw) {
    manna::MnwResult result = manna::mnw_exact(named.inst, ob);
    nlohmann::json j;
    j["nw_nonpositive"] = result.signature.nonpositive;
    j["nw_product"] = result.signature.product_str();
    j["witness"] = manna::allocation_to_json(result.witness, named);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_generate(const std::string& klass, int agents, int items, std::uint64_t seed,
                 const std::string& range) {
  auto parsed = manna::parse_gen_class(klass);
  if (!parsed) manna::fail(Errc::Parse, "unknown class \"" + klass + "\"");
  auto [lo, hi] = parse_range(range);
  manna::GenOptions options;
  options.klass = *parsed;
  options.agents = agents;
  options.items = items;
  options.seed = seed;
  options.lo = lo;
  options.hi = hi;
  manna::NamedInstance named;
  named.inst = manna::generate_instance(options);
  std::cout << manna::instance_to_json(named).dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& instance_path) {
  manna::NamedInstance named = manna::load_instance_file(instance_path);
  manna::ItemPartition part = manna::partition_items(named.inst);
  nlohmann::json j;
  j["class"] = manna::class_to_json(manna::classify(named.inst));
  auto names = [&](const std::vector<int>& items) {
    auto arr = nlohmann::json::array();
    for (int it : items) arr.push_back(named.item_name(it));
    return arr;
  };
  j["partition"] = {{"m_plus", names(part.m_plus)},
                    {"m_zero", names(part.m_zero)},
                    {"m_minus", names(part.m_minus)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair division of indivisible mixed manna"};
  app.require_subcommand(1);

  std::string instance_path, allocation_path, report_path, dot_path;
  std::string algorithm = "auto";
  std::string notions, exists_list, klass;
  std::string range = "-9..9";
  bool verify_flag = false, exact_po = false, mnw = false;
  long long budget = 10'000'000;
  int agents = 2, items = 4;
  std::uint64_t seed = 0;

  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("--instance", instance_path, "instance JSON file")->required();
  solve->add_option("--algorithm", algorithm, "auto|alg1|alg2|alg3|alg4|alg5|alg6");
  solve->add_flag("--verify", verify_flag, "also certify PO claims against the oracle");
  solve->add_option("--report", report_path, "write the report JSON here as well");
  solve->add_option("--budget", budget, "oracle budget for --verify");
  solve->add_option("--dump-envy-graph", dot_path, "write the final envy graph as DOT");

  CLI::App* verify = app.add_subcommand("verify", "check notions for a given allocation");
  verify->add_option("--instance", instance_path, "instance JSON file")->required();
  verify->add_option("--allocation", allocation_path, "allocation JSON file")->required();
  verify->add_option("--notions", notions, "comma-separated notion list");
  verify->add_flag("--exact-po", exact_po, "include the oracle Pareto check");
  verify->add_option("--budget", budget, "oracle budget");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive existence and welfare queries");
  oracle->add_option("--instance", instance_path, "instance JSON file")->required();
  oracle->add_option("--exists", exists_list, "comma-separated notion list");
  oracle->add_flag("--mnw", mnw, "report the exact MNW optimum");
  oracle->add_option("--budget", budget, "enumeration budget");

  CLI::App* generate = app.add_subcommand("generate", "emit a seeded class-constrained instance");
  generate->add_option("--class", klass, "restricted-goods|rmg-identical|binary-mixed|separable|rmg-ido|rmg-general")
      ->required();
  generate->add_option("--agents", agents, "agent count")->required();
  generate->add_option("--items", items, "item count")->required();
  generate->add_option("--seed", seed, "PRNG seed (SplitMix64)")->required();
  generate->add_option("--value-range", range, "LO..HI integer bounds");

  CLI::App* classify = app.add_subcommand("classify", "print class flags and the item partition");
  classify->add_option("--instance", instance_path, "instance JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return cmd_solve(instance_path, algorithm, verify_flag, report_path, budget, dot_path);
    }
    if (verify->parsed()) {
      return cmd_verify(instance_path, allocation_path, notions, exact_po, budget);
    }
    if (oracle->parsed()) return cmd_oracle(instance_path, exists_list, mnw, budget);
    if (generate->parsed()) return cmd_generate(klass, agents, items, seed, range);
    if (classify->parsed()) return cmd_classify(instance_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
