// Command-line front end: stability numbers, bounds, decompositions, corpora
// and verification campaigns.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphstab/bounds.hpp"
#include "graphstab/campaign.hpp"
#include "graphstab/codec.hpp"
#include "graphstab/corpus.hpp"
#include "graphstab/decomposition.hpp"
#include "graphstab/errors.hpp"
#include "graphstab/report.hpp"

namespace gs = graphstab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitViolation = 3;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// "2^K" or a plain integer.
std::uint64_t parse_universe(const std::string& text) {
  std::uint64_t value = 0;
  if (text.starts_with("2^")) {
    const auto [p, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), value);
    if (ec != std::errc{} || p != text.data() + text.size() || value > 62)
      throw gs::InputError("bad --max-universe '" + text + "'");
    return std::uint64_t{1} << value;
  }
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || p != text.data() + text.size() || value == 0)
    throw gs::InputError("bad --max-universe '" + text + "'");
  return value;
}

struct InputOptions {
  std::string path;
  std::string format = "graph6";
  std::string invariant;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "graph file")->required();
  cmd->add_option("--format", in.format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--invariant", in.invariant, "invariant id")->required();
}

std::vector<gs::Graph> load(const InputOptions& in) { return gs::read_graphs(in.path, gs::parse_format(in.format)); }

std::string witness_text(const gs::Witness& w) { return gs::witness_json(w).dump(); }

int run_compute(const InputOptions& in, const std::string& side_name, const std::string& threshold,
                const std::string& policy_name, bool show_witness, bool as_json) {
  const gs::InvariantDescriptor& f = gs::invariant(in.invariant);
  const gs::Side side = gs::parse_side(side_name);
  gs::SearchPolicy policy;
  policy.vertex_subset_range = gs::parse_subset_range(policy_name);
  for (const gs::Graph& g : load(in)) {
    gs::StabilityResult r;
    if (threshold.empty()) {
      r = side == gs::Side::vertex ? gs::vertex_stability(g, f, policy) : gs::edge_stability(g, f, policy);
    } else {
      const gs::ExtValue theta = gs::ExtValue::parse(threshold);
      r = side == gs::Side::vertex ? gs::threshold_vertex_stability(g, f, theta, policy)
                                   : gs::threshold_edge_stability(g, f, theta, policy);
    }
    if (as_json) {
      json out = {{"graph6", gs::encode_graph6(g)},
                  {"invariant", f.id},
                  {"side", side_name},
                  {"policy", policy_name},
                  {"value", gs::stability_json(r.value)}};
      if (!threshold.empty()) out["threshold"] = gs::value_json(gs::ExtValue::parse(threshold));
      if (show_witness) out["witness"] = gs::witness_json(r.witness);
      std::cout << out.dump() << '\n';
    } else {
      std::cout << r.value.to_string();
      if (show_witness) std::cout << ' ' << witness_text(r.witness);
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int run_beta_prime(const InputOptions& in) {
  const gs::InvariantDescriptor& f = gs::invariant(in.invariant);
  for (const gs::Graph& g : load(in)) {
    const gs::CoveringResult c = gs::covering_number(g, f);
    json out = {{"graph6", gs::encode_graph6(g)},
                {"invariant", f.id},
                {"value", c.value},
                {"cover", gs::edges_json(c.witness)},
                {"covered_subgraphs", c.covered_subgraphs}};
    std::cout << out.dump() << '\n';
  }
  return kExitOk;
}

int run_bounds(const InputOptions& in, const std::string& theorem_list) {
  const gs::InvariantDescriptor& f = gs::invariant(in.invariant);
  const std::vector<std::string> tags = theorem_list == "all" ? std::vector<std::string>(gs::bound_tags().begin(),
                                                                                          gs::bound_tags().end())
                                                              : split_list(theorem_list);
  for (const gs::Graph& g : load(in)) {
    for (const std::string& tag : tags) {
      const gs::BoundReport b = gs::tightest_bound(tag, g, f);
      json out = {{"graph6", gs::encode_graph6(g)},
                  {"invariant", f.id},
                  {"theorem", tag},
                  {"kind", gs::to_string(b.kind)},
                  {"applicable", b.applicable}};
      if (b.applicable) {
        out["bound"] = gs::stability_json(*b.bound);
        const bool vertex = gs::bound_is_vertex_side(tag);
        out["stability"] = gs::stability_json(vertex ? gs::vertex_stability(g, f).value : gs::edge_stability(g, f).value);
        if (b.fractional_bound) out["fractional_bound"] = gs::value_json(*b.fractional_bound);
        if (b.additive_bound) out["additive_bound"] = gs::stability_json(*b.additive_bound);
        out["parameters"] = b.parameters;
      } else {
        out["reason"] = b.reason;
      }
      std::cout << out.dump() << '\n';
    }
  }
  return kExitOk;
}

int run_decompose(const InputOptions& in, const std::string& tag) {
  const gs::InvariantDescriptor& f = gs::invariant(in.invariant);
  const gs::Side side = gs::decomposition_side(tag);
  for (const gs::Graph& g : load(in)) {
    const gs::ComponentSplit split = gs::components(g);
    const gs::UnionFormulaResult r = gs::decompose(tag, split, f);
    json out = {{"graph6", gs::encode_graph6(g)},
                {"invariant", f.id},
                {"theorem", tag},
                {"hypotheses_satisfied", r.hypotheses_satisfied}};
    if (r.hypotheses_satisfied) {
      out["case"] = r.case_taken;
      out["value"] = gs::stability_json(*r.value);
      out["oracle"] =
          gs::stability_json(side == gs::Side::vertex ? gs::vertex_stability(g, f).value : gs::edge_stability(g, f).value);
      json comps = json::array();
      for (const gs::ComponentRecord& c : r.components) {
        json rec = {{"order", c.order}, {"f", gs::value_json(c.f_value)}, {"stability", gs::stability_json(c.stability)}};
        if (c.threshold) rec["threshold"] = gs::stability_json(*c.threshold);
        comps.push_back(std::move(rec));
      }
      out["components"] = std::move(comps);
    } else {
      out["reason"] = r.reason;
    }
    std::cout << out.dump() << '\n';
  }
  return kExitOk;
}

struct CorpusOptions {
  int n_max = 0;
  int n_min = -1;
  std::string mode = "exhaustive";
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_edges;

  gs::CorpusSpec spec() const {
    gs::CorpusSpec s;
    s.mode = gs::parse_corpus_mode(mode);
    s.n_max = n_max;
    s.n_min = n_min >= 0 ? n_min : (s.mode == gs::CorpusMode::union_pairs ? 0 : n_max);
    s.count = count;
    s.seed = seed;
    s.max_edges = max_edges;
    return s;
  }
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& c) {
  cmd->add_option("--n-max", c.n_max, "largest order (union: largest total order)")->required();
  cmd->add_option("--n-min", c.n_min, "smallest order; defaults to n-max");
  cmd->add_option("--mode", c.mode, "exhaustive, random or union")
      ->capture_default_str()
      ->check(CLI::IsMember({"exhaustive", "random", "union"}));
  cmd->add_option("--count", c.count, "random graphs, or sampled union pairs (0 = all)");
  cmd->add_option("--seed", c.seed, "generator seed");
  cmd->add_option("--max-edges", c.max_edges, "drop graphs with more edges");
}

int run_corpus(const CorpusOptions& c, const std::string& out_path) {
  const gs::Corpus corpus = gs::generate_corpus(c.spec());
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gs::InputError("cannot write '" + out_path + "'");
  for (const gs::Graph& g : corpus.graphs) out << gs::encode_graph6(g) << '\n';
  std::cerr << corpus.graphs.size() << " graphs written to " << out_path << '\n';
  return kExitOk;
}

int run_verify(const CorpusOptions& c, const std::string& invariant_list, const std::string& theorem_list,
               const std::string& out_path, unsigned jobs, const std::string& universe, bool timing) {
  gs::CampaignOptions options;
  options.invariants = invariant_list == "all" ? std::vector<std::string>{} : split_list(invariant_list);
  if (invariant_list == "all")
    for (const gs::InvariantDescriptor& d : gs::registry()) options.invariants.push_back(d.id);
  options.tags = theorem_list == "all"
                     ? std::vector<std::string>(gs::campaign_tags().begin(), gs::campaign_tags().end())
                     : split_list(theorem_list);
  for (const std::string& id : options.invariants) (void)gs::invariant(id);
  for (const std::string& tag : options.tags) {
    const auto tags = gs::campaign_tags();
    if (std::find(tags.begin(), tags.end(), tag) == tags.end())
      throw gs::InputError("unknown theorem tag '" + tag + "'");
  }
  if (!universe.empty()) options.policy.max_subset_universe = parse_universe(universe);
  options.jobs = jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : jobs;

  const gs::CorpusSpec spec = c.spec();
  const gs::Corpus corpus = gs::generate_corpus(spec);
  const gs::CampaignSummary summary = gs::run_campaign(corpus.graphs, options);
  const json doc = gs::campaign_json(spec, corpus.graphs.size(), options, summary, timing);

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw gs::InputError("cannot write '" + out_path + "'");
    gs::write_campaign(out, doc);
  }

  for (const gs::TagCounts& t : summary.per_tag) {
    std::cout << t.tag << ": confirmed=" << t.confirmed << " violated=" << t.violated
              << " not_applicable=" << t.not_applicable << " budget_skipped=" << t.budget_skipped << '\n';
  }
  std::cout << summary.findings.size() << " findings";
  if (!out_path.empty()) std::cout << ", report written to " << out_path;
  std::cout << '\n';
  return summary.findings.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability numbers of graph invariants: exact search, bounds and verification campaigns"};
  app.require_subcommand(1);

  InputOptions in;
  std::string side = "vertex";
  std::string threshold;
  std::string policy = "proper";
  bool witness = false;
  bool as_json = false;
  auto* compute = app.add_subcommand("compute", "vertex or edge stability number of each input graph");
  add_input(compute, in);
  compute->add_option("--side", side, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
  compute->add_option("--threshold", threshold, "minimum deletions pushing f below this value instead");
  compute->add_option("--policy", policy, "proper or all vertex subsets")->check(CLI::IsMember({"proper", "all"}));
  compute->add_flag("--witness", witness, "print a minimum deletion set");
  compute->add_flag("--json", as_json, "one JSON object per graph");

  auto* beta = app.add_subcommand("beta-prime", "edge covering number of the f-preserving spanning subgraphs");
  add_input(beta, in);

  std::string theorems;
  auto* bounds = app.add_subcommand("bounds", "tightest bounds over all parameter choices");
  add_input(bounds, in);
  bounds->add_option("--theorems", theorems, "comma-separated tags, or 'all'")->required();

  std::string theorem;
  auto* decompose = app.add_subcommand("decompose", "component-wise stability formula versus brute force");
  add_input(decompose, in);
  decompose->add_option("--theorem", theorem, "th4, th5, th6, th118, th11, th12 or th116")->required();

  CorpusOptions corpus_opts;
  std::string invariants;
  std::string out_path;
  unsigned jobs = 1;
  std::string universe;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a verification campaign and write a JSON report");
  add_corpus_options(verify, corpus_opts);
  verify->add_option("--invariants", invariants, "comma-separated ids, or 'all'")->required();
  verify->add_option("--theorems", theorems, "comma-separated tags, or 'all'")->required();
  verify->add_option("--out", out_path, "report path; omit for the summary only");
  verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify->add_option("--max-universe", universe, "subset cap per search, e.g. 2^20");
  verify->add_flag("--timing", timing, "record wall time in the report (breaks byte-identical output)");

  auto* corpus = app.add_subcommand("corpus", "write a corpus as graph6 lines");
  add_corpus_options(corpus, corpus_opts);
  corpus->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return run_compute(in, side, threshold, policy, witness, as_json);
    if (*beta) return run_beta_prime(in);
    if (*bounds) return run_bounds(in, theorems);
    if (*decompose) return run_decompose(in, theorem);
    if (*verify) return run_verify(corpus_opts, invariants, theorems, out_path, jobs, universe, timing);
    if (*corpus) return run_corpus(corpus_opts, out_path);
  } catch (const gs::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const gs::CodecError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gs::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
