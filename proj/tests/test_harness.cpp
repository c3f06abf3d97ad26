#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "graphstab/campaign.hpp"
#include "graphstab/codec.hpp"
#include "graphstab/corpus.hpp"
#include "graphstab/errors.hpp"
#include "graphstab/report.hpp"

using namespace graphstab;
using fx::inv;

namespace {

Corpus exhaustive(int n_min, int n_max) {
  CorpusSpec s;
  s.n_min = n_min;
  s.n_max = n_max;
  return generate_corpus(s);
}

std::string dump(const CorpusSpec& spec, const std::vector<Graph>& graphs, const CampaignOptions& opt) {
  const CampaignSummary summary = run_campaign(graphs, opt);
  std::ostringstream out;
  write_campaign(out, campaign_json(spec, graphs.size(), opt, summary, false));
  return out.str();
}

}  // namespace

TEST_CASE("exhaustive corpus sizes") {
  CHECK(exhaustive(3, 3).graphs.size() == 8);
  CHECK(exhaustive(5, 5).graphs.size() == 1024);
  CHECK(exhaustive(0, 4).graphs.size() == 1 + 1 + 2 + 8 + 64);
  CHECK(labelled_graphs(0).size() == 1);
  // Connected labelled graphs: 1, 1, 4, 38, 728.
  CHECK(connected_labelled_graphs(3).size() == 4);
  CHECK(connected_labelled_graphs(4).size() == 38);
  CHECK(connected_labelled_graphs(5).size() == 728);
  const auto four = labelled_graphs(4);
  for (std::size_t i = 1; i < four.size(); ++i) CHECK(encode_graph6(four[i - 1]) < encode_graph6(four[i]));
  CorpusSpec big;
  big.n_max = kExhaustiveMaxOrder + 1;
  big.n_min = big.n_max;
  CHECK_THROWS_AS(generate_corpus(big), InputError);
}

TEST_CASE("random corpus is deterministic") {
  CorpusSpec s;
  s.mode = CorpusMode::random;
  s.n_min = s.n_max = 7;
  s.count = 50;
  s.seed = 42;
  const Corpus a = generate_corpus(s);
  const Corpus b = generate_corpus(s);
  REQUIRE(a.graphs.size() == 50);
  CHECK(a.graphs == b.graphs);
  for (const Graph& g : a.graphs) CHECK(g.order() == 7);
  s.seed = 43;
  CHECK(generate_corpus(s).graphs != a.graphs);
}

TEST_CASE("union corpus") {
  CorpusSpec s;
  s.mode = CorpusMode::union_pairs;
  s.n_max = 7;
  const Corpus all = generate_corpus(s);
  // Connected labelled graphs by order 1..6, then pairs a <= b, a + b <= 7.
  const std::vector<std::size_t> connected{0, 1, 1, 4, 38, 728, 26704};
  std::size_t expected = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a; a + b <= 7; ++b)
      expected += a == b ? connected[a] * (connected[a] + 1) / 2 : connected[a] * connected[b];
  CHECK(expected == 28409);
  CHECK(all.graphs.size() == expected);
  for (const Graph& g : all.graphs) CHECK(components(g).parts.size() >= 2);

  s.count = 100;
  s.seed = 7;
  const Corpus sample = generate_corpus(s);
  CHECK(sample.graphs.size() == 100);
  CHECK(generate_corpus(s).graphs == sample.graphs);
}

TEST_CASE("max edges filter and mode names") {
  CorpusSpec s;
  s.n_min = s.n_max = 4;
  s.max_edges = 1;
  CHECK(generate_corpus(s).graphs.size() == 7);
  CHECK(parse_corpus_mode("union") == CorpusMode::union_pairs);
  CHECK(to_string(CorpusMode::union_pairs) == "union");
  CHECK_THROWS_AS(parse_corpus_mode("bogus"), InputError);
}

TEST_CASE("girth edge decomposition on n <= 4 has no violations") {
  const Corpus c = exhaustive(1, 4);
  CampaignOptions opt;
  opt.invariants = {"girth"};
  opt.tags = {"th12"};
  const CampaignSummary s = run_campaign(c.graphs, opt);
  REQUIRE(s.per_tag.size() == 1);
  CHECK(s.per_tag[0].violated == 0);
  CHECK(s.per_tag[0].total() == c.graphs.size());
  CHECK(s.findings.empty());
}

TEST_CASE("vertex deletion bound on K2 with independent sets") {
  const std::vector<Graph> corpus{fx::k2()};
  CampaignOptions opt;
  opt.invariants = {"independent_sets"};
  opt.tags = {"lemma1"};
  const CampaignSummary s = run_campaign(corpus, opt);
  REQUIRE(s.reports.size() == 1);
  CHECK(s.reports[0].verdict == Verdict::confirmed);
  CHECK(s.reports[0].witness["parameters"]["choices"] == 3);
}

TEST_CASE("empty corpus gives zero counts") {
  CampaignOptions opt;
  opt.invariants = {"girth", "chromatic"};
  opt.tags = {"th4", "lemma1", "prop1"};
  const CampaignSummary s = run_campaign({}, opt);
  CHECK(s.reports.empty());
  REQUIRE(s.per_tag.size() == 3);
  for (const TagCounts& t : s.per_tag) CHECK(t.total() == 0);
  const nlohmann::json doc = campaign_json(CorpusSpec{}, 0, opt, s, false);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["summary"]["wall_time_ms"].is_null());
  CHECK(doc["summary"]["findings"].empty());
}

TEST_CASE("report order and relation tags") {
  const std::vector<Graph> corpus{fx::k2(), fx::c(4)};
  CampaignOptions opt;
  opt.invariants = {"max_degree", "girth"};
  opt.tags = {"prop3", "th2", "lemma1"};
  const CampaignSummary s = run_campaign(corpus, opt);
  // Per graph: two invariants x two ordinary tags, then one relation report.
  REQUIRE(s.reports.size() == 10);
  CHECK(s.reports[0].tag == "lemma1");
  CHECK(s.reports[0].invariant == "max_degree");
  CHECK(s.reports[1].tag == "th2");
  CHECK(s.reports[2].invariant == "girth");
  CHECK(s.reports[4].tag == "prop3");
  CHECK(s.reports[4].invariant == "edge_chromatic");
  CHECK(s.reports[5].graph6 == encode_graph6(fx::c(4)));
  CHECK(s.per_tag[0].tag == "lemma1");
  CHECK(is_relation_tag("prop2"));
  CHECK_FALSE(is_relation_tag("th2"));
  CHECK(campaign_tags().size() == 23);
}

TEST_CASE("campaign output does not depend on the worker count") {
  const Corpus c = exhaustive(1, 4);
  CampaignOptions opt;
  opt.invariants = {"girth", "independent_sets", "min_component_order"};
  opt.tags = {"th5", "th6", "lemma1", "th13", "prop2"};
  opt.jobs = 1;
  const std::string one = dump(c.spec, c.graphs, opt);
  opt.jobs = 4;
  CHECK(dump(c.spec, c.graphs, opt) == one);
}

TEST_CASE("findings replay through check_instance") {
  CorpusSpec spec;
  spec.mode = CorpusMode::union_pairs;
  spec.n_max = 2;
  const Corpus c = generate_corpus(spec);
  CampaignOptions opt;
  opt.invariants = {"independent_sets"};
  opt.tags = {"th5"};
  const CampaignSummary s = run_campaign(c.graphs, opt);
  REQUIRE(s.findings.size() == 1);
  const TheoremReport& found = s.reports[s.findings[0]];
  CHECK(found.graph6 == encode_graph6(fx::join({fx::k1(), fx::k1()})));
  CHECK(found.verdict == Verdict::violated);
  const TheoremReport again = check_instance(parse_graph6(found.graph6), inv(found.invariant), found.tag);
  CHECK(report_json(again) == report_json(found));
  CHECK(report_json(found)["formula"] == "inf");
  CHECK(report_json(found)["oracle"] == 1);
}

TEST_CASE("domain errors and budget overruns are classified") {
  const TheoremReport k1 = check_instance(fx::k1(), inv("class_total"), "lemma1");
  CHECK(k1.verdict == Verdict::not_applicable);
  SearchPolicy tight;
  tight.max_subset_universe = 1U << 3;
  const TheoremReport big = check_instance(graphs::complete(5), inv("girth"), "th12", tight);
  CHECK(big.verdict == Verdict::budget_skipped);
  CHECK_THROWS_AS(check_instance(fx::k1(), inv("girth"), "th99"), InputError);
}

TEST_CASE("value encodings") {
  CHECK(value_json(ExtValue(Rational(3, 2))) == nlohmann::json{{"fin", "3/2"}});
  CHECK(value_json(ExtValue::infinity()) == nlohmann::json{{"inf", true}});
  CHECK(stability_json(ExtNat(4)) == 4);
  CHECK(stability_json(ExtNat::infinity()) == "inf");
  CHECK(witness_json(Witness{}).is_null());
  CHECK(witness_json(Witness{EdgeSet{{0, 1}}}) == nlohmann::json::parse("[[0,1]]"));
}
