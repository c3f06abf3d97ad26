#include "doctest.h"

#include "fixtures.hpp"
#include "graphstab/corpus.hpp"
#include "graphstab/errors.hpp"
#include "oracles.hpp"

using namespace graphstab;
using fx::as_int;
using fx::inv;
using fx::join;

namespace {

ExtValue ext(long long v) { return v == oracle::kInf ? ExtValue::infinity() : ExtValue(v); }

std::vector<Graph> corpus_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 0; k <= n; ++k) {
    auto layer = labelled_graphs(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace

TEST_CASE("ExtValue arithmetic and parsing") {
  CHECK(ExtValue::parse("6/4") == ExtValue(Rational(3, 2)));
  CHECK(ExtValue::parse("6/4").to_string() == "3/2");
  CHECK(ExtValue::parse("inf").is_infinite());
  CHECK(ExtValue(3) < ExtValue::infinity());
  CHECK(ExtValue(2) * ExtValue(Rational(1, 4)) == ExtValue(Rational(1, 2)));
  CHECK_THROWS(ExtValue(2) * ExtValue::infinity());
  CHECK_THROWS_AS(ExtValue(-1), InputError);
  CHECK_THROWS_AS(ExtValue::parse("x"), InputError);
  CHECK(min(ExtValue(4), ExtValue::infinity()) == ExtValue(4));
  CHECK((ExtNat(2) + ExtNat::infinity()).is_infinite());
  CHECK(ExtNat(3) < ExtNat::infinity());
}

TEST_CASE("structural invariants") {
  CHECK(as_int(eval_min_degree(fx::c(4))) == 2);
  CHECK(as_int(eval_min_degree(fx::k1())) == 0);
  CHECK(as_int(eval_min_degree(join({fx::k3(), fx::k1()}))) == 0);
  CHECK(eval_min_degree(Graph()).is_infinite());
  CHECK(as_int(eval_max_degree(fx::p(3))) == 2);
  CHECK(as_int(eval_max_degree(fx::k1())) == 0);
  CHECK(as_int(eval_max_degree(join({fx::c(4), fx::k2()}))) == 2);
  CHECK(as_int(eval_max_degree(Graph())) == 0);
  CHECK(as_int(eval_girth(fx::k3())) == 3);
  CHECK(eval_girth(fx::p(4)).is_infinite());
  CHECK(eval_girth(Graph()).is_infinite());
  CHECK(as_int(eval_girth(join({fx::k3(), fx::c(5)}))) == 3);
  CHECK(as_int(eval_min_component_order(join({fx::k1(), fx::k3()}))) == 1);
  CHECK(as_int(eval_min_component_order(fx::k3())) == 3);
  CHECK(as_int(eval_min_component_order(join({fx::k2(), fx::k2()}))) == 2);
  CHECK(eval_min_component_order(Graph()).is_infinite());
}

TEST_CASE("colouring invariants") {
  CHECK(as_int(eval_chromatic(fx::k3())) == 3);
  CHECK(as_int(eval_chromatic(fx::c(5))) == 3);
  CHECK(as_int(eval_chromatic(fx::c(4))) == 2);
  CHECK(as_int(eval_chromatic(Graph(3))) == 1);
  CHECK(as_int(eval_chromatic(Graph())) == 0);
  CHECK(as_int(eval_edge_chromatic(fx::c(4))) == 2);
  CHECK(as_int(eval_edge_chromatic(fx::k3())) == 3);
  CHECK(as_int(eval_edge_chromatic(fx::k2())) == 1);
  CHECK(as_int(eval_edge_chromatic(Graph(2))) == 0);
  CHECK(as_int(eval_total_chromatic(fx::k2())) == 3);
  CHECK(as_int(eval_total_chromatic(fx::c(4))) == 4);
  CHECK(as_int(eval_total_chromatic(fx::k1())) == 1);
  CHECK(as_int(eval_total_chromatic(Graph())) == 0);
  CHECK(as_int(eval_total_chromatic(graphs::complete(4))) == 5);
  CHECK(as_int(eval_class(fx::k2())) == 2);
  CHECK(as_int(eval_class(fx::c(6))) == 1);
  CHECK_THROWS_AS(eval_class(fx::k1()), DomainError);
  CHECK_THROWS_AS(eval_class(Graph()), DomainError);
  CHECK(as_int(eval_class_prime(fx::c(4))) == 1);
  CHECK(as_int(eval_class_prime(fx::k3())) == 2);
  CHECK(as_int(eval_class_prime(fx::k2())) == 1);
  CHECK_THROWS_AS(eval_class_prime(Graph(2)), DomainError);
}

TEST_CASE("counting invariants") {
  CHECK(as_int(count_independent_sets(fx::k1())) == 2);
  CHECK(as_int(count_independent_sets(fx::p(3))) == 5);
  CHECK(as_int(count_independent_sets(join({fx::k3(), fx::k1()}))) == 8);
  CHECK(as_int(count_independent_sets(Graph())) == 1);
  CHECK(as_int(count_spanning_forests(fx::k1())) == 1);
  CHECK(as_int(count_spanning_forests(fx::k3())) == 7);
  CHECK(as_int(count_spanning_forests(fx::c(4))) == 15);
  CHECK(as_int(count_spanning_forests(Graph())) == 1);
  CHECK(as_int(count_matchings(fx::k1())) == 1);
  CHECK(as_int(count_matchings(fx::p(3))) == 3);
  CHECK(as_int(count_matchings(fx::k3())) == 4);
  CHECK(as_int(count_perfect_matchings(fx::k2())) == 1);
  CHECK(as_int(count_perfect_matchings(fx::k1())) == 0);
  CHECK(as_int(count_perfect_matchings(fx::c(4))) == 2);
  CHECK(as_int(count_perfect_matchings(Graph())) == 1);
  // Exact big integers: K_10 has 10^8 spanning trees alone.
  CHECK(count_spanning_forests(graphs::complete(10)) > ExtValue(100000000));
  CHECK(as_int(count_perfect_matchings(graphs::complete(12))) == 10395);
  CHECK(as_int(count_independent_sets(graphs::empty(40))) == (1LL << 40));
}

TEST_CASE("evaluate dispatches by id") {
  CHECK(as_int(evaluate(inv("min_degree"), fx::c(4))) == 2);
  CHECK(evaluate(inv("girth"), fx::p(4)).is_infinite());
  CHECK(as_int(evaluate(inv("independent_sets"), join({fx::k3(), fx::k3()}))) == 16);
  CHECK_THROWS_AS(invariant("nope"), InputError);
  CHECK_THROWS_AS(evaluate(inv("class_total"), Graph(2)), DomainError);
  // The memo must replay domain errors too.
  CHECK_THROWS_AS(evaluate(inv("class_total"), Graph(2)), DomainError);
}

TEST_CASE("registry metadata") {
  const auto reg = registry();
  REQUIRE(reg.size() == 13);
  const std::vector<std::string> ids = {"min_degree",      "max_degree",       "girth",      "min_component_order",
                                        "chromatic",       "edge_chromatic",   "total_chromatic", "class_total",
                                        "class_edge",      "independent_sets", "spanning_forests", "matchings",
                                        "perfect_matchings"};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CAPTURE(ids[i]);
    const InvariantDescriptor& d = reg[i];
    CHECK(d.id == ids[i]);
    CHECK(d.slot == i);
    CHECK_FALSE((d.multiplicative && d.mining));
    if (d.multiplicative) CHECK(*d.value_on_null == ExtValue(1));
    if (d.mining) CHECK(d.value_on_null->is_infinite());
    if (d.value_on_null) CHECK(evaluate(d, Graph()) == *d.value_on_null);
    if (d.value_on_k1) CHECK(evaluate(d, fx::k1()) == *d.value_on_k1);
  }
  CHECK(inv("girth").monotone_induced == Monotonicity::decreasing);
  CHECK(inv("max_degree").monotone_induced == Monotonicity::increasing);
}

TEST_CASE("every evaluator agrees with the naive oracles on n <= 5") {
  for (const Graph& g : corpus_up_to(5)) {
    const auto m = oracle::from(g);
    CAPTURE(g.order());
    CAPTURE(g.edge_count());
    CHECK(eval_min_degree(g) == ext(oracle::min_degree(m)));
    CHECK(eval_max_degree(g) == ext(oracle::max_degree(m)));
    CHECK(eval_girth(g) == ext(oracle::girth(m)));
    CHECK(eval_min_component_order(g) == ext(oracle::min_component_order(m)));
    CHECK(eval_chromatic(g) == ext(oracle::chromatic_dp(m)));
    CHECK(eval_edge_chromatic(g) == ext(oracle::edge_chromatic(m)));
    CHECK(eval_total_chromatic(g) == ext(oracle::total_chromatic(m)));
    CHECK(count_independent_sets(g) == ext(oracle::independent_sets(m)));
    CHECK(count_spanning_forests(g) == ext(oracle::spanning_forests(m)));
    CHECK(count_matchings(g) == ext(oracle::matchings(m)));
    CHECK(count_perfect_matchings(g) == ext(oracle::perfect_matchings(m)));
  }
}

TEST_CASE("counting evaluators agree with enumeration on larger sparse graphs") {
  // Every 6-vertex labelled graph with at most 8 edges, subsampled.
  const auto six = labelled_graphs(6);
  for (std::size_t i = 0; i < six.size(); i += 37) {
    const Graph& g = six[i];
    if (g.edge_count() > 8) continue;
    const auto m = oracle::from(g);
    CHECK(count_independent_sets(g) == ext(oracle::independent_sets(m)));
    CHECK(count_spanning_forests(g) == ext(oracle::spanning_forests(m)));
    CHECK(count_matchings(g) == ext(oracle::matchings(m)));
    CHECK(count_perfect_matchings(g) == ext(oracle::perfect_matchings(m)));
  }
}

TEST_CASE("Vizing and total colouring instance bounds on n <= 5") {
  for (const Graph& g : corpus_up_to(5)) {
    if (g.is_edgeless()) continue;
    const long long delta = as_int(eval_max_degree(g));
    const long long chi1 = as_int(eval_edge_chromatic(g));
    const long long chi2 = as_int(eval_total_chromatic(g));
    CHECK(delta <= chi1);
    CHECK(chi1 <= delta + 1);
    CHECK(delta + 1 <= chi2);
    CHECK(chi2 <= delta + 2);
  }
}

TEST_CASE("colourability predicates") {
  CHECK(vertex_colorable(fx::c(5), 3));
  CHECK_FALSE(vertex_colorable(fx::c(5), 2));
  CHECK(edge_colorable(fx::c(4), 2));
  CHECK_FALSE(edge_colorable(fx::k3(), 2));
  CHECK(total_colorable(fx::c(6), 3));
  CHECK_FALSE(total_colorable(fx::c(4), 3));
}

TEST_CASE("instance monotonicity checks") {
  for (const Graph& g : labelled_graphs(4)) CHECK(check_monotone_on_instance(inv("girth"), g, Monotonicity::decreasing));
  CHECK_FALSE(check_monotone_on_instance(inv("min_degree"), join({fx::k1(), fx::k3()}), Monotonicity::increasing));
  for (const InvariantDescriptor& d : registry()) {
    if (d.id == "class_total" || d.id == "class_edge") continue;
    CHECK(check_monotone_on_instance(d, fx::k1(), Monotonicity::increasing));
    CHECK(check_monotone_on_instance(d, fx::k1(), Monotonicity::decreasing));
  }
  CHECK(check_spanning_monotone_on_instance(inv("girth"), fx::c(4), Monotonicity::decreasing));
  CHECK_FALSE(check_spanning_monotone_on_instance(inv("girth"), fx::c(4), Monotonicity::increasing));
  CHECK_THROWS_AS(check_monotone_on_instance(inv("girth"), Graph(12), Monotonicity::decreasing, 1U << 10), BudgetError);
}

TEST_CASE("global monotonicity flags hold on every n <= 4 instance") {
  for (const InvariantDescriptor& d : registry()) {
    for (const Graph& g : corpus_up_to(4)) {
      if (g.is_null()) continue;
      if (d.monotone_induced != Monotonicity::none) CHECK(check_monotone_on_instance(d, g, d.monotone_induced));
      if (d.monotone_spanning != Monotonicity::none)
        CHECK(check_spanning_monotone_on_instance(d, g, d.monotone_spanning));
    }
  }
}
