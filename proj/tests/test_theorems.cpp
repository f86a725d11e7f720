#include <doctest.h>

#include <random>

#include "gk/families.hpp"
#include "gk/theorems.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gk;
namespace fx = gk::fixtures;

TEST_CASE("non_neighbors_of_two") {
  CHECK(non_neighbors_of_two(gk_graph_of_spectrum(alt_spectrum(10))) == std::vector<u64>{7});
  CHECK(non_neighbors_of_two(gk_graph_of_spectrum(pgl2_spectrum(243))) == std::vector<u64>{3});
  CHECK(non_neighbors_of_two(fx::complete_on({2, 3, 5, 7})).empty());
  CHECK_THROWS_AS(non_neighbors_of_two(fx::complete_on({3, 5})), missing_two_error);
}

TEST_CASE("check_tau_union_of_cliques") {
  for (u64 n = 5; n <= 100; ++n) {
    REQUIRE(check_tau_union_of_cliques(gk_graph_of_spectrum(alt_spectrum(n))).union_of_cliques);
  }
  for (u64 q = 3; q <= 2000; ++q) {
    if (!as_prime_power(q)) continue;
    REQUIRE(check_tau_union_of_cliques(gk_graph_of_spectrum(pgl2_spectrum(q))).union_of_cliques);
  }
  // 2 isolated, tau = path 3-5-7
  const GkGraph bad = GkGraph::build({2, 3, 5, 7}, {{3, 5}, {5, 7}});
  const TauCheck c = check_tau_union_of_cliques(bad);
  CHECK_FALSE(c.union_of_cliques);
  REQUIRE(c.witness);
  CHECK((*c.witness)[1] == 5);
  CHECK(std::set<u64>{(*c.witness)[0], (*c.witness)[2]} == std::set<u64>{3, 7});
  CHECK_THROWS_AS(check_tau_union_of_cliques(GkGraph::build({3, 5, 7}, {})), missing_two_error);
}

TEST_CASE("classify_srg fixtures") {
  const SrgVerdict octa = classify_srg(fx::octahedron());
  CHECK(octa.kind == SrgVerdictKind::complete_multipartite_parts_of_two);
  CHECK(octa.parameters == SrgParameters{6, 4, 2, 4});

  const SrgVerdict copet = classify_srg(complement(fx::petersen()));
  CHECK(copet.kind == SrgVerdictKind::complement_triangle_free_srg_candidate);
  CHECK(copet.parameters == SrgParameters{10, 6, 3, 4});
  CHECK(copet.complement_parameters == SrgParameters{10, 3, 0, 1});

  const SrgVerdict paley = classify_srg(fx::paley(13));
  CHECK(paley.kind == SrgVerdictKind::ruled_out);
  REQUIRE(paley.witness);
  const GkGraph co = complement(fx::paley(13));
  const auto& w = *paley.witness;
  CHECK((co.adjacent(w[0], w[1]) && co.adjacent(w[1], w[2]) && co.adjacent(w[0], w[2])));

  CHECK(classify_srg(fx::cycle(5)).kind == SrgVerdictKind::complement_triangle_free_srg_candidate);
  CHECK(classify_srg(fx::complete(4)).kind == SrgVerdictKind::not_srg);
  CHECK(classify_srg(fx::complete_multipartite({3, 3})).kind == SrgVerdictKind::ruled_out);
  CHECK(classify_srg(fx::complete_multipartite({2, 2, 2, 2})).kind ==
        SrgVerdictKind::complete_multipartite_parts_of_two);
  // K_{2,2} = C4
  CHECK(classify_srg(fx::cycle(4)).kind == SrgVerdictKind::complete_multipartite_parts_of_two);
}

TEST_CASE("classify_srg verdicts are re-derivable") {
  for (std::size_t n = 4; n <= 6; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const GkGraph g = fx::from_edge_mask(n, m);
      const SrgVerdict v = classify_srg(g);
      const auto p = srg_parameters(g);
      REQUIRE(p.has_value() == (v.kind != SrgVerdictKind::not_srg));
      if (v.kind == SrgVerdictKind::complete_multipartite_parts_of_two) {
        const auto parts = complete_multipartite_parts(g);
        REQUIRE(parts);
        for (auto s : *parts) REQUIRE(s == 2);
      }
      if (v.kind == SrgVerdictKind::complement_triangle_free_srg_candidate) {
        REQUIRE(srg_parameters(complement(g)));
        REQUIRE(is_triangle_free(complement(g)));
      }
    }
  }
}

TEST_CASE("multipartite_realizability") {
  using K = MultipartiteVerdictKind;
  CHECK(multipartite_realizability({3, 3}).kind == K::not_realizable);
  CHECK(multipartite_realizability({2, 2, 2}).kind == K::realizable_solvable);
  CHECK(multipartite_realizability({3, 3, 3}).kind == K::not_realizable);
  CHECK(multipartite_realizability({3, 3, 3}).rule == MultipartiteRule::parts_at_least_three);
  CHECK(multipartite_realizability({1, 5}).kind == K::realizable);
  CHECK(multipartite_realizability({5, 1}).rule == MultipartiteRule::two_part_sum_rule);
  CHECK(multipartite_realizability({3, 2, 2}).kind == K::open);
  CHECK(multipartite_realizability({1, 1, 2, 1}).kind == K::realizable_solvable);
  CHECK(multipartite_realizability({2}).kind == K::realizable_solvable);
  CHECK(multipartite_realizability({3}).kind == K::open);
  CHECK_THROWS(multipartite_realizability({}));
  CHECK_THROWS(multipartite_realizability({0, 2}));
}

TEST_CASE("bipartite table up to n + m = 12") {
  for (std::size_t n = 1; n <= 11; ++n) {
    for (std::size_t m = 1; n + m <= 12; ++m) {
      const bool expected = m + n <= 6 && !(n == 3 && m == 3);
      const auto v = multipartite_realizability({n, m});
      REQUIRE(v.kind == (expected ? MultipartiteVerdictKind::realizable : MultipartiteVerdictKind::not_realizable));
    }
  }
}

TEST_CASE("solvable_realizable") {
  CHECK(solvable_realizable(fx::complete(4)));
  CHECK_FALSE(solvable_realizable(fx::empty(7)));
  CHECK(solvable_realizable(fx::octahedron()));
  // complement of C5 is C5: triangle-free, 3-colourable
  CHECK(solvable_realizable(fx::cycle(5)));
  // complement of the Petersen complement is Petersen
  CHECK(solvable_realizable(complement(fx::petersen())));
}

TEST_CASE("solvable_realizable matches brute force on graphs up to 6 vertices") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const GkGraph g = fx::from_edge_mask(n, m);
      const GkGraph co = complement(g);
      const bool expected = !oracle::has_triangle_by_triples(co) && oracle::colorable_by_assignment(co, 3);
      REQUIRE(solvable_realizable(g) == expected);
      if (oracle::independence_by_subsets(g) >= 4) REQUIRE_FALSE(solvable_realizable(g));
    }
  }
}

TEST_CASE("remark1_witness") {
  const Remark1Witness w = remark1_witness(3, 5);
  CHECK(w.holds());
  CHECK(w.q == 243);
  CHECK(w.non_neighbors == std::vector<u64>{2, 11, 61});
  CHECK(w.edges == std::vector<Edge>{{2, 11}, {2, 61}});
  CHECK(remark1_witness(7, 5).holds());
  const Remark1Witness small = remark1_witness(3, 1);
  CHECK_FALSE(small.holds());
  CHECK(small.non_neighbors == std::vector<u64>{2});
  CHECK(small.complete);
  CHECK_THROWS_AS(remark1_witness(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(remark1_witness(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(remark1_witness(3, 13), range_error);
  CHECK_THROWS_AS(remark1_witness(3, 0), std::invalid_argument);
}

TEST_CASE("PGL2 non-neighbour set of p always matches pi(q-1) and pi(q+1)") {
  for (u64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    u64 q = p;
    for (unsigned m = 1; q <= kMaxFieldOrder; ++m, q *= p) {
      const Remark1Witness w = remark1_witness(p, m);
      REQUIRE(w.matches_expected);
      REQUIRE(w.connected);
    }
  }
}

TEST_CASE("analyze examples") {
  const AnalysisReport psl = analyze(gk_graph_of_spectrum(psl2_spectrum(7)), "PSL2(7)");
  CHECK(psl.s == 3);
  CHECK(psl.t == 3);
  CHECK(psl.t_at_2 == 3u);
  CHECK(psl.tau == std::vector<u64>{3, 7});
  CHECK(psl.tau_union_of_cliques == true);
  CHECK(psl.srg.kind == SrgVerdictKind::not_srg);
  CHECK_FALSE(psl.solvable_realizable);
  REQUIRE(psl.multipartite);
  CHECK(psl.multipartite->kind == MultipartiteVerdictKind::open);

  const AnalysisReport c30 = analyze(fx::complete_on({2, 3, 5}), "C30");
  CHECK(c30.s == 1);
  CHECK(c30.t == 1);
  CHECK(c30.solvable_realizable);

  const AnalysisReport octa = analyze(fx::octahedron(), "octahedron");
  CHECK(octa.srg.kind == SrgVerdictKind::complete_multipartite_parts_of_two);
  CHECK(octa.t_at_2 == 2u);  // label 2 exists in 1..6

  const AnalysisReport odd = analyze(GkGraph::build({3, 5, 7, 11, 13}, {{3, 7}, {3, 11}, {5, 13}}), "odd");
  CHECK_FALSE(odd.t_at_2);
  CHECK_FALSE(odd.tau);
  CHECK(odd.note);

  const json j = report_to_json(psl);
  CHECK(j["report_version"] == 1);
  CHECK(j["tau_union_of_cliques"] == true);
  CHECK(j["srg"]["verdict"] == "not_srg");
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("report invariants over family graphs") {
  std::vector<GkGraph> graphs;
  for (u64 n = 5; n <= 60; ++n) {
    graphs.push_back(gk_graph_of_spectrum(alt_spectrum(n)));
    graphs.push_back(gk_graph_of_spectrum(sym_spectrum(n)));
  }
  for (u64 q : {3, 4, 5, 7, 8, 9, 16, 25, 27, 243, 1024, 1999}) {
    graphs.push_back(gk_graph_of_spectrum(psl2_spectrum(q)));
    graphs.push_back(gk_graph_of_spectrum(pgl2_spectrum(q)));
  }
  for (const auto& g : graphs) {
    const AnalysisReport r = analyze(g, "g");
    REQUIRE(r.t_at_2);
    REQUIRE(*r.t_at_2 <= r.t);
    REQUIRE(r.tau->size() + 1 + g.degree(2) == g.order());
    REQUIRE(*r.tau_union_of_cliques);
    if (r.t >= 4) REQUIRE_FALSE(r.solvable_realizable);
  }
}
