#include <doctest.h>

#include <json.hpp>

#include "core/circular.hpp"
#include "core/gadgets.hpp"
#include "core/reductions.hpp"
#include "oracle.hpp"

using namespace circc;

TEST_CASE("theorem 1 instance sizes") {
    CHECK(reduce_theorem1(complete_graph(3)).graph.vertex_count() == 27);
    CHECK(reduce_theorem1(complete_graph(3)).graph.edge_count() == 51);

    const auto single = reduce_theorem1(Graph(2, {{0, 1}}));
    CHECK(single.graph.vertex_count() == 10);  // H itself
    CHECK(single.graph.edge_count() == 17);

    CHECK(reduce_theorem1(cycle_graph(5)).graph.vertex_count() == 45);
    CHECK_THROWS_AS(reduce_theorem1(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("theorem 1 instance has chromatic number 4") {
    CHECK(chromatic_number(reduce_theorem1(complete_graph(3)).graph) == 4);
}

TEST_CASE("theorem 1 forward certificates") {
    for (const auto& [g, coloring] :
         std::vector<std::pair<Graph, std::vector<int>>>{
             {complete_graph(3), {0, 1, 2}},
             {Graph(2, {{0, 1}}), {0, 1}},
             {cycle_graph(5), {0, 1, 0, 1, 2}},
             {Graph(4, {{0, 1}, {1, 2}, {2, 3}}), {0, 1, 0, 1}},  // P_4
         }) {
        const ReductionCertificate cert = certify_theorem1_forward(g, coloring);
        CHECK(cert.all_checks_true());
        CHECK(cert.theorem == 1);
        CHECK(cert.p == 4);
        CHECK(cert.q == 1);
        REQUIRE(static_cast<int>(cert.witness.size()) == cert.instance.vertex_count());

        // the two checks, re-derived here
        const CircularColoring witness{4, 1, cert.witness};
        CHECK(is_valid_coloring(cert.instance, witness));
        CHECK(is_acyclic(orientation_digraph(cert.instance, witness)));
        // original vertices keep their colors
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(cert.witness[v] == coloring[v]);
    }
}

TEST_CASE("certified instance passes the strict test directly") {
    // one edge replaced: the instance is small enough to run the full
    // strict search, the same question the certificate answers
    const auto red = reduce_theorem1(Graph(2, {{0, 1}}));
    CHECK(chi_c_strictly_less(red.graph, Ratio{4, 1}));
    CHECK(!chi_c_strictly_less(red.graph, Ratio{3, 1}));  // chi = 4 means chi_c > 3
}

TEST_CASE("theorem 1 rejects bad colorings") {
    CHECK_THROWS_AS(certify_theorem1_forward(complete_graph(3), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(certify_theorem1_forward(complete_graph(3), {0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(certify_theorem1_forward(complete_graph(3), {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("theorem 2 instance sizes") {
    const auto c5 = reduce_theorem2(cycle_graph(5), 3, 2);
    CHECK(c5.graph.vertex_count() == 24);
    CHECK(c5.graph.edge_count() == 24);

    const auto bare = reduce_theorem2(Graph(0, {}), 3, 2);  // just the K_3 block
    CHECK(bare.graph.vertex_count() == 9);
    CHECK(chromatic_number(bare.graph) == 3);

    CHECK(reduce_theorem2(complete_graph(6), 3, 2).graph.vertex_count() == 45);

    CHECK_THROWS_AS(reduce_theorem2(cycle_graph(5), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(reduce_theorem2(cycle_graph(5), 3, 1), std::invalid_argument);
}

TEST_CASE("theorem 2 instance has chromatic number n") {
    CHECK(chromatic_number(reduce_theorem2(cycle_graph(5), 3, 2).graph) == 3);
}

TEST_CASE("theorem 2 forward certificates") {
    const ReductionCertificate cert = certify_theorem2_forward(cycle_graph(5), 3, 2,
                                                               {0, 1, 2, 3, 4});
    CHECK(cert.all_checks_true());
    CHECK(cert.theorem == 2);
    CHECK(cert.p == 5);
    CHECK(cert.q == 2);
    CHECK(is_valid_coloring(cert.instance, {5, 2, cert.witness}));
    // hence chi_c of the instance is at most 5/2

    const ReductionCertificate k5 = certify_theorem2_forward(complete_graph(5), 3, 2,
                                                             {0, 1, 2, 3, 4});
    CHECK(k5.all_checks_true());

    // explicit K_n block colors are accepted too
    const ReductionCertificate full = certify_theorem2_forward(cycle_graph(5), 3, 2,
                                                               {0, 1, 2, 3, 4, 0, 2, 4});
    CHECK(full.all_checks_true());
}

TEST_CASE("theorem 2 rejects bad colorings") {
    // adjacent vertices with equal colors: the gadget cannot extend the pair
    CHECK_THROWS_AS(certify_theorem2_forward(cycle_graph(5), 3, 2, {0, 0, 1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify_theorem2_forward(cycle_graph(5), 3, 2, {0, 1, 2, 3, 5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify_theorem2_forward(cycle_graph(5), 3, 2, {0, 1, 2}),
                    std::invalid_argument);
    // explicit block with a repeated clique color
    CHECK_THROWS_AS(certify_theorem2_forward(cycle_graph(5), 3, 2, {0, 1, 2, 3, 4, 0, 0, 4}),
                    std::invalid_argument);
}

TEST_CASE("negative search verdicts") {
    CHECK(search_negative_theorem2(cycle_graph(5), 3, 2).verdict ==
          NegativeVerdict::coloring_found);
    CHECK(search_negative_theorem2(Graph(0, {}), 3, 2).verdict ==
          NegativeVerdict::coloring_found);

    // chi(K_5) = 5 = kn-1, so a (5,2)-coloring of the instance exists
    const auto k5 = search_negative_theorem2(complete_graph(5), 3, 2);
    CHECK(k5.verdict == NegativeVerdict::coloring_found);
    REQUIRE(k5.coloring.has_value());
    CHECK(is_valid_coloring(reduce_theorem2(complete_graph(5), 3, 2).graph, *k5.coloring));

    const auto tiny = search_negative_theorem2(complete_graph(6), 3, 2, 1);
    CHECK(tiny.verdict == NegativeVerdict::budget_exhausted);
    CHECK(tiny.nodes_visited >= 1);
}

TEST_CASE("certificate json and recheck round-trip") {
    const ReductionCertificate cert = certify_theorem1_forward(complete_graph(3), {0, 1, 2});
    const std::string json = cert.to_json().dump(2);

    const RecheckResult ok = recheck_certificate(json);
    CHECK(ok.match);
    CHECK(ok.all_true);
    REQUIRE(ok.recomputed.size() == 2);
    CHECK(ok.recomputed[0] == std::pair<std::string, bool>{"valid", true});
    CHECK(ok.recomputed[1] == std::pair<std::string, bool>{"acyclic", true});

    // determinism: the same pipeline yields byte-identical JSON
    CHECK(certify_theorem1_forward(complete_graph(3), {0, 1, 2}).to_json().dump(2) == json);

    // a tampered witness invalidates the coloring and breaks the match
    nlohmann::json tampered = nlohmann::json::parse(json);
    tampered["witness"][0] = tampered["witness"][1];
    const RecheckResult bad = recheck_certificate(tampered.dump());
    CHECK(!bad.all_true);
    CHECK(!bad.match);

    // stored booleans that disagree with the recomputation break the match
    nlohmann::json lied = nlohmann::json::parse(json);
    lied["checks"]["valid"] = false;
    const RecheckResult caught = recheck_certificate(lied.dump());
    CHECK(caught.all_true);
    CHECK(!caught.match);
}

TEST_CASE("recheck rejects malformed certificates") {
    CHECK_THROWS_AS(recheck_certificate("nonsense"), ParseError);
    CHECK_THROWS_AS(recheck_certificate("{}"), ParseError);
    // oversized numbers must not truncate into plausible values
    CHECK_THROWS_AS(
        recheck_certificate(R"({"instance": {"n": 1, "edges": []}, "p": 42949672970,
                                "q": 1, "witness": [0], "checks": {"valid": true}})"),
        ParseError);

    const ReductionCertificate cert = certify_theorem2_forward(cycle_graph(5), 3, 2,
                                                               {0, 1, 2, 3, 4});
    nlohmann::json j = cert.to_json();
    j["witness"].erase(0);
    CHECK_THROWS_AS(recheck_certificate(j.dump()), ParseError);
}

TEST_CASE("theorem 2 certificates recheck") {
    const ReductionCertificate cert = certify_theorem2_forward(cycle_graph(5), 3, 2,
                                                               {0, 1, 2, 3, 4});
    const RecheckResult res = recheck_certificate(cert.to_json().dump());
    CHECK(res.match);
    CHECK(res.all_true);
    REQUIRE(res.recomputed.size() == 1);  // no acyclicity claim for theorem 2
    CHECK(res.recomputed[0].first == "valid");
}
