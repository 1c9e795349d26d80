#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "flagfold/decomposition.hpp"
#include "flagfold/sampler.hpp"
#include "oracles.hpp"

using namespace flagfold;

TEST_CASE("facet_adjacency_components on fixtures") {
    CliqueComplex oct = clique_complex(oracle::octahedron_graph());
    auto comps = facet_adjacency_components(oct, 2);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].facets.size() == 8);
    CHECK(comps[0].support.size() == 6);
    CHECK(comps[0].dim == 2);

    CliqueComplex bow = clique_complex(oracle::bowtie_graph());
    auto bcomps = facet_adjacency_components(bow, 2);
    REQUIRE(bcomps.size() == 2);
    CHECK(bcomps[0].facets == std::vector<Simplex>{Simplex{0, 1, 2}});
    CHECK(bcomps[1].facets == std::vector<Simplex>{Simplex{2, 3, 4}});

    CliqueComplex c4 = clique_complex(oracle::cycle_graph(4));
    CHECK(facet_adjacency_components(c4, 2).empty());
}

TEST_CASE("components agree with a BFS oracle") {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        CliqueComplex c = sample_xnp({11, 0.42, seed});
        for (int d = 1; d <= std::min(c.dim(), 3); ++d) {
            auto comps = facet_adjacency_components(c, d);
            auto faces = c.faces(d);
            auto expect = oracle::bfs_facet_components({faces.begin(), faces.end()});
            REQUIRE(comps.size() == expect.size());
            for (std::size_t i = 0; i < comps.size(); ++i) CHECK(comps[i].facets == expect[i]);

            // partition of the d-faces
            std::size_t total = 0;
            for (const auto& comp : comps) total += comp.facets.size();
            CHECK(total == c.faces(d).size());
        }
    }
}

TEST_CASE("component maximality") {
    for (std::uint64_t seed = 300; seed < 308; ++seed) {
        CliqueComplex c = sample_xnp({10, 0.5, seed});
        auto comps = facet_adjacency_components(c, 2);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            std::set<Simplex> inside(comps[ci].facets.begin(), comps[ci].facets.end());
            for (const Simplex& outside : c.faces(2)) {
                if (inside.count(outside)) continue;
                for (const Simplex& f : comps[ci].facets) {
                    std::vector<Vertex> common;
                    std::set_intersection(f.verts.begin(), f.verts.end(), outside.verts.begin(),
                                          outside.verts.end(), std::back_inserter(common));
                    CHECK(common.size() + 1 < f.size());
                }
            }
        }
    }
}

TEST_CASE("nesting: every relevant subcomplex lives in one maximal component") {
    auto run = [](const CliqueComplex& c, int d) {
        auto comps = facet_adjacency_components(c, d);
        auto faces = c.faces(d);
        if (faces.empty() || faces.size() > 8) return;
        for (const auto& subset : oracle::connected_facet_subsets({faces.begin(), faces.end()})) {
            std::size_t containing = 0;
            for (const auto& comp : comps) {
                std::set<Simplex> inside(comp.facets.begin(), comp.facets.end());
                bool all = std::all_of(subset.begin(), subset.end(),
                                       [&](const Simplex& f) { return inside.count(f) > 0; });
                if (all) ++containing;
            }
            CHECK(containing == 1);
        }
    };
    run(clique_complex(oracle::octahedron_graph()), 2);
    run(clique_complex(oracle::bowtie_graph()), 2);
    for (std::uint64_t seed = 400; seed < 412; ++seed) run(sample_xnp({7, 0.45, seed}), 2);
}

TEST_CASE("closure_partition on fixtures") {
    CliqueComplex k4 = clique_complex(oracle::complete_graph(4));
    auto pairs = closure_partition(k4, 2);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].closure.faces(3).size() == 1);  // the 3-face reappears in the closure

    CliqueComplex bow = clique_complex(oracle::bowtie_graph());
    auto bpairs = closure_partition(bow, 2);
    REQUIRE(bpairs.size() == 2);
    for (const auto& pr : bpairs)
        CHECK(pr.closure.f_vector() == std::vector<std::size_t>{3, 3, 1});

    // disjoint union of the octahedron and a triangle
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : oracle::octahedron_graph().edges()) edges.emplace_back(u, v);
    edges.emplace_back(6, 7);
    edges.emplace_back(6, 8);
    edges.emplace_back(7, 8);
    CliqueComplex both = clique_complex(build_graph(9, edges));
    auto two = closure_partition(both, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].subcomplex.facets.size() == 8);
    CHECK(two[1].subcomplex.facets.size() == 1);
}

TEST_CASE("closures partition the faces of dimension >= d") {
    for (std::uint64_t seed = 500; seed < 512; ++seed) {
        CliqueComplex c = sample_xnp({10, 0.5, seed});
        int d = 2;
        auto pairs = closure_partition(c, d);
        std::map<Simplex, int> coverage;
        for (const auto& pr : pairs)
            for (int dd = d; dd <= pr.closure.dim(); ++dd)
                for (const Simplex& f : pr.closure.faces(dd)) coverage[f] += 1;
        std::size_t expected = 0;
        for (int dd = d; dd <= c.dim(); ++dd) expected += c.faces(dd).size();
        CHECK(coverage.size() == expected);
        for (const auto& [f, cnt] : coverage) {
            CHECK(cnt == 1);
            CHECK(c.contains(f));
        }
    }
}

TEST_CASE("check_intersection_bound") {
    CliqueComplex bow = clique_complex(oracle::bowtie_graph());
    auto pairs = closure_partition(bow, 2);
    auto report = check_intersection_bound(pairs, 2);
    CHECK(report.pass);

    // two triangles glued along an edge: a single component, vacuous pass
    Graph glued = build_graph(
        4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    auto gpairs = closure_partition(clique_complex(glued), 2);
    REQUIRE(gpairs.size() == 1);
    CHECK(check_intersection_bound(gpairs, 2).pass);

    for (std::uint64_t seed = 600; seed < 630; ++seed) {
        CliqueComplex c = sample_xnp({12, 0.5, seed});
        auto rpairs = closure_partition(c, 2);
        CHECK(check_intersection_bound(rpairs, 2).pass);
    }
}

TEST_CASE("RelevantSubcomplex degrees") {
    CliqueComplex oct = clique_complex(oracle::octahedron_graph());
    auto comps = facet_adjacency_components(oct, 2);
    REQUIRE(comps.size() == 1);
    for (Vertex v = 0; v < 6; ++v) CHECK(comps[0].degree(v) == 4);
    CHECK_THROWS_AS(comps[0].degree(17), std::invalid_argument);
    CHECK(oracle::min_internal_degree(comps[0].facets) == 4);
}
