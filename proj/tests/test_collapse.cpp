#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagfold/collapse.hpp"
#include "flagfold/degree_condition.hpp"
#include "flagfold/homology.hpp"
#include "flagfold/sampler.hpp"
#include "oracles.hpp"

using namespace flagfold;

namespace {

// replay steps on a copy, asserting validity, and return the survivors
std::vector<Simplex> replay(const CliqueComplex& c, std::span<const CollapseStep> steps) {
    WorkingComplex w(c);
    for (const CollapseStep& st : steps) w.collapse(st);
    return w.all_faces();
}

}  // namespace

TEST_CASE("find_free_faces") {
    CliqueComplex k3 = clique_complex(oracle::complete_graph(3));
    auto steps = find_free_faces(WorkingComplex(k3), 1);
    REQUIRE(steps.size() == 3);
    CHECK(steps[0] == CollapseStep{Simplex{0, 1}, Simplex{0, 1, 2}});
    CHECK(steps[1] == CollapseStep{Simplex{0, 2}, Simplex{0, 1, 2}});
    CHECK(steps[2] == CollapseStep{Simplex{1, 2}, Simplex{0, 1, 2}});

    CliqueComplex c4 = clique_complex(oracle::cycle_graph(4));
    CHECK(find_free_faces(WorkingComplex(c4), 0).empty());

    CliqueComplex oct = clique_complex(oracle::octahedron_graph());
    CHECK(find_free_faces(WorkingComplex(oct), 1).empty());
}

TEST_CASE("elementary_collapse") {
    CliqueComplex path = clique_complex(oracle::path_graph(3));
    WorkingComplex w(path);
    elementary_collapse(w, {Simplex{0}, Simplex{0, 1}});
    CHECK(w.all_faces() == std::vector<Simplex>{Simplex{1}, Simplex{2}, Simplex{1, 2}});

    CliqueComplex k3 = clique_complex(oracle::complete_graph(3));
    WorkingComplex w3(k3);
    elementary_collapse(w3, {Simplex{0, 1}, Simplex{0, 1, 2}});
    auto faces = w3.all_faces();
    std::sort(faces.begin(), faces.end());
    CHECK(faces == std::vector<Simplex>{Simplex{0}, Simplex{0, 2}, Simplex{1}, Simplex{1, 2},
                                        Simplex{2}});
    CHECK_THROWS_AS(elementary_collapse(w3, {Simplex{0, 1}, Simplex{0, 1, 2}}),
                    std::invalid_argument);

    // a non-free face is rejected
    WorkingComplex w4(k3);
    CHECK_THROWS_AS(elementary_collapse(w4, {Simplex{0}, Simplex{0, 1}}), std::invalid_argument);
}

TEST_CASE("expand_interval") {
    auto one = expand_interval(Simplex{0, 1}, Simplex{0, 1, 2});
    CHECK(one == std::vector<CollapseStep>{{Simplex{0, 1}, Simplex{0, 1, 2}}});

    auto two = expand_interval(Simplex{0}, Simplex{0, 1, 2});
    CHECK(two == std::vector<CollapseStep>{{Simplex{0, 2}, Simplex{0, 1, 2}},
                                           {Simplex{0}, Simplex{0, 1}}});

    CHECK_THROWS_AS(expand_interval(Simplex{0, 1}, Simplex{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(expand_interval(Simplex{3}, Simplex{0, 1}), std::invalid_argument);
}

TEST_CASE("expand_interval replay removes exactly the interval") {
    // free face {0} of the maximal 3-simplex: interval = all faces containing 0
    CliqueComplex k4 = clique_complex(oracle::complete_graph(4));
    auto steps = expand_interval(Simplex{0}, Simplex{0, 1, 2, 3});
    CHECK(steps.size() == 4);
    auto left = replay(k4, steps);
    std::set<Simplex> survivors(left.begin(), left.end());
    for (const Simplex& f : k4.all_faces()) {
        bool in_interval = f.contains(0);
        CHECK(survivors.count(f) == (in_interval ? 0u : 1u));
    }
}

TEST_CASE("cone_collapse") {
    CliqueComplex k3 = clique_complex(oracle::complete_graph(3));
    auto steps = cone_collapse(k3, 0, 1);
    CHECK(steps == std::vector<CollapseStep>{{Simplex{1, 2}, Simplex{0, 1, 2}},
                                             {Simplex{1}, Simplex{0, 1}},
                                             {Simplex{2}, Simplex{0, 2}}});
    WorkingComplex w(k3);
    for (const auto& st : steps) w.collapse(st);
    CHECK(w.dim() == 0);
    CHECK(w.all_faces() == std::vector<Simplex>{Simplex{0}});

    // 3-simplex with apex 0: one step per nonempty subset of {1,2,3}
    CliqueComplex k4 = clique_complex(oracle::complete_graph(4));
    auto steps4 = cone_collapse(k4, 0, 1);
    CHECK(steps4.size() == 7);
    WorkingComplex w4(k4);
    for (const auto& st : steps4) w4.collapse(st);
    CHECK(w4.dim() == 0);

    CliqueComplex c4 = clique_complex(oracle::cycle_graph(4));
    CHECK_THROWS_AS(cone_collapse(c4, 0, 1), std::invalid_argument);
}

TEST_CASE("collapse_link_to_dim") {
    // complete on 2k+1 = 3 vertices: the cone case
    CliqueComplex k3 = clique_complex(oracle::complete_graph(3));
    auto steps = collapse_link_to_dim(k3, 1);
    CHECK(steps.size() == 3);
    WorkingComplex w(k3);
    for (const auto& st : steps) w.collapse(st);
    CHECK(w.dim() == 0);

    // a single edge collapses in one step
    CliqueComplex edge = clique_complex(build_graph(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
    auto esteps = collapse_link_to_dim(edge, 1);
    CHECK(esteps.size() == 1);
    WorkingComplex we(edge);
    for (const auto& st : esteps) we.collapse(st);
    CHECK(we.dim() == 0);

    // more than 2k+1 vertices is a contract breach
    CliqueComplex c4 = clique_complex(oracle::cycle_graph(4));
    CHECK_THROWS_AS(collapse_link_to_dim(c4, 1), std::invalid_argument);

    // complete on 5 = 2*2+1 vertices at k = 2
    CliqueComplex k5 = clique_complex(oracle::complete_graph(5));
    auto s5 = collapse_link_to_dim(k5, 2);
    WorkingComplex w5(k5);
    for (const auto& st : s5) w5.collapse(st);
    CHECK(w5.dim() <= 1);
    for (const auto& st : s5) CHECK(st.free_face.dim() >= 1);
}

TEST_CASE("lift_steps") {
    std::vector<CollapseStep> steps{{Simplex{0}, Simplex{0, 1}}};
    auto lifted = lift_steps(steps, 3, 0);
    CHECK(lifted == std::vector<CollapseStep>{{Simplex{0, 3}, Simplex{0, 1, 3}}});

    CHECK(lift_steps({}, 3, 0).empty());
    CHECK_THROWS_AS(lift_steps(steps, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(lift_steps(steps, 0, 0), std::invalid_argument);
}

TEST_CASE("lifted link collapse clears the star above dimension k") {
    // ambient 3-simplex, v = 3, link = K3 on {0,1,2}, k = 1
    CliqueComplex k4 = clique_complex(oracle::complete_graph(4));
    CliqueComplex lk = link(k4, 3);
    auto lifted = lift_steps(collapse_link_to_dim(lk, 1), 3, 0);
    WorkingComplex w(k4);
    for (const auto& st : lifted) w.collapse(st);
    for (const Simplex& f : w.all_faces())
        if (f.contains(3)) CHECK(f.dim() <= 1);
}

TEST_CASE("collapse_to_dim: a single (k+1)-simplex needs one step") {
    for (int k = 0; k <= 2; ++k) {
        CliqueComplex c = clique_complex(oracle::complete_graph(k + 2));
        auto out = collapse_to_dim(c, k, CollapseStrategy::Theorem);
        REQUIRE(out.status == CollapseStatus::Success);
        CHECK(out.certificate->steps.size() == 1);
        CHECK(out.certificate->final_dim <= k);
        CHECK(verify_certificate(c, *out.certificate).pass);
    }
}

TEST_CASE("collapse_to_dim: forests collapse to points") {
    for (std::uint64_t seed = 800; seed < 812; ++seed) {
        // a random forest: attach each vertex to a random earlier vertex or none
        SplitMix64 rng(seed);
        std::vector<std::pair<Vertex, Vertex>> edges;
        Vertex n = 12;
        for (Vertex v = 1; v < n; ++v)
            if (rng.next_double() < 0.75)
                edges.emplace_back(static_cast<Vertex>(rng.next() % static_cast<std::uint64_t>(v)), v);
        CliqueComplex c = clique_complex(build_graph(n, edges));
        auto out = collapse_to_dim(c, 0, CollapseStrategy::Theorem);
        REQUIRE(out.status == CollapseStatus::Success);
        CHECK(out.certificate->final_dim <= 0);
        auto ver = verify_certificate(c, *out.certificate);
        CHECK(ver.pass);
        for (const Simplex& f : ver.final_faces) CHECK(f.dim() == 0);
    }
}

TEST_CASE("collapse_to_dim: octahedron fails the theorem strategy at k=1") {
    CliqueComplex oct = clique_complex(oracle::octahedron_graph());
    auto out = collapse_to_dim(oct, 1, CollapseStrategy::Theorem);
    REQUIRE(out.status == CollapseStatus::Failure);
    REQUIRE(out.witness.has_value());
    CHECK(out.witness->facets.size() == 8);
    CHECK(oracle::min_internal_degree(out.witness->facets) == 4);
    CHECK(oracle::is_strongly_connected(out.witness->facets));

    // greedy cannot move either: no free faces at dimension >= 1
    auto greedy = collapse_to_dim(oct, 1, CollapseStrategy::Greedy);
    CHECK(greedy.status == CollapseStatus::Failure);
    CHECK_FALSE(greedy.witness.has_value());
}

TEST_CASE("collapse_to_dim: K4 at k=0 splits the strategies") {
    CliqueComplex k4 = clique_complex(oracle::complete_graph(4));
    auto theorem = collapse_to_dim(k4, 0, CollapseStrategy::Theorem);
    REQUIRE(theorem.status == CollapseStatus::Failure);
    REQUIRE(theorem.witness.has_value());
    CHECK(oracle::min_internal_degree(theorem.witness->facets) >= 2);

    auto greedy = collapse_to_dim(k4, 0, CollapseStrategy::Greedy);
    REQUIRE(greedy.status == CollapseStatus::Success);
    CHECK(greedy.certificate->final_dim == 0);
    auto ver = verify_certificate(k4, *greedy.certificate);
    REQUIRE(ver.pass);
    HomologyProfile prof = homology_profile(ver.final_faces);
    CHECK(prof.betti == std::vector<long long>{1});
}

TEST_CASE("theorem strategy on the bowtie") {
    CliqueComplex bow = clique_complex(oracle::bowtie_graph());
    auto out = collapse_to_dim(bow, 1, CollapseStrategy::Theorem);
    REQUIRE(out.status == CollapseStatus::Success);
    CHECK(out.certificate->final_dim == 1);
    CHECK(verify_certificate(bow, *out.certificate).pass);
}

TEST_CASE("success certificates preserve homology and Euler characteristic") {
    int successes = 0;
    for (std::uint64_t seed = 900; seed < 915; ++seed) {
        CliqueComplex c = sample_xnp({12, 0.45, seed});
        HomologyProfile before = homology_profile(c, 4);
        for (int k : {1, 2})
            for (auto strat : {CollapseStrategy::Theorem, CollapseStrategy::Greedy}) {
                auto out = collapse_to_dim(c, k, strat);
                if (out.status != CollapseStatus::Success) continue;
                ++successes;
                auto ver = verify_certificate(c, *out.certificate);
                REQUIRE(ver.pass);
                CHECK(homology_profile(ver.final_faces, 4) == before);
                // Euler characteristic is constant step by step
                WorkingComplex w(c);
                long long chi = w.euler_characteristic();
                for (const CollapseStep& st : out.certificate->steps) {
                    w.collapse(st);
                    CHECK(w.euler_characteristic() == chi);
                }
                for (const CollapseStep& st : out.certificate->steps)
                    CHECK(st.free_face.dim() >= k);
            }
    }
    CHECK(successes > 10);
}

TEST_CASE("theorem failure witnesses are genuine violations") {
    int failures = 0;
    for (std::uint64_t seed = 950; seed < 980 && failures < 6; ++seed) {
        CliqueComplex c = sample_xnp({11, 0.62, seed});
        auto out = collapse_to_dim(c, 1, CollapseStrategy::Theorem);
        if (out.status != CollapseStatus::Failure) continue;
        ++failures;
        REQUIRE(out.witness.has_value());
        const auto& w = *out.witness;
        CHECK(w.dim == 2);
        CHECK(oracle::is_strongly_connected(w.facets));
        CHECK(oracle::min_internal_degree(w.facets) >= 4);
        for (const Simplex& f : w.facets) CHECK(c.contains(f));
    }
    CHECK(failures > 0);
}

TEST_CASE("condition satisfied implies theorem success (small exhaustive)") {
    // all graphs on 5 vertices
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1u << i)) edges.push_back(pairs[i]);
        CliqueComplex c = clique_complex(build_graph(5, edges));
        for (int k : {0, 1}) {
            auto report = check_condition(c, k);
            auto out = collapse_to_dim(c, k, CollapseStrategy::Theorem);
            if (report.status == ConditionStatus::Satisfied) {
                REQUIRE(out.status == CollapseStatus::Success);
                CHECK(out.certificate->final_dim <= k);
                CHECK(verify_certificate(c, *out.certificate).pass);
            } else {
                // contrapositive: theorem failure only on violated instances
                if (out.status == CollapseStatus::Failure)
                    CHECK(report.status == ConditionStatus::Violated);
            }
        }
    }
}

TEST_CASE("verify_certificate rejects corrupted certificates") {
    CliqueComplex k4 = clique_complex(oracle::complete_graph(4));
    auto out = collapse_to_dim(k4, 1, CollapseStrategy::Theorem);
    REQUIRE(out.status == CollapseStatus::Success);
    const CollapseCertificate& good = *out.certificate;
    REQUIRE(verify_certificate(k4, good).pass);

    // wrong fingerprint
    CollapseCertificate bad = good;
    bad.fingerprint = "0000000000000000";
    auto r1 = verify_certificate(k4, bad);
    CHECK_FALSE(r1.pass);
    CHECK_FALSE(r1.failed_step.has_value());

    // replay on a different complex
    CliqueComplex other = clique_complex(oracle::complete_graph(5));
    auto r2 = verify_certificate(other, good);
    CHECK_FALSE(r2.pass);

    // altered face
    bad = good;
    bad.steps[0].coface = Simplex{0, 1, 2, 3};
    auto r3 = verify_certificate(k4, bad);
    CHECK_FALSE(r3.pass);
    CHECK(r3.failed_step == std::size_t{0});

    // recorded final dimension is checked
    bad = good;
    bad.final_dim = 0;
    CHECK_FALSE(verify_certificate(k4, bad).pass);
}

TEST_CASE("verify_certificate rejects swapped dependent steps") {
    CliqueComplex k4 = clique_complex(oracle::complete_graph(4));
    auto steps = cone_collapse(k4, 0, 1);  // ordered by decreasing dimension
    CollapseCertificate cert{0, complex_fingerprint(k4), steps, 0};
    REQUIRE(verify_certificate(k4, cert).pass);

    std::swap(cert.steps[0], cert.steps[1]);
    auto res = verify_certificate(k4, cert);
    CHECK_FALSE(res.pass);
    CHECK(res.failed_step == std::size_t{0});
}

TEST_CASE("greedy on non-flag face lists") {
    auto rp2 = oracle::projective_plane_triangles();
    // the projective plane is a closed surface: no free edges anywhere
    std::vector<Simplex> faces;
    for (const Simplex& t : rp2) {
        faces.push_back(t);
        for (std::size_t i = 0; i < t.size(); ++i) faces.push_back(t.facet_omitting(i));
    }
    for (Vertex v = 0; v < 6; ++v) faces.push_back(Simplex{v});
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    auto out = collapse_faces_greedy(faces, 1);
    CHECK(out.status == CollapseStatus::Failure);
}
