#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "support/builders.hpp"
#include "support/random_config.hpp"
#include "wmi/mhs.hpp"

using wmi::DeltaChain;
using wmi::SncConfiguration;

namespace testing = wmi::testing;

namespace {

// Single 3-fold triple point with one irrational component; the q=1
// complex has nonzero maps at two consecutive positions, so it exercises
// the supplied-pullback path. The off diagonal h^{0,1} data: A carries 1,
// the double surfaces AB and AC carry 1 each, the triple curve carries 1.
testing::ConfigBuilder threefold_builder() {
    testing::ConfigBuilder b(3, {"A", "B", "C"});
    b.stratum("A", {"A"}, {1, 1, 0, 0})
        .stratum("B", {"B"}, {1, 0, 0, 0})
        .stratum("C", {"C"}, {1, 0, 0, 0})
        .stratum("AB", {"A", "B"}, {1, 1, 0})
        .stratum("AC", {"A", "C"}, {1, 1, 0})
        .stratum("BC", {"B", "C"}, {1, 0, 0})
        .stratum("ABC", {"A", "B", "C"}, {1, 1})
        .edge("AB", "A", "B")
        .edge("AB", "B", "A")
        .edge("AC", "A", "C")
        .edge("AC", "C", "A")
        .edge("BC", "B", "C")
        .edge("BC", "C", "B")
        .edge("ABC", "A", "BC")
        .edge("ABC", "B", "AC")
        .edge("ABC", "C", "AB")
        .pullback(1, "AB", "B", {{1}})
        .pullback(1, "AC", "C", {{1}})
        .pullback(1, "ABC", "B", {{1}})
        .pullback(1, "ABC", "C", {{1}});
    return b;
}

void check_euler_identity(const SncConfiguration& cfg, int q) {
    const DeltaChain chain = wmi::delta_complex_q(cfg, q);
    long long lhs = 0, rhs = 0;
    int sign = 1;
    for (std::size_t l = 0; l < chain.term_dims.size(); ++l) {
        lhs += sign * chain.term_dims[l];
        rhs += sign * wmi::graded_piece_dim(cfg, q, q + static_cast<int>(l));
        sign = -sign;
    }
    CHECK(lhs == rhs);
}

} // namespace

TEST_SUITE("mhs") {

TEST_CASE("validation accepts a single component") {
    testing::ConfigBuilder b(1, {"E"});
    b.stratum("E", {"E"}, {1, 1});
    CHECK(wmi::validate_config(b.get()).ok());
}

TEST_CASE("validation reports missing incidence targets") {
    testing::ConfigBuilder b(1, {"A", "B"});
    b.stratum("A", {"A"}, {1, 0})
        .stratum("B", {"B"}, {1, 0})
        .stratum("AB", {"A", "B"}, {1})
        .edge("AB", "A", "B")
        .edge("AB", "B", "nowhere");
    const auto rep = wmi::validate_config(b.get());
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.message.find("missing incidence target") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validation catches structural mistakes") {
    // wrong h0q length
    {
        testing::ConfigBuilder b(1, {"A"});
        b.stratum("A", {"A"}, {1});
        CHECK_FALSE(wmi::validate_config(b.get()).ok());
    }
    // h^{0,0} must be 1
    {
        testing::ConfigBuilder b(1, {"A"});
        b.stratum("A", {"A"}, {2, 0});
        CHECK_FALSE(wmi::validate_config(b.get()).ok());
    }
    // missing level-1 stratum
    {
        testing::ConfigBuilder b(1, {"A", "B"});
        b.stratum("A", {"A"}, {1, 0});
        CHECK_FALSE(wmi::validate_config(b.get()).ok());
    }
    // duplicate stratum id
    {
        testing::ConfigBuilder b(1, {"A"});
        b.stratum("A", {"A"}, {1, 0}).stratum("A", {"A"}, {1, 0});
        CHECK_FALSE(wmi::validate_config(b.get()).ok());
    }
    // incidence record missing entirely
    {
        testing::ConfigBuilder b(1, {"A", "B"});
        b.stratum("A", {"A"}, {1, 0})
            .stratum("B", {"B"}, {1, 0})
            .stratum("AB", {"A", "B"}, {1})
            .edge("AB", "A", "B");
        CHECK_FALSE(wmi::validate_config(b.get()).ok());
    }
}

TEST_CASE("validation checks the complex condition on supplied matrices") {
    CHECK(wmi::validate_config(threefold_builder().get()).ok());

    SncConfiguration cfg = threefold_builder().get();
    cfg.pullbacks[3].matrix(0, 0) = 2; // ABC <- AB block
    const auto rep = wmi::validate_config(cfg);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.message.find("complex condition violated") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validation reports missing pullback blocks") {
    SncConfiguration cfg = threefold_builder().get();
    cfg.pullbacks.pop_back(); // drop the ABC <- AB block
    const auto rep = wmi::validate_config(cfg);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.message.find("missing pullback block") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("two vertices joined by one edge: delta_1 = [-1, 1]") {
    testing::ConfigBuilder b(1, {"A", "B"});
    b.stratum("A", {"A"}, {1, 0})
        .stratum("B", {"B"}, {1, 0})
        .stratum("AB", {"A", "B"}, {1})
        .edge("AB", "A", "B")
        .edge("AB", "B", "A");
    const DeltaChain chain = wmi::delta_complex_q(b.get(), 0);
    REQUIRE(chain.deltas.size() == 1);
    REQUIRE(chain.deltas[0].rows() == 1);
    REQUIRE(chain.deltas[0].cols() == 2);
    CHECK(chain.deltas[0](0, 0) == -1);
    CHECK(chain.deltas[0](0, 1) == 1);
}

TEST_CASE("single component gives a one-term complex for every q") {
    testing::ConfigBuilder b(2, {"S"});
    b.stratum("S", {"S"}, {1, 2, 1});
    for (int q = 0; q <= 2; ++q) {
        const DeltaChain chain = wmi::delta_complex_q(b.get(), q);
        CHECK(chain.term_dims.size() == 1);
        CHECK(chain.deltas.empty());
    }
}

TEST_CASE("fixture: all q=1 differentials vanish on the node-curve resolution") {
    const SncConfiguration cfg = testing::load_fixture("two_cubics_nine_nodes.json");
    const DeltaChain chain = wmi::delta_complex_q(cfg, 1);
    CHECK(chain.term_dims == std::vector<long long>{2, 0});
    for (const auto& d : chain.deltas) CHECK(d.isZero());
    CHECK(wmi::graded_piece_dim(cfg, 1, 1) == 2);
}

TEST_CASE("graded piece examples") {
    CHECK(wmi::graded_piece_dim(testing::rational_cycle(4), 0, 1) == 1);

    testing::ConfigBuilder elliptic(1, {"E"});
    elliptic.stratum("E", {"E"}, {1, 1});
    CHECK(wmi::graded_piece_dim(elliptic.get(), 1, 1) == 1);
    CHECK(wmi::graded_piece_dim(elliptic.get(), 0, 1) == 0);

    CHECK(wmi::graded_piece_dim(testing::load_fixture("two_cubics_nine_nodes.json"), 1, 1) == 2);
}

TEST_CASE("graded piece query validation") {
    testing::ConfigBuilder b(1, {"E"});
    b.stratum("E", {"E"}, {1, 1});
    CHECK_THROWS_AS(wmi::graded_piece_dim(b.get(), -1, 0), wmi::InvalidInput);
    CHECK_THROWS_AS(wmi::graded_piece_dim(b.get(), 2, 1), wmi::InvalidInput);
    CHECK(wmi::graded_piece_dim(b.get(), 0, 9) == 0); // beyond the complex
}

TEST_CASE("hodge profile examples") {
    auto profile = wmi::hodge_0q_profile(testing::load_fixture("two_cubics_nine_nodes.json"), 1);
    REQUIRE(profile.size() == 2);
    CHECK(profile[0].dim == 8);
    CHECK(profile[1].dim == 2);

    testing::ConfigBuilder elliptic(1, {"E"});
    elliptic.stratum("E", {"E"}, {1, 1});
    profile = wmi::hodge_0q_profile(elliptic.get(), 1);
    CHECK(profile[0].dim == 0);
    CHECK(profile[1].dim == 1);

    profile = wmi::hodge_0q_profile(testing::rational_cycle(2), 1);
    CHECK(profile[0].dim == 1);
    CHECK(profile[1].dim == 0);
}

TEST_CASE("missing pullbacks yield insufficient-data, not guesses") {
    // two abelian-like surfaces glued along a genus-1 curve, no matrices:
    // the q=1 complex has nonzero terms at two consecutive positions
    testing::ConfigBuilder b(2, {"S1", "S2"});
    b.stratum("S1", {"S1"}, {1, 2, 1})
        .stratum("S2", {"S2"}, {1, 0, 0})
        .stratum("D", {"S1", "S2"}, {1, 1})
        .edge("D", "S1", "S2")
        .edge("D", "S2", "S1");
    CHECK_THROWS_AS(wmi::delta_complex_q(b.get(), 1), wmi::InsufficientHodgeData);
    CHECK_THROWS_AS(wmi::graded_piece_dim(b.get(), 1, 1), wmi::InsufficientHodgeData);

    const auto profile = wmi::hodge_0q_profile(b.get(), 2);
    REQUIRE(profile.size() == 3);
    CHECK(profile[0].dim.has_value());       // q=0 always available
    CHECK_FALSE(profile[1].dim.has_value()); // needs matrices
    CHECK(profile[2].dim == 1);              // top degree is forced: h^{0,2}(S1)
}

TEST_CASE("supplied pullback matrices are used exactly") {
    const SncConfiguration cfg = threefold_builder().get();
    const DeltaChain chain = wmi::delta_complex_q(cfg, 1);
    CHECK(chain.term_dims == std::vector<long long>{1, 2, 1});
    CHECK(wmi::graded_piece_dim(cfg, 1, 1) == 0);
    CHECK(wmi::graded_piece_dim(cfg, 1, 2) == 0);
    CHECK(wmi::graded_piece_dim(cfg, 1, 3) == 0);
    check_euler_identity(cfg, 1);
}

TEST_CASE("euler checksum holds on fixtures") {
    for (const char* name :
         {"two_cubics_nine_nodes.json", "simple_elliptic.json", "cusp_cycle.json",
          "elliptic_cone_blownup.json", "triple_point.json"}) {
        const SncConfiguration cfg = testing::load_fixture(name);
        for (int q = 0; q <= cfg.dim_g; ++q) {
            try {
                check_euler_identity(cfg, q);
            } catch (const wmi::InsufficientHodgeData&) {
                // nothing to check when the complex is undetermined
            }
        }
    }
}

TEST_CASE("euler checksum holds on random configurations") {
    std::mt19937 rng(2718281);
    for (int trial = 0; trial < 60; ++trial) {
        const SncConfiguration cfg = testing::random_snc_config(rng);
        REQUIRE(wmi::validate_config(cfg).ok());
        for (int q = 0; q <= cfg.dim_g; ++q) {
            try {
                check_euler_identity(cfg, q);
            } catch (const wmi::InsufficientHodgeData&) {
            }
        }
    }
}

TEST_CASE("top-degree piece is the component sum, independent of incidence") {
    // strata of level >= 2 have dimension below dim_g, so the top piece is
    // forced and counts the level-1 Hodge numbers only
    std::mt19937 rng(1729);
    for (int trial = 0; trial < 60; ++trial) {
        const SncConfiguration cfg = testing::random_snc_config(rng);
        long long expected = 0;
        for (const auto* s : cfg.strataAtLevel(1)) expected += s->h(cfg.dim_g);
        CHECK(wmi::graded_piece_dim(cfg, cfg.dim_g, cfg.dim_g) == expected);
    }
}

TEST_CASE("graded dimensions are invariant under component relabeling") {
    nlohmann::json j = testing::load_fixture("two_cubics_nine_nodes.json").toJson();
    // reverse the component order; subsets are labels, so nothing else moves
    auto comps = j["components"].get<std::vector<std::string>>();
    std::reverse(comps.begin(), comps.end());
    j["components"] = comps;
    const SncConfiguration permuted = SncConfiguration::fromJson(j);
    const SncConfiguration original = testing::load_fixture("two_cubics_nine_nodes.json");
    for (int t = 0; t <= 1; ++t)
        for (int q = 0; q <= t; ++q)
            CHECK(wmi::graded_piece_dim(permuted, q, t) ==
                  wmi::graded_piece_dim(original, q, t));
}

} // TEST_SUITE
