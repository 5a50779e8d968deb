// Acceptance suite: each criterion prints one pass/fail line and the
// process exits nonzero if any of them fails. All checks are exact
// integer comparisons; there are no tolerances anywhere.
//
// Usage: acceptance_tests [fixtures_dir]

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "support/oracles.hpp"
#include "support/random_config.hpp"
#include "wmi/bounds.hpp"
#include "wmi/cli.hpp"
#include "wmi/dual_complex.hpp"
#include "wmi/invariants.hpp"
#include "wmi/saito.hpp"
#include "wmi/snc_ideal.hpp"

using nlohmann::json;
using namespace wmi;

namespace {

std::string g_fixtures = "fixtures";
int g_failures = 0;

#define REQUIRE_EQ(a, b)                                                          \
    do {                                                                          \
        if (!((a) == (b)))                                                        \
            throw std::runtime_error(std::string(#a " != " #b " at line ") +     \
                                     std::to_string(__LINE__));                   \
    } while (0)

#define REQUIRE_TRUE(c)                                                           \
    do {                                                                          \
        if (!(c))                                                                 \
            throw std::runtime_error(std::string(#c " is false at line ") +      \
                                     std::to_string(__LINE__));                   \
    } while (0)

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] criterion " << number << ": " << name << "\n";
    } catch (const std::exception& e) {
        std::cout << "[FAIL] criterion " << number << ": " << name << " -- " << e.what()
                  << "\n";
        ++g_failures;
    }
}

SncConfiguration fixture(const std::string& name) {
    return SncConfiguration::loadFile(g_fixtures + "/" + name);
}

// 1. The threefold example: two transverse plane cubics plus nine node
//    curves; c-dims must report exactly 2 and 8 through the CLI path.
void example_reproduction() {
    std::ostringstream out, err;
    const int rc = run_cli({"c-dims", "--config", g_fixtures + "/two_cubics_nine_nodes.json", "--ambient",
                            "3", "--json"},
                           out, err);
    REQUIRE_EQ(rc, 0);
    const json j = json::parse(out.str());
    REQUIRE_EQ(j["dims"]["2"], 2);
    REQUIRE_EQ(j["dims"]["3"], 8);
}

// 2. Local SNC models against brute-force stratum-ideal intersections.
void snc_formula_equivalence() {
    for (int r = 0; r <= 5; ++r) {
        const int n = std::max(r, 1);
        for (int l = 0; l <= r; ++l)
            REQUIRE_TRUE(local_wmi_generators(r, l, n) == strata_union_ideal(r, l + 1, n));
    }
}

// 3. The weight chain is increasing.
void chain_property() {
    for (int r = 0; r <= 5; ++r) {
        const int n = std::max(r, 1);
        for (int l = 0; l < r; ++l)
            REQUIRE_TRUE(local_wmi_generators(r, l + 1, n)
                             .contains(local_wmi_generators(r, l, n)));
    }
}

// 4. Weighted-homogeneous formulas against the exhaustive box oracle.
void saito_oracle() {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        const WeightVector w = testing::random_weights(rng, 4, 8);
        for (bool strict : {false, true}) {
            const MonomialIdeal I = weighted_ideal(w, strict);
            REQUIRE_TRUE(I.generators() == testing::weighted_ideal_oracle(w, strict));
        }
        REQUIRE_EQ(is_log_canonical(w), weighted_ideal(w, false).isUnit());
    }
}

// 5. Node, plane cusp, elliptic cone.
void classical_table() {
    const auto node = wh_chain(WeightVector::parse("1/2,1/2,1/2"));
    REQUIRE_TRUE(node.adj.isUnit());
    REQUIRE_TRUE(node.i0.isUnit());

    const auto cusp = wh_chain(WeightVector::parse("1/2,1/3"));
    const auto maximal2 = MonomialIdeal::minimalize(2, {{1, 0}, {0, 1}});
    REQUIRE_TRUE(cusp.i0 == maximal2);
    REQUIRE_TRUE(cusp.adj == maximal2);

    const auto cone = wh_chain(WeightVector::parse("1/3,1/3,1/3"));
    const auto maximal3 = MonomialIdeal::minimalize(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE_TRUE(cone.i0.isUnit());
    REQUIRE_TRUE(cone.adj == maximal3);
    REQUIRE_EQ(adjoint_colength(WeightVector::parse("1/3,1/3,1/3")), 1);
}

// 6. Dual-complex Betti numbers equal the weight-0 graded pieces.
void dual_weight0_agreement() {
    std::mt19937 rng(424243);
    for (int trial = 0; trial < 100; ++trial) {
        const SncConfiguration cfg = testing::random_snc_config(rng);
        const auto betti = DualComplex::build(cfg).bettiNumbers();
        for (int k = 0; k <= cfg.dim_g; ++k)
            REQUIRE_EQ(betti[k], graded_piece_dim(cfg, 0, k));
    }
}

// 7. Type classification on the fixtures.
void type_classification() {
    const auto elliptic = classify_lc_type(c_dimensions(fixture("simple_elliptic.json"), 3), true);
    REQUIRE_TRUE(elliptic.kind == LcClassification::Kind::Type);
    REQUIRE_EQ(elliptic.hodge_q, 1);

    const auto cusp = classify_lc_type(c_dimensions(fixture("cusp_cycle.json"), 3), true);
    REQUIRE_TRUE(cusp.kind == LcClassification::Kind::Type);
    REQUIRE_EQ(cusp.hodge_q, 0);

    bool rejected = false;
    try {
        (void)classify_lc_type(c_dimensions(fixture("two_cubics_nine_nodes.json"), 3), true);
    } catch (const LcInconsistency&) {
        rejected = true;
    }
    REQUIRE_TRUE(rejected);
}

// 8. Sum identity and the per-q Euler checksum on every fixture with
//    complete data.
void sum_and_euler() {
    for (const char* name : {"two_cubics_nine_nodes.json", "simple_elliptic.json", "cusp_cycle.json",
                             "elliptic_cone_blownup.json", "triple_point.json"}) {
        const SncConfiguration cfg = fixture(name);
        const int ambient = cfg.dim_g + 2;
        const auto report = c_dimensions(cfg, ambient);
        REQUIRE_TRUE(report.total.has_value());
        long long profile_sum = 0;
        for (const auto& entry : hodge_0q_profile(cfg, ambient - 2)) {
            REQUIRE_TRUE(entry.dim.has_value());
            profile_sum += *entry.dim;
        }
        REQUIRE_EQ(*report.total, profile_sum);

        for (int q = 0; q <= cfg.dim_g; ++q) {
            const DeltaChain chain = delta_complex_q(cfg, q);
            long long terms = 0, pieces = 0;
            int sign = 1;
            for (std::size_t l = 0; l < chain.term_dims.size(); ++l) {
                terms += sign * chain.term_dims[l];
                pieces += sign * graded_piece_dim(cfg, q, q + static_cast<int>(l));
                sign = -sign;
            }
            REQUIRE_EQ(terms, pieces);
        }
    }
}

// 9. Bound formulas over the whole golden range.
void bounds_table() {
    REQUIRE_EQ(lc_special_point_bound(4, 3), 1);
    REQUIRE_EQ(nonrational_point_bound(4, 3), 4);
    for (long long d = 1; d <= 10; ++d)
        for (long long n = 2; n <= 6; ++n) {
            REQUIRE_EQ(surjectivity_threshold(2, d, n), d - n - 1);
            REQUIRE_EQ(surjectivity_threshold(1, d, n), d - n);
        }
}

// 10. Two resolutions of the elliptic cone give the same report.
void resolution_independence() {
    const auto minimal = c_dimensions(fixture("simple_elliptic.json"), 3);
    const auto blown_up = c_dimensions(fixture("elliptic_cone_blownup.json"), 3);
    REQUIRE_TRUE(minimal.dims == blown_up.dims);
    REQUIRE_TRUE(minimal.total == blown_up.total);
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_fixtures = argv[1];

    criterion(1, "node-curve example reproduction (dim C_2 = 2, dim C_3 = 8)",
              example_reproduction);
    criterion(2, "SNC local model equals the stratum ideal for r <= 5",
              snc_formula_equivalence);
    criterion(3, "weight chain is increasing for r <= 5", chain_property);
    criterion(4, "weighted ideal matches the exhaustive oracle (200 samples)", saito_oracle);
    criterion(5, "classical singularity table (node, cusp, elliptic cone)", classical_table);
    criterion(6, "dual-complex Betti numbers equal weight-0 pieces (100 samples)",
              dual_weight0_agreement);
    criterion(7, "type classification on the fixtures", type_classification);
    criterion(8, "sum identity and Euler checksum on the fixtures", sum_and_euler);
    criterion(9, "projective bounds golden table", bounds_table);
    criterion(10, "resolution independence regression", resolution_independence);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
