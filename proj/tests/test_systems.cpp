#include "random_models.hpp"

#include "pairstab/error.hpp"
#include "pairstab/stability.hpp"
#include "pairstab/systems.hpp"

#include <doctest.h>

using namespace pairstab;

namespace {

SystemModel worked(unsigned long gamma_prime = 0) {
    SystemModel m;
    m.sections = 2;
    m.hilbert = {2, 2};
    m.dim_x = 1;
    m.subobjects.push_back({RatPoly{2, 1}, gamma_prime, true});
    return m;
}

}  // namespace

TEST_CASE("check_system_semistable examples") {
    CHECK(check_system_semistable(worked(), {1}).status == Status::StrictlySemistable);
    CHECK(check_system_semistable(worked(), {2}).status == Status::Stable);
    CHECK(check_system_semistable(worked(), {Rational(1, 2)}).status == Status::Unstable);
    CHECK_THROWS_AS(check_system_semistable(worked(), {-1}), InvalidInput);
}

TEST_CASE("system validation") {
    SystemModel m = worked();
    m.sections = 0;
    CHECK_THROWS_AS(validate_system(m), InvalidInput);
    m = worked(3);
    CHECK_THROWS_AS(validate_system(m), InvalidInput);
    m = worked();
    m.subobjects[0].hilbert = m.hilbert;
    CHECK_THROWS_AS(validate_system(m), InvalidInput);
}

TEST_CASE("system_to_pair examples") {
    auto [pair, delta] = system_to_pair(worked(), {1});
    CHECK(delta == RatPoly{2});
    REQUIRE(pair.subobjects.size() == 1);
    CHECK_FALSE(pair.subobjects[0].contains_image);
    CHECK(check_semistable(pair, delta).status == Status::StrictlySemistable);

    auto [full, d2] = system_to_pair(worked(2), {1});
    CHECK(full.subobjects[0].contains_image);

    auto [zero, d0] = system_to_pair(worked(), {});
    CHECK(d0.is_zero());
}

TEST_CASE("product_weight examples") {
    CHECK(product_weight(2, 1, 4, 2) == 0);
    CHECK(product_weight(0, 0, 5, 3) == 0);
    CHECK(product_weight(1, 2, 3, 2) == -2);
    CHECK_THROWS_AS(product_weight(1, 0, 3, 0), InvalidInput);
}

TEST_CASE("schmitt_special_vectors examples") {
    const auto [first, second] = schmitt_special_vectors(1, 2, 2, 4);
    CHECK(first == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
    CHECK(second == std::vector<Rational>{Rational(-1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2)});
    const auto [zero, rest] = schmitt_special_vectors(0, 3, 1, 2);
    CHECK(zero == std::vector<Rational>(3, Rational(0)));
    CHECK(schmitt_pairing(1, 2, 2, 4) == Rational(0));
    CHECK_THROWS_AS(schmitt_special_vectors(3, 2, 0, 1), InvalidInput);
    CHECK_THROWS_AS(schmitt_special_vectors(1, 2, 5, 4), InvalidInput);
}

TEST_CASE("natural framing data exists exactly away from the degenerate corners") {
    CHECK_FALSE(natural_framing_columns(1, 2, 0, 4).has_value());
    CHECK_FALSE(natural_framing_columns(1, 2, 4, 4).has_value());
    CHECK(natural_framing_columns(2, 2, 4, 4).has_value());
    CHECK(natural_framing_columns(0, 2, 0, 4).has_value());
    CHECK(*natural_framing_columns(1, 3, 2, 5) == std::vector<std::size_t>{2, 5, 5});
}

TEST_CASE("git_system_check examples") {
    const RatPoly P{2, 2};
    CHECK(git_system_check(2, 0, 4, 2, P, {2, 1}, {1}));
    CHECK_FALSE(git_system_check(2, 0, 4, 2, P, {2, 1}, {1}, true));
    CHECK_FALSE(git_system_check(2, 2, 4, 2, P, {2, 1}, {1}));
    CHECK(git_system_check(0, 0, 4, 2, P, {}, {1}));
    CHECK_THROWS_AS(git_system_check(0, 0, 4, 0, P, {}, {1}), InvalidInput);
    CHECK_THROWS_AS(git_system_check(0, 0, 4, 2, {}, {}, {1}), InvalidInput);
}

TEST_CASE("git_system_check with j = dim Gamma' is the system inequality") {
    testgen::Rng rng(77);
    for (int k = 0; k < 200; ++k) {
        const auto inst = testgen::random_system(rng);
        const Verdict v = check_system_semistable(inst.model, inst.alpha);
        for (std::size_t i = 0; i < inst.model.subobjects.size(); ++i) {
            const auto& rec = inst.model.subobjects[i];
            if (!rec.saturated) continue;
            const bool holds = git_system_check(0, rec.sections_inside, 1, inst.model.sections,
                                                inst.model.hilbert, rec.hilbert, inst.alpha);
            bool violated = false;
            for (const auto& w : v.witnesses) violated = violated || (w.record == i && w.violated());
            CHECK(holds == !violated);
        }
    }
}

TEST_CASE("system walls on the worked example match the converted pair") {
    const SystemModel m = worked();
    const DeltaRay ray{{1}};
    const auto walls = system_walls(m, ray);
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].t == 1);
    auto [pair, delta] = system_to_pair(m, {1});
    const auto pair_walls = wall_ts(pair, DeltaRay{{2}});
    REQUIRE(pair_walls.size() == 1);
    CHECK(pair_walls[0].t == walls[0].t);
    const auto report = system_chamber_report(m, ray);
    CHECK(report.cell_at(Rational(1, 2)).status == Status::Unstable);
    CHECK(report.cell_at(1).status == Status::StrictlySemistable);
    CHECK(report.cell_at(2).status == Status::Stable);
}

TEST_CASE("system walls coincide with pair walls when Gamma' is 0 or Gamma") {
    testgen::Rng rng(78);
    for (int k = 0; k < 200; ++k) {
        auto inst = testgen::random_system(rng);
        for (auto& rec : inst.model.subobjects) {
            if (rec.sections_inside != inst.model.sections) rec.sections_inside = 0;
        }
        const RatPoly base = testgen::random_delta(rng, inst.model.dim_x, false, false);
        const auto sys = system_walls(inst.model, DeltaRay{base});
        auto [pair, delta] = system_to_pair(inst.model, base);
        const auto pw = wall_ts(pair, DeltaRay{delta});
        REQUIRE(sys.size() == pw.size());
        for (std::size_t w = 0; w < sys.size(); ++w) {
            CHECK(sys[w].t == pw[w].t);
            CHECK(sys[w].record == pw[w].record);
        }
    }
}
