#include <doctest.h>

#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "gradedroots/cobordism.hpp"

using namespace gradedroots;

namespace {

bool is_identity(const HomologyMatrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

bool is_symplectic(const HomologyMatrix& m, const HomologyMatrix& form) {
    // m^T J m == J
    const int n = static_cast<int>(m.size());
    HomologyMatrix mt(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mt[i][j] = m[j][i];
    return multiply(mt, multiply(form, m)) == form;
}

MonodromyWord random_chain_word(std::mt19937_64& rng, int g, int len) {
    MonodromyWord w;
    w.genus = g;
    for (int i = 0; i < len; ++i) {
        int idx = 1 + static_cast<int>(rng() % (2 * g));
        int sign = (rng() % 2) ? 1 : -1;
        w.letters.push_back(Letter{CurveRef{CurveRef::Kind::Chain, idx, "", true}, sign});
    }
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("cobordism");

TEST_CASE("chain_relation_word") {
    MonodromyWord w1 = chain_relation_word(1);
    REQUIRE(w1.letters.size() == 12);  // (t_a1 t_a2)^6
    for (size_t i = 0; i < w1.letters.size(); ++i) {
        CHECK(w1.letters[i].sign == 1);
        CHECK(w1.letters[i].curve.chain_index == static_cast<int>(i % 2) + 1);
    }
    CHECK(chain_relation_word(2).letters.size() == 40);
}

TEST_CASE("chain relation acts trivially on first homology") {
    for (int g = 1; g <= 5; ++g) CHECK(is_identity(homology_action(chain_relation_word(g))));
}

TEST_CASE("homology_action basics") {
    MonodromyWord empty;
    empty.genus = 2;
    CHECK(is_identity(homology_action(empty)));

    MonodromyWord with_delta;
    with_delta.genus = 1;
    with_delta.letters.push_back(Letter{CurveRef{CurveRef::Kind::Boundary, 0, "", false}, 1});
    CHECK(is_identity(homology_action(with_delta)));

    MonodromyWord opaque;
    opaque.genus = 1;
    opaque.letters.push_back(Letter{CurveRef{CurveRef::Kind::Opaque, 0, "c", true}, 1});
    try {
        homology_action(opaque);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OpaqueCurve);
    }
}

TEST_CASE("homology actions are symplectic") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        int g = 1 + static_cast<int>(rng() % 3);
        MonodromyWord w = random_chain_word(rng, g, 1 + static_cast<int>(rng() % 10));
        CHECK(is_symplectic(homology_action(w), chain_intersection_form(g)));
    }
}

TEST_CASE("plan: empty word") {
    MonodromyWord empty;
    empty.genus = 1;
    CobordismPlan plan = plan_stein_cobordism(empty, 1);
    CHECK(plan.n0 == 0);
    CHECK(plan.n == 1);
    CHECK(plan.added_twists == 14);  // 2g + (4g+2)(2g)
    CHECK(plan.target == std::array<Int, 3>{2, 3, 7});
}

TEST_CASE("plan: one negative letter") {
    MonodromyWord w = parse_word("g=1; a1^-1");
    CobordismPlan plan = plan_stein_cobordism(w, 1);
    CHECK(plan.n0 == 0);
    CHECK(plan.added_twists == 15);  // 1 + 2 + 12
    REQUIRE(plan.moves.size() == 3);
    CHECK(plan.moves[0].type == Move::Type::CancelNegative);
    CHECK(plan.moves[1].type == Move::Type::AppendChain);
    CHECK(plan.moves[2].type == Move::Type::AppendDelta);
}

TEST_CASE("plan: one positive letter trades through the relation") {
    MonodromyWord w = parse_word("g=1; a1");
    CobordismPlan plan = plan_stein_cobordism(w, {});
    CHECK(plan.n0 == 1);
    CHECK(plan.n == 1);
    REQUIRE(plan.moves.size() >= 2);
    CHECK(plan.moves[0].type == Move::Type::TradePositive);
    CHECK(plan.moves[0].twists == 11);  // (4g+2)(2g) - 1
    CHECK(plan.added_twists == 11 + 2);
}

TEST_CASE("plan error paths") {
    MonodromyWord w = parse_word("g=1; a1 a2");
    try {
        plan_stein_cobordism(w, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NLessThanN0);  // n0 = 2
    }

    MonodromyWord sep = parse_word("g=2; Xs(curve)");
    try {
        plan_stein_cobordism(sep, {});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SeparatingCurve);
    }

    // boundary-parallel letters are separating; the planner refuses them
    MonodromyWord delta = parse_word("g=1; delta^-1");
    CHECK_THROWS_AS(plan_stein_cobordism(delta, {}), Error);
}

TEST_CASE("plan accepts nonseparating opaque curves") {
    MonodromyWord w = parse_word("g=2; X(foo) a3^-1 X(bar)^-1");
    CobordismPlan plan = plan_stein_cobordism(w, 2);
    CHECK(plan.n0 == 1);
    CHECK(plan.n == 2);
    // 2 cancellations + 1 trade + chain + 1 extra delta
    Int expected = 2 * 1 + 1 * (10 * 4 - 1) + 4 + 1 * (10 * 4);
    CHECK(plan.added_twists == expected);
}

TEST_CASE("plan is deterministic") {
    MonodromyWord w = parse_word("g=2; a1 a2^-1 a4 X(z)");
    CobordismPlan a = plan_stein_cobordism(w, 5);
    CobordismPlan b = plan_stein_cobordism(w, 5);
    REQUIRE(a.moves.size() == b.moves.size());
    for (size_t i = 0; i < a.moves.size(); ++i) {
        CHECK(a.moves[i].type == b.moves[i].type);
        CHECK(a.moves[i].position == b.moves[i].position);
        CHECK(a.moves[i].twists == b.moves[i].twists);
    }
}

TEST_CASE("twist-count formula verified by recount on random words") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        int g = 1 + static_cast<int>(rng() % 3);
        MonodromyWord w = random_chain_word(rng, g, static_cast<int>(rng() % 12));
        Int negatives = 0, positives = 0;
        for (const Letter& l : w.letters) (l.sign < 0 ? negatives : positives)++;
        Int n = positives + static_cast<Int>(rng() % 3);
        if (n < 1) n = 1;
        CobordismPlan plan = plan_stein_cobordism(w, n);

        Int recount = 0;
        for (const Move& m : plan.moves) {
            switch (m.type) {
                case Move::Type::CancelNegative: recount += 1; break;
                case Move::Type::TradePositive: recount += (4 * g + 2) * (2 * g) - 1; break;
                case Move::Type::AppendChain: recount += 2 * g; break;
                case Move::Type::AppendDelta: recount += m.count * (4 * g + 2) * (2 * g); break;
            }
        }
        Int formula = negatives + positives * ((4 * g + 2) * (2 * g) - 1) + 2 * g +
                      (n - positives) * (4 * g + 2) * (2 * g);
        CHECK(plan.added_twists == recount);
        CHECK(plan.added_twists == formula);
    }
}

TEST_CASE("completion acts like the normal form on homology") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int g = 1 + static_cast<int>(rng() % 3);
        MonodromyWord w = random_chain_word(rng, g, static_cast<int>(rng() % 8));
        Int positives = 0;
        for (const Letter& l : w.letters)
            if (l.sign > 0) ++positives;
        Int n = std::max<Int>(1, positives + static_cast<Int>(rng() % 2));
        CobordismPlan plan = plan_stein_cobordism(w, n);
        HomologyMatrix completed = homology_action_of_completion(w, plan);
        HomologyMatrix normal = homology_action(normal_form_word(g, n));
        CHECK(completed == normal);
    }
}

TEST_CASE("target_brieskorn") {
    CHECK(target_brieskorn(1, 1) == std::array<Int, 3>{2, 3, 7});
    CHECK(target_brieskorn(2, 1) == std::array<Int, 3>{2, 5, 11});
    CHECK(target_brieskorn(1, 2) == std::array<Int, 3>{2, 3, 13});
    for (Int g = 1; g <= 50; ++g)
        for (Int n = 1; n <= 50; ++n) {
            auto [p, q, r] = target_brieskorn(g, n);
            REQUIRE(std::gcd(p, q) == 1);
            REQUIRE(std::gcd(p, r) == 1);
            REQUIRE(std::gcd(q, r) == 1);
        }
}

TEST_CASE("word text format") {
    MonodromyWord w = parse_word("g=2; a1 a2^-1 X(foo) Xs(bar) delta");
    REQUIRE(w.letters.size() == 5);
    CHECK(w.genus == 2);
    CHECK(w.letters[0].curve.chain_index == 1);
    CHECK(w.letters[1].sign == -1);
    CHECK(w.letters[2].curve.name == "foo");
    CHECK(w.letters[2].curve.nonseparating);
    CHECK_FALSE(w.letters[3].curve.nonseparating);
    CHECK(w.letters[4].curve.kind == CurveRef::Kind::Boundary);

    CHECK(parse_word(word_to_string(w)) == w);

    for (const char* bad : {"a1 a2", "g=2 a1", "g=0; a1", "g=2; a9", "g=2; b3", "g=2; a1^2"}) {
        try {
            parse_word(bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    }
}

TEST_SUITE_END();
