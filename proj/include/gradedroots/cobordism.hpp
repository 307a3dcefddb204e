#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gradedroots/rational.hpp"

namespace gradedroots {

/// A simple closed curve on the genus-g one-boundary page: one of the
/// chain curves a_1..a_2g, the boundary-parallel curve, or an opaque
/// named curve whose only known property is (non)separation.
struct CurveRef {
    enum class Kind { Chain, Boundary, Opaque };
    Kind kind = Kind::Chain;
    int chain_index = 0;  // 1..2g for Chain
    std::string name;     // Opaque only
    bool nonseparating = true;

    bool operator==(const CurveRef&) const = default;
};

struct Letter {
    CurveRef curve;
    int sign = 1;  // +1 right-handed, -1 left-handed

    bool operator==(const Letter&) const = default;
};

struct MonodromyWord {
    int genus = 1;
    std::vector<Letter> letters;

    bool operator==(const MonodromyWord&) const = default;
};

/// (t_{a_1} ... t_{a_2g})^{4g+2}: the boundary twist as a positive word.
MonodromyWord chain_relation_word(int g);

/// (t_{a_1} ... t_{a_2g}) t_delta^n, the planner's target normal form.
MonodromyWord normal_form_word(int g, Int n);

struct Move {
    enum class Type { CancelNegative, TradePositive, AppendChain, AppendDelta };
    Type type;
    int position = -1;  // letter index for cancel/trade
    Int count = 1;      // AppendDelta repetition count
    Int twists = 0;     // right-handed twists this move inserts
};

struct CobordismPlan {
    MonodromyWord input;
    int genus = 1;
    Int n = 1;        // boundary twist count of the target normal form
    Int n0 = 0;       // number of positive letters in the input
    std::vector<Move> moves;
    Int added_twists = 0;
    std::array<Int, 3> target{};  // (2, 2g+1, (4g+2)n+1)
};

/// Rewrites the word into the normal form using only right-handed twist
/// insertions: negative letters are cancelled in place, positive letters
/// traded for boundary twists through the conjugated chain relation.
CobordismPlan plan_stein_cobordism(const MonodromyWord& word, std::optional<Int> n = std::nullopt);

using HomologyMatrix = std::vector<std::vector<Int>>;

HomologyMatrix identity_matrix(int dim);
HomologyMatrix multiply(const HomologyMatrix& a, const HomologyMatrix& b);

/// Symplectic intersection matrix of the chain basis a_1..a_2g.
HomologyMatrix chain_intersection_form(int g);

/// Transvection x -> x + <x,c> c of the twist about a curve of class c.
HomologyMatrix transvection(const HomologyMatrix& form, const std::vector<Int>& curve_class, int sign);

/// Action of the word on first homology (left-to-right product of
/// transvections). Opaque letters are rejected: their class is unknown.
HomologyMatrix homology_action(const MonodromyWord& word);

/// Action of the fully materialized plan output for pure-chain inputs:
/// trade blocks are realized through explicit chain-moving conjugators,
/// so the product is computed letter by letter rather than assumed.
HomologyMatrix homology_action_of_completion(const MonodromyWord& word, const CobordismPlan& plan);

std::array<Int, 3> target_brieskorn(Int g, Int n);

/// Text format: "g=2; a1 a2^-1 X(foo) Xs(bar) delta".
MonodromyWord parse_word(const std::string& text);
std::string word_to_string(const MonodromyWord& word);

}  // namespace gradedroots
