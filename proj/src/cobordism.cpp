#include "gradedroots/cobordism.hpp"

#include <numeric>
#include <sstream>

#include "gradedroots/errors.hpp"

namespace gradedroots {

namespace {

CurveRef chain(int i) { return CurveRef{CurveRef::Kind::Chain, i, "", true}; }

Int relation_length(int g) { return static_cast<Int>(4 * g + 2) * (2 * g); }

}  // namespace

MonodromyWord chain_relation_word(int g) {
    if (g < 1) throw Error(ErrorKind::BadRange, "genus must be >= 1");
    MonodromyWord w;
    w.genus = g;
    for (int rep = 0; rep < 4 * g + 2; ++rep)
        for (int i = 1; i <= 2 * g; ++i) w.letters.push_back(Letter{chain(i), +1});
    return w;
}

MonodromyWord normal_form_word(int g, Int n) {
    MonodromyWord w;
    w.genus = g;
    for (int i = 1; i <= 2 * g; ++i) w.letters.push_back(Letter{chain(i), +1});
    for (Int t = 0; t < n; ++t)
        w.letters.push_back(Letter{CurveRef{CurveRef::Kind::Boundary, 0, "", false}, +1});
    return w;
}

CobordismPlan plan_stein_cobordism(const MonodromyWord& word, std::optional<Int> n) {
    const int g = word.genus;
    if (g < 1) throw Error(ErrorKind::BadRange, "genus must be >= 1");

    CobordismPlan plan;
    plan.input = word;
    plan.genus = g;

    Int n0 = 0;
    for (const Letter& l : word.letters) {
        if (l.curve.kind == CurveRef::Kind::Boundary)
            throw Error(ErrorKind::SeparatingCurve, "boundary-parallel letters cannot be traded or cancelled");
        if (l.curve.kind == CurveRef::Kind::Opaque && !l.curve.nonseparating)
            throw Error(ErrorKind::SeparatingCurve, "opaque curve '" + l.curve.name + "' is flagged separating");
        if (l.sign > 0) ++n0;
    }
    plan.n0 = n0;
    plan.n = n ? *n : std::max<Int>(n0, 1);
    if (plan.n < n0)
        throw Error(ErrorKind::NLessThanN0,
                    "requested n = " + std::to_string(plan.n) + " below n0 = " + std::to_string(n0));

    // left to right: cancel each negative letter, trade each positive one
    for (int pos = 0; pos < static_cast<int>(word.letters.size()); ++pos) {
        const Letter& l = word.letters[pos];
        if (l.sign < 0)
            plan.moves.push_back(Move{Move::Type::CancelNegative, pos, 1, 1});
        else
            plan.moves.push_back(Move{Move::Type::TradePositive, pos, 1, relation_length(g) - 1});
    }
    plan.moves.push_back(Move{Move::Type::AppendChain, -1, 1, 2 * g});
    if (plan.n > n0)
        plan.moves.push_back(Move{Move::Type::AppendDelta, -1, plan.n - n0, relation_length(g)});

    plan.added_twists = 0;
    for (const Move& m : plan.moves) plan.added_twists += m.twists * (m.type == Move::Type::AppendDelta ? m.count : 1);
    plan.target = target_brieskorn(g, plan.n);
    return plan;
}

// ---------------------------------------------------------------------------
// Homology

HomologyMatrix identity_matrix(int dim) {
    HomologyMatrix m(dim, std::vector<Int>(dim, 0));
    for (int i = 0; i < dim; ++i) m[i][i] = 1;
    return m;
}

HomologyMatrix multiply(const HomologyMatrix& a, const HomologyMatrix& b) {
    const int n = static_cast<int>(a.size());
    HomologyMatrix out(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

HomologyMatrix chain_intersection_form(int g) {
    HomologyMatrix j(2 * g, std::vector<Int>(2 * g, 0));
    for (int i = 0; i + 1 < 2 * g; ++i) {
        j[i][i + 1] = 1;
        j[i + 1][i] = -1;
    }
    return j;
}

HomologyMatrix transvection(const HomologyMatrix& form, const std::vector<Int>& c, int sign) {
    const int n = static_cast<int>(form.size());
    std::vector<Int> jc(n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) jc[i] += form[i][k] * c[k];
    HomologyMatrix m = identity_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m[i][k] += sign * c[i] * jc[k];
    return m;
}

namespace {

std::vector<Int> basis_vector(int dim, int index) {
    std::vector<Int> v(dim, 0);
    v[index] = 1;
    return v;
}

HomologyMatrix letter_action(const HomologyMatrix& form, int g, const Letter& l) {
    switch (l.curve.kind) {
        case CurveRef::Kind::Boundary:
            return identity_matrix(2 * g);  // null-homologous
        case CurveRef::Kind::Chain:
            return transvection(form, basis_vector(2 * g, l.curve.chain_index - 1), l.sign);
        case CurveRef::Kind::Opaque:
            throw Error(ErrorKind::OpaqueCurve, "homology class of '" + l.curve.name + "' is unknown");
    }
    throw Error(ErrorKind::Internal, "unreachable");
}

std::vector<Int> matrix_apply(const HomologyMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t k = 0; k < m.size(); ++k) out[i] += m[i][k] * v[k];
    return out;
}

}  // namespace

HomologyMatrix homology_action(const MonodromyWord& word) {
    const int g = word.genus;
    if (g < 1) throw Error(ErrorKind::BadRange, "genus must be >= 1");
    HomologyMatrix form = chain_intersection_form(g);
    HomologyMatrix acc = identity_matrix(2 * g);
    for (const Letter& l : word.letters) acc = multiply(acc, letter_action(form, g, l));
    return acc;
}

HomologyMatrix homology_action_of_completion(const MonodromyWord& word, const CobordismPlan& plan) {
    const int g = word.genus;
    HomologyMatrix form = chain_intersection_form(g);

    // the mapping class t_{a_{j+1}} t_{a_j} carries the curve a_{j+1} to a_j,
    // so composing them walks a_{2g} down the chain to any a_i
    auto conjugator_to = [&](int i) {
        HomologyMatrix psi = identity_matrix(2 * g);
        for (int j = i; j <= 2 * g - 1; ++j) {
            HomologyMatrix mj = multiply(transvection(form, basis_vector(2 * g, j), +1),
                                         transvection(form, basis_vector(2 * g, j - 1), +1));
            psi = multiply(psi, mj);
        }
        return psi;
    };

    HomologyMatrix acc = identity_matrix(2 * g);
    size_t move_idx = 0;
    for (int pos = 0; pos < static_cast<int>(word.letters.size()); ++pos, ++move_idx) {
        const Letter& l = word.letters[pos];
        if (l.curve.kind != CurveRef::Kind::Chain)
            throw Error(ErrorKind::OpaqueCurve, "completion can only be materialized for pure-chain words");
        const Move& move = plan.moves.at(move_idx);
        if (l.sign < 0) {
            if (move.type != Move::Type::CancelNegative || move.position != pos)
                throw Error(ErrorKind::Internal, "plan does not match the word");
            // inserted t_c immediately followed by the original t_c^{-1}
            acc = multiply(acc, transvection(form, basis_vector(2 * g, l.curve.chain_index - 1), +1));
            acc = multiply(acc, letter_action(form, g, l));
        } else {
            if (move.type != Move::Type::TradePositive || move.position != pos)
                throw Error(ErrorKind::Internal, "plan does not match the word");
            // conjugated chain relation, last letter of which is the original one
            HomologyMatrix psi = conjugator_to(l.curve.chain_index);
            Int to_emit = relation_length(g) - 1;
            for (Int t = 0; t < to_emit; ++t) {
                int j = static_cast<int>(t % (2 * g));
                acc = multiply(acc, transvection(form, matrix_apply(psi, basis_vector(2 * g, j)), +1));
            }
            acc = multiply(acc, letter_action(form, g, l));
        }
    }
    // appended chain word; boundary twists act trivially
    for (int j = 1; j <= 2 * g; ++j)
        acc = multiply(acc, transvection(form, basis_vector(2 * g, j - 1), +1));
    for (const Move& m : plan.moves)
        if (m.type == Move::Type::AppendDelta)
            for (Int rep = 0; rep < m.count; ++rep)
                for (const Letter& l : chain_relation_word(g).letters)
                    acc = multiply(acc, letter_action(form, g, l));
    return acc;
}

std::array<Int, 3> target_brieskorn(Int g, Int n) {
    if (g < 1 || n < 1) throw Error(ErrorKind::BadRange, "need g, n >= 1");
    return {2, 2 * g + 1, (4 * g + 2) * n + 1};
}

// ---------------------------------------------------------------------------
// Text format

MonodromyWord parse_word(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw Error(ErrorKind::ParseError, "missing ';' after the genus header");
    std::string head = text.substr(0, semi);
    auto eq = head.find('=');
    if (eq == std::string::npos || head.substr(0, eq).find('g') == std::string::npos)
        throw Error(ErrorKind::ParseError, "word must start with 'g=<genus>;'");
    int g = 0;
    try {
        g = std::stoi(head.substr(eq + 1));
    } catch (...) {
        throw Error(ErrorKind::ParseError, "bad genus in word header");
    }
    if (g < 1) throw Error(ErrorKind::ParseError, "genus must be >= 1");

    MonodromyWord w;
    w.genus = g;
    std::istringstream is(text.substr(semi + 1));
    std::string tok;
    while (is >> tok) {
        int sign = 1;
        auto caret = tok.find('^');
        std::string base = tok;
        if (caret != std::string::npos) {
            base = tok.substr(0, caret);
            std::string exp = tok.substr(caret + 1);
            if (exp == "-1")
                sign = -1;
            else if (exp == "1" || exp == "+1")
                sign = 1;
            else
                throw Error(ErrorKind::ParseError, "exponent must be ^1 or ^-1 in '" + tok + "'");
        }
        CurveRef curve;
        if (base == "delta") {
            curve = CurveRef{CurveRef::Kind::Boundary, 0, "", false};
        } else if (base.size() >= 2 && base[0] == 'a') {
            int idx = 0;
            try {
                idx = std::stoi(base.substr(1));
            } catch (...) {
                throw Error(ErrorKind::ParseError, "bad chain curve '" + base + "'");
            }
            if (idx < 1 || idx > 2 * g)
                throw Error(ErrorKind::ParseError, "chain index out of range in '" + base + "'");
            curve = CurveRef{CurveRef::Kind::Chain, idx, "", true};
        } else if ((base.rfind("X(", 0) == 0 || base.rfind("Xs(", 0) == 0) && base.back() == ')') {
            bool separating = base.rfind("Xs(", 0) == 0;
            size_t open = base.find('(');
            curve = CurveRef{CurveRef::Kind::Opaque, 0, base.substr(open + 1, base.size() - open - 2), !separating};
        } else {
            throw Error(ErrorKind::ParseError, "unrecognized letter '" + tok + "'");
        }
        w.letters.push_back(Letter{curve, sign});
    }
    return w;
}

std::string word_to_string(const MonodromyWord& word) {
    std::ostringstream os;
    os << "g=" << word.genus << ";";
    for (const Letter& l : word.letters) {
        os << " ";
        switch (l.curve.kind) {
            case CurveRef::Kind::Chain: os << "a" << l.curve.chain_index; break;
            case CurveRef::Kind::Boundary: os << "delta"; break;
            case CurveRef::Kind::Opaque: os << (l.curve.nonseparating ? "X(" : "Xs(") << l.curve.name << ")"; break;
        }
        if (l.sign < 0) os << "^-1";
    }
    return os.str();
}

}  // namespace gradedroots
