#include <doctest.h>

#include <random>

#include "hive/qbf.hpp"
#include "support/testutil.hpp"

using namespace hive::qbf;

namespace {

const char* kPaperExample =
    "p cnf 4 2\n"
    "e 1 0\n"
    "a 2 0\n"
    "e 3 0\n"
    "a 4 0\n"
    "1 -2 3 0\n"
    "2 -4 0\n";

QbfFormula randomFormula(std::mt19937_64& rng, int maxVars, int maxClauses) {
    QbfFormula f;
    f.numVars = 1 + static_cast<int>(rng() % static_cast<uint64_t>(maxVars));
    for (int v = 1; v <= f.numVars; ++v)
        f.prefix.emplace_back(rng() % 2 ? Quant::Exists : Quant::Forall, v);
    const int clauses = 1 + static_cast<int>(rng() % static_cast<uint64_t>(maxClauses));
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> clause;
        const int lits = 1 + static_cast<int>(rng() % 3);
        for (int l = 0; l < lits; ++l) {
            int var = 1 + static_cast<int>(rng() % static_cast<uint64_t>(f.numVars));
            clause.push_back(rng() % 2 ? var : -var);
        }
        f.clauses.push_back(clause);
    }
    return f;
}

}  // namespace

TEST_CASE("parser reads the smallest instance") {
    QbfFormula f = parseQdimacs("p cnf 1 1\ne 1 0\n1 0\n");
    CHECK(f.numVars == 1);
    REQUIRE(f.prefix.size() == 1);
    CHECK(f.prefix[0].first == Quant::Exists);
    CHECK(f.clauses == std::vector<std::vector<int>>{{1}});
    CHECK(evalTqbf(f));
}

TEST_CASE("parser reads the four-variable example") {
    QbfFormula f = parseQdimacs(kPaperExample);
    CHECK(f.numVars == 4);
    REQUIRE(f.prefix.size() == 4);
    CHECK(f.prefix[1].first == Quant::Forall);
    CHECK(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<int>{1, -2, 3});
    CHECK_FALSE(evalTqbf(f));  // clause (v2 or !v4) fails at v2=false, v4=true
}

TEST_CASE("parser errors carry line numbers") {
    CHECK_THROWS_AS(parseQdimacs("p cnf 1 1\ne 1 0\n0\n"), ParseError);       // empty clause
    CHECK_THROWS_AS(parseQdimacs("p cnf 2 1\ne 1 0\n1 2 0\n"), ParseError);   // unbound var
    CHECK_THROWS_AS(parseQdimacs("e 1 0\n1 0\n"), ParseError);                // missing header
    CHECK_THROWS_AS(parseQdimacs("p cnf 1 2\ne 1 0\n1 0\n"), ParseError);     // count mismatch
    try {
        parseQdimacs("p cnf 1 1\ne 1 0\n0\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("normalization inserts the forced dummies") {
    QbfFormula f;
    f.numVars = 1;
    f.prefix = {{Quant::Exists, 1}};
    f.clauses = {{1}};
    QbfFormula n = normalizeAlternating(f);
    CHECK(n.prefix == f.prefix);  // already alternating, ends in exists

    QbfFormula g;
    g.numVars = 1;
    g.prefix = {{Quant::Forall, 1}};
    g.clauses = {{1}};
    QbfFormula gn = normalizeAlternating(g);
    REQUIRE(gn.prefix.size() == 3);
    CHECK(gn.prefix[0].first == Quant::Exists);
    CHECK(gn.prefix[1] == std::pair<Quant, int>{Quant::Forall, 1});
    CHECK(gn.prefix[2].first == Quant::Exists);
    CHECK(gn.prefix[0].second != gn.prefix[2].second);
    CHECK(gn.clauses == g.clauses);

    QbfFormula p = parseQdimacs(kPaperExample);
    QbfFormula pn = normalizeAlternating(p);
    CHECK(pn.prefix.size() == 5);  // gains one trailing exists dummy
    CHECK(pn.prefix.back().first == Quant::Exists);
    CHECK(isAlternatingNormalized(pn));
    CHECK(evalTqbf(pn) == evalTqbf(p));
}

TEST_CASE("normalization preserves truth on random formulas") {
    std::mt19937_64 rng(hive::testutil::seed() ^ 0x9bf);
    for (int i = 0; i < 500; ++i) {
        QbfFormula f = randomFormula(rng, 6, 4);
        QbfFormula n = normalizeAlternating(f);
        CHECK(isAlternatingNormalized(n));
        CHECK(evalTqbf(n) == evalTqbf(f));
    }
}

TEST_CASE("eval basics") {
    QbfFormula f;
    f.numVars = 1;
    f.prefix = {{Quant::Exists, 1}};
    f.clauses = {{1}};
    CHECK(evalTqbf(f));
    f.clauses = {{1}, {-1}};
    CHECK_FALSE(evalTqbf(f));
}

TEST_CASE("formula game winner basics and probes") {
    QbfFormula f;
    f.numVars = 1;
    f.prefix = {{Quant::Exists, 1}};
    f.clauses = {{1}};
    CHECK(formulaGameWinner(f) == FgPlayer::Exists);
    CHECK(formulaGameWinner(f, {true}) == FgPlayer::Exists);
    CHECK(formulaGameWinner(f, {false}) == FgPlayer::Forall);
    CHECK_THROWS(formulaGameWinner(f, {true, false}));

    f.clauses = {{1}, {-1}};
    CHECK(formulaGameWinner(f) == FgPlayer::Forall);
}

TEST_CASE("formula game agrees with eval exhaustively on small formulas") {
    // All prefixes over up to 3 variables, up to 2 clauses, up to 3 literals
    // per clause (clauses deduplicated up to literal order).
    for (int nv = 1; nv <= 3; ++nv) {
        std::vector<std::vector<int>> clausePool;
        std::vector<int> lits;
        for (int v = 1; v <= nv; ++v) {
            lits.push_back(v);
            lits.push_back(-v);
        }
        std::vector<std::vector<int>> sizes;
        for (int a = 0; a < static_cast<int>(lits.size()); ++a) {
            clausePool.push_back({lits[a]});
            for (int b = a; b < static_cast<int>(lits.size()); ++b) {
                clausePool.push_back({lits[a], lits[b]});
                for (int c = b; c < static_cast<int>(lits.size()); ++c)
                    clausePool.push_back({lits[a], lits[b], lits[c]});
            }
        }
        for (int mask = 0; mask < (1 << nv); ++mask) {
            QbfFormula base;
            base.numVars = nv;
            for (int v = 1; v <= nv; ++v)
                base.prefix.emplace_back((mask >> (v - 1)) & 1 ? Quant::Forall : Quant::Exists, v);
            for (std::size_t c1 = 0; c1 < clausePool.size(); ++c1) {
                QbfFormula f = base;
                f.clauses = {clausePool[c1]};
                CHECK((formulaGameWinner(f) == FgPlayer::Exists) == evalTqbf(f));
                // A sparse sample of clause pairs keeps this quick.
                for (std::size_t c2 = c1; c2 < clausePool.size(); c2 += 7) {
                    QbfFormula g = base;
                    g.clauses = {clausePool[c1], clausePool[c2]};
                    CHECK((formulaGameWinner(g) == FgPlayer::Exists) == evalTqbf(g));
                }
            }
        }
    }
}

TEST_CASE("qdimacs round-trips through emit and parse") {
    std::mt19937_64 rng(hive::testutil::seed() ^ 0x5a5a);
    for (int i = 0; i < 200; ++i) {
        QbfFormula f = randomFormula(rng, 5, 4);
        QbfFormula back = parseQdimacs(emitQdimacs(f));
        CHECK(back.numVars == f.numVars);
        CHECK(back.prefix == f.prefix);
        CHECK(back.clauses == f.clauses);
    }
}
