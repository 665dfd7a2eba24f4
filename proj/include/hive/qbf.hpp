#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hive::qbf {

enum class Quant : uint8_t { Exists, Forall };

// Prefix + CNF matrix. Variables are 1-based; literals are signed variable
// indices as in (Q)DIMACS.
struct QbfFormula {
    std::vector<std::pair<Quant, int>> prefix;
    std::vector<std::vector<int>> clauses;
    int numVars = 0;

    int clauseCount() const { return static_cast<int>(clauses.size()); }
    int literalCount() const {
        int r = 0;
        for (const auto& c : clauses) r += static_cast<int>(c.size());
        return r;
    }
    std::optional<Quant> quantifierOf(int var) const {
        for (const auto& [q, v] : prefix)
            if (v == var) return q;
        return std::nullopt;
    }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

QbfFormula parseQdimacs(const std::string& text);
std::string emitQdimacs(const QbfFormula& f);
std::string emitSexpr(const QbfFormula& f);

bool isAlternatingNormalized(const QbfFormula& f);

// Inserts fresh dummy variables so the prefix strictly alternates and both
// the first and last quantifier are Exists. Dummies never enter the matrix.
QbfFormula normalizeAlternating(const QbfFormula& f);

bool evalTqbf(const QbfFormula& f);

enum class FgPlayer : uint8_t { Exists, Forall };

inline const char* playerName(FgPlayer p) { return p == FgPlayer::Exists ? "Exists" : "Forall"; }

// Winner of the extended Formula Game: variable turns in prefix order, then
// the universal player picks a clause and the existential player picks a
// literal in it, winning iff the literal is true. Modeled as an explicit
// game, independent of evalTqbf. `probe` forces the opening variable choices.
FgPlayer formulaGameWinner(const QbfFormula& f, const std::vector<bool>& probe = {});

}  // namespace hive::qbf
