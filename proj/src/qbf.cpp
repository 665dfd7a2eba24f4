#include "hive/qbf.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hive::qbf {

QbfFormula parseQdimacs(const std::string& text) {
    QbfFormula f;
    std::istringstream in(text);
    std::string lineText;
    int lineNo = 0;
    bool sawHeader = false;
    int declaredClauses = 0;
    bool prefixClosed = false;
    std::set<int> bound;

    while (std::getline(in, lineText)) {
        lineNo++;
        std::istringstream line(lineText);
        std::string first;
        if (!(line >> first)) continue;  // blank
        if (first == "c") continue;      // comment
        if (first == "p") {
            std::string fmt;
            if (!(line >> fmt >> f.numVars >> declaredClauses) || fmt != "cnf")
                throw ParseError(lineNo, "expected 'p cnf <vars> <clauses>'");
            if (f.numVars < 0 || declaredClauses < 0)
                throw ParseError(lineNo, "negative counts in header");
            sawHeader = true;
            continue;
        }
        if (!sawHeader) throw ParseError(lineNo, "clause or quantifier before 'p cnf' header");
        if (first == "e" || first == "a") {
            if (prefixClosed) throw ParseError(lineNo, "quantifier block after first clause");
            const Quant q = first == "e" ? Quant::Exists : Quant::Forall;
            int v;
            bool terminated = false;
            while (line >> v) {
                if (v == 0) { terminated = true; break; }
                if (v < 0 || v > f.numVars)
                    throw ParseError(lineNo, "variable out of range: " + std::to_string(v));
                if (!bound.insert(v).second)
                    throw ParseError(lineNo, "variable bound twice: " + std::to_string(v));
                f.prefix.emplace_back(q, v);
            }
            if (!terminated) throw ParseError(lineNo, "quantifier line missing terminating 0");
            continue;
        }
        // Clause line.
        prefixClosed = true;
        std::vector<int> clause;
        int lit;
        std::istringstream reread(lineText);
        bool terminated = false;
        while (reread >> lit) {
            if (lit == 0) { terminated = true; break; }
            const int var = lit < 0 ? -lit : lit;
            if (var > f.numVars)
                throw ParseError(lineNo, "literal out of range: " + std::to_string(lit));
            clause.push_back(lit);
        }
        if (!terminated) throw ParseError(lineNo, "clause missing terminating 0");
        if (clause.empty()) throw ParseError(lineNo, "empty clause");
        f.clauses.push_back(std::move(clause));
    }
    if (!sawHeader) throw ParseError(lineNo == 0 ? 1 : lineNo, "missing 'p cnf' header");
    if (static_cast<int>(f.clauses.size()) != declaredClauses)
        throw ParseError(lineNo, "clause count mismatch: declared " + std::to_string(declaredClauses) +
                                     ", found " + std::to_string(f.clauses.size()));
    for (const auto& clause : f.clauses)
        for (int lit : clause) {
            const int var = lit < 0 ? -lit : lit;
            if (!bound.count(var))
                throw ParseError(lineNo, "unbound variable in matrix: " + std::to_string(var));
        }
    return f;
}

std::string emitQdimacs(const QbfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.numVars << " " << f.clauses.size() << "\n";
    // Emit maximal same-quantifier blocks in prefix order.
    std::size_t i = 0;
    while (i < f.prefix.size()) {
        const Quant q = f.prefix[i].first;
        out << (q == Quant::Exists ? "e" : "a");
        while (i < f.prefix.size() && f.prefix[i].first == q) {
            out << " " << f.prefix[i].second;
            i++;
        }
        out << " 0\n";
    }
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

std::string emitSexpr(const QbfFormula& f) {
    std::ostringstream out;
    for (const auto& [q, v] : f.prefix)
        out << "(" << (q == Quant::Exists ? "exists" : "forall") << " v" << v << " ";
    out << "(and";
    for (const auto& clause : f.clauses) {
        out << " (or";
        for (int lit : clause) out << " " << (lit < 0 ? "(not v" + std::to_string(-lit) + ")" : "v" + std::to_string(lit));
        out << ")";
    }
    out << ")";
    for (std::size_t i = 0; i < f.prefix.size(); ++i) out << ")";
    out << "\n";
    return out.str();
}

bool isAlternatingNormalized(const QbfFormula& f) {
    if (f.prefix.empty()) return false;
    if (f.prefix.front().first != Quant::Exists || f.prefix.back().first != Quant::Exists)
        return false;
    for (std::size_t i = 1; i < f.prefix.size(); ++i)
        if (f.prefix[i].first == f.prefix[i - 1].first) return false;
    return true;
}

QbfFormula normalizeAlternating(const QbfFormula& f) {
    QbfFormula out;
    out.clauses = f.clauses;
    out.numVars = f.numVars;
    int fresh = f.numVars;
    Quant expected = Quant::Exists;
    for (const auto& [q, v] : f.prefix) {
        if (q != expected) {
            out.prefix.emplace_back(expected, ++fresh);
            expected = expected == Quant::Exists ? Quant::Forall : Quant::Exists;
        }
        out.prefix.emplace_back(q, v);
        expected = q == Quant::Exists ? Quant::Forall : Quant::Exists;
    }
    if (out.prefix.empty() || out.prefix.back().first == Quant::Forall)
        out.prefix.emplace_back(Quant::Exists, ++fresh);
    out.numVars = fresh;
    return out;
}

namespace {

bool clauseSatisfied(const std::vector<int>& clause, const std::vector<bool>& assign) {
    for (int lit : clause) {
        const int var = lit < 0 ? -lit : lit;
        const bool val = assign[static_cast<std::size_t>(var)];
        if (lit > 0 ? val : !val) return true;
    }
    return false;
}

bool matrixValue(const QbfFormula& f, const std::vector<bool>& assign) {
    for (const auto& clause : f.clauses)
        if (!clauseSatisfied(clause, assign)) return false;
    return true;
}

}  // namespace

bool evalTqbf(const QbfFormula& f) {
    std::vector<bool> assign(static_cast<std::size_t>(f.numVars) + 1, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == f.prefix.size()) return matrixValue(f, assign);
        const auto [q, v] = f.prefix[i];
        assign[static_cast<std::size_t>(v)] = false;
        const bool lo = rec(i + 1);
        if (q == Quant::Exists && lo) return true;
        if (q == Quant::Forall && !lo) return false;
        assign[static_cast<std::size_t>(v)] = true;
        return rec(i + 1);
    };
    return rec(0);
}

FgPlayer formulaGameWinner(const QbfFormula& f, const std::vector<bool>& probe) {
    if (probe.size() > f.prefix.size())
        throw std::invalid_argument("strategy probe longer than the quantifier prefix");
    std::vector<bool> assign(static_cast<std::size_t>(f.numVars) + 1, false);

    // Final two turns: Forall picks a clause, Exists picks a literal in it.
    auto endgame = [&]() -> FgPlayer {
        FgPlayer best = FgPlayer::Exists;  // no clause to pick: Forall is stuck
        for (const auto& clause : f.clauses) {
            FgPlayer clauseWinner = FgPlayer::Forall;  // Exists must find a true literal
            for (int lit : clause) {
                const int var = lit < 0 ? -lit : lit;
                const bool val = assign[static_cast<std::size_t>(var)];
                if (lit > 0 ? val : !val) { clauseWinner = FgPlayer::Exists; break; }
            }
            if (clauseWinner == FgPlayer::Forall) return FgPlayer::Forall;
            best = FgPlayer::Exists;
        }
        return best;
    };

    std::function<FgPlayer(std::size_t)> turn = [&](std::size_t i) -> FgPlayer {
        if (i == f.prefix.size()) return endgame();
        const auto [q, v] = f.prefix[i];
        if (i < probe.size()) {
            assign[static_cast<std::size_t>(v)] = probe[i];
            return turn(i + 1);
        }
        const FgPlayer chooser = q == Quant::Exists ? FgPlayer::Exists : FgPlayer::Forall;
        for (bool val : {false, true}) {
            assign[static_cast<std::size_t>(v)] = val;
            if (turn(i + 1) == chooser) return chooser;
        }
        return chooser == FgPlayer::Exists ? FgPlayer::Forall : FgPlayer::Exists;
    };
    return turn(0);
}

}  // namespace hive::qbf
