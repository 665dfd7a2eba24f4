#include "hive/solver.hpp"

#include <algorithm>
#include <limits>

namespace hive {

namespace {

constexpr int kFar = 1 << 20;

uint64_t tableKey(uint64_t boardHash, Color attacker) {
    return boardHash ^ (attacker == Color::Black ? 0x7b3ea4f1d2c5b697ULL : 0x1f83d9abfb41bd6bULL);
}

}  // namespace

Solver::Solver(SolverOptions opts) : opts_(opts) {}

void Solver::clearTable() { table_.clear(); }

// Lower bound on the plies the attacker needs before some defender queen is
// surrounded. Every empty ring hex needs a filling move on a distinct ply; a
// filler that needs t moves of its own cannot complete before ply 2t-1, plus
// one ply per piece stacked on top of it. Fills by either color count, so the
// bound stays sound under zugzwang. Returning a value above the remaining
// horizon prunes the node to "no win".
int Solver::minPliesToSurround(const Board& b, Color attacker) const {
    const Color defender = other(attacker);
    const auto& queens = b.queenHexes(defender);
    if (queens.empty()) return kFar;

    struct Unit {
        Hex at;
        Kind kind;
        int covers;    // pieces stacked above
        bool freeNow;  // top slider with an available first step
    };
    static thread_local std::vector<Unit> units;
    units.clear();
    bool anyHopperReserve = false;  // some hopper needing a setup ply exists
    for (const auto& [hex, st] : b.stacks()) {
        for (std::size_t l = 0; l < st.size(); ++l) {
            const Piece& p = st[l];
            const int covers = static_cast<int>(st.size() - 1 - l);
            bool freeNow = covers == 0;
            if (covers == 0 && st.size() == 1 &&
                (p.kind == Kind::Ant || p.kind == Kind::Spider || p.kind == Kind::Queen)) {
                freeNow = false;
                for (const Hex& n : neighbors(hex)) {
                    if (b.occupied(n)) continue;
                    if (canSlide(b, hex, n)) { freeNow = true; break; }
                }
            }
            if (p.kind == Kind::Grasshopper) anyHopperReserve = true;
            units.push_back({hex, p.kind, covers, freeNow});
        }
    }

    int best = kFar;
    for (const Hex& q : queens) {
        std::vector<Hex> empties;
        for (const Hex& n : neighbors(q))
            if (!b.occupied(n)) empties.push_back(n);
        if (empties.empty()) return 0;

        // Travel floor shared by all ring hexes (distance measured to the
        // queen, minus one for the ring).
        int tauCommon = kFar;
        for (const Unit& u : units) {
            const int dist = std::max(1, hexDistance(u.at, q) - 1);
            int ownMoves;
            switch (u.kind) {
                case Kind::Queen:
                case Kind::Beetle: ownMoves = dist; break;
                case Kind::Spider: ownMoves = (dist + 2) / 3; break;
                case Kind::Ant:
                case Kind::Grasshopper: ownMoves = 1; break;
            }
            int tau = 2 * ownMoves - 1 + u.covers;
            if (u.kind == Kind::Grasshopper) tau = std::max(tau, u.covers == 0 ? 3 : tau);
            if (!u.freeNow) tau = std::max(tau, 3 + u.covers);
            tauCommon = std::min(tauCommon, tau);
        }

        std::vector<int> taus;
        taus.reserve(empties.size());
        for (const Hex& x : empties) {
            int tau = tauCommon;
            // A hopper fills x on ply 1 only if a jump line into x already
            // exists: a grasshopper top somewhere in the contiguous run
            // behind x.
            bool rayReady = false;
            for (int d = 0; d < 6 && !rayReady; ++d) {
                const Hex step = kHexDirs[static_cast<std::size_t>(d)];
                Hex cur = x - step;
                int j = 1;
                while (b.occupied(cur)) {
                    if (j >= 2) {
                        auto top = b.topAt(cur);
                        if (top && top->kind == Kind::Grasshopper) { rayReady = true; break; }
                    }
                    cur = cur - step;
                    j++;
                }
            }
            if (rayReady) tau = 1;
            taus.push_back(tau);
        }
        std::sort(taus.begin(), taus.end(), std::greater<int>());
        int bound = 0;
        for (std::size_t i = 0; i < taus.size(); ++i)
            bound = std::max(bound, std::min(kFar, taus[i] + static_cast<int>(i)));
        best = std::min(best, bound);
        if (best <= 1) break;
    }
    (void)anyHopperReserve;
    return best;
}

bool Solver::search(Board& b, Color attacker, int depth, bool& tainted, std::vector<Move>* pv) {
    nodes_++;
    const Outcome o = outcome(b);
    if (o != Outcome::Ongoing) {
        if (pv) pv->clear();
        return (o == Outcome::BlackWins && attacker == Color::Black) ||
               (o == Outcome::WhiteWins && attacker == Color::White);
    }
    if (depth <= 0) return false;
    if (minPliesToSurround(b, attacker) > depth) return false;

    const uint64_t key = tableKey(b.hash(), attacker);
    Entry* entry = nullptr;
    if (opts_.useTT) {
        auto it = table_.find(key);
        if (it != table_.end()) {
            entry = &it->second;
            if (entry->win && entry->winPlies <= depth && !pv) return true;
            if (!entry->win && entry->noWinDepth >= depth) return false;
        }
    }

    for (uint64_t h : path_)
        if (h == b.hash()) { tainted = true; return false; }
    path_.push_back(b.hash());
    struct PathPop {
        std::vector<uint64_t>& p;
        ~PathPop() { p.pop_back(); }
    } pop{path_};

    std::vector<Move> moves = legalMoves(b);
    const bool attackerToMove = b.toMove() == attacker;

    // Immediate-win scan for the side to move: a move onto the sole empty
    // ring hex of an enemy queen usually ends the game on the spot. Resolving
    // these before recursing collapses both attack and defense subtrees.
    const Color mover = b.toMove();
    for (const Move& m : moves) {
        if (m.pass) continue;
        bool candidate = false;
        for (const Hex& q : b.queenHexes(other(mover))) {
            if (!adjacent(m.to, q)) continue;
            int empties = 0;
            for (const Hex& n : neighbors(q))
                if (!b.occupied(n)) empties++;
            if (empties == 1) { candidate = true; break; }
        }
        if (!candidate) continue;
        b.makeMove(m);
        const Outcome after = outcome(b);
        b.unmakeMove(m);
        const bool moverWins = (after == Outcome::BlackWins && mover == Color::Black) ||
                               (after == Outcome::WhiteWins && mover == Color::White);
        if (!moverWins) continue;
        const bool res = attackerToMove;  // attacker wins now, or defender escapes
        if (res && pv) {
            pv->clear();
            pv->push_back(m);
        }
        if (opts_.useTT) {
            Entry e;
            e.win = res;
            e.winPlies = 1;
            e.noWinDepth = 255;  // a defender counter-win holds at any horizon
            e.best = m;
            table_[key] = e;
        }
        return res;
    }

    const std::size_t pathDepth = path_.size() - 1;
    if (killers_.size() <= pathDepth) killers_.resize(pathDepth + 1);
    const Move killer = killers_[pathDepth];

    std::vector<std::pair<int, std::size_t>> order;
    order.reserve(moves.size());
    for (std::size_t i = 0; i < moves.size(); ++i) {
        int score = 0;
        if (entry && moves[i] == entry->best) score -= 1000;
        if (moves[i] == killer) score -= 500;
        if (!moves[i].pass) {
            if (attackerToMove) {
                // Ring-touching moves decide quickly on the attack.
                for (Color side : {Color::Black, Color::White}) {
                    for (const Hex& q : b.queenHexes(side))
                        if (adjacent(moves[i].to, q)) { score -= 10; break; }
                }
            } else {
                // Defenders survive by shuffling a free piece, not by lifting
                // tower tops; ground pieces first.
                if (b.heightAt(moves[i].from) == 1) score -= 10;
            }
        }
        order.emplace_back(score, i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& c) { return a.first < c.first; });

    bool result;
    bool childTaintAny = false;
    Move bestMove{};
    std::vector<Move> bestLine;
    if (attackerToMove) {
        result = false;
        for (const auto& [score, idx] : order) {
            const Move& m = moves[idx];
            if (opts_.nodeLimit && nodes_ > opts_.nodeLimit) { tainted = true; break; }
            b.makeMove(m);
            bool childTaint = false;
            std::vector<Move> line;
            const bool win = search(b, attacker, depth - 1, childTaint, pv ? &line : nullptr);
            b.unmakeMove(m);
            childTaintAny |= childTaint;
            if (win) {
                result = true;
                bestMove = m;
                if (pv) {
                    bestLine.push_back(m);
                    bestLine.insert(bestLine.end(), line.begin(), line.end());
                }
                break;
            }
        }
    } else {
        result = true;
        std::size_t longest = 0;
        for (const auto& [score, idx] : order) {
            const Move& m = moves[idx];
            if (opts_.nodeLimit && nodes_ > opts_.nodeLimit) { tainted = true; result = false; break; }
            b.makeMove(m);
            bool childTaint = false;
            std::vector<Move> line;
            const bool win = search(b, attacker, depth - 1, childTaint, pv ? &line : nullptr);
            b.unmakeMove(m);
            childTaintAny |= childTaint;
            if (!win) {
                result = false;
                bestMove = m;
                killers_[pathDepth] = m;
                break;
            }
            if (pv && line.size() + 1 > longest) {
                longest = line.size() + 1;
                bestLine.clear();
                bestLine.push_back(m);
                bestLine.insert(bestLine.end(), line.begin(), line.end());
            }
        }
    }

    if (!result && childTaintAny) tainted = true;

    if (opts_.useTT) {
        if (result) {
            Entry e;
            e.win = true;
            e.winPlies = static_cast<uint8_t>(std::min<std::size_t>(
                pv ? std::max<std::size_t>(bestLine.size(), 1) : static_cast<std::size_t>(depth), 255));
            e.best = bestMove;
            auto it = table_.find(key);
            if (it == table_.end() || !it->second.win || it->second.winPlies > e.winPlies)
                table_[key] = e;
        } else if (!tainted) {
            auto it = table_.find(key);
            if (it == table_.end() || (!it->second.win && it->second.noWinDepth < depth)) {
                Entry e;
                e.win = false;
                e.noWinDepth = static_cast<uint8_t>(std::min(depth, 255));
                e.best = bestMove;
                table_[key] = e;
            }
        }
    }
    if (pv && result) *pv = bestLine;
    return result;
}

bool Solver::attackerWins(const Board& b, Color attacker, int depth, std::vector<Move>* pv) {
    Board scratch = b;
    path_.clear();
    bool tainted = false;
    return search(scratch, attacker, depth, tainted, pv);
}

SearchResult Solver::solve(const Board& b, int maxDepth) {
    SearchResult res;
    for (int d = 1; d <= maxDepth; ++d) {
        for (Color c : {b.toMove(), other(b.toMove())}) {
            std::vector<Move> pv;
            if (attackerWins(b, c, d, &pv)) {
                res.proven = true;
                res.winner = c;
                res.plies = static_cast<int>(pv.size());
                res.pv = std::move(pv);
                res.nodes = nodes_;
                return res;
            }
        }
    }
    res.nodes = nodes_;
    return res;
}

bool Solver::refuted(const Board& b, const Move& m, int R) {
    Board child = apply(b, m);
    // Deepen gradually: most refutations are shallow tactics, and the
    // transposition table carries shallow results into deeper tries.
    for (int d = 1; d < R; d += 2)
        if (attackerWins(child, other(b.toMove()), d)) return true;
    return attackerWins(child, other(b.toMove()), R);
}

}  // namespace hive
