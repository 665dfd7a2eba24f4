#include "hive/movegen.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hive {

namespace {

// The two hexes adjacent to both endpoints of a step.
std::pair<Hex, Hex> gateHexes(const Hex& from, const Hex& to) {
    const Hex d = to - from;
    int dir = -1;
    for (int i = 0; i < 6; ++i)
        if (kHexDirs[static_cast<std::size_t>(i)] == d) { dir = i; break; }
    if (dir < 0) throw std::invalid_argument("gateHexes: hexes not adjacent");
    const Hex left = from + kHexDirs[static_cast<std::size_t>((dir + 5) % 6)];
    const Hex right = from + kHexDirs[static_cast<std::size_t>((dir + 1) % 6)];
    return {left, right};
}

struct Lifted {
    const Board& b;
    Hex lifted;
    bool liftedEmpties;  // true when the lifted hex had height 1

    bool occ(const Hex& h) const {
        if (liftedEmpties && h == lifted) return false;
        return b.occupied(h);
    }
    int height(const Hex& h) const {
        int n = b.heightAt(h);
        if (h == lifted) n -= 1;
        return n;
    }
    bool adjacentToHive(const Hex& h) const {
        for (const Hex& n : neighbors(h))
            if (occ(n)) return true;
        return false;
    }
    // Ground-level slide step legality (gate + stay in touch with the hive).
    bool slideStep(const Hex& from, const Hex& to) const {
        if (occ(to)) return false;
        auto [g1, g2] = gateHexes(from, to);
        if (occ(g1) && occ(g2)) return false;
        return adjacentToHive(to);
    }
};

void requireOwnTop(const Board& b, const Hex& at, Kind kind) {
    auto top = b.topAt(at);
    if (!top) throw IllegalMove(RuleViolation::Turn, "no piece at " + coordString(at));
    if (top->owner != b.toMove())
        throw IllegalMove(RuleViolation::Turn, top->name() + " does not belong to the side to move");
    if (top->kind != kind)
        throw IllegalMove(RuleViolation::Kind, top->name() + " is not the expected kind");
}

// liftOk: may the top piece at `at` lift without splitting the hive? The
// articulation set, when supplied, answers in O(1).
bool liftOk(const Board& b, const Hex& at, const HexSet* articulation) {
    if (b.heightAt(at) > 1) return true;
    if (articulation) return articulation->count(at) == 0;
    return oneHiveOk(b, at);
}

std::vector<Hex> queenDests(const Board& b, const Hex& at, const HexSet* art) {
    std::vector<Hex> out;
    if (!liftOk(b, at, art)) return out;
    Lifted lifted{b, at, true};
    for (const Hex& n : neighbors(at))
        if (lifted.slideStep(at, n)) out.push_back(n);
    return out;
}

std::vector<Hex> beetleDests(const Board& b, const Hex& at, const HexSet* art) {
    std::vector<Hex> out;
    const int hFrom = b.heightAt(at);
    if (hFrom == 1 && !liftOk(b, at, art)) return out;
    Lifted lifted{b, at, hFrom == 1};
    for (const Hex& n : neighbors(at)) {
        const int hTo = lifted.height(n);
        // Stack gate: blocked only when both gate stacks tower strictly above
        // both the origin (minus the mover) and the destination.
        const int barrier = std::max(hFrom - 1, hTo);
        auto [g1, g2] = gateHexes(at, n);
        if (lifted.height(g1) > barrier && lifted.height(g2) > barrier) continue;
        if (hTo == 0 && hFrom == 1 && !lifted.adjacentToHive(n)) continue;
        out.push_back(n);
    }
    return out;
}

std::vector<Hex> grasshopperDests(const Board& b, const Hex& at, const HexSet* art) {
    std::vector<Hex> out;
    if (!liftOk(b, at, art)) return out;
    for (int d = 0; d < 6; ++d) {
        const Hex step = kHexDirs[static_cast<std::size_t>(d)];
        Hex cur = at + step;
        if (!b.occupied(cur)) continue;  // must jump over at least one piece
        while (b.occupied(cur)) cur = cur + step;
        out.push_back(cur);
    }
    return out;
}

std::vector<Hex> antDests(const Board& b, const Hex& at, const HexSet* art) {
    std::vector<Hex> out;
    if (!liftOk(b, at, art)) return out;
    Lifted lifted{b, at, true};
    HexSet seen{at};
    std::deque<Hex> frontier{at};
    while (!frontier.empty()) {
        Hex cur = frontier.front();
        frontier.pop_front();
        for (const Hex& n : neighbors(cur)) {
            if (seen.count(n) || !lifted.slideStep(cur, n)) continue;
            seen.insert(n);
            frontier.push_back(n);
            out.push_back(n);
        }
    }
    return out;
}

std::vector<std::vector<Hex>> spiderWalks(const Board& b, const Hex& at, const HexSet* art) {
    std::vector<std::vector<Hex>> paths;
    if (!liftOk(b, at, art)) return paths;
    Lifted lifted{b, at, true};
    std::vector<Hex> path{at};
    std::function<void()> dfs = [&]() {
        if (path.size() == 4) {
            paths.push_back(path);
            return;
        }
        const Hex cur = path.back();
        for (const Hex& n : neighbors(cur)) {
            if (std::find(path.begin(), path.end(), n) != path.end()) continue;
            if (!lifted.slideStep(cur, n)) continue;
            path.push_back(n);
            dfs();
            path.pop_back();
        }
    };
    dfs();
    return paths;
}

std::vector<Hex> spiderDests(const Board& b, const Hex& at, const HexSet* art) {
    std::vector<Hex> out;
    for (const auto& path : spiderWalks(b, at, art)) {
        if (std::find(out.begin(), out.end(), path.back()) == out.end())
            out.push_back(path.back());
    }
    return out;
}

std::vector<Move> pieceMoves(const Board& b, const Hex& at, const HexSet* art) {
    auto top = b.topAt(at);
    std::vector<Move> out;
    if (!top || top->owner != b.toMove()) return out;
    std::vector<Hex> dests;
    switch (top->kind) {
        case Kind::Queen: dests = queenDests(b, at, art); break;
        case Kind::Beetle: dests = beetleDests(b, at, art); break;
        case Kind::Ant: dests = antDests(b, at, art); break;
        case Kind::Grasshopper: dests = grasshopperDests(b, at, art); break;
        case Kind::Spider: dests = spiderDests(b, at, art); break;
    }
    out.reserve(dests.size());
    for (const Hex& d : dests) out.push_back(Move{at, d, false});
    return out;
}

}  // namespace

HexSet articulationHexes(const Board& b) {
    HexSet result;
    if (b.stacks().empty()) return result;
    std::unordered_map<Hex, int, HexHash> num, low;
    num.reserve(b.stacks().size() * 2);
    low.reserve(b.stacks().size() * 2);
    const Hex root = b.stacks().begin()->first;

    struct Frame {
        Hex node;
        Hex parent;
        int nextDir;
        int childCount;
    };
    std::vector<Frame> stack;
    int counter = 0;
    num[root] = low[root] = counter++;
    stack.push_back({root, root, 0, 0});

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.nextDir < 6) {
            const Hex nb = f.node + kHexDirs[static_cast<std::size_t>(f.nextDir)];
            f.nextDir++;
            if (!b.occupied(nb) || nb == f.parent) continue;
            auto it = num.find(nb);
            if (it != num.end()) {
                low[f.node] = std::min(low[f.node], it->second);
            } else {
                num[nb] = low[nb] = counter++;
                f.childCount++;
                stack.push_back({nb, f.node, 0, 0});
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.childCount > 1) result.insert(done.node);
            } else {
                Frame& par = stack.back();
                low[par.node] = std::min(low[par.node], low[done.node]);
                if (low[done.node] >= num[par.node] &&
                    !(par.node == root && par.parent == root))
                    result.insert(par.node);
            }
        }
    }
    // The root is an articulation point iff it has more than one DFS child;
    // that case was handled when its frame was popped. Non-root nodes use the
    // lowpoint criterion above, so remove any root inserted spuriously.
    return result;
}

bool oneHiveOk(const Board& b, const Hex& at) {
    if (!b.occupied(at)) throw std::invalid_argument("oneHiveOk: empty hex " + coordString(at));
    if (b.heightAt(at) > 1) return true;  // hex stays occupied by the piece below
    if (b.stackCount() == 1) return true;
    Hex start{};
    bool found = false;
    for (const auto& [hex, st] : b.stacks()) {
        if (hex != at) { start = hex; found = true; break; }
    }
    if (!found) return true;
    std::unordered_set<Hex, HexHash> seen{start};
    std::deque<Hex> frontier{start};
    while (!frontier.empty()) {
        Hex cur = frontier.front();
        frontier.pop_front();
        for (const Hex& n : neighbors(cur)) {
            if (n == at || !b.occupied(n) || seen.count(n)) continue;
            seen.insert(n);
            frontier.push_back(n);
        }
    }
    return seen.size() == b.stackCount() - 1;
}

bool canSlide(const Board& b, const Hex& from, const Hex& to) {
    if (!adjacent(from, to)) throw std::invalid_argument("canSlide: hexes not adjacent");
    Lifted lifted{b, from, b.heightAt(from) <= 1};
    auto [g1, g2] = gateHexes(from, to);
    return !(lifted.occ(g1) && lifted.occ(g2));
}

std::vector<Hex> queenMoves(const Board& b, const Hex& at) {
    requireOwnTop(b, at, Kind::Queen);
    return queenDests(b, at, nullptr);
}

std::vector<Hex> beetleMoves(const Board& b, const Hex& at) {
    requireOwnTop(b, at, Kind::Beetle);
    return beetleDests(b, at, nullptr);
}

std::vector<Hex> antMoves(const Board& b, const Hex& at) {
    requireOwnTop(b, at, Kind::Ant);
    return antDests(b, at, nullptr);
}

std::vector<Hex> grasshopperMoves(const Board& b, const Hex& at) {
    requireOwnTop(b, at, Kind::Grasshopper);
    return grasshopperDests(b, at, nullptr);
}

std::vector<Hex> spiderMoves(const Board& b, const Hex& at) {
    requireOwnTop(b, at, Kind::Spider);
    return spiderDests(b, at, nullptr);
}

std::vector<std::vector<Hex>> spiderPaths(const Board& b, const Hex& at) {
    requireOwnTop(b, at, Kind::Spider);
    return spiderWalks(b, at, nullptr);
}

std::vector<Hex> antPathTo(const Board& b, const Hex& from, const Hex& to) {
    Lifted lifted{b, from, true};
    std::unordered_map<Hex, Hex, HexHash> parent;
    parent[from] = from;
    std::deque<Hex> frontier{from};
    while (!frontier.empty()) {
        Hex cur = frontier.front();
        frontier.pop_front();
        if (cur == to) break;
        for (const Hex& n : neighbors(cur)) {
            if (parent.count(n) || !lifted.slideStep(cur, n)) continue;
            parent[n] = cur;
            frontier.push_back(n);
        }
    }
    std::vector<Hex> path;
    if (!parent.count(to)) return path;
    for (Hex cur = to; cur != from; cur = parent[cur]) path.push_back(cur);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Move> movesForPiece(const Board& b, const Hex& at) {
    return pieceMoves(b, at, nullptr);
}

std::vector<Move> legalMoves(const Board& b) {
    std::vector<Move> out;
    if (outcome(b) != Outcome::Ongoing) return out;
    const HexSet art = articulationHexes(b);
    for (const auto& [hex, st] : b.stacks()) {
        auto ms = pieceMoves(b, hex, &art);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    if (out.empty()) out.push_back(Move::makePass());
    return out;
}

bool isLegal(const Board& b, const Move& m) {
    if (m.pass) {
        auto ms = legalMoves(b);
        return ms.size() == 1 && ms[0].pass;
    }
    if (outcome(b) != Outcome::Ongoing) return false;
    auto ms = movesForPiece(b, m.from);
    return std::find(ms.begin(), ms.end(), m) != ms.end();
}

Board apply(const Board& b, const Move& m) {
    if (outcome(b) != Outcome::Ongoing)
        throw IllegalMove(RuleViolation::Turn, "game is over");
    if (m.pass) {
        if (!isLegal(b, m))
            throw IllegalMove(RuleViolation::Turn, "pass with legal moves available");
        Board next = b;
        next.makeMove(m);
        return next;
    }
    auto top = b.topAt(m.from);
    if (!top) throw IllegalMove(RuleViolation::Turn, "no piece at " + coordString(m.from));
    if (top->owner != b.toMove())
        throw IllegalMove(RuleViolation::Turn, top->name() + " belongs to the opponent");
    if (m.from == m.to) throw IllegalMove(RuleViolation::Kind, "null move");
    if (!isLegal(b, m)) {
        if (!oneHiveOk(b, m.from))
            throw IllegalMove(RuleViolation::OneHive, top->name() + " would split the hive");
        if (top->kind == Kind::Queen || top->kind == Kind::Ant || top->kind == Kind::Spider ||
            (top->kind == Kind::Beetle && adjacent(m.from, m.to))) {
            throw IllegalMove(RuleViolation::FreedomToMove,
                              top->name() + " cannot physically reach " + coordString(m.to));
        }
        throw IllegalMove(RuleViolation::Kind,
                          top->name() + " cannot move to " + coordString(m.to));
    }
    Board next = b;
    next.makeMove(m);
    return next;
}

std::string moveToString(const Board& b, const Move& m) {
    if (m.pass) return "PASS";
    auto top = b.topAt(m.from);
    std::string name = top ? top->name() : "??";
    return name + " " + coordString(m.to);
}

Move moveFromString(const Board& b, const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
    while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    if (trimmed == "PASS" || trimmed == "pass") return Move::makePass();
    std::istringstream in(trimmed);
    std::string pieceName, hexStr;
    if (!(in >> pieceName >> hexStr))
        throw std::invalid_argument("move syntax: '<owner><kind><id> q,r' or 'PASS'");
    if (pieceName.size() < 3) throw std::invalid_argument("bad piece name: " + pieceName);
    Piece p;
    if (pieceName[0] == 'B') p.owner = Color::Black;
    else if (pieceName[0] == 'W') p.owner = Color::White;
    else throw std::invalid_argument("owner must be B or W");
    p.kind = kindFromChar(pieceName[1]);
    p.id = static_cast<uint16_t>(std::stoi(pieceName.substr(2)));
    auto from = b.findPiece(p);
    if (!from) throw std::invalid_argument("piece not on board: " + pieceName);
    return Move{*from, hexFromString(hexStr), false};
}

}  // namespace hive
