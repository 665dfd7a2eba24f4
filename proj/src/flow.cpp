#include "hive/flow.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <sstream>

namespace hive {

namespace {

// Chain filler for harness stubs. Spiders keep accidental leaks mild and
// carry no surround liability.
Piece chainJunk(Color c, std::array<std::array<uint16_t, 5>, 2>& ids) {
    return {c, Kind::Spider, ids[static_cast<int>(c)][static_cast<int>(Kind::Spider)]++};
}

void placePlug(Board& b, const Hex& at, Color topColor,
               std::array<std::array<uint16_t, 5>, 2>& ids) {
    const Color inner = other(topColor);
    b.place(at, {topColor, Kind::Spider, ids[static_cast<int>(topColor)][4]++});
    for (int i = 0; i < 3; ++i)
        b.place(at, {inner, Kind::Beetle, ids[static_cast<int>(inner)][1]++});
    b.place(at, {topColor, Kind::Beetle, ids[static_cast<int>(topColor)][1]++});
}

// Quiet chain terminator, placed off the jump line so landings never touch
// the armed hole: an anchor tower on the chain's flank, a queen two steps
// off the line, four more plug towers filling her ring, and the hole on the
// far side. Every plug top is priced by a popper reaching the hole within a
// couple of plies.
void placeCapCluster(Board& b, const Hex& last, Direction along, Color color,
                     std::array<std::array<uint16_t, 5>, 2>& ids) {
    // Offsets are written for `along` = east and rotated into place.
    const int k = (6 - along.index) % 6;
    auto at = [&](int q, int r) { return last + rotate60cw(Hex{q, r}, k); };
    const Hex plugAt[5] = {at(1, -1), at(3, -2), at(2, -3), at(1, -2), at(2, -1)};
    const Hex queenAt = at(2, -2);
    if (b.occupied(queenAt)) return;
    for (const Hex& p : plugAt)
        if (!b.occupied(p)) placePlug(b, p, color, ids);
    b.place(queenAt, {color, Kind::Queen, ids[static_cast<int>(color)][0]++});
}

}  // namespace

Harness buildHarness(const GadgetTemplate& t, const HarnessOptions& opts) {
    Harness h;
    h.placed = PlacedGadget{&t, opts.rotation, opts.origin, opts.flipColors};
    std::array<std::array<uint16_t, 5>, 2> ids{};
    auto roles = stampGadget(h.board, h.placed, ids);
    for (const auto& r : roles) h.roles[r.role] = r.piece;

    // Entry ports get a live carrier only when the script fires them; the
    // others carry a capped chain so their side stays anchored but silent.
    auto scriptFires = [&](const std::string& portName) {
        auto uses = [&](const std::vector<ScriptStep>& steps) {
            for (const auto& s : steps)
                for (const auto& o : s.options)
                    if (o.pieceRole == "@" + portName) return true;
            return false;
        };
        if (uses(t.script)) return true;
        for (const auto& [label, steps] : t.branches)
            if (uses(steps)) return true;
        return false;
    };

    for (const auto& rawPort : t.ports) {
        const PortSpec port = h.placed.mapPort(rawPort);
        const Hex step = port.dir.delta();
        const int len = std::max(opts.chainLen, rawPort.minChain);
        if (port.entry) {
            for (int k = 0; k < len; ++k) {
                const Hex at{port.attach.q - k * step.q, port.attach.r - k * step.r};
                if (h.board.occupied(at)) continue;
                h.board.place(at, chainJunk(k % 2 ? Color::Black : Color::White, ids));
            }
            const Hex perch{port.attach.q - len * step.q, port.attach.r - len * step.r};
            if (scriptFires(rawPort.name)) {
                const Color cc = h.placed.mapColor(port.color);
                Piece carrier{cc, Kind::Grasshopper,
                              ids[static_cast<int>(cc)][static_cast<int>(Kind::Grasshopper)]++};
                h.board.place(perch, carrier);
                h.carriers[rawPort.name] = carrier;
            } else {
                if (!h.board.occupied(perch))
                    h.board.place(perch, chainJunk(Color::White, ids));
                // Tops go to the other side: the silent entry's owner must be
                // able to pass in any lookahead, never forced to lift a top.
                placeCapCluster(h.board, perch, Direction{(port.dir.index + 3) % 6},
                                other(h.placed.mapColor(port.color)), ids);
            }
        } else {
            // Chain forward; a dead tower hangs off the last link, leaving
            // the jump line open so the exiting hopper can land past it.
            Hex last = port.attach;
            for (int k = 0; k < len; ++k) {
                const Hex at{port.attach.q + k * step.q, port.attach.r + k * step.r};
                last = at;
                if (h.board.occupied(at)) continue;
                h.board.place(at, chainJunk(k % 2 ? Color::White : Color::Black, ids));
            }
            placeCapCluster(h.board, last, port.dir, h.placed.mapColor(port.color), ids);
            h.sinkLandings[port.name] = last + step;
        }
    }
    return h;
}

Move resolveScriptMove(const Board& b, const Harness& h, const ScriptOption& opt) {
    Piece mover;
    if (!opt.pieceRole.empty() && opt.pieceRole[0] == '@') {
        auto it = h.carriers.find(opt.pieceRole.substr(1));
        if (it == h.carriers.end())
            throw std::logic_error("script references unknown port carrier " + opt.pieceRole);
        mover = it->second;
    } else {
        auto it = h.roles.find(opt.pieceRole);
        if (it == h.roles.end())
            throw std::logic_error("script references unknown role " + opt.pieceRole);
        mover = it->second;
    }
    auto from = b.findPiece(mover);
    if (!from) throw std::logic_error("script mover " + mover.name() + " is not on the board");

    Hex dest;
    if (!opt.exitPort.empty()) {
        const PortSpec* raw = h.placed.tmpl->port(opt.exitPort);
        if (!raw) throw std::logic_error("script references unknown port " + opt.exitPort);
        const PortSpec port = h.placed.mapPort(*raw);
        Hex cur = port.attach;
        const Hex step = port.dir.delta();
        while (b.occupied(cur)) cur = cur + step;
        dest = cur;
    } else {
        dest = h.placed.mapHex(opt.dest);
    }
    return Move{*from, dest, false};
}

namespace {

struct Walker {
    const Harness& harness;
    const FlowOptions& opts;
    Solver solver;
    FlowReport report;

    bool fail(const std::string& why) {
        report.conforms = false;
        report.deviation = why;
        return false;
    }

    bool runStep(Board& b, const ScriptStep& step) {
        std::vector<Move> scripted;
        for (const auto& o : step.options) scripted.push_back(resolveScriptMove(b, harness, o));

        const Color mover = b.toMove();
        for (const Move& m : scripted) {
            auto top = b.topAt(m.from);
            if (!top || top->owner != mover)
                return fail("scripted mover not available at ply " + std::to_string(b.ply()) +
                            ": " + moveToString(b, m));
        }

        std::vector<Move> legal = legalMoves(b);
        FlowStepRecord rec;
        rec.ply = b.ply();
        rec.legalCount = static_cast<int>(legal.size());
        auto topPiece = b.topAt(scripted[0].from);
        rec.mover = topPiece ? topPiece->name() : "?";

        std::vector<Move> unrefuted;
        {
            // Refutation checks are independent; fan them out over a pool of
            // workers, each with its own solver.
            std::vector<char> refutedFlags(legal.size(), 0);
            std::atomic<std::size_t> next{0};
            const unsigned workers =
                std::max(1u, std::min(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(legal.size())));
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    Solver local;
                    for (;;) {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= legal.size()) break;
                        refutedFlags[i] =
                            local.refuted(b, legal[i], opts.refutationDepth) ? 1 : 0;
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (std::size_t i = 0; i < legal.size(); ++i) {
                if (!refutedFlags[i]) {
                    unrefuted.push_back(legal[i]);
                    rec.unrefuted.push_back(moveToString(b, legal[i]));
                }
            }
        }

        // The unrefuted set must be exactly the scripted option set.
        if (unrefuted.size() != scripted.size())
            return fail("ply " + std::to_string(b.ply()) + ": expected " +
                        std::to_string(scripted.size()) + " unrefuted moves, found " +
                        std::to_string(unrefuted.size()) + listMoves(b, unrefuted));
        for (const Move& m : scripted) {
            if (std::find(unrefuted.begin(), unrefuted.end(), m) == unrefuted.end())
                return fail("ply " + std::to_string(b.ply()) + ": scripted move " +
                            moveToString(b, m) + " is refuted or illegal");
        }
        report.steps.push_back(rec);
        return true;
    }

    static std::string listMoves(const Board& b, const std::vector<Move>& ms) {
        std::string s = " [";
        for (std::size_t i = 0; i < ms.size(); ++i) {
            if (i) s += ", ";
            s += moveToString(b, ms[i]);
        }
        return s + "]";
    }

    bool walk(Board b) {
        const auto& t = *harness.placed.tmpl;
        for (std::size_t i = 0; i < t.script.size(); ++i) {
            const ScriptStep& step = t.script[i];
            if (!runStep(b, step)) return false;
            if (step.forced()) {
                b = apply(b, resolveScriptMove(b, harness, step.options[0]));
            } else {
                // A choice: replay every branch continuation.
                for (const auto& o : step.options) {
                    Board branchBoard = apply(b, resolveScriptMove(b, harness, o));
                    auto br = t.branches.find(o.label);
                    if (br != t.branches.end()) {
                        for (const auto& bs : br->second) {
                            if (!runStep(branchBoard, bs)) return false;
                            branchBoard = apply(branchBoard, resolveScriptMove(branchBoard, harness, bs.options[0]));
                        }
                    }
                }
                return true;  // branches exhaust the script
            }
        }
        return true;
    }
};

}  // namespace

FlowReport checkGadgetFlow(const GadgetTemplate& t, const HarnessOptions& hopts,
                           const FlowOptions& fopts) {
    Harness h = buildHarness(t, hopts);
    Walker w{h, fopts, Solver{}, FlowReport{}};
    w.report.conforms = true;
    if (t.script.empty()) {
        w.report.conforms = false;
        w.report.deviation = "template has no script";
        return w.report;
    }

    Board b = h.board;
    // First mover: the color of the first scripted option's piece.
    if (!t.script.empty()) {
        Move first = resolveScriptMove(b, h, t.script[0].options[0]);
        auto top = b.topAt(first.from);
        if (top) b.setToMove(top->owner);
    }
    b.setPly(0);
    if (!w.walk(b)) return w.report;
    w.report.nodes = w.solver.nodes();
    return w.report;
}

}  // namespace hive
