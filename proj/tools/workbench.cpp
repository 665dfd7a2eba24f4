// Gadget design workbench: builds candidate structures and reports, per ply,
// which pieces can move and whether each move survives refutation search.
// Not part of the shipped CLI; a development aid.

#include <chrono>
#include <iostream>
#include <sstream>

#include "hive/flow.hpp"
#include "hive/gadgets.hpp"
#include "hive/movegen.hpp"
#include "hive/render.hpp"
#include "hive/solver.hpp"

using namespace hive;

namespace {

using Ids = std::array<std::array<uint16_t, 5>, 2>;

Piece mk(Ids& ids, Color c, Kind k) {
    return {c, k, ids[static_cast<int>(c)][static_cast<int>(k)]++};
}

// Mobility report: for each side, list legal moves and their refutation
// status at depth R.
void mobilityReport(const Board& base, int R, const std::string& title) {
    std::cout << "==== " << title << " (R=" << R << ") ====\n";
    std::cout << renderAscii(base);
    for (Color side : {Color::Black, Color::White}) {
        Board b = base;
        b.setToMove(side);
        if (outcome(b) != Outcome::Ongoing) {
            std::cout << "terminal: " << outcomeName(outcome(b)) << "\n";
            return;
        }
        auto moves = legalMoves(b);
        std::cout << "--- " << colorChar(side) << " to move: " << moves.size() << " legal\n";
        Solver solver;
        for (const auto& m : moves) {
            auto t0 = std::chrono::steady_clock::now();
            bool ref = solver.refuted(b, m, R);
            auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::cout << "  " << moveToString(b, m) << (ref ? "  REFUTED" : "  ** UNREFUTED **")
                      << "  (" << dt << "ms, nodes=" << solver.nodes() << ")\n";
        }
    }
}

// The "hole block": a white queen cluster whose single open hex is an armed
// trap. Center ant, six queens, six outer ants, holes at alternating outer
// positions -- here we place one full patch and audit it.
void quiltExperiment() {
    Board b;
    Ids ids{};
    const Hex c{0, 0};
    b.place(c, mk(ids, Color::White, Kind::Ant));
    for (const Hex& n : neighbors(c)) b.place(n, mk(ids, Color::White, Kind::Queen));
    const std::array<Hex, 6> di = {Hex{2, -1}, Hex{1, 1}, Hex{-1, 2},
                                   Hex{-2, 1}, Hex{-1, -1}, Hex{1, -2}};
    for (const Hex& d : di) b.place(d, mk(ids, Color::White, Kind::Ant));
    // Anchor chain heading east from the (2,-1) outer ant.
    b.place(Hex{3, -1}, mk(ids, Color::Black, Kind::Spider));
    b.place(Hex{4, -1}, mk(ids, Color::White, Kind::Spider));
    b.place(Hex{5, -1}, mk(ids, Color::Black, Kind::Spider));
    // Terminate with a black queen far out so outcome logic has both colors.
    b.place(Hex{6, -1}, mk(ids, Color::Black, Kind::Queen));
    b.place(Hex{7, -1}, mk(ids, Color::Black, Kind::Spider));
    b.place(Hex{8, -1}, mk(ids, Color::White, Kind::Spider));

    mobilityReport(b, 4, "quilt patch + anchor chain");
}

void templateFlow(const std::string& name, int R) {
    for (const GadgetTemplate* t : allTemplates()) {
        if (t->name != name) continue;
        HarnessOptions h;
        FlowOptions f;
        f.refutationDepth = R;
        Harness built = buildHarness(*t, h);
        std::cout << renderAscii(built.board);
        auto rep = checkGadgetFlow(*t, h, f);
        std::cout << "conforms: " << (rep.conforms ? "yes" : "NO") << "\n";
        if (!rep.conforms) std::cout << "deviation: " << rep.deviation << "\n";
        for (const auto& s : rep.steps) {
            std::cout << "  ply " << s.ply << " mover=" << s.mover << " legal=" << s.legalCount
                      << " unrefuted=";
            for (const auto& u : s.unrefuted) std::cout << u << " ";
            std::cout << "\n";
        }
        return;
    }
    std::cout << "no template named " << name << "\n";
}

void harnessMobility(const std::string& name, int R) {
    for (const GadgetTemplate* t : allTemplates()) {
        if (t->name != name) continue;
        Harness built = buildHarness(*t, {});
        mobilityReport(built.board, R, "harness: " + name);
        return;
    }
    std::cout << "no template named " << name << "\n";
}

// Applies the first `steps` scripted moves, then reports the refutation of
// the position: who wins within R and how.
void probe(const std::string& name, int R, int steps) {
    for (const GadgetTemplate* t : allTemplates()) {
        if (t->name != name) continue;
        Harness h = buildHarness(*t, {});
        Board b = h.board;
        Move first = resolveScriptMove(b, h, t->script[0].options[0]);
        auto top = b.topAt(first.from);
        if (top) b.setToMove(top->owner);
        for (int i = 0; i < steps && i < static_cast<int>(t->script.size()); ++i)
            b = apply(b, resolveScriptMove(b, h, t->script[static_cast<std::size_t>(i)].options[0]));
        std::cout << renderAscii(b);
        for (Color c : {Color::Black, Color::White}) {
            Solver solver;
            std::vector<Move> pv;
            bool win = solver.attackerWins(b, c, R, &pv);
            std::cout << colorChar(c) << " wins within " << R << ": " << (win ? "YES" : "no");
            if (win) {
                Board cur = b;
                for (const Move& m : pv) {
                    std::cout << "  " << moveToString(cur, m);
                    cur = apply(cur, m);
                }
            }
            std::cout << "\n";
        }
        return;
    }
    std::cout << "no template named " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string cmd = argc > 1 ? argv[1] : "quilt";
    int R = argc > 3 ? std::atoi(argv[3]) : 6;
    int steps = argc > 4 ? std::atoi(argv[4]) : 1;
    if (cmd == "quilt") {
        quiltExperiment();
    } else if (cmd == "flow" && argc > 2) {
        templateFlow(argv[2], R);
    } else if (cmd == "mob" && argc > 2) {
        harnessMobility(argv[2], R);
    } else if (cmd == "probe" && argc > 2) {
        probe(argv[2], R, steps);
    } else {
        std::cout << "usage: workbench quilt | flow <t> [R] | mob <t> [R] | probe <t> [R] [steps]\n";
    }
    return 0;
}
