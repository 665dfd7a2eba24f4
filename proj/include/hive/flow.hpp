#pragma once

#include <map>
#include <string>
#include <vector>

#include "hive/gadgets.hpp"
#include "hive/solver.hpp"

namespace hive {

// Per-ply record of a scripted-flow walk: how many legal moves existed, which
// were refuted, and which scripted move was taken.
struct FlowStepRecord {
    int ply = 0;
    std::string mover;
    std::string chosen;
    int legalCount = 0;
    std::vector<std::string> unrefuted;  // printable unrefuted moves
};

struct FlowReport {
    bool conforms = false;
    std::string deviation;  // empty when conforming
    std::vector<FlowStepRecord> steps;
    uint64_t nodes = 0;
};

// A gadget planted in a test harness: entry stubs supply the incoming
// grasshoppers, exit stubs lead into quiet sinks so landings stay legal.
struct Harness {
    Board board;
    PlacedGadget placed;
    std::map<std::string, Piece> roles;     // role name -> concrete piece
    std::map<std::string, Piece> carriers;  // port name -> hopper serving it
    std::map<std::string, Hex> sinkLandings;
};

struct HarnessOptions {
    int chainLen = 3;
    int rotation = 0;
    bool flipColors = false;
    Hex origin{0, 0};
};

Harness buildHarness(const GadgetTemplate& t, const HarnessOptions& opts = {});

struct FlowOptions {
    int refutationDepth = 12;
    bool recordSteps = true;
};

// Walks the template's script inside a harness. At every scripted ply,
// asserts that the unrefuted legal moves are exactly the scripted ones: a
// single move on forced steps, the labeled branch set on choice steps.
// Branch continuations are each replayed to their end.
FlowReport checkGadgetFlow(const GadgetTemplate& t, const HarnessOptions& h,
                           const FlowOptions& f = {});

// Resolves one script option against the current position.
Move resolveScriptMove(const Board& b, const Harness& h, const ScriptOption& opt);

}  // namespace hive
