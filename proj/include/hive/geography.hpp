#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hive/qbf.hpp"

namespace hive::geo {

enum class Role : uint8_t {
    None,
    Start,
    DiamondLower,
    DiamondUpper,
    DiamondRight,
    DiamondLeft,
    ClauseHub,
    Clause,
    Literal,
    Padding,
};

std::string roleName(Role r);

struct RoleTag {
    Role role = Role::None;
    int index = 0;  // variable index, clause index, or literal-occurrence id
};

// Directed graph for Generalized Geography. No self-loops, no parallel edges.
struct GeoGraph {
    std::vector<std::string> labels;
    std::vector<RoleTag> roles;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;
    int start = 0;

    int nodeCount() const { return static_cast<int>(labels.size()); }
    int addNode(const std::string& label, RoleTag tag = {});
    void addEdge(int from, int to);
    int indegree(int v) const { return static_cast<int>(in[static_cast<std::size_t>(v)].size()); }
    int outdegree(int v) const { return static_cast<int>(out[static_cast<std::size_t>(v)].size()); }

    std::string toDot() const;
    std::string toJson() const;
    static GeoGraph fromJson(const std::string& text);
};

enum class GgPlayer : uint8_t { One, Two };

inline const char* ggPlayerName(GgPlayer p) { return p == GgPlayer::One ? "Player1" : "Player2"; }

// Winner under optimal play. Player 1 moves first from the start node, which
// begins marked; a player with no unmarked successor available loses.
GgPlayer ggWinner(const GeoGraph& g);

// The Formula Game -> GG reduction: a chain of diamond gadgets for the
// prefix, a clause-hub node with one edge per clause, literal-occurrence
// nodes, and return edges into the diamonds (positive literals to the lower
// node, negated ones to the upper node). Requires an alternating-normalized
// formula.
GeoGraph fgToGg(const qbf::QbfFormula& f);

// GeoGraph whose degree bounds have been certified on construction:
// indegree <= 2, outdegree <= 2, total degree <= 3.
struct FggGraph {
    GeoGraph graph;
    explicit FggGraph(GeoGraph g);
};

// Winner-preserving degree reduction. Wide fan-ins/fan-outs become merge
// chains whose every rerouted path has even added length, so turn parity at
// every original node is unchanged; (2,2)-nodes split into an in-node, a
// forced pad, and an out-node.
FggGraph reduceDegree(const GeoGraph& g);

FggGraph makeFgg(const qbf::QbfFormula& f);

}  // namespace hive::geo
