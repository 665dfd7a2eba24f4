#pragma once

#include <unordered_set>
#include <vector>

#include "hive/board.hpp"

namespace hive {

using HexSet = std::unordered_set<Hex, HexHash>;

// Occupied hexes whose removal would disconnect the hive. Stacked hexes stay
// occupied when their top piece lifts, so they never appear here for the
// purpose of the One Hive test on the top piece.
HexSet articulationHexes(const Board& b);

// True iff lifting the top piece at `at` leaves the occupied-hex graph
// connected.
bool oneHiveOk(const Board& b, const Hex& at);

// Freedom to Move at ground level: the two hexes adjacent to both `from` and
// `to` are not both occupied, with the mover already lifted.
bool canSlide(const Board& b, const Hex& from, const Hex& to);

// Per-kind destination sets. Precondition: the top piece at `at` is of the
// matching kind and owned by b.toMove(); throws IllegalMove otherwise.
std::vector<Hex> queenMoves(const Board& b, const Hex& at);
std::vector<Hex> beetleMoves(const Board& b, const Hex& at);
std::vector<Hex> antMoves(const Board& b, const Hex& at);
std::vector<Hex> grasshopperMoves(const Board& b, const Hex& at);
std::vector<Hex> spiderMoves(const Board& b, const Hex& at);

// Slide witness paths for audit: every returned destination of a sliding kind
// comes with one legal step sequence (origin first, destination last).
std::vector<std::vector<Hex>> spiderPaths(const Board& b, const Hex& at);
std::vector<Hex> antPathTo(const Board& b, const Hex& from, const Hex& to);

std::vector<Move> movesForPiece(const Board& b, const Hex& at);
std::vector<Move> legalMoves(const Board& b);

bool isLegal(const Board& b, const Move& m);

// Checked application per the public contract: throws IllegalMove naming the
// violated rule. Returns the successor board.
Board apply(const Board& b, const Move& m);

std::string moveToString(const Board& b, const Move& m);
Move moveFromString(const Board& b, const std::string& text);

}  // namespace hive
