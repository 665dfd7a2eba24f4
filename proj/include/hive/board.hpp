#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hive/hex.hpp"

namespace hive {

enum class Color : uint8_t { Black = 0, White = 1 };

inline Color other(Color c) { return c == Color::Black ? Color::White : Color::Black; }
inline char colorChar(Color c) { return c == Color::Black ? 'B' : 'W'; }

enum class Kind : uint8_t { Queen = 0, Beetle = 1, Ant = 2, Grasshopper = 3, Spider = 4 };

char kindChar(Kind k);
Kind kindFromChar(char c);

// Identity-tracked piece. `id` is unique per (owner, kind) so gadget role
// maps can follow individual pieces across moves.
struct Piece {
    Color owner = Color::Black;
    Kind kind = Kind::Queen;
    uint16_t id = 0;

    uint32_t code() const {
        return (static_cast<uint32_t>(owner) << 19) | (static_cast<uint32_t>(kind) << 16) | id;
    }
    std::string name() const;  // e.g. "BG3"

    friend bool operator==(const Piece& a, const Piece& b) {
        return a.owner == b.owner && a.kind == b.kind && a.id == b.id;
    }
    friend bool operator!=(const Piece& a, const Piece& b) { return !(a == b); }
};

struct Move {
    Hex from{};
    Hex to{};
    bool pass = false;

    static Move makePass() { Move m; m.pass = true; return m; }
    friend bool operator==(const Move& a, const Move& b) {
        if (a.pass || b.pass) return a.pass == b.pass;
        return a.from == b.from && a.to == b.to;
    }
    friend bool operator!=(const Move& a, const Move& b) { return !(a == b); }
};

enum class Outcome : uint8_t { Ongoing, BlackWins, WhiteWins, Draw };

std::string outcomeName(Outcome o);

// Rule violated by a rejected move; used in error messages.
enum class RuleViolation { OneHive, FreedomToMove, Kind, Turn };

std::string ruleName(RuleViolation v);

struct IllegalMove : std::runtime_error {
    RuleViolation rule;
    explicit IllegalMove(RuleViolation v, const std::string& detail)
        : std::runtime_error("illegal move (" + ruleName(v) + "): " + detail), rule(v) {}
};

using Stack = std::vector<Piece>;  // bottom -> top

// Hive board for positions with every piece already on the table.
// Placement-phase rules are out of scope; boards are built directly.
class Board {
  public:
    Board() = default;

    // Construction: pushes on top of the stack at `at` (no rule checks).
    void place(const Hex& at, const Piece& p);
    Piece removeTop(const Hex& at);

    const Stack* stackAt(const Hex& at) const;
    bool occupied(const Hex& at) const { return stacks_.find(at) != stacks_.end(); }
    int heightAt(const Hex& at) const;
    std::optional<Piece> topAt(const Hex& at) const;

    Color toMove() const { return to_move_; }
    void setToMove(Color c);
    int ply() const { return ply_; }
    void setPly(int p) { ply_ = p; }

    uint64_t hash() const { return hash_; }
    std::size_t stackCount() const { return stacks_.size(); }
    int pieceCount(Color c) const { return piece_count_[static_cast<int>(c)]; }
    int totalPieces() const { return pieceCount(Color::Black) + pieceCount(Color::White); }

    const std::unordered_map<Hex, Stack, HexHash>& stacks() const { return stacks_; }
    const std::vector<Hex>& queenHexes(Color c) const {
        return queen_hexes_[static_cast<int>(c)];
    }

    // Applies a move already known to be legal; used by the search. The public
    // checked path is apply() in movegen.hpp.
    void makeMove(const Move& m);
    void unmakeMove(const Move& m);

    // Finds the hex whose stack currently contains `p` (any level).
    std::optional<Hex> findPiece(const Piece& p) const;

    bool operator==(const Board& b) const;

    std::string toJson() const;
    static Board fromJson(const std::string& text);

    // Structural invariant check: nonempty stacks, beetles-only above bottom,
    // connectivity, equal piece counts. Returns human-readable violations.
    std::vector<std::string> invariantViolations() const;

  private:
    std::unordered_map<Hex, Stack, HexHash> stacks_;
    Color to_move_ = Color::Black;
    int ply_ = 0;
    uint64_t hash_ = 0;
    int piece_count_[2] = {0, 0};
    std::vector<Hex> queen_hexes_[2];

    void xorPiece(const Hex& at, int level, const Piece& p);
};

Outcome outcome(const Board& b);

// True iff the hex's 6 neighbors are all occupied (the surround condition;
// applies to queens anywhere in a stack).
bool isSurrounded(const Board& b, const Hex& at);

}  // namespace hive
