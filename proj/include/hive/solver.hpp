#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hive/movegen.hpp"

namespace hive {

struct SearchResult {
    bool proven = false;      // true: forced win for `winner` within `plies`
    Color winner = Color::Black;
    int plies = 0;
    std::vector<Move> pv;     // replayable line ending in the terminal win
    uint64_t nodes = 0;

    bool provenWin(Color c) const { return proven && winner == c; }
};

struct SolverOptions {
    bool useTT = true;
    uint64_t nodeLimit = 0;  // 0 = unlimited
};

// Depth-limited win-proof search. A position is a win for the attacker at
// horizon d only if every defender reply keeps a forced surround within the
// remaining plies; repetitions along the search path score as unknown.
class Solver {
  public:
    explicit Solver(SolverOptions opts = {});

    // Two-sided: tries to prove a forced win for either player within
    // maxDepth plies, preferring the fastest proof.
    SearchResult solve(const Board& b, int maxDepth);

    // One-sided proof that `attacker` wins within `depth` plies (attacker may
    // be either the side to move or the opponent).
    bool attackerWins(const Board& b, Color attacker, int depth, std::vector<Move>* pv = nullptr);

    // True iff after playing m the opponent of the mover has a proven win
    // within R plies.
    bool refuted(const Board& b, const Move& m, int R);

    uint64_t nodes() const { return nodes_; }
    void clearTable();

  private:
    enum class Proof : uint8_t { Win, NoWin, Unknown };

    struct Entry {
        uint8_t winPlies = 0;       // valid when win
        uint8_t noWinDepth = 0;     // horizon to which no win was found (untainted)
        bool win = false;
        Move best{};
    };

    SolverOptions opts_;
    uint64_t nodes_ = 0;
    std::unordered_map<uint64_t, Entry> table_;
    std::vector<uint64_t> path_;
    std::vector<Move> killers_;  // last successful defense per path depth

    bool search(Board& b, Color attacker, int depth, bool& tainted, std::vector<Move>* pv);
    int minPliesToSurround(const Board& b, Color attacker) const;
};

}  // namespace hive
