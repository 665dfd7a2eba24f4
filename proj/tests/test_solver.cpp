#include <doctest.h>

#include <random>

#include "hive/solver.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

using namespace hive;

namespace {

// Black queen five-sixths surrounded; a white grasshopper east of the open
// hex has a one-jump line into it over a black ant.
//
//        wG1  wS0
//     bA0  bQ   wG0  wG3
//        bA1  (.)  bA2
//             bA3   wG2
Board winInOneFixture() {
    Board b;
    b.place(Hex{0, 0}, Piece{Color::Black, Kind::Queen, 0});
    b.place(Hex{1, 0}, Piece{Color::White, Kind::Grasshopper, 0});
    b.place(Hex{1, -1}, Piece{Color::White, Kind::Grasshopper, 1});
    b.place(Hex{0, -1}, Piece{Color::White, Kind::Spider, 0});
    b.place(Hex{-1, 0}, Piece{Color::Black, Kind::Ant, 0});
    b.place(Hex{-1, 1}, Piece{Color::Black, Kind::Ant, 1});
    // (0,1) open; jump line from (2,1) west over (1,1).
    b.place(Hex{1, 1}, Piece{Color::Black, Kind::Ant, 2});
    b.place(Hex{2, 1}, Piece{Color::White, Kind::Grasshopper, 2});
    b.place(Hex{2, 0}, Piece{Color::White, Kind::Grasshopper, 3});
    b.place(Hex{-2, 1}, Piece{Color::Black, Kind::Ant, 3});
    b.setToMove(Color::White);
    return b;
}

Board colorSwapped(const Board& b) {
    Board s;
    for (const auto& [hex, st] : b.stacks())
        for (const Piece& p : st) s.place(hex, Piece{other(p.owner), p.kind, p.id});
    s.setToMove(other(b.toMove()));
    s.setPly(b.ply());
    return s;
}

}  // namespace

TEST_CASE("solver proves a win in one") {
    Board b = winInOneFixture();
    REQUIRE(b.invariantViolations().empty());
    Solver solver;
    SearchResult r = solver.solve(b, 3);
    REQUIRE(r.proven);
    CHECK(r.winner == Color::White);
    CHECK(r.plies == 1);
    REQUIRE(r.pv.size() == 1);
    CHECK(r.pv[0].to == Hex{0, 1});

    Board cur = b;
    for (const Move& m : r.pv) cur = apply(cur, m);
    CHECK(outcome(cur) == Outcome::WhiteWins);
}

TEST_CASE("solver result mirrors under color swap") {
    Board b = winInOneFixture();
    Board s = colorSwapped(b);
    Solver solver;
    SearchResult rb = solver.solve(b, 3);
    Solver solver2;
    SearchResult rs = solver2.solve(s, 3);
    REQUIRE(rb.proven);
    REQUIRE(rs.proven);
    CHECK(rs.winner == other(rb.winner));
    CHECK(rs.plies == rb.plies);
}

TEST_CASE("a parryable threat is not a forced win") {
    Board b = winInOneFixture();
    b.setToMove(Color::Black);
    Solver solver;
    // Black to move: the ant under the jump line steps aside and the line
    // dies, so White has no proven win within two plies.
    CHECK_FALSE(solver.attackerWins(b, Color::White, 2));
}

TEST_CASE("quiet positions prove nothing") {
    Board b;
    b.place(Hex{0, 0}, Piece{Color::Black, Kind::Queen, 0});
    b.place(Hex{1, 0}, Piece{Color::White, Kind::Queen, 0});
    b.setToMove(Color::Black);
    Solver solver;
    SearchResult r = solver.solve(b, 4);
    CHECK_FALSE(r.proven);
}

TEST_CASE("refuted flags suicidal moves at depth one") {
    Board b = winInOneFixture();
    b.setToMove(Color::Black);
    // The black ant walking into its own queen's last ring hex loses on the
    // spot.
    Move suicide{Hex{1, 1}, Hex{0, 1}, false};
    REQUIRE(isLegal(b, suicide));
    Solver solver;
    CHECK(solver.refuted(b, suicide, 1));
    // Stepping aside to parry is not refuted.
    Move parry{Hex{1, 1}, Hex{1, 2}, false};
    if (isLegal(b, parry)) CHECK_FALSE(solver.refuted(b, parry, 2));
}

TEST_CASE("transposition table does not change proofs") {
    std::mt19937_64 rng(testutil::seed() ^ 0xbeef);
    for (int i = 0; i < 40; ++i) {
        Board b = oracle::randomBoard(rng, 5);
        Solver withTT{SolverOptions{true, 0}};
        Solver noTT{SolverOptions{false, 0}};
        for (int d = 1; d <= 4; ++d) {
            CHECK(withTT.attackerWins(b, Color::Black, d) == noTT.attackerWins(b, Color::Black, d));
            CHECK(withTT.attackerWins(b, Color::White, d) == noTT.attackerWins(b, Color::White, d));
        }
    }
}

TEST_CASE("solver stays antisymmetric under color swap on random boards") {
    std::mt19937_64 rng(testutil::seed() ^ 0x50a9);
    for (int i = 0; i < 60; ++i) {
        Board b = oracle::randomBoard(rng, 4);
        Board s = colorSwapped(b);
        Solver s1, s2;
        for (int d = 1; d <= 3; ++d) {
            CHECK(s1.attackerWins(b, Color::Black, d) == s2.attackerWins(s, Color::White, d));
            CHECK(s1.attackerWins(b, Color::White, d) == s2.attackerWins(s, Color::Black, d));
        }
    }
}
