#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hive/movegen.hpp"
#include "hive/render.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

using namespace hive;

namespace {

std::set<Hex> asSet(const std::vector<Hex>& v) { return {v.begin(), v.end()}; }

Piece bq(uint16_t id = 0) { return {Color::Black, Kind::Queen, id}; }
Piece wq(uint16_t id = 0) { return {Color::White, Kind::Queen, id}; }
Piece bg(uint16_t id = 0) { return {Color::Black, Kind::Grasshopper, id}; }
Piece wg(uint16_t id = 0) { return {Color::White, Kind::Grasshopper, id}; }
Piece ba(uint16_t id = 0) { return {Color::Black, Kind::Ant, id}; }
Piece wa(uint16_t id = 0) { return {Color::White, Kind::Ant, id}; }
Piece bb(uint16_t id = 0) { return {Color::Black, Kind::Beetle, id}; }
Piece wb(uint16_t id = 0) { return {Color::White, Kind::Beetle, id}; }
Piece bs(uint16_t id = 0) { return {Color::Black, Kind::Spider, id}; }
Piece ws(uint16_t id = 0) { return {Color::White, Kind::Spider, id}; }

}  // namespace

TEST_CASE("queen beside a lone anchor has the two around-the-corner slides") {
    Board b;
    b.place(Hex{0, 0}, wq());
    b.place(Hex{1, 0}, bq());
    b.setToMove(Color::White);
    CHECK(asSet(queenMoves(b, Hex{0, 0})) == std::set<Hex>{Hex{1, -1}, Hex{0, 1}});
}

TEST_CASE("fully surrounded queen cannot move") {
    Board b;
    b.place(Hex{0, 0}, wq());
    int id = 0;
    for (const Hex& n : neighbors(Hex{0, 0})) b.place(n, bg(static_cast<uint16_t>(id++)));
    // One black queen far out so outcome stays ongoing and counts are equal.
    // (6 black pieces vs 1 white: balance with 5 white pieces in a tail)
    b.place(Hex{2, 0}, wa(0));
    b.place(Hex{3, 0}, wa(1));
    b.place(Hex{4, 0}, wa(2));
    b.place(Hex{5, 0}, wa(3));
    b.place(Hex{6, 0}, wa(4));
    b.place(Hex{7, 0}, bq());
    b.setToMove(Color::White);
    // White queen surrounded: game over for White unless a black queen also is.
    CHECK(outcome(b) == Outcome::BlackWins);
}

TEST_CASE("queen that is an articulation point of a line cannot move") {
    Board b;
    b.place(Hex{0, 0}, ba());
    b.place(Hex{1, 0}, wq());
    b.place(Hex{2, 0}, wa());
    b.setToMove(Color::White);
    CHECK(queenMoves(b, Hex{1, 0}).empty());
}

TEST_CASE("beetle beside a single ant may climb or take the two side slides") {
    Board b;
    b.place(Hex{0, 0}, wb());
    b.place(Hex{1, 0}, ba());
    b.setToMove(Color::White);
    CHECK(asSet(beetleMoves(b, Hex{0, 0})) == std::set<Hex>{Hex{1, 0}, Hex{1, -1}, Hex{0, 1}});
}

TEST_CASE("beetle on a tall tower steps anywhere adjacent") {
    Board b;
    b.place(Hex{0, 0}, bq());
    for (int i = 0; i < 6; ++i) b.place(Hex{0, 0}, i % 2 ? bb(static_cast<uint16_t>(i / 2)) : wb(static_cast<uint16_t>(i / 2)));
    b.place(Hex{0, 0}, wb(4));
    b.place(Hex{1, 0}, wq());
    b.setToMove(Color::White);
    auto dests = asSet(beetleMoves(b, Hex{0, 0}));
    CHECK(dests.size() == 6);
    for (const Hex& n : neighbors(Hex{0, 0})) CHECK(dests.count(n) == 1);
}

TEST_CASE("beetle may not lift when it is the hive's only link") {
    Board b;
    b.place(Hex{-1, 0}, ws());
    b.place(Hex{0, 0}, wb());
    b.place(Hex{1, 0}, bq());
    b.setToMove(Color::White);
    CHECK(beetleMoves(b, Hex{0, 0}).empty());
}

TEST_CASE("ant walks the full perimeter of a lone queen") {
    Board b;
    b.place(Hex{0, 0}, bq());
    b.place(Hex{1, 0}, ba());
    b.setToMove(Color::Black);
    auto dests = asSet(antMoves(b, Hex{1, 0}));
    std::set<Hex> expect;
    for (const Hex& n : neighbors(Hex{0, 0}))
        if (n != Hex{1, 0}) expect.insert(n);
    CHECK(dests == expect);
}

TEST_CASE("ant locked in a pocket cannot squeeze out") {
    // Ring of six around an interior ant.
    Board b;
    b.place(Hex{0, 0}, ba());
    int id = 0;
    for (const Hex& n : neighbors(Hex{0, 0})) b.place(n, id++ % 2 ? wg(static_cast<uint16_t>(id / 2)) : bg(static_cast<uint16_t>(id / 2)));
    b.place(Hex{2, -1}, wa());
    b.setToMove(Color::Black);
    CHECK(antMoves(b, Hex{0, 0}).empty());
}

TEST_CASE("grasshopper jumps the contiguous run and only that") {
    Board b;
    b.place(Hex{0, 0}, bg());
    b.place(Hex{1, 0}, wq());
    b.place(Hex{2, 0}, wa());
    b.place(Hex{0, 1}, bq());
    b.setToMove(Color::Black);
    auto dests = asSet(grasshopperMoves(b, Hex{0, 0}));
    CHECK(dests.count(Hex{3, 0}) == 1);   // east over two pieces
    CHECK(dests.count(Hex{0, 2}) == 1);   // south over one piece
    CHECK(dests.size() == 2);
}

TEST_CASE("grasshopper that bridges two lobes is locked") {
    Board b;
    b.place(Hex{-1, 0}, wq());
    b.place(Hex{0, 0}, bg());
    b.place(Hex{1, 0}, bq());
    b.setToMove(Color::Black);
    CHECK(grasshopperMoves(b, Hex{0, 0}).empty());
}

TEST_CASE("spider walks exactly three steps around a lone anchor") {
    Board b;
    b.place(Hex{0, 0}, wq());
    b.place(Hex{1, 0}, bs());
    b.setToMove(Color::Black);
    auto dests = asSet(spiderMoves(b, Hex{1, 0}));
    CHECK(dests.size() <= 2);
    // Both ring walks end three stops away, which coincide opposite the anchor.
    CHECK(dests == std::set<Hex>{Hex{-1, 0}});
    CHECK(spiderPaths(b, Hex{1, 0}).size() == 2);
    for (const auto& path : spiderPaths(b, Hex{1, 0})) {
        CHECK(path.size() == 4);
        std::set<Hex> uniq(path.begin(), path.end());
        CHECK(uniq.size() == 4);
    }
}

TEST_CASE("can_slide reports the gate state") {
    Board b;
    b.place(Hex{0, 0}, bq());
    b.place(Hex{1, -1}, wa());
    b.place(Hex{0, 1}, wa(1));
    b.setToMove(Color::Black);
    // Both gate hexes of (0,0)->(1,0) are occupied.
    CHECK_FALSE(canSlide(b, Hex{0, 0}, Hex{1, 0}));
    // Exactly one gate hex occupied.
    CHECK(canSlide(b, Hex{0, 0}, Hex{-1, 1}));
    CHECK_THROWS(canSlide(b, Hex{0, 0}, Hex{5, 5}));
}

TEST_CASE("one_hive_ok distinguishes leaves, cut pieces, and stacks") {
    Board b;
    b.place(Hex{0, 0}, ba());
    b.place(Hex{1, 0}, wa());
    b.place(Hex{2, 0}, bg());
    CHECK(oneHiveOk(b, Hex{0, 0}));
    CHECK_FALSE(oneHiveOk(b, Hex{1, 0}));
    CHECK(oneHiveOk(b, Hex{2, 0}));

    // A stack bridging two arms: lifting the top beetle keeps the hex filled.
    Board s;
    s.place(Hex{0, 0}, ba());
    s.place(Hex{0, 0}, wb());
    s.place(Hex{-1, 0}, wq());
    s.place(Hex{1, 0}, bq());
    CHECK(oneHiveOk(s, Hex{0, 0}));
}

TEST_CASE("apply validates and names the violated rule") {
    Board b;
    b.place(Hex{0, 0}, bq());
    b.place(Hex{1, 0}, wq());
    b.place(Hex{2, 0}, ba());
    b.setToMove(Color::Black);

    CHECK_THROWS_AS(apply(b, Move{Hex{1, 0}, Hex{1, -1}, false}), IllegalMove);  // opponent piece
    try {
        apply(b, Move{Hex{0, 0}, Hex{4, 4}, false});
        CHECK(false);
    } catch (const IllegalMove& e) {
        CHECK(e.rule == RuleViolation::FreedomToMove);
    }
    // Middle piece pinned by One Hive.
    b.setToMove(Color::White);
    try {
        apply(b, Move{Hex{1, 0}, Hex{1, -1}, false});
        CHECK(false);
    } catch (const IllegalMove& e) {
        CHECK(e.rule == RuleViolation::OneHive);
    }
}

TEST_CASE("pass only flips the side to move") {
    Board b;
    b.place(Hex{0, 0}, bq());
    int id = 0;
    for (const Hex& n : neighbors(Hex{0, 0})) {
        if (id < 5) b.place(n, id % 2 ? wa(static_cast<uint16_t>(id)) : ba(static_cast<uint16_t>(id)));
        id++;
    }
    // Give white a far tail piece so counts match: 3 black + 3 white placed above.
    b.setToMove(Color::Black);
    auto moves = legalMoves(b);
    if (moves.size() == 1 && moves[0].pass) {
        Board b2 = apply(b, moves[0]);
        CHECK(b2.toMove() == Color::White);
        CHECK(b2.ply() == b.ply() + 1);
        Board b3 = apply(b2, Move::makePass());
        CHECK(b3.toMove() == b.toMove());
        CHECK(b3.ply() == b.ply() + 2);
        CHECK(b3.hash() == b.hash());
    }
}

TEST_CASE("outcome covers win, draw, and ongoing") {
    Board b;
    b.place(Hex{0, 0}, wq());
    int id = 0;
    for (const Hex& n : neighbors(Hex{0, 0})) b.place(n, id++ % 2 ? ba(static_cast<uint16_t>(id)) : wa(static_cast<uint16_t>(id)));
    CHECK(outcome(b) == Outcome::BlackWins);

    // Two adjacent queens, both surrounded -> draw.
    Board d;
    d.place(Hex{0, 0}, wq());
    d.place(Hex{1, 0}, bq());
    id = 0;
    for (const Hex& n : neighbors(Hex{0, 0}))
        if (!d.occupied(n)) d.place(n, id++ % 2 ? ba(static_cast<uint16_t>(id)) : wa(static_cast<uint16_t>(id)));
    for (const Hex& n : neighbors(Hex{1, 0}))
        if (!d.occupied(n)) d.place(n, id++ % 2 ? ba(static_cast<uint16_t>(id)) : wa(static_cast<uint16_t>(id)));
    CHECK(outcome(d) == Outcome::Draw);

    Board o;
    o.place(Hex{0, 0}, wq());
    o.place(Hex{1, 0}, bq());
    CHECK(outcome(o) == Outcome::Ongoing);
}

TEST_CASE("board JSON round-trips") {
    std::mt19937_64 rng(testutil::seed() ^ 0x77);
    for (int i = 0; i < 20; ++i) {
        Board b = oracle::randomBoard(rng);
        Board back = Board::fromJson(b.toJson());
        CHECK(back == b);
        CHECK(back.hash() == b.hash());
    }
}

TEST_CASE("optimized generator matches the brute-force oracle per piece") {
    std::mt19937_64 rng(testutil::seed());
    for (int i = 0; i < 150; ++i) {
        Board b = oracle::randomBoard(rng);
        for (Color side : {Color::Black, Color::White}) {
            b.setToMove(side);
            for (const auto& [hex, st] : b.stacks()) {
                const Piece& top = st.back();
                if (top.owner != side) continue;
                std::set<Hex> fast, brute;
                switch (top.kind) {
                    case Kind::Queen:
                        fast = asSet(queenMoves(b, hex));
                        brute = asSet(oracle::queenMoves(b, hex));
                        break;
                    case Kind::Beetle:
                        fast = asSet(beetleMoves(b, hex));
                        brute = asSet(oracle::beetleMoves(b, hex));
                        break;
                    case Kind::Ant:
                        fast = asSet(antMoves(b, hex));
                        brute = asSet(oracle::antMoves(b, hex));
                        break;
                    case Kind::Grasshopper:
                        fast = asSet(grasshopperMoves(b, hex));
                        brute = asSet(oracle::grasshopperMoves(b, hex));
                        break;
                    case Kind::Spider:
                        fast = asSet(spiderMoves(b, hex));
                        brute = asSet(oracle::spiderMoves(b, hex));
                        break;
                }
                if (fast != brute) {
                    MESSAGE(renderAscii(b));
                    MESSAGE("piece ", top.name(), " at ", coordString(hex));
                }
                REQUIRE(fast == brute);
            }
        }
    }
}

TEST_CASE("random playouts keep every board invariant") {
    std::mt19937_64 rng(testutil::seed() ^ 0x99);
    for (int g = 0; g < 40; ++g) {
        Board b = oracle::randomBoard(rng);
        for (int plies = 0; plies < 30; ++plies) {
            if (outcome(b) != Outcome::Ongoing) break;
            auto moves = legalMoves(b);
            REQUIRE(!moves.empty());
            // Spot-check agreement with the oracle's full move list.
            auto bruteMoves = oracle::legalMoves(b);
            auto key = [](const Move& m) {
                return m.pass ? std::string("PASS")
                              : coordString(m.from) + ">" + coordString(m.to);
            };
            std::set<std::string> a, c;
            for (const auto& m : moves) a.insert(key(m));
            for (const auto& m : bruteMoves) c.insert(key(m));
            REQUIRE(a == c);
            const Move& m = moves[rng() % moves.size()];
            Color mover = b.toMove();
            b = apply(b, m);
            CHECK(b.toMove() == other(mover));
            auto violations = b.invariantViolations();
            if (!violations.empty()) MESSAGE(violations[0]);
            CHECK(violations.empty());
        }
    }
}

TEST_CASE("grasshopper destinations verified by lifted ray scan") {
    std::mt19937_64 rng(testutil::seed() ^ 0x1234);
    for (int i = 0; i < 60; ++i) {
        Board b = oracle::randomBoard(rng);
        for (const auto& [hex, st] : b.stacks()) {
            const Piece& top = st.back();
            if (top.kind != Kind::Grasshopper || top.owner != b.toMove()) continue;
            for (const Hex& dest : grasshopperMoves(b, hex)) {
                CHECK_FALSE(b.occupied(dest));
                bool aligned = false;
                for (int d = 0; d < 6; ++d) {
                    Hex step = kHexDirs[static_cast<std::size_t>(d)];
                    Hex cur = hex + step;
                    int run = 0;
                    while (b.occupied(cur)) { run++; cur = cur + step; }
                    if (cur == dest && run >= 1) aligned = true;
                }
                CHECK(aligned);
            }
        }
    }
}

TEST_CASE("move notation parses and round-trips") {
    Board b;
    b.place(Hex{0, 0}, bq());
    b.place(Hex{1, 0}, wq());
    b.place(Hex{2, 0}, bg(3));
    b.setToMove(Color::Black);
    Move m = moveFromString(b, "BG3 3,0");
    CHECK(m.from == Hex{2, 0});
    CHECK(m.to == Hex{3, 0});
    CHECK(moveToString(b, m) == "BG3 3,0");
    CHECK(moveFromString(b, "PASS").pass);
    CHECK_THROWS(moveFromString(b, "BQ7 1,1"));
}
