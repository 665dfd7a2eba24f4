#include "hive/board.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hive {

namespace {

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

uint64_t pieceKey(const Hex& at, int level, const Piece& p) {
    uint64_t h = (static_cast<uint64_t>(static_cast<uint32_t>(at.q)) << 32) |
                 static_cast<uint64_t>(static_cast<uint32_t>(at.r));
    h = mix64(h ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(level + 1));
    h = mix64(h + 0xc2b2ae3d27d4eb4fULL * (static_cast<uint64_t>(p.code()) + 1));
    return h;
}

constexpr uint64_t kSideKey = 0x2545f4914f6cdd1dULL;

}  // namespace

char kindChar(Kind k) {
    switch (k) {
        case Kind::Queen: return 'Q';
        case Kind::Beetle: return 'B';
        case Kind::Ant: return 'A';
        case Kind::Grasshopper: return 'G';
        case Kind::Spider: return 'S';
    }
    return '?';
}

Kind kindFromChar(char c) {
    switch (c) {
        case 'Q': return Kind::Queen;
        case 'B': return Kind::Beetle;
        case 'A': return Kind::Ant;
        case 'G': return Kind::Grasshopper;
        case 'S': return Kind::Spider;
    }
    throw std::invalid_argument(std::string("unknown piece kind: ") + c);
}

std::string Piece::name() const {
    std::string s;
    s += colorChar(owner);
    s += kindChar(kind);
    s += std::to_string(id);
    return s;
}

std::string outcomeName(Outcome o) {
    switch (o) {
        case Outcome::Ongoing: return "Ongoing";
        case Outcome::BlackWins: return "BlackWins";
        case Outcome::WhiteWins: return "WhiteWins";
        case Outcome::Draw: return "Draw";
    }
    return "?";
}

std::string ruleName(RuleViolation v) {
    switch (v) {
        case RuleViolation::OneHive: return "OneHive";
        case RuleViolation::FreedomToMove: return "FreedomToMove";
        case RuleViolation::Kind: return "Kind";
        case RuleViolation::Turn: return "Turn";
    }
    return "?";
}

void Board::xorPiece(const Hex& at, int level, const Piece& p) {
    hash_ ^= pieceKey(at, level, p);
}

void Board::place(const Hex& at, const Piece& p) {
    Stack& st = stacks_[at];
    xorPiece(at, static_cast<int>(st.size()), p);
    st.push_back(p);
    piece_count_[static_cast<int>(p.owner)]++;
    if (p.kind == Kind::Queen) queen_hexes_[static_cast<int>(p.owner)].push_back(at);
}

Piece Board::removeTop(const Hex& at) {
    auto it = stacks_.find(at);
    if (it == stacks_.end() || it->second.empty()) throw std::logic_error("removeTop on empty hex");
    Piece p = it->second.back();
    xorPiece(at, static_cast<int>(it->second.size()) - 1, p);
    it->second.pop_back();
    if (it->second.empty()) stacks_.erase(it);
    piece_count_[static_cast<int>(p.owner)]--;
    if (p.kind == Kind::Queen) {
        auto& qs = queen_hexes_[static_cast<int>(p.owner)];
        qs.erase(std::find(qs.begin(), qs.end(), at));
    }
    return p;
}

const Stack* Board::stackAt(const Hex& at) const {
    auto it = stacks_.find(at);
    return it == stacks_.end() ? nullptr : &it->second;
}

int Board::heightAt(const Hex& at) const {
    const Stack* s = stackAt(at);
    return s ? static_cast<int>(s->size()) : 0;
}

std::optional<Piece> Board::topAt(const Hex& at) const {
    const Stack* s = stackAt(at);
    if (!s || s->empty()) return std::nullopt;
    return s->back();
}

void Board::setToMove(Color c) {
    if (c != to_move_) {
        hash_ ^= kSideKey;
        to_move_ = c;
    }
}

void Board::makeMove(const Move& m) {
    if (!m.pass) {
        Piece p = removeTop(m.from);
        place(m.to, p);
    }
    setToMove(other(to_move_));
    ply_++;
}

void Board::unmakeMove(const Move& m) {
    setToMove(other(to_move_));
    ply_--;
    if (!m.pass) {
        Piece p = removeTop(m.to);
        place(m.from, p);
    }
}

std::optional<Hex> Board::findPiece(const Piece& p) const {
    for (const auto& [hex, st] : stacks_)
        for (const Piece& q : st)
            if (q == p) return hex;
    return std::nullopt;
}

bool Board::operator==(const Board& b) const {
    return to_move_ == b.to_move_ && ply_ == b.ply_ && stacks_ == b.stacks_;
}

bool isSurrounded(const Board& b, const Hex& at) {
    for (const Hex& n : neighbors(at))
        if (!b.occupied(n)) return false;
    return true;
}

Outcome outcome(const Board& b) {
    bool black = false, white = false;
    for (const Hex& h : b.queenHexes(Color::Black))
        if (isSurrounded(b, h)) { black = true; break; }
    for (const Hex& h : b.queenHexes(Color::White))
        if (isSurrounded(b, h)) { white = true; break; }
    if (black && white) return Outcome::Draw;
    if (black) return Outcome::WhiteWins;
    if (white) return Outcome::BlackWins;
    return Outcome::Ongoing;
}

std::vector<std::string> Board::invariantViolations() const {
    std::vector<std::string> out;
    for (const auto& [hex, st] : stacks_) {
        if (st.empty()) out.push_back("empty stack stored at " + coordString(hex));
        for (std::size_t i = 1; i < st.size(); ++i)
            if (st[i].kind != Kind::Beetle)
                out.push_back("non-Beetle above bottom at " + coordString(hex));
    }
    if (pieceCount(Color::Black) != pieceCount(Color::White))
        out.push_back("unequal piece counts: B=" + std::to_string(pieceCount(Color::Black)) +
                      " W=" + std::to_string(pieceCount(Color::White)));
    // Connectivity over occupied hexes.
    if (!stacks_.empty()) {
        std::unordered_map<Hex, bool, HexHash> seen;
        std::queue<Hex> frontier;
        frontier.push(stacks_.begin()->first);
        seen[stacks_.begin()->first] = true;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            Hex cur = frontier.front();
            frontier.pop();
            for (const Hex& n : neighbors(cur)) {
                if (occupied(n) && !seen[n]) {
                    seen[n] = true;
                    reached++;
                    frontier.push(n);
                }
            }
        }
        if (reached != stacks_.size()) out.push_back("hive is disconnected");
    }
    // Duplicate piece identities.
    std::unordered_map<uint32_t, int> ids;
    for (const auto& [hex, st] : stacks_)
        for (const Piece& p : st)
            if (++ids[p.code()] == 2) out.push_back("duplicate piece identity " + p.name());
    return out;
}

std::string Board::toJson() const {
    nlohmann::json j;
    j["schema"] = "v1";
    j["to_move"] = std::string(1, colorChar(to_move_));
    j["ply"] = ply_;
    std::vector<Hex> hexes;
    hexes.reserve(stacks_.size());
    for (const auto& [hex, st] : stacks_) hexes.push_back(hex);
    std::sort(hexes.begin(), hexes.end());
    nlohmann::json arr = nlohmann::json::array();
    for (const Hex& h : hexes) {
        nlohmann::json entry;
        entry["hex"] = coordString(h);
        nlohmann::json pieces = nlohmann::json::array();
        for (const Piece& p : *stackAt(h)) {
            pieces.push_back({{"owner", std::string(1, colorChar(p.owner))},
                              {"kind", std::string(1, kindChar(p.kind))},
                              {"id", p.id}});
        }
        entry["pieces"] = pieces;
        arr.push_back(entry);
    }
    j["stacks"] = arr;
    return j.dump(2);
}

Board Board::fromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Board b;
    const std::string tm = j.at("to_move").get<std::string>();
    if (tm != "B" && tm != "W") throw std::invalid_argument("to_move must be B or W");
    for (const auto& entry : j.at("stacks")) {
        Hex h = hexFromString(entry.at("hex").get<std::string>());
        for (const auto& pj : entry.at("pieces")) {
            Piece p;
            const std::string owner = pj.at("owner").get<std::string>();
            const std::string kind = pj.at("kind").get<std::string>();
            if (owner.size() != 1 || kind.size() != 1)
                throw std::invalid_argument("bad piece spec in board JSON");
            p.owner = owner == "B" ? Color::Black : Color::White;
            p.kind = kindFromChar(kind[0]);
            p.id = pj.at("id").get<uint16_t>();
            b.place(h, p);
        }
    }
    b.setToMove(tm == "B" ? Color::Black : Color::White);
    b.setPly(j.value("ply", 0));
    return b;
}

}  // namespace hive
