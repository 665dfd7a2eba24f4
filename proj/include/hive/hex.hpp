#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace hive {

// Axial hex coordinate. All gadget templates and boards live in this frame;
// orientation (pointy/flat) only matters to the renderer.
struct Hex {
    int q = 0;
    int r = 0;

    friend bool operator==(const Hex& a, const Hex& b) { return a.q == b.q && a.r == b.r; }
    friend bool operator!=(const Hex& a, const Hex& b) { return !(a == b); }
    friend bool operator<(const Hex& a, const Hex& b) {
        return a.q != b.q ? a.q < b.q : a.r < b.r;
    }
    friend Hex operator+(const Hex& a, const Hex& b) { return {a.q + b.q, a.r + b.r}; }
    friend Hex operator-(const Hex& a, const Hex& b) { return {a.q - b.q, a.r - b.r}; }
};

// The 6 unit displacements in fixed order starting from (+1,0).
inline constexpr std::array<Hex, 6> kHexDirs = {
    Hex{1, 0}, Hex{1, -1}, Hex{0, -1}, Hex{-1, 0}, Hex{-1, 1}, Hex{0, 1}};

// Direction index into kHexDirs.
struct Direction {
    int index = 0;

    Hex delta() const { return kHexDirs[static_cast<std::size_t>(index)]; }
    Direction rotated(int steps60cw) const;

    friend bool operator==(Direction a, Direction b) { return a.index == b.index; }
};

inline std::array<Hex, 6> neighbors(const Hex& c) {
    std::array<Hex, 6> out;
    for (int i = 0; i < 6; ++i) out[static_cast<std::size_t>(i)] = c + kHexDirs[static_cast<std::size_t>(i)];
    return out;
}

inline bool adjacent(const Hex& a, const Hex& b) {
    const Hex d = b - a;
    for (const Hex& u : kHexDirs)
        if (d == u) return true;
    return false;
}

// 60-degree rotation about the origin: (q,r) -> (-r, q+r). Six applications
// are the identity.
inline Hex rotate60cw(const Hex& c) { return {-c.r, c.q + c.r}; }

inline Hex rotate60cw(const Hex& c, int times) {
    Hex out = c;
    times %= 6;
    if (times < 0) times += 6;
    for (int i = 0; i < times; ++i) out = rotate60cw(out);
    return out;
}

// Reflection across the q-axis. Hive's rules are mirror-symmetric, so a
// reflected gadget template behaves identically with turn chirality swapped.
inline Hex mirror(const Hex& c) { return {c.q + c.r, -c.r}; }

inline Direction Direction::rotated(int steps60cw) const {
    // rotate60cw maps direction d to d-1 (mod 6).
    int i = (index - steps60cw) % 6;
    if (i < 0) i += 6;
    return Direction{i};
}

inline Hex ray(const Hex& c, Direction d, int k) {
    const Hex u = d.delta();
    return {c.q + k * u.q, c.r + k * u.r};
}

inline int hexDistance(const Hex& a, const Hex& b) {
    const int dq = a.q - b.q;
    const int dr = a.r - b.r;
    const int ds = -dq - dr;
    int m = dq < 0 ? -dq : dq;
    if (dr < 0 ? -dr > m : dr > m) m = dr < 0 ? -dr : dr;
    if (ds < 0 ? -ds > m : ds > m) m = ds < 0 ? -ds : ds;
    return m;
}

// "q,r" — the serialization used in every file format and in CLI output.
std::string coordString(const Hex& c);
Hex hexFromString(const std::string& s);

std::ostream& operator<<(std::ostream& os, const Hex& c);

struct HexHash {
    std::size_t operator()(const Hex& c) const {
        uint64_t x = (static_cast<uint64_t>(static_cast<uint32_t>(c.q)) << 32) |
                     static_cast<uint64_t>(static_cast<uint32_t>(c.r));
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace hive
