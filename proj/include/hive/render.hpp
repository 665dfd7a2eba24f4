#pragma once

#include <string>
#include <unordered_map>

#include "hive/board.hpp"

namespace hive {

struct RenderOptions {
    bool showIds = false;
    // Optional overlay labels keyed by hex ("role map" annotations, markers).
    std::unordered_map<Hex, std::string, HexHash> overlay;
};

// Deterministic ASCII hex map. Stacks show the top piece and the stack
// height; empty hexes inside the bounding box show as dots.
std::string renderAscii(const Board& b, const RenderOptions& opts = {});

std::string renderSvg(const Board& b, const RenderOptions& opts = {});

}  // namespace hive
