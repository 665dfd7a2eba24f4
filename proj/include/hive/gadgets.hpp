#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hive/board.hpp"

namespace hive {

enum class GadgetKind : uint8_t {
    QuantifierTester,
    Join,
    TurnSwitcher,
    ClauseChooser,
    LiteralChooser,
    DirChanger60,
    DirChanger120,
    Gap,
    DeadChainLink,
    Crossing,
};

std::string gadgetKindName(GadgetKind k);

// Colors inside a template are relative: Own flips to the opposite side when
// a gadget is instantiated color-reversed.
enum class RelColor : uint8_t { Own, Opp };

struct StackEntry {
    RelColor color;
    Kind kind;
};

// Piece roles tag stack positions for scripts, role maps, and audits.
struct TemplatePiece {
    Hex at;
    std::vector<StackEntry> stack;  // bottom -> top
    std::string role;               // names the top piece; "" for filler
};

struct PortSpec {
    std::string name;
    bool entry;          // entry: a chain arrives along dir toward the gadget
    Hex attach;          // hex where the connecting chain starts/ends
    Direction dir;       // direction of flow through the port
    Hex landing;         // entry: hex the incoming hopper lands on
    RelColor color;      // color of the grasshopper crossing this port
    int minChain = 3;    // template relies on this many chain hexes in line
};

struct ScriptOption {
    std::string label;      // branch label; "" on forced steps
    std::string pieceRole;  // mover; "@<port>" names a port's carrier hopper
    Hex dest{};             // template-frame destination
    std::string exitPort;   // when set, dest = first empty hex along the port ray
};

struct ScriptStep {
    std::vector<ScriptOption> options;  // one option = forced step
    bool forced() const { return options.size() == 1; }
};

struct GadgetTemplate {
    GadgetKind kind;
    std::string name;
    std::vector<TemplatePiece> pieces;
    std::vector<PortSpec> ports;
    std::vector<ScriptStep> script;                           // common prefix
    std::map<std::string, std::vector<ScriptStep>> branches;  // per choice label
    bool mirrored = false;

    const PortSpec* port(const std::string& portName) const;
};

// A template fixed in the world: rotated in 60-degree steps about the
// origin, translated, and optionally color-reversed.
struct PlacedGadget {
    const GadgetTemplate* tmpl = nullptr;
    int rotation = 0;
    Hex origin{};
    bool flipColors = false;
    int index = -1;  // assigned by the compiler

    Hex mapHex(const Hex& h) const;
    Direction mapDir(Direction d) const;
    Color mapColor(RelColor c) const;
    PortSpec mapPort(const PortSpec& p) const;
};

// Stamp a placed gadget onto a board. Piece ids are drawn from per-(owner,
// kind) counters supplied by the caller; returns the roles of the pieces it
// placed (role name -> concrete piece).
struct PlacedPiece {
    std::string role;
    Piece piece;
    Hex at;
};

std::vector<PlacedPiece> stampGadget(Board& b, const PlacedGadget& g,
                                     std::array<std::array<uint16_t, 5>, 2>& idCounters);

// Mirror a template across the flow axis; turn chirality swaps.
GadgetTemplate mirrorTemplate(const GadgetTemplate& t, const std::string& newName);

// The template library. Every template is expressed in its own base color
// with flow entering from the west.
const GadgetTemplate& turnSwitcherTemplate();
const GadgetTemplate& joinTemplate();
const GadgetTemplate& joinAltTemplate();
const GadgetTemplate& chooserTemplate();        // clause chooser in base colors
const GadgetTemplate& dirChanger60Template();   // clockwise
const GadgetTemplate& dirChanger60CcwTemplate();
const GadgetTemplate& dirChanger120Template();  // clockwise
const GadgetTemplate& dirChanger120CcwTemplate();
const GadgetTemplate& gapTemplate();
const GadgetTemplate& quantifierTemplate();

std::vector<const GadgetTemplate*> allTemplates();

}  // namespace hive
