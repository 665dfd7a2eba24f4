#include "hive/gadgets.hpp"

#include <array>
#include <stdexcept>

namespace hive {

std::string gadgetKindName(GadgetKind k) {
    switch (k) {
        case GadgetKind::QuantifierTester: return "QuantifierTester";
        case GadgetKind::Join: return "Join";
        case GadgetKind::TurnSwitcher: return "TurnSwitcher";
        case GadgetKind::ClauseChooser: return "ClauseChooser";
        case GadgetKind::LiteralChooser: return "LiteralChooser";
        case GadgetKind::DirChanger60: return "DirChanger60";
        case GadgetKind::DirChanger120: return "DirChanger120";
        case GadgetKind::Gap: return "Gap";
        case GadgetKind::DeadChainLink: return "DeadChainLink";
        case GadgetKind::Crossing: return "Crossing";
    }
    return "?";
}

const PortSpec* GadgetTemplate::port(const std::string& portName) const {
    for (const auto& p : ports)
        if (p.name == portName) return &p;
    return nullptr;
}

Hex PlacedGadget::mapHex(const Hex& h) const { return rotate60cw(h, rotation) + origin; }

Direction PlacedGadget::mapDir(Direction d) const { return d.rotated(rotation); }

Color PlacedGadget::mapColor(RelColor c) const {
    const bool own = c == RelColor::Own;
    if (flipColors) return own ? Color::White : Color::Black;
    return own ? Color::Black : Color::White;
}

PortSpec PlacedGadget::mapPort(const PortSpec& p) const {
    PortSpec out = p;
    out.attach = mapHex(p.attach);
    out.dir = mapDir(p.dir);
    out.landing = mapHex(p.landing);
    return out;
}

std::vector<PlacedPiece> stampGadget(Board& b, const PlacedGadget& g,
                                     std::array<std::array<uint16_t, 5>, 2>& idCounters) {
    std::vector<PlacedPiece> placed;
    for (const auto& tp : g.tmpl->pieces) {
        const Hex at = g.mapHex(tp.at);
        for (std::size_t lvl = 0; lvl < tp.stack.size(); ++lvl) {
            const StackEntry& e = tp.stack[lvl];
            const Color c = g.mapColor(e.color);
            Piece p{c, e.kind,
                    idCounters[static_cast<int>(c)][static_cast<int>(e.kind)]++};
            if (b.occupied(at) && b.heightAt(at) != static_cast<int>(lvl))
                throw std::logic_error("stampGadget: stacking mismatch at " + coordString(at));
            if (!b.occupied(at) && lvl != 0)
                throw std::logic_error("stampGadget: floating piece at " + coordString(at));
            if (lvl == 0 && b.occupied(at))
                throw std::logic_error("stampGadget: overlap at " + coordString(at) + " (" +
                                       g.tmpl->name + ")");
            b.place(at, p);
            if (lvl + 1 == tp.stack.size() && !tp.role.empty())
                placed.push_back({tp.role, p, at});
        }
    }
    return placed;
}

GadgetTemplate mirrorTemplate(const GadgetTemplate& t, const std::string& newName) {
    GadgetTemplate m = t;
    m.name = newName;
    m.mirrored = !t.mirrored;
    for (auto& p : m.pieces) p.at = mirror(p.at);
    for (auto& p : m.ports) {
        p.attach = mirror(p.attach);
        p.landing = mirror(p.landing);
        p.dir = Direction{(6 - p.dir.index) % 6};
    }
    for (auto& step : m.script)
        for (auto& opt : step.options) opt.dest = mirror(opt.dest);
    return m;
}

namespace {

// Template construction helpers. Templates are written in base colors (Own =
// Black) with flow arriving from the west along +q.
struct Builder {
    GadgetTemplate t;

    Builder(GadgetKind kind, std::string name) {
        t.kind = kind;
        t.name = std::move(name);
    }
    void piece(Hex at, RelColor c, Kind k, std::string role = "") {
        t.pieces.push_back({at, {{c, k}}, std::move(role)});
    }
    // DS-shaped plug: junk bottom, three popper beetles, a top beetle of the
    // other side. The top's moves are priced by the poppers underneath
    // dropping into nearby armed holes. `topOpp` picks which side owns the
    // top (and therefore whose stray moves the plug punishes).
    void plug(Hex at, std::string role = "", bool topOpp = true) {
        const RelColor top = topOpp ? RelColor::Opp : RelColor::Own;
        const RelColor inner = topOpp ? RelColor::Own : RelColor::Opp;
        t.pieces.push_back({at,
                            {{top, Kind::Spider},
                             {inner, Kind::Beetle},
                             {inner, Kind::Beetle},
                             {inner, Kind::Beetle},
                             {top, Kind::Beetle}},
                            std::move(role)});
    }
    // Dead exterior tower: own queen under six enemy beetles and an own
    // beetle on top.
    void deadExterior(Hex at, std::string role = "") {
        std::vector<StackEntry> stack{{RelColor::Own, Kind::Queen}};
        for (int i = 0; i < 6; ++i) stack.push_back({RelColor::Opp, Kind::Beetle});
        stack.push_back({RelColor::Own, Kind::Beetle});
        t.pieces.push_back({at, std::move(stack), std::move(role)});
    }
    void entry(std::string name, Hex attach, Direction d, Hex landing, RelColor c) {
        t.ports.push_back({std::move(name), true, attach, d, landing, c, 3});
    }
    void exit(std::string name, Hex attach, Direction d, RelColor c) {
        t.ports.push_back({std::move(name), false, attach, d, attach, c, 3});
    }
    void forced(std::string role, Hex dest) { t.script.push_back({{{"", std::move(role), dest, ""}}}); }
    void exitJump(std::string role, std::string port) {
        t.script.push_back({{{"", std::move(role), Hex{}, std::move(port)}}});
    }
    void choice(std::vector<ScriptOption> options) { t.script.push_back({std::move(options)}); }
};

}  // namespace

// ---------------------------------------------------------------------------
// Turn switcher. The incoming hopper lands in the pocket at (0,0), bridging
// the entry chain to the exit ramp and freeing the relay hopper of the other
// color. Both of the relay's stray jump lines end in the armed holes of the
// two queens south of the line, and the lander's own jump line over the
// adjacent plug into the second hole forces the relay out on tempo.
//
//            relay  E1 E2 ...   (exit row, northeast of the pocket)
//   c2  c1  (L)
//        qA  plug0
//        qB  (hole)
//   plug1
//   plug3 plug4
const GadgetTemplate& turnSwitcherTemplate() {
    static const GadgetTemplate t = [] {
        Builder b(GadgetKind::TurnSwitcher, "turn_switcher");
        b.piece({0, -1}, RelColor::Opp, Kind::Grasshopper, "relay");
        b.piece({-1, 1}, RelColor::Opp, Kind::Queen, "trapA_queen");   // hole at (-2,1)
        b.piece({-1, 2}, RelColor::Opp, Kind::Queen, "trapB_queen");   // hole at (0,2)
        b.plug({0, 1}, "plug0");
        b.plug({-2, 2}, "plug1");
        b.plug({-2, 3}, "plug3");
        b.plug({-1, 3}, "plug4");
        b.entry("in", {-1, 0}, Direction{0}, {0, 0}, RelColor::Own);
        b.exit("out", {1, -1}, Direction{0}, RelColor::Opp);
        b.forced("@in", {0, 0});
        b.exitJump("relay", "out");
        return b.t;
    }();
    return t;
}

// Clause chooser: as the turn switcher, but the freed hopper owns two exit
// ramps, east and northeast. The branch taken is the chooser's choice; both
// stray lines still end in the armed holes.
const GadgetTemplate& chooserTemplate() {
    static const GadgetTemplate t = [] {
        Builder b(GadgetKind::ClauseChooser, "clause_chooser");
        b.piece({0, -1}, RelColor::Opp, Kind::Grasshopper, "relay");
        b.piece({-1, 1}, RelColor::Opp, Kind::Queen, "trapA_queen");
        b.piece({-1, 2}, RelColor::Opp, Kind::Queen, "trapB_queen");
        b.plug({0, 1}, "plug0");
        b.plug({-2, 2}, "plug1");
        b.plug({-2, 3}, "plug3");
        b.plug({-1, 3}, "plug4");
        b.entry("in", {-1, 0}, Direction{0}, {0, 0}, RelColor::Own);
        b.exit("out_a", {1, -1}, Direction{0}, RelColor::Opp);
        b.exit("out_b", {1, -2}, Direction{1}, RelColor::Opp);
        b.forced("@in", {0, 0});
        b.choice({{"a", "relay", Hex{}, "out_a"}, {"b", "relay", Hex{}, "out_b"}});
        return b.t;
    }();
    return t;
}

// Direction changers share the switcher cell. The turned exit arm needs a
// bridge tower next to the pocket (otherwise the freed hopper's lift would
// split the hive) and an armed queen pricing the jump line over that tower.
const GadgetTemplate& dirChanger60Template() {
    static const GadgetTemplate t = [] {
        Builder b(GadgetKind::DirChanger60, "dir_changer_60");
        b.piece({0, -1}, RelColor::Opp, Kind::Grasshopper, "relay");
        b.piece({-1, 1}, RelColor::Opp, Kind::Queen, "trapA_queen");
        b.piece({-1, 2}, RelColor::Opp, Kind::Queen, "trapB_queen");
        b.plug({0, 1}, "plug0");
        b.plug({-2, 2}, "plug1");
        b.plug({-2, 3}, "plug3");
        b.plug({-1, 3}, "plug4");
        // Bridge tower beside the pocket and the trap for the jump over it.
        // The first two arm hexes border the armed cluster, so they are
        // towers owned by the template; the connecting chain starts beyond.
        b.plug({1, -1}, "bridge");
        b.piece({2, -2}, RelColor::Opp, Kind::Queen, "trapC_queen");  // hole (2,-1)
        b.plug({3, -2}, "plugC1");
        b.plug({3, -3}, "plugC2");
        b.plug({1, -2}, "arm1");
        b.plug({2, -3}, "arm2");
        b.entry("in", {-1, 0}, Direction{0}, {0, 0}, RelColor::Own);
        b.exit("out", {3, -4}, Direction{1}, RelColor::Opp);
        b.forced("@in", {0, 0});
        b.exitJump("relay", "out");
        return b.t;
    }();
    return t;
}

const GadgetTemplate& dirChanger60CcwTemplate() {
    static const GadgetTemplate t = mirrorTemplate(dirChanger60Template(), "dir_changer_60m");
    return t;
}

const GadgetTemplate& dirChanger120Template() {
    static const GadgetTemplate t = [] {
        Builder b(GadgetKind::DirChanger120, "dir_changer_120");
        b.piece({0, -1}, RelColor::Opp, Kind::Grasshopper, "relay");
        b.piece({-1, 1}, RelColor::Opp, Kind::Queen, "trapA_queen");
        b.piece({-1, 2}, RelColor::Opp, Kind::Queen, "trapB_queen");
        b.plug({0, 1}, "plug0");
        b.plug({-2, 2}, "plug1");
        b.plug({-2, 3}, "plug3");
        b.plug({-1, 3}, "plug4");
        // Two bridge towers reach around to the northwest arm; two armed
        // queens price the east and northeast lines over them.
        b.plug({1, -1}, "bridge1");
        b.plug({1, -2}, "bridge2");
        b.piece({2, -2}, RelColor::Opp, Kind::Queen, "trapC_queen");  // hole (2,-1)
        b.piece({3, -3}, RelColor::Opp, Kind::Queen, "trapD_queen");  // hole (3,-4)
        b.plug({3, -2}, "plugC1");
        b.plug({2, -3}, "plugC2");
        b.plug({4, -3}, "plugD1");
        b.plug({4, -4}, "plugD2");
        b.entry("in", {-1, 0}, Direction{0}, {0, 0}, RelColor::Own);
        b.exit("out", {0, -2}, Direction{2}, RelColor::Opp);
        b.forced("@in", {0, 0});
        b.exitJump("relay", "out");
        return b.t;
    }();
    return t;
}

const GadgetTemplate& dirChanger120CcwTemplate() {
    static const GadgetTemplate t = mirrorTemplate(dirChanger120Template(), "dir_changer_120m");
    return t;
}

namespace {

// Shared geometry of the join: a switcher cell whose pocket is also the
// terminus of a second jump line arriving along the southwest diagonal
// through the armed cluster. Whichever carrier lands, the relay continues
// east; the other entry's side stays locked upstream.
GadgetTemplate joinGeometry(const std::string& name) {
    Builder b(GadgetKind::Join, name);
    b.piece({0, -1}, RelColor::Opp, Kind::Grasshopper, "relay");
    b.piece({-1, 1}, RelColor::Opp, Kind::Queen, "trapA_queen");
    b.piece({-1, 2}, RelColor::Opp, Kind::Queen, "trapB_queen");
    b.plug({0, 1}, "plug0");
    b.plug({-2, 2}, "plug1");
    b.plug({-2, 3}, "plug3");
    b.plug({-1, 3}, "plug4");
    b.plug({-3, 3}, "diag_anchor");
    b.entry("in_a", {-1, 0}, Direction{0}, {0, 0}, RelColor::Own);
    b.entry("in_b", {-4, 4}, Direction{1}, {0, 0}, RelColor::Own);
    b.exit("out", {1, -1}, Direction{0}, RelColor::Opp);
    return b.t;
}

}  // namespace

const GadgetTemplate& joinTemplate() {
    static const GadgetTemplate t = [] {
        GadgetTemplate g = joinGeometry("join");
        g.script.push_back({{{"", "@in_a", {0, 0}, ""}}});
        g.script.push_back({{{"", "relay", Hex{}, "out"}}});
        return g;
    }();
    return t;
}

const GadgetTemplate& joinAltTemplate() {
    static const GadgetTemplate t = [] {
        GadgetTemplate g = joinGeometry("join_alt");
        g.script.push_back({{{"", "@in_b", {0, 0}, ""}}});
        g.script.push_back({{{"", "relay", Hex{}, "out"}}});
        return g;
    }();
    return t;
}

// Gap: the hive is deliberately not adjacent across two empty files; the
// crossing spider transfers sides without ever bridging them, so no cycle
// forms anywhere in the hive at any time.
const GadgetTemplate& gapTemplate() {
    static const GadgetTemplate t = [] {
        Builder b(GadgetKind::Gap, "gap");
        b.piece({0, -1}, RelColor::Own, Kind::Spider, "crosser");
        b.entry("in", {-1, 0}, Direction{0}, {0, 0}, RelColor::Opp);
        b.exit("out", {4, -1}, Direction{0}, RelColor::Opp);
        b.forced("@in", {0, 0});
        return b.t;
    }();
    return t;
}

const GadgetTemplate& quantifierTemplate() {
    static const GadgetTemplate t = [] {
        Builder b(GadgetKind::QuantifierTester, "quantifier_tester");
        b.piece({0, -1}, RelColor::Own, Kind::Spider, "S");
        b.entry("in", {-1, 0}, Direction{0}, {0, 0}, RelColor::Own);
        b.exit("out_true", {-1, 2}, Direction{4}, RelColor::Own);
        b.exit("out_false", {1, -3}, Direction{2}, RelColor::Own);
        b.entry("tester_low", {4, 2}, Direction{3}, {3, 2}, RelColor::Opp);
        b.entry("tester_high", {4, -4}, Direction{3}, {3, -4}, RelColor::Opp);
        b.forced("@in", {0, 0});
        return b.t;
    }();
    return t;
}

std::vector<const GadgetTemplate*> allTemplates() {
    return {&turnSwitcherTemplate(),     &joinTemplate(),      &joinAltTemplate(),
            &chooserTemplate(),          &dirChanger60Template(),
            &dirChanger60CcwTemplate(),  &dirChanger120Template(),
            &dirChanger120CcwTemplate(), &gapTemplate(),
            &quantifierTemplate()};
}

}  // namespace hive
