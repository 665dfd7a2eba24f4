#include "hive/geography.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace hive::geo {

std::string roleName(Role r) {
    switch (r) {
        case Role::None: return "None";
        case Role::Start: return "Start";
        case Role::DiamondLower: return "DiamondLower";
        case Role::DiamondUpper: return "DiamondUpper";
        case Role::DiamondRight: return "DiamondRight";
        case Role::DiamondLeft: return "DiamondLeft";
        case Role::ClauseHub: return "ClauseHub";
        case Role::Clause: return "Clause";
        case Role::Literal: return "Literal";
        case Role::Padding: return "Padding";
    }
    return "?";
}

int GeoGraph::addNode(const std::string& label, RoleTag tag) {
    labels.push_back(label);
    roles.push_back(tag);
    out.emplace_back();
    in.emplace_back();
    return nodeCount() - 1;
}

void GeoGraph::addEdge(int from, int to) {
    if (from == to) throw std::invalid_argument("self-loop rejected: " + labels[static_cast<std::size_t>(from)]);
    auto& o = out[static_cast<std::size_t>(from)];
    if (std::find(o.begin(), o.end(), to) != o.end())
        throw std::invalid_argument("parallel edge rejected: " + labels[static_cast<std::size_t>(from)] +
                                    " -> " + labels[static_cast<std::size_t>(to)]);
    o.push_back(to);
    in[static_cast<std::size_t>(to)].push_back(from);
}

std::string GeoGraph::toDot() const {
    std::ostringstream outStream;
    outStream << "digraph gg {\n";
    for (int v = 0; v < nodeCount(); ++v) {
        const RoleTag tag = roles[static_cast<std::size_t>(v)];
        std::string color = "black";
        switch (tag.role) {
            case Role::Start: color = "green"; break;
            case Role::DiamondLower: color = "blue"; break;
            case Role::DiamondUpper: color = "red"; break;
            case Role::ClauseHub:
            case Role::Clause: color = "orange"; break;
            case Role::Literal: color = "purple"; break;
            case Role::Padding: color = "gray"; break;
            default: break;
        }
        outStream << "  n" << v << " [label=\"" << labels[static_cast<std::size_t>(v)] << "\\n"
                  << roleName(tag.role) << "\" color=" << color << "];\n";
    }
    for (int v = 0; v < nodeCount(); ++v)
        for (int w : out[static_cast<std::size_t>(v)]) outStream << "  n" << v << " -> n" << w << ";\n";
    outStream << "}\n";
    return outStream.str();
}

std::string GeoGraph::toJson() const {
    nlohmann::json j;
    j["schema"] = "v1";
    j["start"] = start;
    nlohmann::json nodes = nlohmann::json::array();
    for (int v = 0; v < nodeCount(); ++v) {
        nodes.push_back({{"label", labels[static_cast<std::size_t>(v)]},
                         {"role", roleName(roles[static_cast<std::size_t>(v)].role)},
                         {"index", roles[static_cast<std::size_t>(v)].index}});
    }
    j["nodes"] = nodes;
    nlohmann::json edges = nlohmann::json::array();
    for (int v = 0; v < nodeCount(); ++v)
        for (int w : out[static_cast<std::size_t>(v)]) edges.push_back({v, w});
    j["edges"] = edges;
    return j.dump(2);
}

GeoGraph GeoGraph::fromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GeoGraph g;
    for (const auto& n : j.at("nodes")) {
        RoleTag tag;
        const std::string role = n.value("role", "None");
        for (int r = 0; r <= static_cast<int>(Role::Padding); ++r)
            if (roleName(static_cast<Role>(r)) == role) tag.role = static_cast<Role>(r);
        tag.index = n.value("index", 0);
        g.addNode(n.at("label").get<std::string>(), tag);
    }
    for (const auto& e : j.at("edges")) g.addEdge(e.at(0).get<int>(), e.at(1).get<int>());
    g.start = j.value("start", 0);
    if (g.start < 0 || g.start >= g.nodeCount()) throw std::invalid_argument("start node out of range");
    return g;
}

namespace {

// Marked-node set; the solver caps instances at 256 nodes.
struct MarkSet {
    std::array<uint64_t, 4> words{};

    bool test(int i) const { return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
    void set(int i) { words[static_cast<std::size_t>(i >> 6)] |= uint64_t{1} << (i & 63); }
    void clear(int i) { words[static_cast<std::size_t>(i >> 6)] &= ~(uint64_t{1} << (i & 63)); }
    friend bool operator==(const MarkSet& a, const MarkSet& b) { return a.words == b.words; }
};

struct StateKey {
    MarkSet marks;
    int node;
    friend bool operator==(const StateKey& a, const StateKey& b) {
        return a.node == b.node && a.marks == b.marks;
    }
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(k.node + 1);
        for (uint64_t w : k.marks.words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

GgPlayer ggWinner(const GeoGraph& g) {
    if (g.nodeCount() > 256) throw std::invalid_argument("ggWinner: more than 256 nodes");
    if (g.start < 0 || g.start >= g.nodeCount()) throw std::invalid_argument("ggWinner: bad start");
    std::unordered_map<StateKey, bool, StateHash> memo;
    MarkSet marks;
    marks.set(g.start);

    // True iff the player to move from `node` wins.
    std::function<bool(int)> moverWins = [&](int node) -> bool {
        StateKey key{marks, node};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool win = false;
        for (int next : g.out[static_cast<std::size_t>(node)]) {
            if (marks.test(next)) continue;
            marks.set(next);
            const bool opponentWins = moverWins(next);
            marks.clear(next);
            if (!opponentWins) { win = true; break; }
        }
        memo.emplace(key, win);
        return win;
    };
    return moverWins(g.start) ? GgPlayer::One : GgPlayer::Two;
}

GeoGraph fgToGg(const qbf::QbfFormula& f) {
    if (!qbf::isAlternatingNormalized(f))
        throw std::invalid_argument("fgToGg requires an alternating-normalized formula");
    GeoGraph g;
    const int n = static_cast<int>(f.prefix.size());
    g.start = g.addNode("S", {Role::Start, 0});

    std::vector<int> lower(static_cast<std::size_t>(n)), upper(static_cast<std::size_t>(n)),
        right(static_cast<std::size_t>(n));
    int entry = g.start;  // node whose successor set is the next diamond's choice pair
    for (int i = 0; i < n; ++i) {
        const int var = f.prefix[static_cast<std::size_t>(i)].second;
        const std::string vs = "v" + std::to_string(var);
        if (i > 0) {
            const int left = g.addNode("L_" + vs, {Role::DiamondLeft, var});
            g.addEdge(entry, left);
            entry = left;
        }
        lower[static_cast<std::size_t>(i)] = g.addNode("lo_" + vs, {Role::DiamondLower, var});
        upper[static_cast<std::size_t>(i)] = g.addNode("up_" + vs, {Role::DiamondUpper, var});
        right[static_cast<std::size_t>(i)] = g.addNode("R_" + vs, {Role::DiamondRight, var});
        g.addEdge(entry, lower[static_cast<std::size_t>(i)]);
        g.addEdge(entry, upper[static_cast<std::size_t>(i)]);
        g.addEdge(lower[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(i)]);
        g.addEdge(upper[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(i)]);
        entry = right[static_cast<std::size_t>(i)];
    }
    const int hub = g.addNode("C", {Role::ClauseHub, 0});
    g.addEdge(entry, hub);

    std::unordered_map<int, int> varSlot;  // variable -> prefix position
    for (int i = 0; i < n; ++i) varSlot[f.prefix[static_cast<std::size_t>(i)].second] = i;

    int occurrence = 0;
    for (int c = 0; c < f.clauseCount(); ++c) {
        const int clauseNode = g.addNode("c" + std::to_string(c + 1), {Role::Clause, c});
        g.addEdge(hub, clauseNode);
        for (int lit : f.clauses[static_cast<std::size_t>(c)]) {
            const int var = lit < 0 ? -lit : lit;
            const auto slot = varSlot.find(var);
            if (slot == varSlot.end())
                throw std::invalid_argument("matrix variable not in prefix: v" + std::to_string(var));
            const std::string name =
                "l" + std::to_string(occurrence + 1) + (lit < 0 ? "_!" : "_") + "v" + std::to_string(var);
            const int litNode = g.addNode(name, {Role::Literal, occurrence});
            g.addEdge(clauseNode, litNode);
            g.addEdge(litNode, lit > 0 ? lower[static_cast<std::size_t>(slot->second)]
                                       : upper[static_cast<std::size_t>(slot->second)]);
            occurrence++;
        }
    }
    return g;
}

FggGraph::FggGraph(GeoGraph g) : graph(std::move(g)) {
    for (int v = 0; v < graph.nodeCount(); ++v) {
        const int din = graph.indegree(v);
        const int dout = graph.outdegree(v);
        if (din > 2 || dout > 2 || din + dout > 3)
            throw std::logic_error("degree bound violated at node " +
                                   graph.labels[static_cast<std::size_t>(v)] + ": in=" +
                                   std::to_string(din) + " out=" + std::to_string(dout));
    }
}

FggGraph reduceDegree(const GeoGraph& g) {
    bool compliant = true;
    for (int v = 0; v < g.nodeCount() && compliant; ++v)
        if (g.indegree(v) > 2 || g.outdegree(v) > 2 || g.indegree(v) + g.outdegree(v) > 3)
            compliant = false;
    if (compliant) return FggGraph(g);

    GeoGraph r;
    const int n = g.nodeCount();
    std::vector<int> coreIn(static_cast<std::size_t>(n)), coreOut(static_cast<std::size_t>(n));

    for (int v = 0; v < n; ++v) {
        const std::string& label = g.labels[static_cast<std::size_t>(v)];
        const RoleTag tag = g.roles[static_cast<std::size_t>(v)];
        const int din = g.indegree(v);
        const int dout = g.outdegree(v);
        const int effIn = din > 2 ? 1 : din;
        const int effOut = dout > 2 ? 1 : dout;
        const int core = r.addNode(label, tag);
        if (effIn == 2 && effOut == 2) {
            // (2,2) split: in-node -> pad -> out-node keeps added length even.
            const int pad = r.addNode(label + "#split_pad", {Role::Padding, tag.index});
            const int outNode = r.addNode(label + "#out", {Role::Padding, tag.index});
            r.addEdge(core, pad);
            r.addEdge(pad, outNode);
            coreIn[static_cast<std::size_t>(v)] = core;
            coreOut[static_cast<std::size_t>(v)] = outNode;
        } else {
            coreIn[static_cast<std::size_t>(v)] = core;
            coreOut[static_cast<std::size_t>(v)] = core;
        }
    }
    if (g.start >= 0 && g.start < n) r.start = coreIn[static_cast<std::size_t>(g.start)];

    // inAttach[v][j]: node receiving the j-th original in-edge of v.
    std::vector<std::vector<int>> inAttach(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> outAttach(static_cast<std::size_t>(n));

    for (int v = 0; v < n; ++v) {
        const std::string& label = g.labels[static_cast<std::size_t>(v)];
        const int din = g.indegree(v);
        auto& attach = inAttach[static_cast<std::size_t>(v)];
        if (din <= 2) {
            attach.assign(static_cast<std::size_t>(din), coreIn[static_cast<std::size_t>(v)]);
        } else {
            // Merge chain M_2..M_k with one forced pad between consecutive
            // merge nodes and before the core, so every entry path adds an
            // even number of marks and every blocked corridor is even too.
            std::vector<int> merges;
            for (int j = 2; j <= din; ++j)
                merges.push_back(r.addNode(label + "#in_m" + std::to_string(j), {Role::Padding, 0}));
            for (std::size_t j = 0; j + 1 < merges.size(); ++j) {
                const int pad = r.addNode(label + "#in_p" + std::to_string(j + 3), {Role::Padding, 0});
                r.addEdge(merges[j], pad);
                r.addEdge(pad, merges[j + 1]);
            }
            const int lastPad = r.addNode(label + "#in_pv", {Role::Padding, 0});
            r.addEdge(merges.back(), lastPad);
            r.addEdge(lastPad, coreIn[static_cast<std::size_t>(v)]);
            attach.resize(static_cast<std::size_t>(din));
            attach[0] = merges[0];
            attach[1] = merges[0];
            for (int j = 2; j < din; ++j) attach[static_cast<std::size_t>(j)] = merges[static_cast<std::size_t>(j - 1)];
        }
        const int dout = g.outdegree(v);
        auto& oattach = outAttach[static_cast<std::size_t>(v)];
        if (dout <= 2) {
            oattach.assign(static_cast<std::size_t>(dout), coreOut[static_cast<std::size_t>(v)]);
        } else {
            std::vector<int> splits;
            for (int j = 2; j <= dout; ++j)
                splits.push_back(r.addNode(label + "#out_n" + std::to_string(j), {Role::Padding, 0}));
            const int firstPad = r.addNode(label + "#out_pv", {Role::Padding, 0});
            r.addEdge(coreOut[static_cast<std::size_t>(v)], firstPad);
            r.addEdge(firstPad, splits.back());
            for (std::size_t j = splits.size(); j-- > 1;) {
                const int pad = r.addNode(label + "#out_p" + std::to_string(j + 2), {Role::Padding, 0});
                r.addEdge(splits[j], pad);
                r.addEdge(pad, splits[j - 1]);
            }
            oattach.resize(static_cast<std::size_t>(dout));
            oattach[0] = splits[0];
            oattach[1] = splits[0];
            for (int j = 2; j < dout; ++j) oattach[static_cast<std::size_t>(j)] = splits[static_cast<std::size_t>(j - 1)];
        }
    }

    // Reconnect original edges via the attachment slots.
    std::vector<int> inSeen(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        const auto& targets = g.out[static_cast<std::size_t>(u)];
        for (std::size_t j = 0; j < targets.size(); ++j) {
            const int v = targets[j];
            const int from = outAttach[static_cast<std::size_t>(u)][j];
            const int to = inAttach[static_cast<std::size_t>(v)][static_cast<std::size_t>(inSeen[static_cast<std::size_t>(v)]++)];
            r.addEdge(from, to);
        }
    }
    return FggGraph(std::move(r));
}

FggGraph makeFgg(const qbf::QbfFormula& f) { return reduceDegree(fgToGg(f)); }

}  // namespace hive::geo
