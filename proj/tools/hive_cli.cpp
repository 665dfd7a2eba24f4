// Command-line front end; subcommands cover the pipeline from formulas to
// compiled boards and verification runs. Grows alongside the library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hive/geography.hpp"
#include "hive/movegen.hpp"
#include "hive/qbf.hpp"
#include "hive/render.hpp"
#include "hive/solver.hpp"

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized n-Hive hardness pipeline"};
    app.require_subcommand(1);

    std::string formulaPath, boardPath, outPath, format = "ascii";
    int depth = 12;

    auto* qbfSolve = app.add_subcommand("qbf-solve", "evaluate a QDIMACS formula");
    qbfSolve->add_option("--formula", formulaPath)->required();

    auto* geoFrom = app.add_subcommand("geo-from-formula", "build the geography graph");
    geoFrom->add_option("--formula", formulaPath)->required();
    geoFrom->add_option("--out", outPath);
    std::string geoFormat = "json";
    geoFrom->add_option("--format", geoFormat)->check(CLI::IsMember({"json", "dot"}));

    auto* geoSolve = app.add_subcommand("geo-solve", "winner of a geography instance");
    geoSolve->add_option("--graph", boardPath)->required();

    auto* geoReduce = app.add_subcommand("geo-reduce", "degree-reduce a geography graph");
    geoReduce->add_option("--graph", boardPath)->required();
    geoReduce->add_option("--out", outPath);

    auto* render = app.add_subcommand("render", "render a board file");
    render->add_option("--board", boardPath)->required();
    render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", outPath);

    auto* solve = app.add_subcommand("solve", "prove a forced win from a board");
    solve->add_option("--board", boardPath)->required();
    solve->add_option("--depth", depth);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*qbfSolve) {
            auto f = hive::qbf::parseQdimacs(readFile(formulaPath));
            std::cout << hive::qbf::emitSexpr(f);
            std::cout << "value: " << (hive::qbf::evalTqbf(f) ? "true" : "false") << "\n";
            std::cout << "formula_game_winner: "
                      << hive::qbf::playerName(hive::qbf::formulaGameWinner(hive::qbf::normalizeAlternating(f)))
                      << "\n";
        } else if (*geoFrom) {
            auto f = hive::qbf::normalizeAlternating(hive::qbf::parseQdimacs(readFile(formulaPath)));
            auto g = hive::geo::fgToGg(f);
            std::string text = geoFormat == "dot" ? g.toDot() : g.toJson();
            if (outPath.empty())
                std::cout << text;
            else
                writeFile(outPath, text);
        } else if (*geoSolve) {
            auto g = hive::geo::GeoGraph::fromJson(readFile(boardPath));
            std::cout << hive::geo::ggPlayerName(hive::geo::ggWinner(g)) << "\n";
        } else if (*geoReduce) {
            auto g = hive::geo::GeoGraph::fromJson(readFile(boardPath));
            auto r = hive::geo::reduceDegree(g);
            if (outPath.empty())
                std::cout << r.graph.toJson();
            else
                writeFile(outPath, r.graph.toJson());
        } else if (*render) {
            auto b = hive::Board::fromJson(readFile(boardPath));
            std::string text = format == "svg" ? hive::renderSvg(b) : hive::renderAscii(b);
            if (outPath.empty())
                std::cout << text;
            else
                writeFile(outPath, text);
        } else if (*solve) {
            auto b = hive::Board::fromJson(readFile(boardPath));
            hive::Solver solver;
            auto r = solver.solve(b, depth);
            if (r.proven) {
                std::cout << "ProvenWin " << (r.winner == hive::Color::Black ? "Black" : "White")
                          << " in " << r.plies << " plies\n";
                hive::Board cur = b;
                for (const auto& m : r.pv) {
                    std::cout << "  " << hive::moveToString(cur, m) << "\n";
                    cur = hive::apply(cur, m);
                }
            } else {
                std::cout << "ProvenDrawOrUnknown (nodes=" << r.nodes << ")\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
        return 1;
    }
    return 0;
}
