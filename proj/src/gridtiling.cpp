#include "sip/gridtiling.hpp"

#include <sstream>

#include "sip/errors.hpp"

namespace sip {

int GridTilingInstance::total_tiles() const {
    int total = 0;
    for (const auto& row : tiles)
        for (const auto& cell : row) total += int(cell.size());
    return total;
}

void GridTilingInstance::validate() const {
    if (k < 1) throw InputError("grid dimension must be positive");
    if (n < 1) throw InputError("coordinate bound must be positive");
    if (int(tiles.size()) != k) throw InputError("tile grid has wrong row count");
    for (int i = 1; i <= k; ++i) {
        if (int(tiles[i - 1].size()) != k) throw InputError("tile grid has wrong column count");
        for (int j = 1; j <= k; ++j) {
            const auto& c = cell(i, j);
            if (c.empty())
                throw InputError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") has no tiles");
            for (auto [a, b] : c)
                if (a < 1 || a > n || b < 1 || b > n)
                    throw InputError("tile (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") out of [" + std::to_string(n) + "]^2 in cell (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

std::string selection_agreement_failure(const GridTilingInstance& inst, const Selection& sel) {
    if (sel.k != inst.k) return "selection grid size differs from the instance";
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j) {
            Tile t = sel.at(i, j);
            bool listed = false;
            for (Tile u : inst.cell(i, j)) listed |= (u == t);
            if (!listed)
                return "cell (" + std::to_string(i) + "," + std::to_string(j) +
                       ") picks a tile outside its set";
            if (i < inst.k && sel.at(i + 1, j).first != t.first)
                return "cells (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                       std::to_string(i + 1) + "," + std::to_string(j) +
                       ") disagree on the first component";
            if (j < inst.k && sel.at(i, j + 1).second != t.second)
                return "cells (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                       std::to_string(i) + "," + std::to_string(j + 1) +
                       ") disagree on the second component";
        }
    return "";
}

namespace {

struct TilingSearch {
    const GridTilingInstance& inst;
    uint64_t nodes = 0;
    uint64_t budget;
    Selection sel;

    bool place(int idx) {
        if (++nodes > budget) throw BudgetExceeded("grid tiling node budget exceeded");
        int k = inst.k;
        if (idx == k * k) return true;
        int i = idx / k + 1, j = idx % k + 1;
        for (Tile t : inst.cell(i, j)) {
            if (i > 1 && sel.at(i - 1, j).first != t.first) continue;
            if (j > 1 && sel.at(i, j - 1).second != t.second) continue;
            sel.choice[i - 1][j - 1] = t;
            if (place(idx + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Selection> solve_grid_tiling(const GridTilingInstance& inst,
                                           const SolveOptions& opts) {
    inst.validate();
    TilingSearch search{inst, 0, opts.node_budget, Selection{}};
    search.sel.k = inst.k;
    search.sel.choice.assign(inst.k, std::vector<Tile>(inst.k, {0, 0}));
    if (!search.place(0)) return std::nullopt;
    return search.sel;
}

namespace {

Tile parse_tile(const std::string& tok, int line_no) {
    size_t comma = tok.find(',');
    if (comma == std::string::npos)
        throw ParseError(line_no, "expected tile '<a>,<b>', got '" + tok + "'");
    try {
        size_t pos = 0;
        int a = std::stoi(tok.substr(0, comma), &pos);
        if (pos != comma) throw std::invalid_argument("");
        int b = std::stoi(tok.substr(comma + 1), &pos);
        if (pos != tok.size() - comma - 1) throw std::invalid_argument("");
        return {a, b};
    } catch (...) {
        throw ParseError(line_no, "expected tile '<a>,<b>', got '" + tok + "'");
    }
}

}  // namespace

GridTilingInstance parse_grid_tiling(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    GridTilingInstance inst;
    bool have_header = false;
    std::vector<std::vector<bool>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "gridtiling") {
            if (have_header) throw ParseError(line_no, "duplicate 'gridtiling' header");
            if (!(ss >> inst.k >> inst.n) || inst.k < 1 || inst.n < 1)
                throw ParseError(line_no, "expected 'gridtiling <k> <n>' with positive values");
            inst.tiles.assign(inst.k, std::vector<std::vector<Tile>>(inst.k));
            seen.assign(inst.k, std::vector<bool>(inst.k, false));
            have_header = true;
            continue;
        }
        if (tag == "cell") {
            if (!have_header) throw ParseError(line_no, "'cell' line before 'gridtiling' header");
            int i, j;
            std::string colon;
            if (!(ss >> i >> j >> colon) || colon != ":")
                throw ParseError(line_no, "expected 'cell <i> <j> : <a>,<b> ...'");
            if (i < 1 || i > inst.k || j < 1 || j > inst.k)
                throw ParseError(line_no, "cell index out of [" + std::to_string(inst.k) + "]^2");
            if (seen[i - 1][j - 1])
                throw ParseError(line_no, "cell (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") defined twice");
            seen[i - 1][j - 1] = true;
            std::string tok;
            while (ss >> tok) {
                Tile t = parse_tile(tok, line_no);
                if (t.first < 1 || t.first > inst.n || t.second < 1 || t.second > inst.n)
                    throw ParseError(line_no, "tile coordinate out of [" +
                                                  std::to_string(inst.n) + "]");
                inst.tiles[i - 1][j - 1].push_back(t);
            }
            if (inst.tiles[i - 1][j - 1].empty())
                throw ParseError(line_no, "cell without tiles");
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(line_no + 1, "missing 'gridtiling' header");
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j)
            if (!seen[i - 1][j - 1])
                throw ParseError(line_no + 1, "cell (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") missing");
    return inst;
}

std::string serialize_grid_tiling(const GridTilingInstance& inst) {
    std::ostringstream out;
    out << "gridtiling " << inst.k << " " << inst.n << "\n";
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j) {
            out << "cell " << i << " " << j << " :";
            for (Tile t : inst.cell(i, j)) out << " " << t.first << "," << t.second;
            out << "\n";
        }
    return out.str();
}

Selection parse_selection(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Selection sel;
    bool have_header = false;
    std::vector<std::vector<bool>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "selection") {
            if (have_header) throw ParseError(line_no, "duplicate 'selection' header");
            if (!(ss >> sel.k) || sel.k < 1)
                throw ParseError(line_no, "expected 'selection <k>' with k >= 1");
            sel.choice.assign(sel.k, std::vector<Tile>(sel.k, {0, 0}));
            seen.assign(sel.k, std::vector<bool>(sel.k, false));
            have_header = true;
            continue;
        }
        if (tag == "s") {
            if (!have_header) throw ParseError(line_no, "'s' line before 'selection' header");
            int i, j;
            std::string colon, tok;
            if (!(ss >> i >> j >> colon >> tok) || colon != ":")
                throw ParseError(line_no, "expected 's <i> <j> : <a>,<b>'");
            if (i < 1 || i > sel.k || j < 1 || j > sel.k)
                throw ParseError(line_no, "cell index out of [" + std::to_string(sel.k) + "]^2");
            if (seen[i - 1][j - 1])
                throw ParseError(line_no, "selection for cell (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") given twice");
            seen[i - 1][j - 1] = true;
            sel.choice[i - 1][j - 1] = parse_tile(tok, line_no);
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(line_no + 1, "missing 'selection' header");
    for (int i = 1; i <= sel.k; ++i)
        for (int j = 1; j <= sel.k; ++j)
            if (!seen[i - 1][j - 1])
                throw ParseError(line_no + 1, "selection for cell (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") missing");
    return sel;
}

std::string serialize_selection(const Selection& sel) {
    std::ostringstream out;
    out << "selection " << sel.k << "\n";
    for (int i = 1; i <= sel.k; ++i)
        for (int j = 1; j <= sel.k; ++j) {
            Tile t = sel.at(i, j);
            out << "s " << i << " " << j << " : " << t.first << "," << t.second << "\n";
        }
    return out.str();
}

}  // namespace sip
