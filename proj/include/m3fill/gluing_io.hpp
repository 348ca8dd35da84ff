#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "m3fill/errors.hpp"
#include "m3fill/perm.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

namespace detail {

// Column order 012, 013, 023, 123 corresponds to face indices 3, 2, 1, 0.
constexpr std::array<int, 4> kColumnFace{3, 2, 1, 0};
constexpr std::array<std::array<int, 3>, 4> kColumnVerts{
    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

}  // namespace detail

/// Text form, one row per tetrahedron:
///   tet | 012 | 013 | 023 | 123
///   0 | 1(210) | 1(031) | 2(123) | 4(132)
/// An entry d(abc) glues the column's face vertexwise to vertices (a,b,c) of
/// tetrahedron d; "--" marks an open face.
inline std::string export_gluing_table(const Triangulation& tri) {
    std::string out = "tet | 012 | 013 | 023 | 123\n";
    for (int t = 0; t < tri.size(); ++t) {
        out += std::to_string(t);
        for (int col = 0; col < 4; ++col) {
            int f = detail::kColumnFace[static_cast<std::size_t>(col)];
            const auto& g = tri.gluing(t, f);
            out += " | ";
            if (!g) {
                out += "--";
            } else {
                out += std::to_string(g->tet);
                out += "(";
                for (int v : detail::kColumnVerts[static_cast<std::size_t>(col)])
                    out += std::to_string(g->perm[v]);
                out += ")";
            }
        }
        out += "\n";
    }
    return out;
}

inline Triangulation import_gluing_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto split_row = [&](const std::string& s) {
        std::vector<std::string> cells;
        std::string cur;
        for (char c : s) {
            if (c == '|') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(cur);
        for (auto& cell : cells) {
            std::size_t b = cell.find_first_not_of(" \t");
            std::size_t e = cell.find_last_not_of(" \t\r");
            cell = (b == std::string::npos) ? "" : cell.substr(b, e - b + 1);
        }
        return cells;
    };

    if (!std::getline(in, line)) throw ParseError(1, 1, "empty gluing table");
    ++lineno;
    {
        auto cells = split_row(line);
        if (cells.size() != 5 || cells[1] != "012" || cells[2] != "013" ||
            cells[3] != "023" || cells[4] != "123")
            throw ParseError(lineno, 1, "expected header 'tet | 012 | 013 | 023 | 123'");
    }

    struct RawEntry {
        int target;
        std::array<int, 3> images;
    };
    std::vector<std::array<std::optional<RawEntry>, 4>> rows;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_row(line);
        if (cells.size() != 5)
            throw ParseError(lineno, 1, "expected 5 columns, got " +
                                            std::to_string(cells.size()));
        int index;
        try {
            index = std::stoi(cells[0]);
        } catch (...) {
            throw ParseError(lineno, 1, "bad tetrahedron index '" + cells[0] + "'");
        }
        if (index != static_cast<int>(rows.size()))
            throw ParseError(lineno, 1, "rows must be numbered consecutively from 0");
        std::array<std::optional<RawEntry>, 4> row;
        for (int col = 0; col < 4; ++col) {
            const std::string& cell = cells[static_cast<std::size_t>(col + 1)];
            if (cell == "--") continue;
            int colpos = 1;  // column for error messages: 1-based cell index
            std::size_t open = cell.find('(');
            if (open == std::string::npos || cell.back() != ')' ||
                cell.size() != open + 5)
                throw ParseError(lineno, colpos, "bad entry '" + cell + "'");
            RawEntry e{};
            try {
                e.target = std::stoi(cell.substr(0, open));
            } catch (...) {
                throw ParseError(lineno, colpos, "bad target in '" + cell + "'");
            }
            for (int k = 0; k < 3; ++k) {
                char c = cell[open + 1 + static_cast<std::size_t>(k)];
                if (c < '0' || c > '3')
                    throw ParseError(lineno, colpos, "bad vertex digit in '" + cell + "'");
                e.images[static_cast<std::size_t>(k)] = c - '0';
            }
            if (e.images[0] == e.images[1] || e.images[0] == e.images[2] ||
                e.images[1] == e.images[2])
                throw ParseError(lineno, colpos, "repeated vertex in '" + cell + "'");
            row[static_cast<std::size_t>(col)] = e;
        }
        rows.push_back(row);
    }

    Triangulation tri;
    for (std::size_t i = 0; i < rows.size(); ++i) tri.add_tet();
    for (int t = 0; t < static_cast<int>(rows.size()); ++t) {
        for (int col = 0; col < 4; ++col) {
            const auto& e = rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(col)];
            if (!e) continue;
            if (e->target < 0 || e->target >= tri.size())
                throw ParseError(t + 2, 1,
                                 "target tetrahedron " + std::to_string(e->target) +
                                     " out of range");
            int f = detail::kColumnFace[static_cast<std::size_t>(col)];
            Perm4 perm = face_perm(f, e->images);
            const auto& mine = tri.gluing(t, f);
            if (mine) {
                // set when the partner row was processed; must agree
                if (!(mine->tet == e->target && mine->perm == perm))
                    throw ParseError(t + 2, 1, "gluing does not match its partner row");
                continue;
            }
            int of = perm[f];
            const auto& theirs = tri.gluing(e->target, of);
            if (theirs)
                throw ParseError(t + 2, 1, "two different gluings claim one face");
            if (e->target == t && of == f)
                throw ParseError(t + 2, 1, "face glued to itself");
            tri.glue(t, f, e->target, perm);
        }
    }
    return tri;
}

/// JSON mirror of the same data with explicit 4-element permutations.
inline std::string export_gluing_json(const Triangulation& tri) {
    std::string out = "{\"tetrahedra\":[";
    for (int t = 0; t < tri.size(); ++t) {
        if (t) out += ",";
        out += "{\"faces\":[";
        for (int f = 0; f < 4; ++f) {
            if (f) out += ",";
            const auto& g = tri.gluing(t, f);
            if (!g) {
                out += "null";
            } else {
                out += "{\"tet\":" + std::to_string(g->tet) + ",\"perm\":[";
                for (int v = 0; v < 4; ++v) {
                    if (v) out += ",";
                    out += std::to_string(g->perm[v]);
                }
                out += "]}";
            }
        }
        out += "]";
        if (!tri.tet(t).label.empty()) {
            out += ",\"label\":\"" + tri.tet(t).label + "\"";
        }
        out += "}";
    }
    out += "]}";
    return out;
}

}  // namespace m3fill
