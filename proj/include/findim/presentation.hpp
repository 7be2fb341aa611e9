// Textual presentations of quivers with relations, modules over them,
// gluings, module lists and subalgebra chains: the AST, its canonical
// printer, and the built-in fixtures.
//
// A path token like  c*d  composes right to left: d first, then c, so it
// requires target(d) = source(c).  Relations are stored normalized: a
// map from path to a nonzero coefficient mod p.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "findim/fp.hpp"

namespace findim {

using Path = std::vector<int>;  // arrow indices, leftmost applied last

struct QuiverPresentation {
    struct Arrow {
        std::string name;
        int src = 0, tgt = 0;  // vertex indices
        bool operator==(const Arrow&) const = default;
    };
    using Relation = std::map<Path, fp::Elt>;

    std::string name;
    fp::Elt p = 65521;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    int nilpotency = 2;

    bool operator==(const QuiverPresentation&) const = default;

    int vertex_index(const std::string& v) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return (int)i;
        return -1;
    }
    int arrow_index(const std::string& a) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == a) return (int)i;
        return -1;
    }
    // composition order: path.back() acts first
    int path_source(const Path& q) const { return arrows[(std::size_t)q.back()].src; }
    int path_target(const Path& q) const { return arrows[(std::size_t)q.front()].tgt; }
};

struct ModulePresentation {
    std::string name;
    std::string algebra;
    std::vector<long long> dims;              // aligned with the quiver's vertices
    std::map<int, fp::Mat> matrices;          // arrow index -> (tgt dim x src dim)

    bool operator==(const ModulePresentation&) const = default;
};

struct GluePresentation {
    std::string name;
    std::string algebra;
    std::vector<std::vector<int>> blocks;     // vertex indices, normalized sorted

    bool operator==(const GluePresentation&) const = default;
};

struct ListPresentation {
    std::string name;
    std::string algebra;
    std::vector<std::string> modules;

    bool operator==(const ListPresentation&) const = default;
};

struct ChainPresentation {
    std::string name;
    std::vector<std::string> entries;         // innermost first

    bool operator==(const ChainPresentation&) const = default;
};

struct Document {
    enum class Kind { Algebra, Module, Glue, List, Chain };
    struct Item {
        Kind kind;
        std::size_t index;
        bool operator==(const Item&) const = default;
    };

    std::vector<QuiverPresentation> algebras;
    std::vector<ModulePresentation> modules;
    std::vector<GluePresentation> glues;
    std::vector<ListPresentation> lists;
    std::vector<ChainPresentation> chains;
    std::vector<Item> order;

    bool operator==(const Document&) const = default;

    const QuiverPresentation* find_algebra(const std::string& n) const {
        for (auto& a : algebras)
            if (a.name == n) return &a;
        return nullptr;
    }
    const ModulePresentation* find_module(const std::string& n) const {
        for (auto& m : modules)
            if (m.name == n) return &m;
        return nullptr;
    }
    const GluePresentation* find_glue(const std::string& n) const {
        for (auto& g : glues)
            if (g.name == n) return &g;
        return nullptr;
    }
    const ListPresentation* find_list(const std::string& n) const {
        for (auto& l : lists)
            if (l.name == n) return &l;
        return nullptr;
    }
    const ChainPresentation* find_chain(const std::string& n) const {
        for (auto& c : chains)
            if (c.name == n) return &c;
        return nullptr;
    }

    void merge(const Document& other) {
        for (auto it : other.order) {
            switch (it.kind) {
                case Kind::Algebra: algebras.push_back(other.algebras[it.index]);
                    order.push_back({it.kind, algebras.size() - 1}); break;
                case Kind::Module: modules.push_back(other.modules[it.index]);
                    order.push_back({it.kind, modules.size() - 1}); break;
                case Kind::Glue: glues.push_back(other.glues[it.index]);
                    order.push_back({it.kind, glues.size() - 1}); break;
                case Kind::List: lists.push_back(other.lists[it.index]);
                    order.push_back({it.kind, lists.size() - 1}); break;
                case Kind::Chain: chains.push_back(other.chains[it.index]);
                    order.push_back({it.kind, chains.size() - 1}); break;
            }
        }
    }
};

// ---------------------------------------------------------------- printing

namespace detail {

inline std::string path_str(const QuiverPresentation& q, const Path& pth) {
    std::string s;
    for (std::size_t i = 0; i < pth.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[(std::size_t)pth[i]].name;
    }
    return s;
}

inline std::string relation_str(const QuiverPresentation& q,
                                const QuiverPresentation::Relation& rel) {
    // two-term relations with coefficients {1, p-1} print as an equation
    if (rel.size() == 2) {
        auto it = rel.begin();
        auto jt = std::next(it);
        if (it->second == 1 && jt->second == q.p - 1)
            return path_str(q, it->first) + " = " + path_str(q, jt->first);
        if (jt->second == 1 && it->second == q.p - 1)
            return path_str(q, jt->first) + " = " + path_str(q, it->first);
    }
    std::string s;
    bool first = true;
    for (auto& [pth, coeff] : rel) {
        if (!first) s += " + ";
        first = false;
        if (coeff != 1) s += std::to_string(coeff) + " ";
        s += path_str(q, pth);
    }
    return s;
}

}  // namespace detail

inline std::string print(const QuiverPresentation& q) {
    std::ostringstream os;
    os << "algebra " << q.name << " {\n";
    os << "  field " << q.p << ";\n";
    os << "  vertices";
    for (auto& v : q.vertices) os << " " << v;
    os << ";\n";
    os << "  arrows";
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        os << (i ? ", " : " ") << q.arrows[i].name << ": "
           << q.vertices[(std::size_t)q.arrows[i].src] << " -> "
           << q.vertices[(std::size_t)q.arrows[i].tgt];
    }
    os << ";\n";
    os << "  relations";
    for (std::size_t i = 0; i < q.relations.size(); ++i)
        os << (i ? ", " : " ") << detail::relation_str(q, q.relations[i]);
    os << ";\n";
    os << "  nilpotency " << q.nilpotency << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string print(const ModulePresentation& m, const QuiverPresentation& q) {
    std::ostringstream os;
    os << "module " << m.name << " over " << m.algebra << " {\n";
    os << "  dims";
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        os << " " << q.vertices[i] << "=" << (i < m.dims.size() ? m.dims[i] : 0);
    os << ";\n";
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        auto it = m.matrices.find((int)ai);
        if (it == m.matrices.end()) continue;
        const fp::Mat& mat = it->second;
        if (mat.rows == 0 || mat.cols == 0) continue;
        os << "  arrow " << q.arrows[ai].name << " = [";
        for (std::size_t r = 0; r < mat.rows; ++r) {
            if (r) os << ",";
            os << "[";
            for (std::size_t c = 0; c < mat.cols; ++c) {
                if (c) os << ",";
                os << mat.at(r, c);
            }
            os << "]";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string print(const GluePresentation& g, const QuiverPresentation& q) {
    std::ostringstream os;
    os << "glue " << g.name << " from " << g.algebra << " {\n  blocks";
    for (auto& blk : g.blocks) {
        os << " {";
        for (std::size_t i = 0; i < blk.size(); ++i)
            os << (i ? " " : "") << q.vertices[(std::size_t)blk[i]];
        os << "}";
    }
    os << ";\n}\n";
    return os.str();
}

inline std::string print(const ListPresentation& l) {
    std::ostringstream os;
    os << "list " << l.name << " over " << l.algebra << " {";
    for (auto& m : l.modules) os << " " << m;
    os << " }\n";
    return os.str();
}

inline std::string print(const ChainPresentation& c) {
    std::ostringstream os;
    os << "chain " << c.name << " {";
    for (std::size_t i = 0; i < c.entries.size(); ++i)
        os << (i ? " in " : " ") << c.entries[i];
    os << " }\n";
    return os.str();
}

// resolver for module/glue blocks that reference algebras outside the
// document itself (built-in fixtures, previously loaded files)
using AlgebraLookup = const QuiverPresentation* (*)(const std::string&, const void*);

inline std::string print(const Document& doc,
                         const Document* fallback = nullptr) {
    auto quiver_of = [&](const std::string& name) -> const QuiverPresentation* {
        if (auto* q = doc.find_algebra(name)) return q;
        if (fallback) return fallback->find_algebra(name);
        return nullptr;
    };
    std::string out;
    for (auto it : doc.order) {
        switch (it.kind) {
            case Document::Kind::Algebra:
                out += print(doc.algebras[it.index]);
                break;
            case Document::Kind::Module: {
                auto& m = doc.modules[it.index];
                auto* q = quiver_of(m.algebra);
                check(q != nullptr, "print: module over unknown algebra " + m.algebra);
                out += print(m, *q);
                break;
            }
            case Document::Kind::Glue: {
                auto& g = doc.glues[it.index];
                auto* q = quiver_of(g.algebra);
                check(q != nullptr, "print: glue from unknown algebra " + g.algebra);
                out += print(g, *q);
                break;
            }
            case Document::Kind::List:
                out += print(doc.lists[it.index]);
                break;
            case Document::Kind::Chain:
                out += print(doc.chains[it.index]);
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- fixtures

// Built into the binary so the CLI and the tests need no input files.
//   A2      arrow 1 -> 2, hereditary
//   LOOP2   one loop a, a*a = 0           (k[x]/x^2)
//   LOOP3   one loop a, a*a*a = 0         (k[x]/x^3)
//   SQUARE  commutative square, c*d = e*f
//   SS2     two vertices, no arrows       (F_p x F_p, semisimple)
//   GLUE2   gluing of both idempotents of A2 (abstractly k[x]/x^2)
//   CH1     chain GLUE2 in A2
//   CH2     chain GLUE2 in GLUE2 in A2
inline std::string fixture_text(fp::Elt p) {
    std::string ps = std::to_string(p);
    return "algebra A2 { field " + ps + "; vertices 1 2; arrows a: 1 -> 2; "
           "relations; nilpotency 2; }\n"
           "algebra LOOP2 { field " + ps + "; vertices 1; arrows a: 1 -> 1; "
           "relations a*a; nilpotency 2; }\n"
           "algebra LOOP3 { field " + ps + "; vertices 1; arrows a: 1 -> 1; "
           "relations a*a*a; nilpotency 3; }\n"
           "algebra SQUARE { field " + ps + "; vertices 1 2 3 4; "
           "arrows d: 1 -> 2, c: 2 -> 4, f: 1 -> 3, e: 3 -> 4; "
           "relations c*d = e*f; nilpotency 3; }\n"
           "algebra SS2 { field " + ps + "; vertices 1 2; arrows; "
           "relations; nilpotency 2; }\n"
           "glue GLUE2 from A2 { blocks {1 2}; }\n"
           "chain CH1 { GLUE2 in A2 }\n"
           "chain CH2 { GLUE2 in GLUE2 in A2 }\n";
}

}  // namespace findim
