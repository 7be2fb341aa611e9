// Random document generator for parser round-trip property tests.
#pragma once

#include <string>
#include <vector>

#include "findim/parse.hpp"
#include "findim/rng.hpp"

namespace findim::testgen {

inline QuiverPresentation random_quiver(Rng& rng, const std::string& name, fp::Elt p) {
    QuiverPresentation q;
    q.name = name;
    q.p = p;
    std::size_t nv = 1 + rng.below(4);
    for (std::size_t v = 0; v < nv; ++v) q.vertices.push_back("v" + std::to_string(v));
    std::size_t na = rng.below(5);
    for (std::size_t a = 0; a < na; ++a)
        q.arrows.push_back({"a" + std::to_string(a), (int)rng.below(nv), (int)rng.below(nv)});
    q.nilpotency = 2 + (int)rng.below(3);

    // random relations from random composable walks of length in [2, m)
    std::size_t tries = rng.below(4);
    for (std::size_t t = 0; t < tries; ++t) {
        QuiverPresentation::Relation rel;
        int want_terms = 1 + (int)rng.below(2);
        int src = -1, tgt = -1;
        for (int term = 0; term < want_terms * 4 && (int)rel.size() < want_terms; ++term) {
            if (q.arrows.empty()) break;
            std::size_t len = 2 + rng.below((std::size_t)q.nilpotency - 1);
            // walk[k+1] is applied before walk[k]: extend on the right with
            // arrows whose target is the source of the current tail
            Path walk{(int)rng.below(q.arrows.size())};
            while (walk.size() < len) {
                std::vector<int> ext;
                for (int ai = 0; ai < (int)q.arrows.size(); ++ai)
                    if (q.arrows[(std::size_t)ai].tgt == q.arrows[(std::size_t)walk.back()].src)
                        ext.push_back(ai);
                if (ext.empty()) { walk.clear(); break; }
                walk.push_back(ext[rng.below(ext.size())]);
            }
            if (walk.size() < 2) continue;
            int s = q.path_source(walk), g = q.path_target(walk);
            if (src < 0) { src = s; tgt = g; }
            else if (s != src || g != tgt) continue;
            fp::Elt coeff = 1 + (fp::Elt)rng.below(p - 1);
            fp::Elt& slot = rel[walk];
            slot = fp::add(slot, coeff, p);
            if (!slot) rel.erase(walk);
        }
        if (!rel.empty()) q.relations.push_back(rel);
    }
    return q;
}

inline ModulePresentation random_module_pres(Rng& rng, const std::string& name,
                                             const QuiverPresentation& q) {
    ModulePresentation m;
    m.name = name;
    m.algebra = q.name;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        m.dims.push_back((long long)rng.below(3));
    for (int ai = 0; ai < (int)q.arrows.size(); ++ai) {
        std::size_t rows = (std::size_t)m.dims[(std::size_t)q.arrows[(std::size_t)ai].tgt];
        std::size_t cols = (std::size_t)m.dims[(std::size_t)q.arrows[(std::size_t)ai].src];
        if (rows == 0 || cols == 0) continue;
        if (rng.below(3) == 0) continue;  // sometimes defaulted to zero
        fp::Mat mat = rng.matrix(q.p, rows, cols);
        if (mat.is_zero()) continue;      // canonical form omits zero matrices
        m.matrices[ai] = mat;
    }
    return m;
}

inline GluePresentation random_glue(Rng& rng, const std::string& name,
                                    const QuiverPresentation& q) {
    GluePresentation g;
    g.name = name;
    g.algebra = q.name;
    std::size_t nv = q.vertices.size();
    std::size_t nblocks = 1 + rng.below(nv);
    std::vector<std::vector<int>> blocks(nblocks);
    for (std::size_t v = 0; v < nv; ++v) blocks[rng.below(nblocks)].push_back((int)v);
    for (auto& b : blocks)
        if (!b.empty()) g.blocks.push_back(b);
    std::sort(g.blocks.begin(), g.blocks.end());
    return g;
}

// a document with algebras, modules, glues, lists and chains
inline Document random_document(Rng& rng, fp::Elt p = 65521) {
    Document doc;
    std::size_t nalg = 1 + rng.below(2);
    for (std::size_t i = 0; i < nalg; ++i) {
        doc.algebras.push_back(random_quiver(rng, "A" + std::to_string(i) + "x", p));
        doc.order.push_back({Document::Kind::Algebra, doc.algebras.size() - 1});
    }
    std::size_t nmod = rng.below(3);
    for (std::size_t i = 0; i < nmod; ++i) {
        auto& q = doc.algebras[rng.below(doc.algebras.size())];
        doc.modules.push_back(random_module_pres(rng, "M" + std::to_string(i), q));
        doc.order.push_back({Document::Kind::Module, doc.modules.size() - 1});
    }
    if (rng.below(2)) {
        auto& q = doc.algebras[rng.below(doc.algebras.size())];
        doc.glues.push_back(random_glue(rng, "G0", q));
        doc.order.push_back({Document::Kind::Glue, doc.glues.size() - 1});
    }
    if (rng.below(2)) {
        ListPresentation l;
        l.name = "L0";
        l.algebra = doc.algebras[0].name;
        for (auto& m : doc.modules)
            if (rng.below(2)) l.modules.push_back(m.name);
        doc.lists.push_back(l);
        doc.order.push_back({Document::Kind::List, doc.lists.size() - 1});
    }
    if (!doc.glues.empty()) {
        ChainPresentation c;
        c.name = "C0";
        c.entries = {doc.glues[0].name, doc.glues[0].algebra};
        doc.chains.push_back(c);
        doc.order.push_back({Document::Kind::Chain, doc.chains.size() - 1});
    }
    return doc;
}

}  // namespace findim::testgen
