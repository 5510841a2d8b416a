#include "homsys/quiver.hpp"

#include <set>

namespace homsys {

std::size_t Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
    throw error("unknown vertex '" + name + "'");
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    throw error("unknown arrow '" + name + "'");
}

BoundQuiverAlgebra make_algebra(Quiver q, PrimeField f, std::vector<Relation> relations) {
    std::set<std::string> names;
    for (const auto& v : q.vertices)
        if (!names.insert(v).second) throw error("duplicate vertex name '" + v + "'");
    names.clear();
    for (const auto& a : q.arrows) {
        if (!names.insert(a.name).second) throw error("duplicate arrow name '" + a.name + "'");
        if (a.src >= q.vertices.size() || a.tgt >= q.vertices.size())
            throw error("arrow '" + a.name + "' has an undeclared endpoint");
    }
    BoundQuiverAlgebra alg{std::move(q), f, std::move(relations)};
    for (const auto& rel : alg.relations) {
        if (rel.terms.empty()) throw error("empty relation");
        std::size_t src = 0, tgt = 0;
        bool first = true;
        for (const auto& term : rel.terms) {
            if (term.coeff % f.p == 0) throw error("relation term with zero coefficient");
            if (term.arrows.size() < 2) throw error("relation path of length < 2 (ideal not admissible)");
            for (std::size_t k = 0; k < term.arrows.size(); ++k) {
                if (term.arrows[k] >= alg.quiver.arrows.size()) throw error("relation uses unknown arrow");
                if (k > 0 && alg.quiver.arrows[term.arrows[k - 1]].tgt != alg.quiver.arrows[term.arrows[k]].src)
                    throw error("relation path is not composable");
            }
            if (first) {
                src = alg.path_source(term);
                tgt = alg.path_target(term);
                first = false;
            } else if (alg.path_source(term) != src || alg.path_target(term) != tgt) {
                throw error("relation mixes non-parallel paths");
            }
        }
    }
    return alg;
}

}  // namespace homsys
