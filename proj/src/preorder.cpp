#include "homsys/preorder.hpp"

#include <algorithm>
#include <functional>

namespace homsys {

std::size_t Preorder::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == name) return i;
    throw error("unknown preorder element '" + name + "'");
}

std::string PreorderViolation::describe(const Preorder& p) const {
    switch (kind) {
        case Kind::empty:
            return "preorder has no elements";
        case Kind::reflexivity:
            return "missing reflexive pair " + p.elements[i] + " <= " + p.elements[i];
        case Kind::transitivity:
            return "missing transitive pair " + p.elements[i] + " <= " + p.elements[k] +
                   " (via " + p.elements[j] + ")";
    }
    return "";
}

std::vector<PreorderViolation> transitive_closure_check(const Preorder& p) {
    std::vector<PreorderViolation> out;
    const std::size_t n = p.size();
    if (n == 0) {
        out.push_back({PreorderViolation::Kind::empty, 0, 0, 0});
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!p.le(i, i)) out.push_back({PreorderViolation::Kind::reflexivity, i, i, i});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.le(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (p.le(j, k) && !p.le(i, k))
                    out.push_back({PreorderViolation::Kind::transitivity, i, j, k});
        }
    return out;
}

QuotientPoset quotient(const Preorder& p) {
    if (!transitive_closure_check(p).empty()) throw error("quotient of a malformed preorder");
    const std::size_t n = p.size();
    QuotientPoset q;
    q.class_of.assign(n, static_cast<std::size_t>(-1));
    // For a transitive reflexive relation the SCCs are exactly the mutual
    // pairs, so a direct sweep suffices.
    for (std::size_t i = 0; i < n; ++i) {
        if (q.class_of[i] != static_cast<std::size_t>(-1)) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < n; ++j)
            if (p.equivalent(i, j)) {
                cls.push_back(j);
                q.class_of[j] = q.classes.size();
            }
        q.classes.push_back(std::move(cls));
    }
    const std::size_t m = q.classes.size();
    q.prec.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            q.prec[a][b] = p.le(q.classes[a][0], q.classes[b][0]) ? 1 : 0;
    return q;
}

HeightMap height(const Preorder& p) {
    QuotientPoset q = quotient(p);
    const std::size_t m = q.size();
    std::vector<std::uint32_t> class_height(m, 0);
    std::uint32_t level = 0;
    std::size_t assigned = 0;
    while (assigned < m) {
        ++level;
        // minimal classes of the induced poset on the not-yet-assigned ones
        std::vector<std::size_t> minimal;
        for (std::size_t a = 0; a < m; ++a) {
            if (class_height[a] != 0) continue;
            bool is_min = true;
            for (std::size_t b = 0; b < m; ++b)
                if (b != a && class_height[b] == 0 && q.prec[b][a]) {
                    is_min = false;
                    break;
                }
            if (is_min) minimal.push_back(a);
        }
        if (minimal.empty()) throw error("height: no minimal class (order is not antisymmetric?)");
        for (std::size_t a : minimal) class_height[a] = level;
        assigned += minimal.size();
    }
    HeightMap hm;
    hm.max_height = level;
    hm.h.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) hm.h[i] = class_height[q.class_of[i]];
    return hm;
}

std::optional<std::string> remark4_pair_check(const Preorder& p, const HeightMap& hm,
                                              std::size_t i, std::size_t j) {
    if (p.strictly_less(i, j) && !(hm.h[i] < hm.h[j]))
        return "strict pair (" + p.elements[i] + ", " + p.elements[j] + ") but h " +
               std::to_string(hm.h[i]) + " !< " + std::to_string(hm.h[j]);
    if (hm.h[i] < hm.h[j] && p.le(j, i))
        return "h(" + p.elements[i] + ") < h(" + p.elements[j] + ") but " + p.elements[j] +
               " <= " + p.elements[i];
    return std::nullopt;
}

}  // namespace homsys
