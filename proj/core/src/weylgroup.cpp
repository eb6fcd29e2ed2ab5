#include "supermod/weylgroup.hpp"

#include <map>
#include <stdexcept>

namespace supermod {

Mat reflection_matrix(const SuperRootSystem& sys, const Root& gamma) {
    Rational nn = sys.pairing(gamma.w, gamma.w);
    if (nn == 0) throw std::invalid_argument("reflection in isotropic root");
    const size_t d = sys.gram.rows();
    Mat m(d, d);
    for (size_t j = 0; j < d; ++j) {
        Weight e = unit_weight(d, j);
        Rational c = 2 * sys.pairing(e, gamma.w) / nn;
        c.canonicalize();
        Weight img = e - c * gamma.w;
        for (size_t i = 0; i < d; ++i) m(i, j) = img[i];
    }
    return m;
}

WeylGroup weyl_group_from_roots(const SuperRootSystem& sys, const std::vector<Root>& gens) {
    WeylGroup w;
    w.dim = sys.gram.rows();
    for (const auto& g : gens) w.gens.push_back(reflection_matrix(sys, g));

    std::map<Mat, int> seen;
    Mat id = Mat::identity(w.dim);
    w.elements.push_back(id);
    w.signs.push_back(1);
    seen[id] = 0;
    for (size_t head = 0; head < w.elements.size(); ++head) {
        Mat cur = w.elements[head]; // copy: elements may reallocate
        for (const auto& g : w.gens) {
            Mat nxt = g * cur;
            if (seen.count(nxt)) continue;
            seen[nxt] = static_cast<int>(w.elements.size());
            w.elements.push_back(nxt);
            w.signs.push_back(-w.signs[head]);
            if (w.elements.size() > 200000) throw std::runtime_error("weyl group enumeration too large");
        }
    }
    return w;
}

WeylGroup even_weyl_group(const SuperRootSystem& sys) {
    std::vector<Root> gens;
    for (const auto& r : sys.roots)
        if (!r.odd && sys.pairing(r.w, r.w) != 0) gens.push_back(r);
    return weyl_group_from_roots(sys, gens);
}

std::set<Weight> weyl_orbit(const WeylGroup& w, const Weight& lambda) {
    std::set<Weight> orbit{lambda};
    std::vector<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight cur = queue.back();
        queue.pop_back();
        for (const auto& g : w.gens) {
            Weight nxt = g.apply(cur);
            if (orbit.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return orbit;
}

} // namespace supermod
