#pragma once

// Shared test helpers: small site constructors, a randomized site generator,
// and slow reference implementations used as oracles for the site engine.

#include <random>

#include "locgal/site.hpp"

namespace testsupport {

using namespace locgal;

inline Preorder poset_from_pairs(std::vector<std::string> names,
                                 const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
    BitMatrix m(static_cast<uint32_t>(names.size()));
    for (uint32_t i = 0; i < m.size(); ++i) m.set(i, i);
    for (auto [i, j] : pairs) m.set(i, j);
    for (uint32_t k = 0; k < m.size(); ++k)
        for (uint32_t i = 0; i < m.size(); ++i)
            if (m.get(i, k)) m.row(i) |= m.row(k);
    return validate_preorder(std::move(names), m);
}

inline Bits family(uint32_t n, std::initializer_list<uint32_t> members) {
    Bits b(n);
    for (uint32_t m : members) b.set(m);
    return b;
}

// two-element chain a <= 1; element 0 is "1", element 1 is "a"
inline SitePresentation chain2_site(bool with_cover) {
    SitePresentation s;
    s.base = semilattice_from_order(poset_from_pairs({"1", "a"}, {{1, 0}}));
    if (with_cover) s.basic_covers.push_back({0, family(2, {1})});
    validate_site(s);
    return s;
}

// a small site: all intersection-closed subsets of {0..k-1} containing the
// full set, with random covers
inline SitePresentation random_site(std::mt19937_64& rng, uint32_t max_elems = 12,
                                    uint32_t max_covers = 6, uint32_t max_members = 3) {
    std::uniform_int_distribution<uint32_t> kd(2, 4);
    const uint32_t k = kd(rng);
    const uint32_t full = (1u << k) - 1;
    std::set<uint32_t> elems{full};
    std::uniform_int_distribution<uint32_t> md(0, full);
    while (true) {
        std::set<uint32_t> grown = elems;
        uint32_t fresh = md(rng);
        grown.insert(fresh);
        bool closed = false;
        while (!closed) {
            closed = true;
            std::vector<uint32_t> v(grown.begin(), grown.end());
            for (uint32_t a : v)
                for (uint32_t b : v)
                    if (grown.insert(a & b).second) closed = false;
        }
        if (grown.size() > max_elems) break;
        elems = grown;
        std::bernoulli_distribution more(0.7);
        if (!more(rng)) break;
    }
    std::vector<uint32_t> masks(elems.begin(), elems.end());
    const uint32_t n = static_cast<uint32_t>(masks.size());
    BitMatrix leq(n);
    std::vector<std::string> names(n);
    for (uint32_t i = 0; i < n; ++i) {
        names[i] = "m" + std::to_string(masks[i]);
        for (uint32_t j = 0; j < n; ++j)
            if ((masks[i] & ~masks[j]) == 0) leq.set(i, j);
    }
    SitePresentation s;
    s.base = semilattice_from_order(validate_preorder(std::move(names), leq));

    std::uniform_int_distribution<uint32_t> cd(0, max_covers);
    std::uniform_int_distribution<uint32_t> ed(0, n - 1);
    uint32_t covers = cd(rng);
    for (uint32_t c = 0; c < covers; ++c) {
        uint32_t t = ed(rng);
        std::vector<uint32_t> below;
        for (uint32_t w = 0; w < n; ++w)
            if (s.base.le(w, t)) below.push_back(w);
        std::uniform_int_distribution<uint32_t> szd(0, max_members);
        uint32_t sz = szd(rng);
        Bits f(n);
        std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(below.size()) - 1);
        for (uint32_t i = 0; i < sz; ++i) f.set(below[pick(rng)]);
        s.basic_covers.push_back({t, std::move(f)});
    }
    validate_site(s);
    return s;
}

// Independent oracle: closure under pullback and single-member refinement by
// a plain worklist. Same limit as the staged recursion, different algorithm.
inline CoverCollection reference_closure(const SitePresentation& site) {
    CoverCollection cur = collection_union(iso_collection(site), basic_collection(site));
    bool changed = true;
    while (changed) {
        changed = false;
        CoverCollection pi = pi_step(cur, site);
        if (!collection_subset(pi, cur)) {
            cur = collection_union(cur, pi);
            changed = true;
        }
        for (uint32_t t = 0; t < site.size(); ++t) {
            std::vector<Bits> fams(cur[t].begin(), cur[t].end());
            for (const Bits& f : fams) {
                std::vector<uint32_t> members = f.to_vector();
                for (uint32_t m : members)
                    for (const Bits& g : cur[m]) {
                        Bits f2 = f;
                        f2.reset(m);
                        f2 |= g;
                        if (cur[t].insert(f2).second) changed = true;
                    }
            }
        }
    }
    return cur;
}

// the staged recursion, written with the public step operations only; each
// stage closes the previous one under self-composition and pullback, and the
// returned vector ends at the first stage equal to its successor
inline std::vector<CoverCollection> staged_reference(const SitePresentation& site,
                                                     uint32_t max_stage = 32) {
    std::vector<CoverCollection> stages;
    stages.push_back(collection_union(iso_collection(site), basic_collection(site)));
    stages.push_back(pi_step(stages[0], site));
    for (uint32_t n = 1; n <= max_stage; ++n) {
        CoverCollection next =
            collection_union(stages[n], compose_step(stages[n], stages[n], site));
        next = collection_union(next, pi_step(next, site));
        if (collection_subset(next, stages[n])) {
            if (n == 1 && collection_subset(stages[1], stages[0])) stages.pop_back();
            break;
        }
        stages.push_back(std::move(next));
    }
    return stages;
}

inline CoverCollection relation_as_collection(const CoveringRelation& rel) {
    CoverCollection col(rel.site().size());
    rel.for_each([&](uint32_t t, const Bits& f, int32_t) { col[t].insert(f); });
    return col;
}

} // namespace testsupport
