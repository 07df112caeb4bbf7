#include "locgal/site.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace locgal {

void validate_site(SitePresentation& site) {
    const uint32_t n = site.size();
    if (auto d = check_semilattice_laws(site.base)) throw Error("validate_site: " + *d);
    std::set<std::pair<uint32_t, Bits>> seen;
    std::vector<CoverFamily> out;
    for (const auto& c : site.basic_covers) {
        if (c.target >= n) throw Error("validate_site: cover target out of range");
        if (c.members.universe() != n) throw Error("validate_site: member universe mismatch");
        bool bad = false;
        uint32_t badm = 0;
        c.members.for_each([&](uint32_t m) {
            if (!site.base.le(m, c.target)) { bad = true; badm = m; }
        });
        if (bad)
            throw Error("validate_site: member " + site.base.name(badm) + " not below target " +
                        site.base.name(c.target));
        if (seen.insert({c.target, c.members}).second) out.push_back(c);
    }
    site.basic_covers = std::move(out);
}

CoverCollection iso_collection(const SitePresentation& site) {
    CoverCollection col(site.size());
    for (uint32_t u = 0; u < site.size(); ++u) {
        Bits f(site.size());
        f.set(u);
        col[u].insert(f);
    }
    return col;
}

CoverCollection basic_collection(const SitePresentation& site) {
    CoverCollection col(site.size());
    for (const auto& c : site.basic_covers) col[c.target].insert(c.members);
    return col;
}

CoverCollection collection_union(const CoverCollection& a, const CoverCollection& b) {
    CoverCollection r = a;
    for (uint32_t u = 0; u < b.size(); ++u) r[u].insert(b[u].begin(), b[u].end());
    return r;
}

bool collection_subset(const CoverCollection& a, const CoverCollection& b) {
    for (uint32_t u = 0; u < a.size(); ++u)
        for (const auto& f : a[u])
            if (!b[u].count(f)) return false;
    return true;
}

CoverCollection pi_step(const CoverCollection& cov, const SitePresentation& site) {
    const uint32_t n = site.size();
    CoverCollection out(n);
    for (uint32_t t = 0; t < n; ++t) {
        for (const Bits& f : cov[t]) {
            for (uint32_t a = 0; a < n; ++a) {
                if (!site.base.le(a, t)) continue;
                Bits g(n);
                f.for_each([&](uint32_t m) { g.set(site.base.meet_of(m, a)); });
                out[a].insert(g);
            }
        }
    }
    return out;
}

CoverCollection compose_step(const CoverCollection& outer, const CoverCollection& inner,
                             const SitePresentation& site) {
    const uint32_t n = site.size();
    CoverCollection out(n);
    for (uint32_t t = 0; t < n; ++t) {
        for (const Bits& f : inner[t]) {
            // all unions of one outer cover per member of f
            std::vector<Bits> partial{Bits(n)};
            bool dead = false;
            f.for_each([&](uint32_t m) {
                if (dead) return;
                if (outer[m].empty()) { dead = true; return; }
                std::set<Bits> next;
                for (const Bits& p : partial)
                    for (const Bits& g : outer[m]) next.insert(p | g);
                partial.assign(next.begin(), next.end());
            });
            if (!dead) out[t].insert(partial.begin(), partial.end());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// saturation core, templated over the family mask representation

namespace {

struct U64Ops {
    using Mask = uint64_t;
    uint32_t n;
    static Mask empty(uint32_t) { return 0; }
    static void set(Mask& m, uint32_t i) { m |= uint64_t{1} << i; }
    static Mask unite(Mask a, Mask b) { return a | b; }
    static Mask diff(Mask a, Mask b) { return a & ~b; }
    static bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
    static bool is_empty(Mask m) { return m == 0; }
    static uint32_t popcount(Mask m) { return static_cast<uint32_t>(__builtin_popcountll(m)); }
    template <class F>
    static void for_each(Mask m, F&& f) {
        while (m) {
            f(static_cast<uint32_t>(__builtin_ctzll(m)));
            m &= m - 1;
        }
    }
    static size_t hash(Mask m) { return std::hash<uint64_t>{}(m * 0x9e3779b97f4a7c15ull); }
    Bits to_bits(Mask m) const {
        Bits b(n);
        for_each(m, [&](uint32_t i) { b.set(i); });
        return b;
    }
    Mask from_bits(const Bits& b) const {
        Mask m = 0;
        b.for_each([&](uint32_t i) { set(m, i); });
        return m;
    }
};

struct BitsOps {
    using Mask = Bits;
    uint32_t n;
    Mask empty(uint32_t universe) const { return Bits(universe); }
    static void set(Mask& m, uint32_t i) { m.set(i); }
    static Mask unite(const Mask& a, const Mask& b) { return a | b; }
    static Mask diff(const Mask& a, const Mask& b) { return a.minus(b); }
    static bool subset(const Mask& a, const Mask& b) { return a.subset_of(b); }
    static bool is_empty(const Mask& m) { return m.none(); }
    static uint32_t popcount(const Mask& m) { return m.count(); }
    template <class F>
    static void for_each(const Mask& m, F&& f) {
        m.for_each(f);
    }
    static size_t hash(const Mask& m) { return m.hash(); }
    Bits to_bits(const Mask& m) const { return m; }
    Mask from_bits(const Bits& b) const { return b; }
};

// {base | z : z subset of free}; base and free disjoint
template <class Mask>
struct Block {
    Mask base, free;
    bool operator==(const Block& o) const { return base == o.base && free == o.free; }
};

template <class Ops>
class Saturator {
    using Mask = typename Ops::Mask;
    using Blk = Block<Mask>;

    struct MaskHash {
        size_t operator()(const Mask& m) const { return Ops::hash(m); }
    };
    struct BlkHash {
        size_t operator()(const Blk& b) const { return Ops::hash(b.base) * 31 ^ Ops::hash(b.free); }
    };

public:
    Saturator(const SitePresentation& site, const SaturationBudget& budget, bool reverse)
        : site_(site), budget_(budget), reverse_(reverse), ops_{site.size()}, n_(site.size()) {}

    void run() {
        const bool pi_added_nothing = build_stage01();
        for (uint32_t stage = 1;; ++stage) {
            if (stage + 1 > budget_.max_stage)
                throw BudgetError("saturate: stage budget exceeded (" +
                                  std::to_string(budget_.max_stage) + ")");
            uint64_t added = stage_step(static_cast<int32_t>(stage) + 1);
            check_family_budget();
            if (added == 0) {
                // constant from here on; the first repeated stage may be 0
                stage_reached_ = (stage == 1 && pi_added_nothing) ? 0 : static_cast<int32_t>(stage);
                return;
            }
        }
    }

    std::vector<std::vector<CoveringRelation::StoredFamily>> extract_families() {
        std::vector<std::vector<CoveringRelation::StoredFamily>> fams(n_);
        for (uint32_t t = 0; t < n_; ++t) {
            auto& dst = fams[t];
            dst.reserve(store_[t].list.size());
            for (const Mask& m : store_[t].list)
                dst.push_back({ops_.to_bits(m), store_[t].stage.at(m)});
            std::sort(dst.begin(), dst.end(),
                      [](const auto& a, const auto& b) { return a.members < b.members; });
        }
        return fams;
    }

    int32_t stage_reached() const { return stage_reached_; }

    void check_pullback_closed() const {
        for (uint32_t t = 0; t < n_; ++t)
            for (const Mask& f : store_[t].list)
                for (uint32_t a = 0; a < n_; ++a) {
                    if (a == t || !site_.base.le(a, t)) continue;
                    Mask g = ops_.empty(n_);
                    Ops::for_each(f, [&](uint32_t m) { Ops::set(g, site_.base.meet_of(m, a)); });
                    if (!store_[a].stage.count(g))
                        throw Error("saturate: result not pullback-closed (internal)");
                }
    }

private:
    struct TargetStore {
        std::unordered_map<Mask, int32_t, MaskHash> stage;
        std::vector<Mask> list; // insertion order
        bool insert(const Mask& m, int32_t st) {
            auto [it, fresh] = stage.emplace(m, st);
            if (fresh) list.push_back(m);
            return fresh;
        }
    };

    // stage 0 is isomorphisms plus basic covers; stage 1 adds their pullbacks.
    // Returns whether the pullback step added nothing.
    bool build_stage01() {
        store_.resize(n_);
        cache_.resize(n_);
        std::vector<std::pair<uint32_t, Mask>> zero;
        for (uint32_t u = 0; u < n_; ++u) {
            Mask iso = ops_.empty(n_);
            Ops::set(iso, u);
            if (store_[u].insert(iso, 0)) zero.push_back({u, iso});
        }
        for (const auto& c : site_.basic_covers) {
            Mask m = ops_.from_bits(c.members);
            if (store_[c.target].insert(m, 0)) zero.push_back({c.target, m});
        }
        uint64_t added = 0;
        for (const auto& [t, f] : zero) added += pull_back_everywhere(t, f, 1);
        check_family_budget();
        return added == 0;
    }

    uint64_t pull_back_everywhere(uint32_t t, const Mask& f, int32_t stage) {
        uint64_t added = 0;
        for (uint32_t a = 0; a < n_; ++a) {
            if (a == t || !site_.base.le(a, t)) continue;
            Mask g = ops_.empty(n_);
            Ops::for_each(f, [&](uint32_t m) { Ops::set(g, site_.base.meet_of(m, a)); });
            if (store_[a].insert(g, stage)) ++added;
        }
        return added;
    }

    void check_family_budget() const {
        for (uint32_t t = 0; t < n_; ++t)
            if (store_[t].list.size() > budget_.max_families)
                throw BudgetError("saturate: family budget exceeded at target " +
                                  site_.base.name(t) + " (" + std::to_string(budget_.max_families) +
                                  ")");
    }

    // --- block compression -------------------------------------------------

    // Quine-McCluskey style merging: two blocks equal except that one has z in
    // its base combine into one block with z freed. Lossless, not minimal.
    std::vector<Blk> compress(std::vector<Blk> blocks) const {
        std::unordered_set<Blk, BlkHash> alive(blocks.begin(), blocks.end());
        bool merged_any = true;
        while (merged_any) {
            merged_any = false;
            for (uint32_t z = 0; z < n_; ++z) {
                Mask zbit = ops_.empty(n_);
                Ops::set(zbit, z);
                std::unordered_map<Blk, int, BlkHash> mark; // 1 = base has z, 2 = lacks z
                for (const Blk& b : alive) {
                    if (Ops::subset(zbit, b.free)) continue;
                    Blk key{Ops::diff(b.base, zbit), b.free};
                    mark[key] |= Ops::subset(zbit, b.base) ? 1 : 2;
                }
                for (auto& [key, fl] : mark) {
                    if (fl != 3) continue;
                    alive.erase(Blk{Ops::unite(key.base, zbit), key.free});
                    alive.erase(key);
                    alive.insert(Blk{key.base, Ops::unite(key.free, zbit)});
                    merged_any = true;
                }
            }
        }
        return std::vector<Blk>(alive.begin(), alive.end());
    }

    // per-element compressed cover sets over the frozen prefix of this stage;
    // the cache persists across stages and only grows
    struct BlkCache {
        size_t watermark = 0;
        std::vector<Blk> blocks;
    };

    const std::vector<Blk>& member_blocks(uint32_t m, size_t frozen) {
        BlkCache& c = cache_[m];
        const auto& list = store_[m].list;
        if (c.watermark < frozen) {
            for (size_t i = c.watermark; i < frozen; ++i)
                c.blocks.push_back(Blk{list[i], ops_.empty(n_)});
            c.watermark = frozen;
            c.blocks = compress(std::move(c.blocks));
        }
        return c.blocks;
    }

    std::vector<Blk> multiply(const std::vector<Blk>& a, const std::vector<Blk>& b) const {
        std::unordered_set<Blk, BlkHash> out;
        out.reserve(std::min<size_t>(a.size() * b.size(), 1u << 20));
        for (const Blk& x : a)
            for (const Blk& y : b) {
                Mask base = Ops::unite(x.base, y.base);
                Mask free = Ops::diff(Ops::unite(x.free, y.free), base);
                out.insert(Blk{std::move(base), std::move(free)});
            }
        std::vector<Blk> v(out.begin(), out.end());
        if (v.size() > 4096) v = compress(std::move(v));
        if (v.size() > (1u << 22))
            throw BudgetError("saturate: composite working set exceeded");
        return v;
    }

    // One stage transition: close the current stage under its own composites
    // and under pullback. Self-composition keeps the per-stage sets covering
    // systems and makes the stage-indexed composition bound hold; the literal
    // paper indexing is recovered on sites where pullbacks never collide.
    uint64_t stage_step(int32_t stage) {
        std::vector<size_t> frozen(n_);
        for (uint32_t t = 0; t < n_; ++t) frozen[t] = store_[t].list.size();
        std::vector<uint32_t> order(n_);
        for (uint32_t i = 0; i < n_; ++i) order[i] = reverse_ ? n_ - 1 - i : i;

        std::vector<std::pair<uint32_t, Mask>> fresh;
        auto emit = [&](uint32_t t, const Mask& f) {
            if (store_[t].insert(f, stage)) {
                fresh.push_back({t, f});
                if (store_[t].list.size() > budget_.max_families)
                    throw BudgetError("saturate: family budget exceeded at target " +
                                      site_.base.name(t));
            }
        };

        for (uint32_t t : order) {
            // composites of every stored family at t, refining each mandatory
            // member and optionally each free member by a stored cover of it
            std::vector<Blk> inners = member_blocks(t, frozen[t]);
            if (reverse_) std::reverse(inners.begin(), inners.end());
            Mask tbit = ops_.empty(n_);
            Ops::set(tbit, t);
            for (const Blk& ib : inners) {
                if (ib.base == tbit && Ops::is_empty(ib.free)) continue; // iso: reproduces the store
                std::vector<Blk> acc{Blk{ops_.empty(n_), ops_.empty(n_)}};
                Ops::for_each(ib.base,
                              [&](uint32_t m) { acc = multiply(acc, member_blocks(m, frozen[m])); });
                Ops::for_each(ib.free, [&](uint32_t z) {
                    std::vector<Blk> optional = member_blocks(z, frozen[z]);
                    optional.push_back(Blk{ops_.empty(n_), ops_.empty(n_)}); // member absent
                    acc = multiply(acc, optional);
                });
                for (const Blk& b : acc) expand(b, t, emit);
            }
        }
        // pullback closure of everything added this stage
        for (size_t i = 0; i < fresh.size(); ++i) {
            auto [t, f] = fresh[i];
            for (uint32_t a = 0; a < n_; ++a) {
                if (a == t || !site_.base.le(a, t)) continue;
                Mask g = ops_.empty(n_);
                Ops::for_each(f, [&](uint32_t m) { Ops::set(g, site_.base.meet_of(m, a)); });
                if (store_[a].insert(g, stage)) {
                    fresh.push_back({a, g});
                    if (store_[a].list.size() > budget_.max_families)
                        throw BudgetError("saturate: family budget exceeded at target " +
                                          site_.base.name(a));
                }
            }
        }
        return fresh.size();
    }

    template <class Emit>
    void expand(const Blk& b, uint32_t target, Emit&& emit) const {
        std::vector<uint32_t> freebits;
        Ops::for_each(b.free, [&](uint32_t i) { freebits.push_back(i); });
        // the expansions are pairwise distinct families at one target, so a
        // block alone can certify that the family budget must be exceeded
        if (freebits.size() >= 20 &&
            (uint64_t{1} << freebits.size()) > uint64_t{budget_.max_families})
            throw BudgetError("saturate: family budget exceeded at target " +
                              site_.base.name(target));
        for (uint64_t sub = 0;; ++sub) {
            Mask f = b.base;
            for (size_t i = 0; i < freebits.size(); ++i)
                if (sub >> i & 1) Ops::set(f, freebits[i]);
            emit(target, f);
            if (sub + 1 == (uint64_t{1} << freebits.size())) break;
        }
    }

    const SitePresentation& site_;
    SaturationBudget budget_;
    bool reverse_;
    Ops ops_;
    uint32_t n_;
    std::vector<TargetStore> store_;
    std::vector<BlkCache> cache_;
    int32_t stage_reached_ = 0;
};

} // namespace

CoveringRelation saturate(const SitePresentation& site, const SaturationBudget& budget,
                          bool reverse_schedule) {
    auto site_ptr = std::make_shared<SitePresentation>(site);
    validate_site(*site_ptr);
    CoveringRelation rel;
    rel.site_ = site_ptr;
    if (site_ptr->size() <= 64) {
        Saturator<U64Ops> s(*site_ptr, budget, reverse_schedule);
        s.run();
        s.check_pullback_closed();
        rel.fams_ = s.extract_families();
        rel.stage_reached_ = s.stage_reached();
    } else {
        Saturator<BitsOps> s(*site_ptr, budget, reverse_schedule);
        s.run();
        s.check_pullback_closed();
        rel.fams_ = s.extract_families();
        rel.stage_reached_ = s.stage_reached();
    }
    const uint32_t n = site_ptr->size();
    rel.down_.resize(n);
    for (uint32_t v = 0; v < n; ++v) {
        Bits d(n);
        for (uint32_t w = 0; w < n; ++w)
            if (site_ptr->base.le(w, v)) d.set(w);
        rel.down_[v] = std::move(d);
    }
    return rel;
}

bool CoveringRelation::contains(uint32_t target, const Bits& members) const {
    const auto& v = fams_[target];
    auto it = std::lower_bound(v.begin(), v.end(), members, [](const StoredFamily& a, const Bits& b) {
        return a.members < b;
    });
    return it != v.end() && it->members == members;
}

uint64_t CoveringRelation::family_count() const {
    uint64_t c = 0;
    for (const auto& v : fams_) c += v.size();
    return c;
}

bool CoveringRelation::sheaf_leq_join(uint32_t u, const Bits& allowed_below) const {
    for (const auto& sf : fams_[u])
        if (sf.members.subset_of(allowed_below)) return true;
    return false;
}

bool CoveringRelation::sheaf_leq(uint32_t u, uint32_t v) const {
    return sheaf_leq_join(u, down_[v]);
}

bool CoveringRelation::is_zero(uint32_t u) const {
    return sheaf_leq_join(u, Bits(static_cast<uint32_t>(fams_.size())));
}

Sieve sieve_generated_by(const SitePresentation& site, uint32_t target, const Bits& family) {
    Sieve s{target, Bits(site.size())};
    family.for_each([&](uint32_t m) {
        for (uint32_t w = 0; w < site.size(); ++w)
            if (site.base.le(w, m)) s.members.set(w);
    });
    return s;
}

Bits sheaf_closure(const SitePresentation& site, Bits downset) {
    const uint32_t n = site.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint32_t u = 0; u < n; ++u) {
            if (downset.test(u)) continue;
            for (const auto& c : site.basic_covers) {
                if (!site.base.le(u, c.target)) continue;
                bool all = true;
                c.members.for_each([&](uint32_t m) {
                    if (all && !downset.test(site.base.meet_of(m, u))) all = false;
                });
                if (all) {
                    downset.set(u);
                    changed = true;
                    break;
                }
            }
        }
    }
    return downset;
}

bool sieve_covers(const SitePresentation& site, const Sieve& s) {
    // validate downward closure below the target
    for (uint32_t w = 0; w < site.size(); ++w)
        if (s.members.test(w) && !site.base.le(w, s.target))
            throw Error("sieve_covers: member not below target");
    s.members.for_each([&](uint32_t w) {
        for (uint32_t v = 0; v < site.size(); ++v)
            if (site.base.le(v, w) && !s.members.test(v))
                throw Error("sieve_covers: sieve not downward closed");
    });
    return sheaf_closure(site, s.members).test(s.target);
}

std::vector<SitePoint> enumerate_points(const SitePresentation& site, const PointBudget& budget) {
    const uint32_t n = site.size();
    if (n > budget.max_base) throw BudgetError("enumerate_points: search budget exceeded");
    std::vector<SitePoint> pts;
    for (uint32_t m = 0; m < n; ++m) {
        // a meet-closed upward closed subset of a finite semilattice is the
        // principal filter of its minimum; test the cover-splitting condition
        bool ok = true;
        for (const auto& c : site.basic_covers) {
            if (!site.base.le(m, c.target)) continue;
            bool split = false;
            c.members.for_each([&](uint32_t v) {
                if (site.base.le(m, v)) split = true;
            });
            if (!split) { ok = false; break; }
        }
        if (!ok) continue;
        Bits up(n);
        for (uint32_t w = 0; w < n; ++w)
            if (site.base.le(m, w)) up.set(w);
        pts.push_back(SitePoint{m, std::move(up)});
    }
    return pts;
}

bool point_splits_family(const SitePresentation& site, const SitePoint& p, uint32_t target,
                         const Bits& members) {
    if (!p.members.test(target)) return true;
    bool split = false;
    members.for_each([&](uint32_t v) {
        if (p.members.test(v)) split = true;
    });
    (void)site;
    return split;
}

ProductSite product_site(const SitePresentation& s1, const SitePresentation& s2,
                         uint32_t max_elements) {
    const uint32_t n1 = s1.size(), n2 = s2.size();
    if (static_cast<uint64_t>(n1) * n2 > max_elements)
        throw BudgetError("product_site: element budget exceeded");
    const uint32_t n = n1 * n2;
    BitMatrix leq(n);
    std::vector<std::string> names(n);
    for (uint32_t a = 0; a < n1; ++a)
        for (uint32_t b = 0; b < n2; ++b) {
            uint32_t id = a * n2 + b;
            names[id] = "(" + s1.base.name(a) + "," + s2.base.name(b) + ")";
            for (uint32_t c = 0; c < n1; ++c)
                for (uint32_t d = 0; d < n2; ++d)
                    if (s1.base.le(a, c) && s2.base.le(b, d)) leq.set(id, c * n2 + d);
        }
    MeetSemilattice base;
    base.carrier = Preorder{std::move(names), leq};
    base.top = s1.base.top * n2 + s2.base.top;
    base.meet.assign(n, std::vector<uint32_t>(n, 0));
    for (uint32_t a = 0; a < n1; ++a)
        for (uint32_t b = 0; b < n2; ++b)
            for (uint32_t c = 0; c < n1; ++c)
                for (uint32_t d = 0; d < n2; ++d)
                    base.meet[a * n2 + b][c * n2 + d] =
                        s1.base.meet_of(a, c) * n2 + s2.base.meet_of(b, d);

    ProductSite ps;
    ps.left_size = n1;
    ps.right_size = n2;
    ps.site.base = std::move(base);
    for (const auto& c : s1.basic_covers)
        for (uint32_t w = 0; w < n2; ++w) {
            CoverFamily f{c.target * n2 + w, Bits(n)};
            c.members.for_each([&](uint32_t m) { f.members.set(m * n2 + w); });
            ps.site.basic_covers.push_back(std::move(f));
        }
    for (const auto& c : s2.basic_covers)
        for (uint32_t w = 0; w < n1; ++w) {
            CoverFamily f{w * n2 + c.target, Bits(n)};
            c.members.for_each([&](uint32_t m) { f.members.set(w * n2 + m); });
            ps.site.basic_covers.push_back(std::move(f));
        }
    validate_site(ps.site);
    return ps;
}

uint32_t SheafFrame::sheafify(const SitePresentation& site, const Bits& downset) const {
    Bits closed = sheaf_closure(site, downset);
    for (uint32_t i = 0; i < sheaf_of.size(); ++i)
        if (sheaf_of[i] == closed) return i;
    throw Error("sheaf_frame: closure not found (internal)");
}

SheafFrame sheaf_frame(const SitePresentation& site, uint32_t max_sheaves) {
    const uint32_t n = site.size();
    if (n > 20) throw BudgetError("sheaf_frame: base too large");
    std::vector<Bits> sheaves;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        Bits t(n);
        for (uint32_t i = 0; i < n; ++i)
            if (mask >> i & 1) t.set(i);
        bool down = true;
        t.for_each([&](uint32_t i) {
            for (uint32_t j = 0; j < n && down; ++j)
                if (site.base.le(j, i) && !t.test(j)) down = false;
        });
        if (!down) continue;
        if (sheaf_closure(site, t) == t) {
            sheaves.push_back(t);
            if (sheaves.size() > max_sheaves) throw BudgetError("sheaf_frame: too many sheaves");
        }
    }
    const uint32_t N = static_cast<uint32_t>(sheaves.size());
    BitMatrix leq(N);
    std::vector<std::string> names(N);
    for (uint32_t a = 0; a < N; ++a) {
        names[a] = "T" + std::to_string(a);
        for (uint32_t b = 0; b < N; ++b)
            if (sheaves[a].subset_of(sheaves[b])) leq.set(a, b);
    }
    auto find = [&](const Bits& b) {
        for (uint32_t i = 0; i < N; ++i)
            if (sheaves[i] == b) return i;
        throw Error("sheaf_frame: internal lookup failure");
    };
    SheafFrame sf;
    sf.frame.carrier = semilattice_from_order(Preorder{std::move(names), leq});
    sf.frame.join.assign(N, std::vector<uint32_t>(N, 0));
    for (uint32_t a = 0; a < N; ++a)
        for (uint32_t b = 0; b < N; ++b)
            sf.frame.join[a][b] = find(sheaf_closure(site, sheaves[a] | sheaves[b]));
    sf.frame.bottom = find(sheaf_closure(site, Bits(n)));
    sf.sheaf_of = std::move(sheaves);
    return sf;
}

} // namespace locgal
