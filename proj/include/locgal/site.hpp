#pragma once

#include <map>
#include <memory>
#include <set>

#include "locgal/order.hpp"

namespace locgal {

/// A cover family: finitely many elements below a common target. Members are
/// a deduplicated set; the empty family is allowed and meaningful.
struct CoverFamily {
    uint32_t target = 0;
    Bits members; // over base elements, each <= target
};

/// A meet-semilattice together with its basic cover families: the
/// presentation of a locale by generators and relations.
struct SitePresentation {
    MeetSemilattice base;
    std::vector<CoverFamily> basic_covers;

    uint32_t size() const { return base.size(); }
};

/// Throws Error when a family member is not below its target or indices are
/// out of range; deduplicates families in place.
void validate_site(SitePresentation& site);

struct SaturationBudget {
    uint32_t max_families = 1000000; // per target
    uint32_t max_stage = 32;
};

/// Per-target family sets, the exchange format of the generation steps.
using CoverCollection = std::vector<std::set<Bits>>;

CoverCollection iso_collection(const SitePresentation& site);
CoverCollection basic_collection(const SitePresentation& site);
CoverCollection collection_union(const CoverCollection& a, const CoverCollection& b);
bool collection_subset(const CoverCollection& a, const CoverCollection& b);

/// Pullback step: every family of `cov`, pulled back along every base arrow
/// a <= target (pullback in a meet-semilattice is the member-wise meet).
CoverCollection pi_step(const CoverCollection& cov, const SitePresentation& site);

/// Composition step: for each inner family and each choice, per inner member,
/// of an outer family covering that member, the union of the chosen outer
/// families. Inner members with no outer cover contribute no composite.
CoverCollection compose_step(const CoverCollection& outer, const CoverCollection& inner,
                             const SitePresentation& site);

/// The saturated covering relation with first-seen stage per family.
class CoveringRelation {
public:
    struct StoredFamily {
        Bits members;
        int32_t stage;
    };

    const SitePresentation& site() const { return *site_; }
    int32_t stage_reached() const { return stage_reached_; }

    const std::vector<StoredFamily>& at(uint32_t target) const { return fams_[target]; }
    bool contains(uint32_t target, const Bits& members) const;
    uint64_t family_count() const;

    /// True iff some stored cover of u has every member below v: decides
    /// order of the sheafified elements.
    bool sheaf_leq(uint32_t u, uint32_t v) const;
    /// Same with a set of allowed upper bounds (formal join on the right).
    bool sheaf_leq_join(uint32_t u, const Bits& allowed_below) const;
    bool is_zero(uint32_t u) const;

    /// Set of elements <= v, used to build `allowed_below` masks.
    const Bits& down_set(uint32_t v) const { return down_[v]; }

    template <class F>
    void for_each(F&& f) const {
        for (uint32_t t = 0; t < fams_.size(); ++t)
            for (const auto& sf : fams_[t]) f(t, sf.members, sf.stage);
    }

private:
    friend CoveringRelation saturate(const SitePresentation&, const SaturationBudget&, bool);

    std::shared_ptr<const SitePresentation> site_;
    std::vector<std::vector<StoredFamily>> fams_; // sorted by members per target
    std::vector<Bits> down_;
    int32_t stage_reached_ = 0;
};

/// Saturation: stage 0 is isomorphisms plus the basic covers, stage 1 its
/// pullback closure, and each following stage closes the previous one under
/// its own composites and under pullback, until a stage adds no family. The
/// result is the set of generated covers: closed under pullback and under
/// composition, and it declares exactly the covering sieves of the generated
/// topology. `reverse_schedule` permutes the worklist order; the result must
/// not depend on it.
///
/// Families are index-free member sets. With indexed families the pullback
/// step would be subsumed by composing with stage 1 alone; deduplication can
/// collapse distinct indices of a pulled-back family, so each stage closes
/// under composites of all previously stored families instead, which keeps
/// every stage a covering system and keeps the composition bound
/// stage(g after f) <= stage(f) + stage(g) intact.
CoveringRelation saturate(const SitePresentation& site, const SaturationBudget& budget = {},
                          bool reverse_schedule = false);

/// Downward closed family of elements below a fixed target.
struct Sieve {
    uint32_t target = 0;
    Bits members;
};

Sieve sieve_generated_by(const SitePresentation& site, uint32_t target, const Bits& family);

/// Independent oracle: decides whether the sieve covers its target in the
/// topology generated by the basic covers, by a least fixpoint that never
/// consults the saturation engine.
bool sieve_covers(const SitePresentation& site, const Sieve& s);

/// Least fixpoint of the basic-cover forcing rule over a downward closed set:
/// the smallest 2-valued sheaf containing it. Exposed for oracles.
Bits sheaf_closure(const SitePresentation& site, Bits downset);

/// A point of the site: an upward closed, meet-closed, top-containing subset
/// splitting every cover. Finite meet-closed filters are principal, so a
/// point is recorded by its minimum.
struct SitePoint {
    uint32_t min_element = 0;
    Bits members; // the principal filter
};

struct PointBudget {
    uint32_t max_base = 1000000;
};

std::vector<SitePoint> enumerate_points(const SitePresentation& site, const PointBudget& budget = {});

bool point_splits_family(const SitePresentation& site, const SitePoint& p, uint32_t target,
                         const Bits& members);

/// Product site: pairwise product semilattice, covers of either side applied
/// in one coordinate with the other fixed.
struct ProductSite {
    SitePresentation site;
    uint32_t left_size = 0, right_size = 0;
    uint32_t pair_id(uint32_t a, uint32_t b) const { return a * right_size + b; }
    std::pair<uint32_t, uint32_t> unpair(uint32_t id) const { return {id / right_size, id % right_size}; }
};

ProductSite product_site(const SitePresentation& s1, const SitePresentation& s2,
                         uint32_t max_elements = 1u << 16);

/// Frame of all 2-valued sheaves of a small site; independent oracle for
/// sheaf-order queries. Throws BudgetError when the base is too large.
struct SheafFrame {
    FiniteFrame frame;
    std::vector<Bits> sheaf_of; // frame element -> underlying downset
    uint32_t sheafify(const SitePresentation& site, const Bits& downset) const;
};

SheafFrame sheaf_frame(const SitePresentation& site, uint32_t max_sheaves = 4096);

} // namespace locgal
