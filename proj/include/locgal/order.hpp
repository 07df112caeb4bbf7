#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "locgal/bits.hpp"

namespace locgal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Budget exhaustion during saturation / point search. Distinct from a
/// theorem failure: the instance was too big, nothing was refuted.
struct BudgetError : Error {
    using Error::Error;
};

/// A reflexive transitive relation on a finite indexed set. Antisymmetry is
/// not required; mutually comparable elements are isomorphic.
struct Preorder {
    std::vector<std::string> names;
    BitMatrix leq; // leq.get(i,j)  <=>  i <= j

    uint32_t size() const { return leq.size(); }
    bool le(uint32_t i, uint32_t j) const { return leq.get(i, j); }
};

struct PreorderDefect {
    enum Kind { NotReflexive, NotTransitive } kind;
    uint32_t x = 0, y = 0, z = 0; // NotReflexive uses x; NotTransitive x<=y<=z
    std::string describe(const Preorder& p) const;
};

/// First reflexivity/transitivity defect of the relation, if any.
std::optional<PreorderDefect> find_preorder_defect(const BitMatrix& rel);

/// Validates and returns the preorder; throws Error with the witness otherwise.
Preorder validate_preorder(std::vector<std::string> names, const BitMatrix& rel);

/// Quotient of a preorder by mutual comparability. Classes are numbered by
/// their smallest member; the class order is a genuine partial order.
struct PosetReflection {
    std::vector<uint32_t> class_of;   // raw index -> class index
    std::vector<uint32_t> rep;        // class index -> smallest raw member
    Preorder classes;                 // antisymmetric
};

PosetReflection poset_reflection(const Preorder& p);

/// Finite meet-semilattice with top. The carrier must be antisymmetric.
struct MeetSemilattice {
    Preorder carrier;
    std::vector<std::vector<uint32_t>> meet; // meet[i][j]
    uint32_t top = 0;

    uint32_t size() const { return carrier.size(); }
    bool le(uint32_t i, uint32_t j) const { return carrier.le(i, j); }
    uint32_t meet_of(uint32_t i, uint32_t j) const { return meet[i][j]; }
    const std::string& name(uint32_t i) const { return carrier.names[i]; }
};

/// Checks antisymmetry, glb property of the meet table and greatestness of
/// top; returns a human-readable defect or nullopt.
std::optional<std::string> check_semilattice_laws(const MeetSemilattice& m);

/// Derives the meet table from the order alone; fails if some pair has no
/// greatest lower bound.
MeetSemilattice semilattice_from_order(Preorder poset);

/// Finite frame: all finite joins exist and meets distribute over them.
struct FiniteFrame {
    MeetSemilattice carrier;
    std::vector<std::vector<uint32_t>> join; // binary join table
    uint32_t bottom = 0;

    uint32_t size() const { return carrier.size(); }
    uint32_t join_of(uint32_t i, uint32_t j) const { return join[i][j]; }
    uint32_t join_all(const std::vector<uint32_t>& xs) const;
};

std::optional<std::string> check_frame_laws(const FiniteFrame& f);

/// Frame of downward closed subsets of a finite preorder (its presheaf
/// locale). Elements are numbered in lexicographic bitmask order.
FiniteFrame downset_frame(const Preorder& p);

/// A finitely generated upward closed subset of a base poset, represented by
/// the canonical antichain of its generators (class indices of the poset
/// reflection, sorted, no generator below another).
struct InfElement {
    std::vector<uint32_t> gens;

    bool operator==(const InfElement& o) const { return gens == o.gens; }
    bool operator<(const InfElement& o) const;
};

/// The free inf-lattice on a preorder: all InfElements up to isomorphism,
/// ordered by reverse inclusion of the up-sets they generate. The top element
/// is the empty antichain.
class FreeInfLattice {
public:
    explicit FreeInfLattice(const Preorder& base, uint32_t max_elements = 1u << 16);

    const MeetSemilattice& lattice() const { return lat_; }
    const Preorder& base() const { return base_; }
    const PosetReflection& reflection() const { return refl_; }

    uint32_t size() const { return lat_.size(); }
    uint32_t top() const { return lat_.top; }

    const InfElement& element(uint32_t id) const { return elems_[id]; }

    /// Canonicalizes a raw-index generator list and returns the element id.
    uint32_t id_of_raw(const std::vector<uint32_t>& raw_gens) const;
    uint32_t id_of_classes(std::vector<uint32_t> class_gens) const;

    /// Canonical antichain of reflection classes for a raw generator set.
    InfElement canonicalize_raw(const std::vector<uint32_t>& raw_gens) const;

    bool leq(uint32_t a, uint32_t b) const { return lat_.le(a, b); }
    uint32_t meet(uint32_t a, uint32_t b) const { return lat_.meet_of(a, b); }

    /// Up-set of an element as a set of reflection classes (oracle-friendly).
    Bits up_set(uint32_t id) const;

private:
    Preorder base_;
    PosetReflection refl_;
    MeetSemilattice lat_;
    std::vector<InfElement> elems_;
    std::unordered_map<size_t, std::vector<uint32_t>> index_; // hash -> candidate ids

    static size_t hash_gens(const std::vector<uint32_t>& gens);
};

/// sigma-criterion order on antichains over the same base: A <= B iff every
/// generator of B has a generator of A below it.
bool leq_free(const FreeInfLattice& L, const InfElement& a, const InfElement& b);

/// Canonicalized union of generator antichains (the binary meet).
InfElement meet_inf(const FreeInfLattice& L, const InfElement& a, const InfElement& b);

} // namespace locgal
