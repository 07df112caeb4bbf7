#include "locgal/order.hpp"

#include <algorithm>
#include <map>

namespace locgal {

std::string PreorderDefect::describe(const Preorder& p) const {
    auto nm = [&](uint32_t i) {
        return i < p.names.size() ? p.names[i] : std::to_string(i);
    };
    if (kind == NotReflexive) return "NotReflexive(" + nm(x) + ")";
    return "NotTransitive(" + nm(x) + "," + nm(y) + "," + nm(z) + ")";
}

std::optional<PreorderDefect> find_preorder_defect(const BitMatrix& rel) {
    const uint32_t n = rel.size();
    for (uint32_t i = 0; i < n; ++i)
        if (!rel.get(i, i)) return PreorderDefect{PreorderDefect::NotReflexive, i, 0, 0};
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y) {
            if (!rel.get(x, y)) continue;
            // need row(y) subset of row(x); report the first missing witness
            if (!rel.row(y).subset_of(rel.row(x))) {
                for (uint32_t z = 0; z < n; ++z)
                    if (rel.get(y, z) && !rel.get(x, z))
                        return PreorderDefect{PreorderDefect::NotTransitive, x, y, z};
            }
        }
    return std::nullopt;
}

Preorder validate_preorder(std::vector<std::string> names, const BitMatrix& rel) {
    Preorder p{std::move(names), rel};
    if (p.names.size() != rel.size())
        throw Error("validate_preorder: name count does not match relation size");
    if (auto d = find_preorder_defect(rel)) throw Error("validate_preorder: " + d->describe(p));
    return p;
}

PosetReflection poset_reflection(const Preorder& p) {
    const uint32_t n = p.size();
    PosetReflection r;
    r.class_of.assign(n, UINT32_MAX);
    for (uint32_t i = 0; i < n; ++i) {
        if (r.class_of[i] != UINT32_MAX) continue;
        uint32_t c = static_cast<uint32_t>(r.rep.size());
        r.rep.push_back(i);
        r.class_of[i] = c;
        for (uint32_t j = i + 1; j < n; ++j)
            if (p.le(i, j) && p.le(j, i)) r.class_of[j] = c;
    }
    const uint32_t k = static_cast<uint32_t>(r.rep.size());
    BitMatrix leq(k);
    for (uint32_t a = 0; a < k; ++a)
        for (uint32_t b = 0; b < k; ++b)
            if (p.le(r.rep[a], r.rep[b])) leq.set(a, b);
    std::vector<std::string> names(k);
    for (uint32_t a = 0; a < k; ++a) names[a] = p.names[r.rep[a]];
    r.classes = Preorder{std::move(names), leq};
    return r;
}

std::optional<std::string> check_semilattice_laws(const MeetSemilattice& m) {
    const uint32_t n = m.size();
    if (auto d = find_preorder_defect(m.carrier.leq))
        return "carrier: " + d->describe(m.carrier);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if (i != j && m.le(i, j) && m.le(j, i))
                return "carrier not antisymmetric at " + m.name(i) + "," + m.name(j);
    for (uint32_t i = 0; i < n; ++i)
        if (!m.le(i, m.top)) return "top not greatest at " + m.name(i);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t w = m.meet_of(i, j);
            if (w >= n) return "meet out of range";
            if (!m.le(w, i) || !m.le(w, j))
                return "meet(" + m.name(i) + "," + m.name(j) + ") not a lower bound";
            for (uint32_t v = 0; v < n; ++v)
                if (m.le(v, i) && m.le(v, j) && !m.le(v, w))
                    return "meet(" + m.name(i) + "," + m.name(j) + ") not greatest: " + m.name(v);
        }
    return std::nullopt;
}

MeetSemilattice semilattice_from_order(Preorder poset) {
    const uint32_t n = poset.size();
    MeetSemilattice m;
    m.meet.assign(n, std::vector<uint32_t>(n, 0));
    uint32_t top = UINT32_MAX;
    for (uint32_t t = 0; t < n; ++t) {
        bool greatest = true;
        for (uint32_t i = 0; i < n && greatest; ++i) greatest = poset.le(i, t);
        if (greatest) { top = t; break; }
    }
    if (top == UINT32_MAX) throw Error("semilattice_from_order: no top element");
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t glb = UINT32_MAX;
            for (uint32_t w = 0; w < n; ++w) {
                if (!poset.le(w, i) || !poset.le(w, j)) continue;
                if (glb == UINT32_MAX || poset.le(glb, w)) glb = w;
            }
            if (glb == UINT32_MAX)
                throw Error("semilattice_from_order: no meet of " + poset.names[i] + "," + poset.names[j]);
            for (uint32_t w = 0; w < n; ++w)
                if (poset.le(w, i) && poset.le(w, j) && !poset.le(w, glb))
                    throw Error("semilattice_from_order: meets missing at " + poset.names[i] + "," + poset.names[j]);
            m.meet[i][j] = glb;
        }
    m.carrier = std::move(poset);
    m.top = top;
    return m;
}

uint32_t FiniteFrame::join_all(const std::vector<uint32_t>& xs) const {
    uint32_t acc = bottom;
    for (uint32_t x : xs) acc = join[acc][x];
    return acc;
}

std::optional<std::string> check_frame_laws(const FiniteFrame& f) {
    if (auto d = check_semilattice_laws(f.carrier)) return d;
    const uint32_t n = f.size();
    const auto& m = f.carrier;
    for (uint32_t i = 0; i < n; ++i)
        if (!m.le(f.bottom, i)) return "bottom not least";
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t v = f.join_of(i, j);
            if (!m.le(i, v) || !m.le(j, v)) return "join not an upper bound";
            for (uint32_t w = 0; w < n; ++w)
                if (m.le(i, w) && m.le(j, w) && !m.le(v, w)) return "join not least";
        }
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = 0; v < n; ++v)
            for (uint32_t w = 0; w < n; ++w) {
                uint32_t lhs = m.meet_of(u, f.join_of(v, w));
                uint32_t rhs = f.join_of(m.meet_of(u, v), m.meet_of(u, w));
                if (lhs != rhs) return "meet does not distribute over join";
            }
    return std::nullopt;
}

FiniteFrame downset_frame(const Preorder& p) {
    const uint32_t n = p.size();
    if (n > 20) throw BudgetError("downset_frame: base too large");
    // enumerate downward closed subsets as bitmasks, ascending
    std::vector<uint32_t> down;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (uint32_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (uint32_t j = 0; j < n && ok; ++j)
                if (p.le(j, i) && !(mask >> j & 1)) ok = false;
        }
        if (ok) down.push_back(mask);
    }
    std::map<uint32_t, uint32_t> id;
    for (uint32_t k = 0; k < down.size(); ++k) id[down[k]] = k;

    const uint32_t N = static_cast<uint32_t>(down.size());
    BitMatrix leq(N);
    for (uint32_t a = 0; a < N; ++a)
        for (uint32_t b = 0; b < N; ++b)
            if ((down[a] & ~down[b]) == 0) leq.set(a, b);
    std::vector<std::string> names(N);
    for (uint32_t a = 0; a < N; ++a) names[a] = "D" + std::to_string(down[a]);

    FiniteFrame f;
    f.carrier = semilattice_from_order(Preorder{std::move(names), leq});
    f.join.assign(N, std::vector<uint32_t>(N, 0));
    for (uint32_t a = 0; a < N; ++a)
        for (uint32_t b = 0; b < N; ++b) f.join[a][b] = id.at(down[a] | down[b]);
    f.bottom = id.at(0);
    return f;
}

bool InfElement::operator<(const InfElement& o) const {
    if (gens.size() != o.gens.size()) return gens.size() < o.gens.size();
    return gens < o.gens;
}

size_t FreeInfLattice::hash_gens(const std::vector<uint32_t>& gens) {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t g : gens) {
        h ^= g;
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

FreeInfLattice::FreeInfLattice(const Preorder& base, uint32_t max_elements)
    : base_(base), refl_(poset_reflection(base)) {
    const uint32_t k = refl_.classes.size();
    const Preorder& P = refl_.classes;

    // all antichains of the reflection, in (size, lex) order starting with
    // the empty one (the top)
    std::vector<InfElement> acc;
    std::vector<uint32_t> cur;
    auto rec = [&](auto&& self, uint32_t next) -> void {
        acc.push_back(InfElement{cur});
        if (acc.size() > max_elements)
            throw BudgetError("free_inf_lattice: element budget exceeded");
        for (uint32_t c = next; c < k; ++c) {
            bool comparable = false;
            for (uint32_t g : cur)
                if (P.le(g, c) || P.le(c, g)) { comparable = true; break; }
            if (comparable) continue;
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(acc.begin(), acc.end());
    elems_ = std::move(acc);

    const uint32_t n = static_cast<uint32_t>(elems_.size());
    for (uint32_t i = 0; i < n; ++i) index_[hash_gens(elems_[i].gens)].push_back(i);

    BitMatrix leq(n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            // a <= b iff every generator of b dominates one of a
            bool ok = true;
            for (uint32_t gb : elems_[b].gens) {
                bool found = false;
                for (uint32_t ga : elems_[a].gens)
                    if (P.le(ga, gb)) { found = true; break; }
                if (!found) { ok = false; break; }
            }
            if (ok) leq.set(a, b);
        }
    std::vector<std::string> names(n);
    for (uint32_t a = 0; a < n; ++a) {
        if (elems_[a].gens.empty()) { names[a] = "1"; continue; }
        std::string s = "[";
        for (size_t i = 0; i < elems_[a].gens.size(); ++i) {
            if (i) s += ",";
            s += "<" + P.names[elems_[a].gens[i]] + ">";
        }
        names[a] = s + "]";
    }

    MeetSemilattice m;
    m.carrier = Preorder{std::move(names), leq};
    m.top = id_of_classes({});
    m.meet.assign(n, std::vector<uint32_t>(n, 0));
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b <= a; ++b) {
            std::vector<uint32_t> u = elems_[a].gens;
            u.insert(u.end(), elems_[b].gens.begin(), elems_[b].gens.end());
            uint32_t w = id_of_classes(std::move(u));
            m.meet[a][b] = m.meet[b][a] = w;
        }
    lat_ = std::move(m);
}

InfElement FreeInfLattice::canonicalize_raw(const std::vector<uint32_t>& raw_gens) const {
    return elems_[id_of_raw(raw_gens)];
}

uint32_t FreeInfLattice::id_of_raw(const std::vector<uint32_t>& raw_gens) const {
    std::vector<uint32_t> cls;
    cls.reserve(raw_gens.size());
    for (uint32_t r : raw_gens) cls.push_back(refl_.class_of.at(r));
    return id_of_classes(std::move(cls));
}

uint32_t FreeInfLattice::id_of_classes(std::vector<uint32_t> g) const {
    const Preorder& P = refl_.classes;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    // prune dominated generators: classes are distinct, so g[j] <= g[i] is strict
    std::vector<uint32_t> kept;
    for (size_t i = 0; i < g.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < g.size() && !dominated; ++j)
            if (i != j && P.le(g[j], g[i])) dominated = true;
        if (!dominated) kept.push_back(g[i]);
    }
    auto it = index_.find(hash_gens(kept));
    if (it != index_.end())
        for (uint32_t id : it->second)
            if (elems_[id].gens == kept) return id;
    throw Error("free_inf_lattice: generator set not found (not canonical?)");
}

Bits FreeInfLattice::up_set(uint32_t id) const {
    const Preorder& P = refl_.classes;
    Bits up(P.size());
    for (uint32_t g : elems_[id].gens) up |= P.leq.row(g);
    return up;
}

bool leq_free(const FreeInfLattice& L, const InfElement& a, const InfElement& b) {
    const Preorder& P = L.reflection().classes;
    for (uint32_t gb : b.gens) {
        bool found = false;
        for (uint32_t ga : a.gens)
            if (P.le(ga, gb)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

InfElement meet_inf(const FreeInfLattice& L, const InfElement& a, const InfElement& b) {
    std::vector<uint32_t> u = a.gens;
    u.insert(u.end(), b.gens.begin(), b.gens.end());
    return L.element(L.id_of_classes(std::move(u)));
}

} // namespace locgal
