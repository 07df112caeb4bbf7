// scratch harness, not part of the suite
#include <iostream>

#include "support.hpp"

using namespace locgal;
using namespace testsupport;

static void dump(const SitePresentation& s) {
    std::cout << "base " << s.size() << ": ";
    for (uint32_t i = 0; i < s.size(); ++i) std::cout << s.base.name(i) << " ";
    std::cout << "\ncovers:\n";
    for (const auto& c : s.basic_covers) {
        std::cout << "  { ";
        c.members.for_each([&](uint32_t m) { std::cout << s.base.name(m) << " "; });
        std::cout << "} -> " << s.base.name(c.target) << "\n";
    }
}

static void dump_col(const char* tag, const CoverCollection& col, const SitePresentation& s) {
    std::cout << tag << ":\n";
    for (uint32_t t = 0; t < col.size(); ++t)
        for (const auto& f : col[t]) {
            std::cout << "  { ";
            f.for_each([&](uint32_t m) { std::cout << s.base.name(m) << " "; });
            std::cout << "} -> " << s.base.name(t) << "\n";
        }
}

// pullback-stability of each staged set (the covering-system property)
static bool stages_pi_stable(const std::vector<CoverCollection>& stages,
                             const SitePresentation& s) {
    for (size_t i = 1; i < stages.size(); ++i)
        if (!collection_subset(pi_step(stages[i], s), stages[i])) return false;
    return true;
}

// pi-interleaved stages: T0 = iso+basic, T1 = pi(T0), T_{n+1} = pi(T_n o T_1)
static std::vector<CoverCollection> pistaged(const SitePresentation& s, uint32_t max_stage = 64) {
    std::vector<CoverCollection> st;
    st.push_back(collection_union(iso_collection(s), basic_collection(s)));
    st.push_back(pi_step(st[0], s));
    const CoverCollection cov1 = st[1];
    for (uint32_t n = 1; n <= max_stage; ++n) {
        CoverCollection next = pi_step(compose_step(st[n], cov1, s), s);
        if (collection_subset(next, st[n]) && collection_subset(st[n], next)) {
            if (n == 1 && collection_subset(st[1], st[0])) st.pop_back();
            break;
        }
        st.push_back(std::move(next));
    }
    return st;
}

int main() {
    std::mt19937_64 rng(31337);
    int ref_mismatch = 0, mono_fail = 0, pi_fail = 0, bound_fail = 0, comp_fail = 0;
    for (int iter = 0; iter < 3000; ++iter) {
        auto s = random_site(rng);
        auto st = pistaged(s);
        auto& S = st.back();
        auto ref = reference_closure(s);
        if (!(collection_subset(ref, S) && collection_subset(S, ref))) {
            ++ref_mismatch;
            if (ref_mismatch == 1) {
                std::cout << "pistaged fixpoint != reference at iter " << iter << "\n";
                dump(s);
                for (uint32_t t = 0; t < s.size(); ++t)
                    for (const auto& f : ref[t])
                        if (!S[t].count(f)) {
                            std::cout << "  ref-only: { ";
                            f.for_each([&](uint32_t m) { std::cout << s.base.name(m) << " "; });
                            std::cout << "} -> " << s.base.name(t) << "\n";
                        }
            }
        }
        for (size_t i = 0; i + 1 < st.size(); ++i)
            if (!collection_subset(st[i], st[i + 1])) ++mono_fail;
        if (!stages_pi_stable(st, s)) ++pi_fail;
        if (!collection_subset(compose_step(S, S, s), S)) ++comp_fail;
        for (size_t r = 1; r < st.size(); ++r)
            for (size_t v = 1; v < st.size(); ++v) {
                size_t idx = std::min(r + v, st.size() - 1);
                if (!collection_subset(compose_step(st[r], st[v], s), st[idx])) ++bound_fail;
            }
    }
    std::cout << "ref_mismatch=" << ref_mismatch << " mono_fail=" << mono_fail
              << " pi_fail=" << pi_fail << " comp_fail=" << comp_fail
              << " bound_fail=" << bound_fail << "\n";

    for (int iter = 0; iter < 40; ++iter) {
        auto s = random_site(rng);
        CoverCollection got;
        bool closed = true;
        std::string err;
        try {
            auto rel = saturate(s);
            got = relation_as_collection(rel);
        } catch (const std::exception& e) {
            closed = false;
            err = e.what();
            continue;
        }
        auto ref = reference_closure(s);
        auto staged = staged_reference(s);
        bool a = collection_subset(got, ref), b = collection_subset(ref, got);
        bool c = collection_subset(got, staged.back()), d = collection_subset(staged.back(), got);
        if (!(a && b && c && d) || !closed) {
            std::cout << "=== iter " << iter << " closed=" << closed << " " << err
                      << " got<=ref " << a << " ref<=got " << b << " got<=staged " << c
                      << " staged<=got " << d << "\n";
            dump(s);
            if (!b) {
                std::cout << "families in ref missing from engine:\n";
                for (uint32_t t = 0; t < s.size(); ++t)
                    for (const auto& f : ref[t])
                        if (!got[t].count(f)) {
                            std::cout << "  { ";
                            f.for_each([&](uint32_t m) { std::cout << s.base.name(m) << " "; });
                            std::cout << "} -> " << s.base.name(t) << "\n";
                        }
            }
            if (!d) {
                std::cout << "families in staged missing from engine:\n";
                for (uint32_t t = 0; t < s.size(); ++t)
                    for (const auto& f : staged.back()[t])
                        if (!got[t].count(f)) {
                            std::cout << "  { ";
                            f.for_each([&](uint32_t m) { std::cout << s.base.name(m) << " "; });
                            std::cout << "} -> " << s.base.name(t) << "\n";
                        }
            }
            dump_col("engine", got, s);
            dump_col("staged", staged.back(), s);
            return 1;
        }
    }
    std::cout << "all ok\n";
    return 0;
}
