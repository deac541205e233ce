#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class SubKind {
    RightIdeal,
    LeftIdeal,
    TwoSidedIdeal,
    CSubmodule,
    AdditiveSubgroup,
};

inline const char* to_string(SubKind k) {
    switch (k) {
        case SubKind::RightIdeal: return "right-ideal";
        case SubKind::LeftIdeal: return "left-ideal";
        case SubKind::TwoSidedIdeal: return "two-sided-ideal";
        case SubKind::CSubmodule: return "c-submodule";
        case SubKind::AdditiveSubgroup: return "additive-subgroup";
    }
    return "?";
}

/// Finite set of elements closed under addition, negation and the action
/// named by its kind. Membership is by sorted-vector binary search.
struct Submodule {
    const Ring* ambient = nullptr;
    SubKind kind = SubKind::AdditiveSubgroup;
    std::vector<ElemIndex> members;  // sorted ascending

    bool contains(ElemIndex e) const {
        return std::binary_search(members.begin(), members.end(), e);
    }
    std::uint64_t size() const { return members.size(); }
};

namespace detail {

/// Action closure check. For struct-consts rings, closure under the
/// generator action plus additive closure implies closure under the full
/// action, so only k products per member are needed.
inline bool action_closed(const Ring& r, SubKind kind, const Submodule& s,
                          const std::vector<ElemIndex>* center) {
    auto closed_under = [&](auto&& act_list, bool right, bool left) {
        for (ElemIndex x : s.members)
            for (ElemIndex a : act_list) {
                if (right && !s.contains(r.mul(x, a))) return false;
                if (left && !s.contains(r.mul(a, x))) return false;
            }
        return true;
    };
    std::vector<ElemIndex> acts;
    if (kind == SubKind::CSubmodule) {
        if (!center) throw RingError("c-submodule verification requires the center");
        return closed_under(*center, true, false);
    }
    if (kind == SubKind::AdditiveSubgroup) return true;
    if (r.encoding() == Ring::Encoding::StructConsts) {
        for (int i = 0; i < r.generator_count(); ++i) acts.push_back(r.generator(i));
    } else {
        acts.resize(static_cast<std::size_t>(r.size()));
        for (std::uint64_t i = 0; i < r.size(); ++i) acts[i] = static_cast<ElemIndex>(i);
    }
    bool right = kind == SubKind::RightIdeal || kind == SubKind::TwoSidedIdeal;
    bool left = kind == SubKind::LeftIdeal || kind == SubKind::TwoSidedIdeal;
    return closed_under(acts, right, left);
}

}  // namespace detail

/// Builds a submodule, verifying its closure invariants.
inline Submodule make_submodule(const Ring& r, SubKind kind, std::vector<ElemIndex> members,
                                const std::vector<ElemIndex>* center = nullptr,
                                bool verify = true) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Submodule s{&r, kind, std::move(members)};
    if (verify) {
        if (!s.contains(r.zero())) throw RingError("submodule must contain zero");
        for (ElemIndex x : s.members)
            if (!s.contains(r.neg(x))) throw RingError("submodule not closed under negation");
        for (ElemIndex x : s.members)
            for (ElemIndex y : s.members)
                if (!s.contains(r.add(x, y))) throw RingError("submodule not closed under addition");
        if (!detail::action_closed(r, kind, s, center))
            throw RingError("submodule not closed under its action");
    }
    return s;
}

/// Least subset containing seed that is closed under addition, negation and
/// the actions of kind; single-pass worklist fixpoint.
inline Submodule ideal_closure(const Ring& r, const std::vector<ElemIndex>& seed, SubKind kind,
                               const RunConfig& cfg = {},
                               const std::vector<ElemIndex>* center = nullptr) {
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    std::vector<char> in(static_cast<std::size_t>(r.size()), 0);
    std::vector<ElemIndex> list;
    std::vector<ElemIndex> queue;
    auto push = [&](ElemIndex e) {
        if (!in[e]) {
            in[e] = 1;
            list.push_back(e);
            queue.push_back(e);
        }
    };
    push(r.zero());
    for (ElemIndex e : seed) push(e);

    std::vector<ElemIndex> acts;
    bool right = kind == SubKind::RightIdeal || kind == SubKind::TwoSidedIdeal;
    bool left = kind == SubKind::LeftIdeal || kind == SubKind::TwoSidedIdeal;
    if (kind == SubKind::CSubmodule) {
        if (!center) throw RingError("c-submodule closure requires the center");
        acts = *center;
        right = true;
        left = false;
    } else if (kind != SubKind::AdditiveSubgroup) {
        if (r.encoding() == Ring::Encoding::StructConsts) {
            for (int i = 0; i < r.generator_count(); ++i) acts.push_back(r.generator(i));
        } else {
            for (std::uint64_t i = 0; i < r.size(); ++i) acts.push_back(static_cast<ElemIndex>(i));
        }
    }

    while (!queue.empty()) {
        ElemIndex x = queue.back();
        queue.pop_back();
        push(r.neg(x));
        // snapshot by index: pairs with later arrivals are handled when the
        // later element is popped
        for (std::size_t i = 0; i < list.size(); ++i) push(r.add(x, list[i]));
        for (ElemIndex a : acts) {
            if (right) push(r.mul(x, a));
            if (left) push(r.mul(a, x));
        }
    }
    return make_submodule(r, kind, std::move(list), center, false);
}

/// {x : n*x = 0}, always a two-sided ideal.
inline Submodule annihilator_of_int(const Ring& r, long long n, const RunConfig& cfg = {}) {
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    std::vector<ElemIndex> members;
    for (std::uint64_t x = 0; x < r.size(); ++x)
        if (r.int_scale(n, static_cast<ElemIndex>(x)) == r.zero())
            members.push_back(static_cast<ElemIndex>(x));
    return make_submodule(r, SubKind::TwoSidedIdeal, std::move(members), nullptr, false);
}

/// All e with e*e = e, ascending.
inline std::vector<ElemIndex> idempotents(const Ring& r, const RunConfig& cfg = {}) {
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    std::vector<ElemIndex> out;
    for (std::uint64_t e = 0; e < r.size(); ++e) {
        auto ei = static_cast<ElemIndex>(e);
        if (r.mul(ei, ei) == ei) out.push_back(ei);
    }
    return out;
}

}  // namespace ringlab
