#pragma once

#include "mnp/errors.hpp"

namespace mnp {

/// Rank d and nilpotency class k of M_k = F / F'' gamma_{k+1}(F).
struct GroupParams {
    int rank = 2;
    int cls = 3;

    friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

inline void validate(const GroupParams& p) {
    if (p.rank < 1) throw DomainError("rank must be at least 1");
    if (p.cls < 1) throw DomainError("class must be at least 1");
}

inline void require_same(const GroupParams& a, const GroupParams& b) {
    if (!(a == b)) throw ParamsMismatch();
}

}  // namespace mnp
