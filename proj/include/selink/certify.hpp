// Sasaki-Einstein certification: Fano index, the three klt sufficient
// inequalities with their geometric side conditions, and the Lichnerowicz
// obstruction. All inequalities are strict and evaluated exactly.
#pragma once

#include <array>
#include <string>

#include "selink/candidate.hpp"

namespace selink {

enum class SEStatus { certified, obstructed, unknown };

const char* se_status_name(SEStatus s);

struct Verdict {
    SEStatus status = SEStatus::unknown;
    int branch = 0;      // 1..3 when certified
    std::string reason;  // obstruction identity when obstructed
    i64 lhs_2Id = 0;     // 2*I*d
    std::array<i64, 3> rhs{};  // 3*w0*w1, 3*w0*w2, 3*w0*w3

    std::string describe() const;
};

// I = |w| - d; positive iff the link carries a positive Sasakian structure.
i64 fano_index(const WeightVector& w, i64 d);

// True iff the point (0,0,0,1) lies in the variety: the support has no
// monomial on the largest-weight coordinate alone (generically: w3 does not
// divide d).
bool point_in_variety(const LinkCandidate& c);

// True iff the line z0 = z1 = 0 lies in the variety: no support monomial on
// the two largest-weight coordinates only.
bool line_in_variety(const LinkCandidate& c);

// Tries the three sufficient branches in order:
//   (1) 2Id < 3*w0*w1                      no side condition
//   (2) 2Id < 3*w0*w2  and line not in variety
//   (3) 2Id < 3*w0*w3  and point not in variety
// Returns the first passing branch, else unknown with all margins recorded.
// Requires index > 0 and a quasi-smooth candidate.
Verdict klt_certificate(const LinkCandidate& c);

struct Lichnerowicz {
    bool obstructed = false;
    bool marginal = false;  // equality I = 3*w0, reported but not obstructed
    i64 threshold = 0;      // 3*w0
};

// Obstruction: I > 3*min(w), strictly. Requires I > 0.
Lichnerowicz lichnerowicz_obstructed(const WeightVector& w, i64 index);

}  // namespace selink
