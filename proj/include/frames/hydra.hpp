#pragma once

// Collatz-type branch systems.  A HydraMap stores the coefficients of the
// functional-equation system X(pn + j) = a_j X(n) + b_j together with an
// optional integer-map form for iteration on Z.  The numen chi_H is the
// unique rational solution with chi(0) = 0; its continuation to eventually
// periodic p-adic points is a geometric closed form, and integer values of
// that continuation are the cycle candidates of the Correspondence search.

#include "frames/fseries.hpp"

#include <optional>
#include <vector>

namespace frames {

struct IntegerBranch {
    Rat slope;
    Rat offset;
};

class HydraMap {
public:
    HydraMap(Prime p, std::vector<Rat> a, std::vector<Rat> b,
             std::optional<std::vector<IntegerBranch>> integer_map);

    const Prime& prime() const { return p_; }
    const std::vector<Rat>& a() const { return a_; }
    const std::vector<Rat>& b() const { return b_; }
    const std::optional<std::vector<IntegerBranch>>& integer_map() const { return branches_; }

    // chi_3: p = 2, a = (1/2, 3/2), b = (0, 1/2); branches n/2, (3n+1)/2.
    static HydraMap chi3();
    // The shortened qx+1 map T_q for odd q.
    static HydraMap shortened_qx_plus_one(const Int& q);

private:
    Prime p_;
    std::vector<Rat> a_;
    std::vector<Rat> b_;
    std::optional<std::vector<IntegerBranch>> branches_;
};

// chi(n) by digit recursion: chi(0) = 0, chi(pm + j) = a_j chi(m) + b_j.
Rat numen(const HydraMap& h, const Int& n);

struct NumenEvaluation {
    ClosedForm cf;
    std::set<Place> places;  // places where the tail terms decay
    bool discrete;           // tail terms are identically zero (finite sum)
};

// Continuation of the numen to an eventually periodic point.  The nth term is
// b_{j_n} prod_{k<n} a_{j_k}; past the preperiod the terms are geometric with
// per-period ratio prod_j a_j^{c_j}.  Throws RATIO_ONE when the ratio is 1
// and the tail does not vanish.
NumenEvaluation numen_evaluate(const HydraMap& h, const PAdicRational& z);
ClosedForm numen_closed_form(const HydraMap& h, const PAdicRational& z);

// chi_3 from the two-parameter series value: (x - 2) / 4.
Rat chi3_from_X(const Rat& x);

struct Trajectory {
    std::vector<Int> orbit;  // x, H(x), ... up to the first revisit
    bool cycle_found;
    std::vector<Int> cycle;  // the cycle part, starting at the first revisited element
};

// Iterates the integer-map form; throws BRANCH_NOT_INTEGER if a branch output
// is not integral.
Trajectory iterate(const HydraMap& h, const Int& x, std::int64_t max_steps);

enum class HitKind { PeriodicConfirmed, IntegerUnconfirmed };

struct CorrespondenceHit {
    PAdicRational z;
    Int chi_value;
    HitKind kind;
    std::vector<Int> cycle;  // empty for unconfirmed hits
};

struct SearchStats {
    std::int64_t enumerated = 0;         // raw digit strings visited
    std::int64_t canonical = 0;          // canonical points evaluated
    std::int64_t skipped_ratio_one = 0;  // ratio 1, no value
    std::int64_t skipped_no_place = 0;   // no completion sums the series
};

// Deterministic enumeration cursor: position within the sweep ordered by
// period length, then preperiod length, then lexicographic digits.
struct SearchCursor {
    std::int64_t period_len = 1;
    std::int64_t pre_len = 0;
    Int per_index = 0;
    Int pre_index = 0;

    std::string to_string() const;
    static SearchCursor parse(const std::string& s);
};

struct SearchOptions {
    std::int64_t preperiod_max = 0;
    std::int64_t period_max = 1;
    std::int64_t verify_steps = 1 << 16;
    std::optional<SearchCursor> resume;   // start position (inclusive)
    std::optional<std::int64_t> limit;    // max canonical candidates to process
    int workers = 1;                      // parallel fan-out; merge is deterministic
};

struct SearchResult {
    std::vector<CorrespondenceHit> hits;
    SearchStats stats;
    std::optional<SearchCursor> next;  // set when the sweep stopped early (limit)
};

SearchResult correspondence_search(const HydraMap& h, const SearchOptions& options);

// Convenience overload matching the plain bounds signature.
std::vector<CorrespondenceHit> correspondence_search(const HydraMap& h, std::int64_t preperiod_max,
                                                     std::int64_t period_max,
                                                     std::int64_t verify_steps);

}  // namespace frames
