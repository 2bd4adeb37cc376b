#include "frames/hydra.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

namespace frames {

HydraMap::HydraMap(Prime p, std::vector<Rat> a, std::vector<Rat> b,
                   std::optional<std::vector<IntegerBranch>> integer_map)
    : p_(p), a_(std::move(a)), b_(std::move(b)), branches_(std::move(integer_map)) {
    const auto expect = static_cast<std::size_t>(p_.value());
    if (a_.size() != expect || b_.size() != expect)
        throw std::invalid_argument("HydraMap: need p branch coefficients");
    for (const Rat& aj : a_)
        if (aj == 0) throw std::invalid_argument("HydraMap: a_j must be nonzero");
    if (b_[0] != 0) throw std::invalid_argument("HydraMap: b_0 must be 0");
    if (a_[0] == 1) throw std::invalid_argument("HydraMap: a_0 = 1 leaves chi(0) unconstrained");
    if (branches_ && branches_->size() != expect)
        throw std::invalid_argument("HydraMap: integer map needs p branches");
}

HydraMap HydraMap::chi3() {
    return HydraMap(Prime(2), {Rat(1, 2), Rat(3, 2)}, {Rat(0), Rat(1, 2)},
                    std::vector<IntegerBranch>{{Rat(1, 2), Rat(0)}, {Rat(3, 2), Rat(1, 2)}});
}

HydraMap HydraMap::shortened_qx_plus_one(const Int& q) {
    if (q <= 1 || q % 2 == 0) throw std::invalid_argument("shortened_qx_plus_one: q must be odd and > 1");
    const Rat half(1, 2);
    return HydraMap(Prime(2), {half, Rat(q, 2)}, {Rat(0), half},
                    std::vector<IntegerBranch>{{half, Rat(0)}, {Rat(q, 2), half}});
}

Rat numen(const HydraMap& h, const Int& n) {
    if (n < 0) throw std::invalid_argument("numen: n must be >= 0");
    std::vector<digit_t> digits;
    Int m = n;
    while (m != 0) {
        digits.push_back(static_cast<digit_t>(m % h.prime().value()));
        m /= h.prime().value();
    }
    Rat chi = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        chi = h.a()[static_cast<std::size_t>(*it)] * chi + h.b()[static_cast<std::size_t>(*it)];
    return chi;
}

namespace {

std::vector<Place> hydra_candidate_places(const HydraMap& h) {
    std::set<std::int64_t> primes;
    for (const Rat& aj : h.a()) {
        for (std::int64_t f : prime_factors(num(aj))) primes.insert(f);
        for (std::int64_t f : prime_factors(den(aj))) primes.insert(f);
    }
    std::vector<Place> out;
    out.push_back(Place::infinite());
    for (std::int64_t f : primes) out.push_back(Place::finite(Prime(f)));
    return out;
}

// nth term of the continuation: b_{j_n} * prod over positions k < n of a_{j_k}.
Rat numen_term(const HydraMap& h, const PAdicRational& z, std::int64_t n) {
    const digit_t jn = z.digit(n);
    Rat t = h.b()[static_cast<std::size_t>(jn)];
    if (t == 0) return t;
    for (digit_t j = 0; j < h.prime().value(); ++j) {
        const Int e = z.count_digit_below(j, n);
        if (e != 0) t *= pow_rat(h.a()[static_cast<std::size_t>(j)], e.convert_to<std::int64_t>());
    }
    return t;
}

}  // namespace

NumenEvaluation numen_evaluate(const HydraMap& h, const PAdicRational& z) {
    if (z.prime() != h.prime()) throw std::domain_error("PRIME_MISMATCH: point and map use different p");
    const std::int64_t L = static_cast<std::int64_t>(z.period().size());
    const std::int64_t n0 = static_cast<std::int64_t>(z.preperiod().size()) + L;
    Rat r = 1;
    for (digit_t d : z.period()) r *= h.a()[static_cast<std::size_t>(d)];

    Rat A = 0;
    for (std::int64_t n = 0; n < n0; ++n) A += numen_term(h, z, n);
    bool tail_vanishes = true;
    Rat B = 0;
    for (std::int64_t k = 0; k < L; ++k) {
        const Rat t = numen_term(h, z, n0 + k);
        if (t != 0) tail_vanishes = false;
        B += t;
    }

    NumenEvaluation eval{{A, B, r, A, tail_vanishes}, {}, tail_vanishes};
    if (tail_vanishes) {
        // Finite sum: converges in the discrete topology, value = A.
        eval.cf.formal = false;
        return eval;
    }
    if (r == 1) throw std::domain_error("RATIO_ONE: per-period ratio is 1, no closed form");
    eval.cf.value = A + B / (Rat(1) - r);
    for (const Place& v : hydra_candidate_places(h))
        if (abs_value(v, r) < 1) eval.places.insert(v);
    eval.cf.formal = eval.places.empty();
    return eval;
}

ClosedForm numen_closed_form(const HydraMap& h, const PAdicRational& z) {
    return numen_evaluate(h, z).cf;
}

Rat chi3_from_X(const Rat& x) { return (x - 2) / 4; }

Trajectory iterate(const HydraMap& h, const Int& x, std::int64_t max_steps) {
    if (!h.integer_map()) throw std::domain_error("iterate: map has no integer-map form");
    if (max_steps < 1) throw std::invalid_argument("iterate: max_steps must be >= 1");
    const auto& branches = *h.integer_map();
    Trajectory traj{{x}, false, {}};
    std::map<Int, std::size_t> seen{{x, 0}};
    Int cur = x;
    for (std::int64_t step = 0; step < max_steps; ++step) {
        Int j = cur % h.prime().value();
        if (j < 0) j += h.prime().value();
        const auto& br = branches[static_cast<std::size_t>(j.convert_to<std::int64_t>())];
        const Rat next = br.slope * cur + br.offset;
        if (!is_integer(next))
            throw std::domain_error("BRANCH_NOT_INTEGER: branch output " + next.str() + " is not an integer");
        cur = num(next);
        auto it = seen.find(cur);
        if (it != seen.end()) {
            traj.cycle_found = true;
            traj.cycle.assign(traj.orbit.begin() + static_cast<std::ptrdiff_t>(it->second), traj.orbit.end());
            return traj;
        }
        seen.emplace(cur, traj.orbit.size());
        traj.orbit.push_back(cur);
    }
    return traj;
}

std::string SearchCursor::to_string() const {
    std::ostringstream os;
    os << period_len << ":" << pre_len << ":" << per_index << ":" << pre_index;
    return os.str();
}

SearchCursor SearchCursor::parse(const std::string& s) {
    SearchCursor c;
    std::istringstream is(s);
    char sep1 = 0, sep2 = 0, sep3 = 0;
    std::string per_idx, pre_idx;
    if (!(is >> c.period_len >> sep1 >> c.pre_len >> sep2) || sep1 != ':' || sep2 != ':')
        throw std::invalid_argument("SearchCursor: expected L:P:perIndex:preIndex");
    if (!std::getline(is, per_idx, ':')) throw std::invalid_argument("SearchCursor: missing period index");
    if (!std::getline(is, pre_idx)) throw std::invalid_argument("SearchCursor: missing preperiod index");
    (void)sep3;
    c.per_index = Int(per_idx);
    c.pre_index = Int(pre_idx);
    return c;
}

namespace {

std::vector<digit_t> digits_of_index(Int index, std::int64_t len, std::int64_t p) {
    std::vector<digit_t> out(static_cast<std::size_t>(len));
    // Lexicographic order over digit words, most significant position first.
    for (std::int64_t i = len - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<digit_t>(index % p);
        index /= p;
    }
    return out;
}

struct Candidate {
    SearchCursor at;
    PAdicRational z;
};

void evaluate_candidate(const HydraMap& h, const PAdicRational& z, std::int64_t verify_steps,
                        std::vector<CorrespondenceHit>& hits, SearchStats& stats) {
    ++stats.canonical;
    NumenEvaluation eval;
    try {
        eval = numen_evaluate(h, z);
    } catch (const std::domain_error&) {
        ++stats.skipped_ratio_one;
        return;
    }
    if (!eval.discrete && eval.places.empty()) {
        ++stats.skipped_no_place;  // no completion sums the series; not a CP witness
        return;
    }
    if (!is_integer(eval.cf.value)) return;
    const Int chi = num(eval.cf.value);
    CorrespondenceHit hit{z, chi, HitKind::IntegerUnconfirmed, {}};
    if (h.integer_map()) {
        const Trajectory traj = iterate(h, chi, verify_steps);
        if (traj.cycle_found &&
            std::find(traj.cycle.begin(), traj.cycle.end(), chi) != traj.cycle.end()) {
            hit.kind = HitKind::PeriodicConfirmed;
            hit.cycle = traj.cycle;
        }
    }
    hits.push_back(std::move(hit));
}

}  // namespace

SearchResult correspondence_search(const HydraMap& h, const SearchOptions& options) {
    if (options.period_max < 1) throw std::invalid_argument("correspondence_search: period_max must be >= 1");
    if (options.preperiod_max < 0)
        throw std::invalid_argument("correspondence_search: preperiod_max must be >= 0");
    const std::int64_t p = h.prime().value();
    SearchResult result;
    std::vector<Candidate> batch;

    SearchCursor start = options.resume.value_or(SearchCursor{1, 0, 0, 0});
    std::int64_t processed = 0;
    bool stopped = false;

    for (std::int64_t L = start.period_len; L <= options.period_max && !stopped; ++L) {
        for (std::int64_t P = (L == start.period_len ? start.pre_len : 0);
             P <= options.preperiod_max && !stopped; ++P) {
            const Int per_total = pow_int(Int(p), L);
            const Int pre_total = pow_int(Int(p), P);
            Int pi = (L == start.period_len && P == start.pre_len) ? start.per_index : Int(0);
            Int si = (L == start.period_len && P == start.pre_len) ? start.pre_index : Int(0);
            for (; pi < per_total && !stopped; ++pi, si = 0) {
                const auto per = digits_of_index(pi, L, p);
                for (; si < pre_total; ++si) {
                    ++result.stats.enumerated;
                    const auto pre = digits_of_index(si, P, p);
                    PAdicRational z = PAdicRational::from_digits(h.prime(), pre, per);
                    // Skip duplicates of shorter or rotated representations.
                    if (z.preperiod() != pre || z.period() != per) continue;
                    batch.push_back({SearchCursor{L, P, pi, si}, std::move(z)});
                    ++processed;
                    if (options.limit && processed >= *options.limit) {
                        stopped = true;
                        Int next_si = si + 1;
                        result.next = SearchCursor{L, P, pi, next_si};
                        if (next_si >= pre_total) result.next = SearchCursor{L, P, pi + 1, Int(0)};
                        // Normalization of block boundaries happens on resume.
                        break;
                    }
                }
            }
        }
    }

    const int workers = std::max(1, options.workers);
    if (workers == 1 || batch.size() < 2) {
        for (const auto& c : batch)
            evaluate_candidate(h, c.z, options.verify_steps, result.hits, result.stats);
    } else {
        // Fan out over contiguous chunks; merge preserves enumeration order.
        const std::size_t chunk = (batch.size() + workers - 1) / static_cast<std::size_t>(workers);
        std::vector<std::future<std::pair<std::vector<CorrespondenceHit>, SearchStats>>> futs;
        for (std::size_t lo = 0; lo < batch.size(); lo += chunk) {
            const std::size_t hi = std::min(batch.size(), lo + chunk);
            futs.push_back(std::async(std::launch::async, [&h, &batch, lo, hi, &options]() {
                std::vector<CorrespondenceHit> hits;
                SearchStats stats;
                for (std::size_t i = lo; i < hi; ++i)
                    evaluate_candidate(h, batch[i].z, options.verify_steps, hits, stats);
                return std::make_pair(std::move(hits), stats);
            }));
        }
        for (auto& f : futs) {
            auto [hits, stats] = f.get();
            for (auto& hit : hits) result.hits.push_back(std::move(hit));
            result.stats.canonical += stats.canonical;
            result.stats.skipped_ratio_one += stats.skipped_ratio_one;
            result.stats.skipped_no_place += stats.skipped_no_place;
        }
    }
    return result;
}

std::vector<CorrespondenceHit> correspondence_search(const HydraMap& h, std::int64_t preperiod_max,
                                                     std::int64_t period_max,
                                                     std::int64_t verify_steps) {
    SearchOptions options;
    options.preperiod_max = preperiod_max;
    options.period_max = period_max;
    options.verify_steps = verify_steps;
    return correspondence_search(h, options).hits;
}

}  // namespace frames
