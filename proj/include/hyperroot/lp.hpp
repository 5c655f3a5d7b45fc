#pragma once

// Exact feasibility of small systems of linear inequalities over Q, by
// Fourier-Motzkin elimination with a back-substituted witness.

#include "rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hyperroot {

// sum_j a[j] * x_j <= b
struct LinearRow {
    std::vector<Rational> a;
    Rational b;
};

struct LpResult {
    bool feasible = false;
    bool aborted = false;  // row count exceeded the guard
    std::vector<Rational> witness;
};

namespace detail {

using RowMap = std::map<std::vector<Rational>, Rational>;

// Scales a row so its first nonzero coefficient is +-1 and keeps the tightest
// right-hand side per direction. Returns false for a trivially violated row.
inline bool insert_row(RowMap& rows, LinearRow r) {
    const Rational* lead = nullptr;
    for (const auto& v : r.a) {
        if (v != 0) {
            lead = &v;
            break;
        }
    }
    if (lead == nullptr) return r.b >= 0;
    Rational s = abs_value(*lead);
    for (auto& v : r.a) v /= s;
    r.b /= s;
    auto it = rows.find(r.a);
    if (it == rows.end()) rows.emplace(std::move(r.a), std::move(r.b));
    else if (r.b < it->second) it->second = r.b;
    return true;
}

}  // namespace detail

inline LpResult fm_solve(const std::vector<LinearRow>& input, std::size_t nvars, std::size_t row_guard = 20000) {
    LpResult res;
    detail::RowMap current;
    for (const auto& r : input) {
        if (r.a.size() != nvars) throw std::invalid_argument("row width differs from variable count");
        if (!detail::insert_row(current, r)) return res;
    }

    // stages[k] is the system before the k-th elimination, order[k] the variable removed.
    std::vector<detail::RowMap> stages;
    std::vector<std::size_t> order;
    std::vector<bool> gone(nvars, false);
    for (std::size_t step = 0; step < nvars; ++step) {
        std::size_t best = nvars;
        std::size_t best_cost = 0;
        for (std::size_t j = 0; j < nvars; ++j) {
            if (gone[j]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& [a, b] : current) {
                if (a[j] > 0) ++pos;
                else if (a[j] < 0) ++neg;
            }
            std::size_t cost = pos * neg;
            if (best == nvars || cost < best_cost) best = j, best_cost = cost;
        }
        stages.push_back(current);
        order.push_back(best);
        gone[best] = true;

        std::vector<const std::pair<const std::vector<Rational>, Rational>*> up, down;
        detail::RowMap next;
        for (const auto& row : current) {
            const Rational& c = row.first[best];
            if (c > 0) up.push_back(&row);
            else if (c < 0) down.push_back(&row);
            else next.insert(row);
        }
        for (const auto* u : up) {
            for (const auto* d : down) {
                Rational cu = u->first[best];
                Rational cd = -d->first[best];
                LinearRow r{std::vector<Rational>(nvars), u->second * cd + d->second * cu};
                for (std::size_t j = 0; j < nvars; ++j) r.a[j] = u->first[j] * cd + d->first[j] * cu;
                r.a[best] = 0;
                if (!detail::insert_row(next, std::move(r))) return res;
            }
        }
        if (next.size() > row_guard) {
            res.aborted = true;
            return res;
        }
        current = std::move(next);
    }
    for (const auto& [a, b] : current) {
        if (b < 0) return res;
    }

    res.feasible = true;
    res.witness.assign(nvars, Rational(0));
    for (std::size_t k = order.size(); k-- > 0;) {
        std::size_t j = order[k];
        std::optional<Rational> lo, hi;
        for (const auto& [a, b] : stages[k]) {
            if (a[j] == 0) continue;
            Rational rest = b;
            for (std::size_t t = 0; t < nvars; ++t) {
                if (t != j && a[t] != 0) rest -= a[t] * res.witness[t];
            }
            Rational bound = rest / a[j];
            if (a[j] > 0) {
                if (!hi || bound < *hi) hi = bound;
            } else if (!lo || bound > *lo) {
                lo = bound;
            }
        }
        if (lo) res.witness[j] = *lo;
        else if (hi) res.witness[j] = std::min(*hi, Rational(0));
    }
    return res;
}

}  // namespace hyperroot
