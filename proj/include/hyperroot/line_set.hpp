#pragma once

// Finite unions of rational intervals on the extended line. Endpoints may be
// open, closed or infinite; the representation is kept sorted and merged so
// that equal sets compare equal.

#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace hyperroot {

struct Piece {
    Rational lo = 0;
    Rational hi = 0;
    bool lo_closed = true;
    bool hi_closed = true;
    bool lo_inf = false;  // lo = -infinity
    bool hi_inf = false;  // hi = +infinity

    static Piece point(const Rational& x) { return {x, x, true, true, false, false}; }
    static Piece closed(const Rational& l, const Rational& h) { return {l, h, true, true, false, false}; }
    static Piece open(const Rational& l, const Rational& h) { return {l, h, false, false, false, false}; }
    static Piece below(const Rational& h, bool closed_end) { return {0, h, false, closed_end, true, false}; }
    static Piece above(const Rational& l, bool closed_end) { return {l, 0, closed_end, false, false, true}; }

    [[nodiscard]] bool empty() const {
        if (lo_inf || hi_inf) return false;
        if (lo < hi) return false;
        return !(lo == hi && lo_closed && hi_closed);
    }
    [[nodiscard]] bool is_point() const { return !lo_inf && !hi_inf && lo == hi && lo_closed && hi_closed; }

    [[nodiscard]] bool contains(const Rational& x) const {
        bool above_lo = lo_inf || lo < x || (lo_closed && lo == x);
        bool below_hi = hi_inf || x < hi || (hi_closed && hi == x);
        return above_lo && below_hi;
    }

    friend bool operator==(const Piece& a, const Piece& b) {
        if (a.lo_inf != b.lo_inf || a.hi_inf != b.hi_inf) return false;
        if (!a.lo_inf && (a.lo != b.lo || a.lo_closed != b.lo_closed)) return false;
        if (!a.hi_inf && (a.hi != b.hi || a.hi_closed != b.hi_closed)) return false;
        return true;
    }
};

namespace detail {

// Ordering of lower ends: -inf first, then value, closed before open.
inline bool lower_before(const Piece& a, const Piece& b) {
    if (a.lo_inf != b.lo_inf) return a.lo_inf;
    if (a.lo_inf) return false;
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
}

// Compares upper ends; returns true when a's upper end reaches at least b's.
inline bool upper_reaches(const Piece& a, const Piece& b) {
    if (a.hi_inf) return true;
    if (b.hi_inf) return false;
    if (a.hi != b.hi) return a.hi > b.hi;
    return a.hi_closed || !b.hi_closed;
}

// True when b starts no later than a ends, with no gap between them.
inline bool touches(const Piece& a, const Piece& b) {
    if (a.hi_inf || b.lo_inf) return true;
    if (b.lo < a.hi) return true;
    return b.lo == a.hi && (a.hi_closed || b.lo_closed);
}

}  // namespace detail

class LineSet {
public:
    LineSet() = default;
    explicit LineSet(std::vector<Piece> pieces) : pieces_(std::move(pieces)) { normalize(); }
    static LineSet of(const Piece& p) { return LineSet(std::vector<Piece>{p}); }
    static LineSet point(const Rational& x) { return of(Piece::point(x)); }

    [[nodiscard]] const std::vector<Piece>& pieces() const { return pieces_; }
    [[nodiscard]] bool empty() const { return pieces_.empty(); }

    [[nodiscard]] bool contains(const Rational& x) const {
        return std::any_of(pieces_.begin(), pieces_.end(), [&](const Piece& p) { return p.contains(x); });
    }

    [[nodiscard]] LineSet unite(const LineSet& other) const {
        std::vector<Piece> all = pieces_;
        all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
        return LineSet(std::move(all));
    }

    [[nodiscard]] LineSet intersect(const LineSet& other) const {
        std::vector<Piece> out;
        for (const auto& a : pieces_) {
            for (const auto& b : other.pieces_) {
                Piece c;
                // larger lower end
                const Piece& lo_src = detail::lower_before(a, b) ? b : a;
                c.lo = lo_src.lo;
                c.lo_inf = lo_src.lo_inf;
                c.lo_closed = lo_src.lo_closed;
                const Piece& hi_src = detail::upper_reaches(a, b) ? b : a;
                c.hi = hi_src.hi;
                c.hi_inf = hi_src.hi_inf;
                c.hi_closed = hi_src.hi_closed;
                if (!c.empty()) out.push_back(c);
            }
        }
        return LineSet(std::move(out));
    }

    // Image under x -> k*x + s with k > 0.
    [[nodiscard]] LineSet affine(const Rational& k, const Rational& s) const {
        std::vector<Piece> out = pieces_;
        for (auto& p : out) {
            if (!p.lo_inf) p.lo = p.lo * k + s;
            if (!p.hi_inf) p.hi = p.hi * k + s;
        }
        return LineSet(std::move(out));
    }

    // Image under x -> -x.
    [[nodiscard]] LineSet reflected() const {
        std::vector<Piece> out;
        for (const auto& p : pieces_) {
            Piece q;
            q.lo = -p.hi;
            q.hi = -p.lo;
            q.lo_inf = p.hi_inf;
            q.hi_inf = p.lo_inf;
            q.lo_closed = p.hi_closed;
            q.hi_closed = p.lo_closed;
            out.push_back(q);
        }
        return LineSet(std::move(out));
    }

    // Angles: rotate by s and wrap into [0, 2). Pieces must lie in [0, 2).
    [[nodiscard]] LineSet rotated(const Rational& s) const {
        Rational shift = s - 2 * Rational(floor_of(s / 2));
        std::vector<Piece> out;
        for (auto p : pieces_) {
            p.lo += shift;
            p.hi += shift;
            if (p.hi < 2 || (p.hi == 2 && !p.hi_closed)) {
                out.push_back(p);
            } else if (p.lo >= 2) {
                p.lo -= 2;
                p.hi -= 2;
                out.push_back(p);
            } else {
                Piece a = p, b = p;
                a.hi = 2;
                a.hi_closed = false;
                b.lo = 0;
                b.lo_closed = true;
                b.hi -= 2;
                out.push_back(a);
                if (!b.empty()) out.push_back(b);
            }
        }
        return LineSet(std::move(out));
    }

    // Lower and upper bounds of the whole set (nullopt for infinite ends).
    [[nodiscard]] std::optional<Rational> infimum() const {
        if (pieces_.empty() || pieces_.front().lo_inf) return std::nullopt;
        return pieces_.front().lo;
    }
    [[nodiscard]] std::optional<Rational> supremum() const {
        if (pieces_.empty() || pieces_.back().hi_inf) return std::nullopt;
        return pieces_.back().hi;
    }

    friend bool operator==(const LineSet& a, const LineSet& b) { return a.pieces_ == b.pieces_; }
    friend bool operator!=(const LineSet& a, const LineSet& b) { return !(a == b); }

private:
    void normalize() {
        std::vector<Piece> in;
        for (const auto& p : pieces_) {
            if (!p.empty()) in.push_back(p);
        }
        std::sort(in.begin(), in.end(), detail::lower_before);
        std::vector<Piece> out;
        for (const auto& p : in) {
            if (!out.empty() && detail::touches(out.back(), p)) {
                if (!detail::upper_reaches(out.back(), p)) {
                    out.back().hi = p.hi;
                    out.back().hi_inf = p.hi_inf;
                    out.back().hi_closed = p.hi_closed;
                }
            } else {
                out.push_back(p);
            }
        }
        for (auto& p : out) {
            if (p.lo_inf) p.lo = 0, p.lo_closed = false;
            if (p.hi_inf) p.hi = 0, p.hi_closed = false;
        }
        pieces_ = std::move(out);
    }

    std::vector<Piece> pieces_;
};

}  // namespace hyperroot
