#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "model.hpp"
#include "rational.hpp"

namespace dpg {

// Direction predicates on 2-d vectors. Everything here is sign arithmetic, so
// rational models are decided exactly; float models reuse the same code.

namespace detail {

template <class S>
struct Vec2 {
    S x{}, y{};
    bool zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

template <class S>
S cross2(const Vec2<S>& a, const Vec2<S>& b) { return a.x * b.y - a.y * b.x; }

template <class S>
S dot2(const Vec2<S>& a, const Vec2<S>& b) { return a.x * b.x + a.y * b.y; }

template <class S>
S norm2(const Vec2<S>& a) { return a.x * a.x + a.y * a.y; }

// Quarter-plane index of a nonzero vector, for angles in [0, 2pi):
// 0: [0, pi/2)   1: [pi/2, pi)   2: [pi, 3pi/2)   3: [3pi/2, 2pi)
template <class S>
int quadrant(const Vec2<S>& v) {
    const int sx = sgn(v.x), sy = sgn(v.y);
    if (sx > 0 && sy >= 0) return 0;
    if (sx <= 0 && sy > 0) return 1;
    if (sx < 0 && sy <= 0) return 2;
    return 3; // sx >= 0 && sy < 0
}

// Strict "angle(a) < angle(b)" on directions; equal directions compare false.
template <class S>
bool dir_less(const Vec2<S>& a, const Vec2<S>& b) {
    const int qa = quadrant(a), qb = quadrant(b);
    if (qa != qb) return qa < qb;
    return sgn(cross2(a, b)) > 0;
}

template <class S>
bool same_dir(const Vec2<S>& a, const Vec2<S>& b) {
    return sgn(cross2(a, b)) == 0 && sgn(dot2(a, b)) > 0;
}

// CCW angle from a to b, encoded as the vector (dot, cross) whose polar angle
// equals that gap. Valid for comparing gaps of distinct directions.
template <class S>
Vec2<S> gap_vector(const Vec2<S>& a, const Vec2<S>& b) {
    return Vec2<S>{dot2(a, b), cross2(a, b)};
}

template <class S>
bool gap_ge_half_pi(const Vec2<S>& gap) {
    return !(sgn(gap.y) > 0 && sgn(gap.x) > 0); // not in the open first quarter
}

template <class S>
bool gap_ge_pi(const Vec2<S>& gap) {
    return sgn(gap.y) < 0 || (sgn(gap.y) == 0 && sgn(gap.x) < 0);
}

template <class S>
bool gap_less(const Vec2<S>& a, const Vec2<S>& b) {
    return dir_less(a, b);
}

template <class S>
Vec2<S> row_vec2(const VectorModel<S>& m, int i) {
    return Vec2<S>{m.rows[static_cast<std::size_t>(i)][0], m.rows[static_cast<std::size_t>(i)][1]};
}

} // namespace detail

struct AngularOrder {
    std::vector<std::string> order;
    bool half_plane = false; // all vectors inside some closed half-plane
};

// Vertices sorted by polar angle in [0, 2pi). If the largest circular gap
// between consecutive directions spans at least a quarter turn (an empty
// quadrant), the order starts just after that gap; otherwise it starts at the
// smallest absolute angle. Same-direction ties order by squared norm, then label.
template <class S>
AngularOrder angular_order(const VectorModel<S>& m) {
    using detail::Vec2;
    if (m.dim != 2) throw DomainError("angular_order needs a 2-d model");
    const int n = m.n();
    std::vector<Vec2<S>> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v.push_back(detail::row_vec2(m, i));
        if (v.back().zero())
            throw DomainError("angular_order undefined: zero vector at '" +
                              m.labels[static_cast<std::size_t>(i)] + "'");
    }

    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const auto& va = v[static_cast<std::size_t>(a)];
        const auto& vb = v[static_cast<std::size_t>(b)];
        if (detail::dir_less(va, vb)) return true;
        if (detail::dir_less(vb, va)) return false;
        const S na = detail::norm2(va), nb = detail::norm2(vb);
        if (na != nb) return na < nb;
        return m.labels[static_cast<std::size_t>(a)] < m.labels[static_cast<std::size_t>(b)];
    });

    // Group equal directions; gaps are between consecutive distinct directions.
    std::vector<std::pair<int, int>> groups; // [first, last] positions in idx
    for (int i = 0; i < n;) {
        int jend = i;
        while (jend + 1 < n &&
               detail::same_dir(v[static_cast<std::size_t>(idx[static_cast<std::size_t>(jend + 1)])],
                                v[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]))
            ++jend;
        groups.emplace_back(i, jend);
        i = jend + 1;
    }
    const int k = static_cast<int>(groups.size());

    AngularOrder out;
    int start_group = 0;
    if (k == 1) {
        out.half_plane = true;
    } else {
        std::vector<Vec2<S>> gap(static_cast<std::size_t>(k));
        for (int gidx = 0; gidx < k; ++gidx) {
            const auto& a = v[static_cast<std::size_t>(idx[static_cast<std::size_t>(groups[static_cast<std::size_t>(gidx)].first)])];
            const auto& b = v[static_cast<std::size_t>(idx[static_cast<std::size_t>(groups[static_cast<std::size_t>((gidx + 1) % k)].first)])];
            gap[static_cast<std::size_t>(gidx)] = detail::gap_vector(a, b);
        }
        int widest = 0;
        for (int gidx = 1; gidx < k; ++gidx)
            if (detail::gap_less(gap[static_cast<std::size_t>(widest)], gap[static_cast<std::size_t>(gidx)]))
                widest = gidx;
        for (int gidx = 0; gidx < k; ++gidx)
            if (detail::gap_ge_pi(gap[static_cast<std::size_t>(gidx)])) out.half_plane = true;
        if (detail::gap_ge_half_pi(gap[static_cast<std::size_t>(widest)]))
            start_group = (widest + 1) % k;
    }

    for (int gidx = 0; gidx < k; ++gidx) {
        const auto& [first, last] = groups[static_cast<std::size_t>((start_group + gidx) % k)];
        for (int p = first; p <= last; ++p)
            out.order.push_back(m.labels[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])]);
    }
    return out;
}

// True iff a^b is a nonnegative combination of a^a and a^c, i.e. lies in the
// closed cone spanned by them within their smaller angle. Undefined (error)
// when any of the vectors is zero or when a^a and a^c are antiparallel.
template <class S>
bool is_between(const VectorModel<S>& m, const std::string& a, const std::string& b,
                const std::string& c) {
    using detail::Vec2;
    if (m.dim != 2) throw DomainError("is_between needs a 2-d model");
    const Vec2<S> va = detail::row_vec2(m, m.index_of(a));
    const Vec2<S> vb = detail::row_vec2(m, m.index_of(b));
    const Vec2<S> vc = detail::row_vec2(m, m.index_of(c));
    if (va.zero() || vb.zero() || vc.zero())
        throw DomainError("betweenness undefined: zero vector");
    const S s = detail::cross2(va, vc);
    if (sgn(s) == 0) {
        if (sgn(detail::dot2(va, vc)) < 0)
            throw DomainError("betweenness undefined: antiparallel endpoints");
        return detail::same_dir(va, vb); // both endpoints on one ray
    }
    const int ss = sgn(s);
    const int alpha = sgn(detail::cross2(vb, vc)); // alpha * s >= 0
    const int beta  = sgn(detail::cross2(va, vb)); // beta * s >= 0
    return (alpha == 0 || alpha == ss) && (beta == 0 || beta == ss);
}

} // namespace dpg
