#include "mono/curve.hpp"
#include "mono/eps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace mono {

std::string CurveSpec::render() const {
    std::string s;
    for (Step st : word) s += st == Step::R ? 'R' : st == Step::U ? 'U' : '*';
    return s;
}

bool CurveSpec::primitive() const { return star_count() == 0; }

int CurveSpec::star_count() const {
    int k = 0;
    for (Step st : word)
        if (st == Step::STAR) k++;
    return k;
}

static CurveSpec parse_impl(const std::string& w, int expect_m, int expect_n) {
    CurveSpec c;
    int m = 0, n = 0;
    for (size_t i = 0; i < w.size(); i++) {
        char ch = w[i];
        if (ch == 'R' || ch == 'r') {
            c.word.push_back(Step::R);
            m++;
        } else if (ch == 'U' || ch == 'u') {
            c.word.push_back(Step::U);
            n++;
        } else if (ch == '*') {
            if (i == 0 || (w[i - 1] != 'U' && w[i - 1] != 'u'))
                throw parse_error("'*' must be immediately preceded by U", i);
            if (i + 1 >= w.size() || (w[i + 1] != 'R' && w[i + 1] != 'r'))
                throw parse_error("'*' must be immediately followed by R", i);
            c.word.push_back(Step::STAR);
        } else {
            throw parse_error(std::string("bad symbol '") + ch + "'", i);
        }
    }
    if (c.word.empty()) throw parse_error("empty word");
    if (c.word.front() != Step::R) throw parse_error("word must start with R", 0);
    if (c.word.back() != Step::U) throw parse_error("word must end with U", w.size() - 1);
    if (expect_m >= 0 && (m != expect_m || n != expect_n))
        throw parse_error("step counts (" + std::to_string(m) + "," + std::to_string(n) +
                          ") do not match declared (" + std::to_string(expect_m) + "," +
                          std::to_string(expect_n) + ")");
    c.m = m;
    c.n = n;
    return c;
}

CurveSpec parse_curve(const std::string& word) { return parse_impl(word, -1, -1); }
CurveSpec parse_curve(const std::string& word, int m, int n) { return parse_impl(word, m, n); }

static void enum_rec(int m, int n, int r_used, int u_used, bool after_u,
                     std::string& cur, std::vector<CurveSpec>& out) {
    if (r_used == m && u_used == n) {
        if (cur.back() == 'U') out.push_back(parse_curve(cur));
        return;
    }
    // lexicographic in '*','R','U' order ('*' < 'R' < 'U' in ASCII)
    if (after_u && r_used < m && r_used > 0) {
        cur += "*R";
        enum_rec(m, n, r_used + 1, u_used, false, cur, out);
        cur.resize(cur.size() - 2);
    }
    if (r_used < m && !(r_used == 0 && u_used > 0)) {
        cur += 'R';
        enum_rec(m, n, r_used + 1, u_used, false, cur, out);
        cur.pop_back();
    }
    if (u_used < n && r_used > 0) {
        cur += 'U';
        enum_rec(m, n, r_used, u_used + 1, true, cur, out);
        cur.pop_back();
    }
}

std::vector<CurveSpec> enumerate_curves(int m, int n) {
    std::vector<CurveSpec> out;
    if (m < 1 || n < 1) return out;
    std::string cur;
    enum_rec(m, n, 0, 0, false, cur, out);
    std::sort(out.begin(), out.end(), [](const CurveSpec& a, const CurveSpec& b) {
        return a.render() < b.render();
    });
    return out;
}

CurveSpec almost_linear_curve(int m, int n) {
    // heights h(x) = floor(n x / m); on-curve interior points: none
    std::string w;
    int prev = 0;
    for (int x = 1; x <= m; x++) {
        w += 'R';
        int h = x < m ? (n * x) / m : n;
        for (int i = prev; i < h; i++) w += 'U';
        prev = h;
    }
    return parse_curve(w, m, n);
}

CurveSpec transpose_curve(const CurveSpec& c) {
    CurveSpec r;
    r.m = c.n;
    r.n = c.m;
    r.word.reserve(c.word.size());
    for (auto it = c.word.rbegin(); it != c.word.rend(); ++it)
        r.word.push_back(*it == Step::R ? Step::U : *it == Step::U ? Step::R : Step::STAR);
    return r;
}

CurveStats curve_stats(const CurveSpec& c) {
    CurveStats st;
    st.m = c.m;
    st.n = c.n;
    st.k = c.star_count() + 1;

    // heights h(x) = number of U's before the (x+1)-th R; h(m) = n
    st.heights.assign(size_t(c.m) + 1, 0);
    {
        int r = 0, u = 0;
        for (Step s : c.word) {
            if (s == Step::R) {
                st.heights[size_t(r)] = u;
                r++;
            } else if (s == Step::U) {
                u++;
            } else {
                st.on_points.emplace_back(r, u);
            }
        }
        st.heights[size_t(c.m)] = c.n;
    }

    // segments: split the word at stars
    {
        CurveSpec seg;
        for (Step s : c.word) {
            if (s == Step::STAR) {
                seg.m = 0; seg.n = 0;
                for (Step t : seg.word) (t == Step::R ? seg.m : seg.n)++;
                st.segments.push_back(seg);
                seg = CurveSpec{};
            } else {
                seg.word.push_back(s);
            }
        }
        seg.m = 0; seg.n = 0;
        for (Step t : seg.word) (t == Step::R ? seg.m : seg.n)++;
        st.segments.push_back(seg);
    }

    st.lambda.resize(size_t(c.m) + 1);
    for (int i = 0; i <= c.m; i++) st.lambda[size_t(i)] = st.heights[size_t(c.m - i)];
    st.b.resize(size_t(c.m));
    for (int i = 1; i <= c.m; i++) st.b[size_t(i - 1)] = st.lambda[size_t(i - 1)] - st.lambda[size_t(i)];

    for (const auto& [x, y] : st.on_points) st.S.push_back(c.m - x);
    std::sort(st.S.begin(), st.S.end());
    st.eps.resize(c.m >= 1 ? size_t(c.m - 1) : 0);
    for (int i = 1; i <= c.m - 1; i++)
        st.eps[size_t(i - 1)] = std::count(st.S.begin(), st.S.end(), i) ? 0 : 1;

    for (int x = 0; x < c.m; x++) st.area += st.heights[size_t(x)];

    for (int x = 1; x <= c.m - 1; x++)
        for (int y = 1; y <= std::min(st.heights[size_t(x)], c.n - 1); y++)
            if (!point_on(c, x, y)) st.below++;
    st.writhe = (st.k - 1) + (c.m - 1) + 2 * st.below;
    return st;
}

bool point_on(const CurveSpec& c, int x, int y) {
    if ((x == 0 && y == 0) || (x == c.m && y == c.n)) return true;
    int r = 0, u = 0;
    for (Step s : c.word) {
        if (s == Step::R) r++;
        else if (s == Step::U) u++;
        else if (r == x && u == y) return true;
    }
    return false;
}

bool point_above(const CurveSpec& c, int x, int y) {
    if (x == c.m) return y > c.n;
    int r = 0, u = 0, h = 0;
    for (Step s : c.word) {
        if (s == Step::R) {
            if (r == x) { h = u; break; }
            r++;
        } else if (s == Step::U) {
            u++;
        }
    }
    return y > h;
}

bool z_convex(const CurveSpec& c, bool weak) {
    CurveStats st = curve_stats(c);
    std::vector<EpsPoint> pts;
    std::vector<std::pair<int, int>> above; // lattice points strictly above C
    for (int x = 0; x <= c.m; x++)
        for (int y = st.heights[size_t(x)] + 1; y <= c.n; y++)
            if (!(x == c.m && y == c.n)) {
                // on-curve points sit at height h(x) so y > h(x) is strictly above
                above.emplace_back(x, y);
            }
    for (auto [x, y] : above)
        pts.push_back({EpsScalar(Rat(x)), EpsScalar(Rat(y))});
    std::vector<std::pair<int, int>> shifted = {{0, 0}, {c.m, c.n}};
    if (!weak)
        for (auto& p : st.on_points) shifted.push_back(p);
    for (auto [x, y] : shifted)
        pts.push_back({EpsScalar(Rat(x), Rat(-1)), EpsScalar(Rat(y), Rat(1))});

    // Andrew monotone chain with exact eps comparisons; counterclockwise hull
    std::sort(pts.begin(), pts.end(), [](const EpsPoint& a, const EpsPoint& b) {
        if (a.x < b.x) return true;
        if (b.x < a.x) return false;
        return a.y < b.y;
    });
    auto half = [&](const std::vector<EpsPoint>& src) {
        std::vector<EpsPoint> hull;
        for (const EpsPoint& p : src) {
            while (hull.size() >= 2 &&
                   eps_orient(hull[hull.size() - 2], hull.back(), p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        return hull;
    };
    std::vector<EpsPoint> lower = half(pts);
    std::vector<EpsPoint> rev(pts.rbegin(), pts.rend());
    std::vector<EpsPoint> upper = half(rev);
    std::vector<EpsPoint> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() < 2) return true;

    // a lattice point is inside-or-on the hull iff it is not strictly outside
    // any edge; boundary counts as inside
    auto inside = [&](int x, int y) {
        EpsPoint p{EpsScalar(Rat(x)), EpsScalar(Rat(y))};
        for (size_t i = 0; i < hull.size(); i++) {
            const EpsPoint& a = hull[i];
            const EpsPoint& b = hull[(i + 1) % hull.size()];
            if (eps_orient(a, b, p) < 0) return false;
        }
        return true;
    };
    for (int x = 0; x <= c.m; x++)
        for (int y = 0; y <= c.n; y++) {
            bool in_A = std::find(above.begin(), above.end(), std::make_pair(x, y)) != above.end();
            if (in_A) continue;
            if (inside(x, y)) return false;
        }
    return true;
}

std::pair<CurveSpec, CurveSpec> skein_triple_at_leftmost_star(const CurveSpec& c0) {
    size_t pos = 0;
    while (pos < c0.word.size() && c0.word[pos] != Step::STAR) pos++;
    if (pos == c0.word.size()) throw std::logic_error("skein triple: curve is primitive");
    // word = alpha U * R beta  ->  C_+ = alpha U R beta,  C_- = alpha R U beta
    CurveSpec cp = c0, cm = c0;
    cp.word.erase(cp.word.begin() + long(pos));
    cm.word.erase(cm.word.begin() + long(pos));
    std::swap(cm.word[pos - 1], cm.word[pos]); // U R -> R U
    return {cp, cm};
}

std::vector<std::pair<Poly, CurveSpec>> skein_expand(const CurveSpec& c) {
    std::vector<std::pair<Poly, CurveSpec>> out;
    std::vector<std::pair<Poly, CurveSpec>> stack{{Poly(1), c}};
    while (!stack.empty()) {
        auto [coef, cur] = stack.back();
        stack.pop_back();
        if (cur.primitive()) {
            out.emplace_back(coef, cur);
            continue;
        }
        auto [cp, cm] = skein_triple_at_leftmost_star(cur);
        stack.emplace_back(coef, cp);
        Poly mq = coef * Poly::qt(1, 1);
        stack.emplace_back(-mq, cm);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second.render() < b.second.render();
    });
    return out;
}

CurveSpec PiecewiseAL::curve() const {
    std::string w;
    for (size_t i = 0; i < segments.size(); i++) {
        if (i) w += '*';
        w += almost_linear_curve(segments[i].first, segments[i].second).render();
    }
    return parse_curve(w);
}

bool PiecewiseAL::slopes_weakly_decreasing() const {
    for (size_t i = 0; i + 1 < segments.size(); i++) {
        // m_i / n_i >= m_{i+1} / n_{i+1}
        long lhs = long(segments[i].first) * segments[i + 1].second;
        long rhs = long(segments[i + 1].first) * segments[i].second;
        if (lhs < rhs) return false;
    }
    return true;
}

// lattice points strictly below a piecewise almost linear curve: strictly
// below the polyline through its nodes, plus interior diagonal points of
// each segment (the curve passes just above its diagonals)
static bool pal_below(const PiecewiseAL& pal, int x, int y) {
    long cx = 0, cy = 0;
    for (auto [sm, sn] : pal.segments) {
        if (x >= cx && x <= cx + sm) {
            // compare y against the segment's diagonal at x
            long lhs = long(y - cy) * sm;
            long rhs = long(x - cx) * sn;
            bool node = (x == cx && y == cy) || (x == cx + sm && y == cy + sn);
            if (!node && lhs <= rhs) return true; // on or below the open diagonal
        }
        cx += sm;
        cy += sn;
    }
    return false;
}

std::vector<std::pair<Poly, PiecewiseAL>> convex_expand(const CurveSpec& c) {
    if (!c.primitive()) throw std::invalid_argument("convex_expand: curve must be primitive");
    if (!z_convex(c, false)) throw std::invalid_argument("convex_expand: curve must be Z-convex");
    CurveStats st = curve_stats(c);
    // enumerate compositions of (m, n) into positive pairs with weakly
    // decreasing slopes, keeping those weakly above c
    std::vector<std::pair<Poly, PiecewiseAL>> out;
    std::vector<std::pair<int, int>> cur;
    // points strictly below c (interior of the classification)
    std::vector<std::pair<int, int>> below_c;
    for (int x = 1; x <= c.m - 1; x++)
        for (int y = 1; y <= std::min(st.heights[size_t(x)], c.n - 1); y++)
            if (!point_on(c, x, y)) below_c.emplace_back(x, y);

    std::function<void(int, int)> rec = [&](int mr, int nr) {
        if (mr == 0 && nr == 0) {
            PiecewiseAL pal{cur};
            if (!pal.slopes_weakly_decreasing()) return;
            for (auto [x, y] : below_c)
                if (!pal_below(pal, x, y)) return; // not weakly above c
            // a(C, C') = points strictly above c and strictly below C'
            long a = 0;
            for (int x = 1; x <= c.m - 1; x++)
                for (int y = st.heights[size_t(x)] + 1; y <= c.n - 1; y++)
                    if (pal_below(pal, x, y)) a++;
            int k = int(pal.segments.size());
            // (-1)^{k-1} (qt)^{-(k-1+a)}
            Poly coef = Poly::qt(-(k - 1 + a), -(k - 1 + a), Rat((k - 1) % 2 ? -1 : 1));
            out.emplace_back(coef, pal);
            return;
        }
        for (int sm = 1; sm <= mr; sm++)
            for (int sn = 1; sn <= nr; sn++) {
                if ((mr - sm == 0) != (nr - sn == 0)) continue; // segments end together
                cur.emplace_back(sm, sn);
                rec(mr - sm, nr - sn);
                cur.pop_back();
            }
    };
    rec(c.m, c.n);
    return out;
}

std::string stats_json(const CurveSpec& c) {
    CurveStats st = curve_stats(c);
    std::ostringstream os;
    auto arr = [&](const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); i++) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    os << "{\"word\":\"" << c.render() << "\",\"m\":" << c.m << ",\"n\":" << c.n
       << ",\"k\":" << st.k << ",\"b\":" << arr(st.b) << ",\"eps\":" << arr(st.eps)
       << ",\"w\":" << st.writhe << ",\"zconvex\":" << (z_convex(c, false) ? "true" : "false")
       << ",\"weak_zconvex\":" << (z_convex(c, true) ? "true" : "false") << "}";
    return os.str();
}

} // namespace mono
