// Monotone lattice curves encoded as words over {R, U, *}: the word is the
// highest lattice path weakly below the curve, with * marking the interior
// lattice points the curve passes through. Two curves with the same
// classification of lattice points (above / on / below) are the same object.
#pragma once

#include "mono/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& m, size_t pos = std::string::npos)
        : std::runtime_error(m), position(pos) {}
    size_t position;
};

enum class Step : uint8_t { R, U, STAR };

struct CurveSpec {
    int m = 0, n = 0;
    std::vector<Step> word;

    std::string render() const;
    bool primitive() const;
    int star_count() const;

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
    friend auto operator<=>(const CurveSpec&, const CurveSpec&) = default;
};

CurveSpec parse_curve(const std::string& word);               // m, n inferred
CurveSpec parse_curve(const std::string& word, int m, int n); // counts checked

// all valid words for (m, n), lexicographic in the rendered string
std::vector<CurveSpec> enumerate_curves(int m, int n);

// the word of the (m,n)-almost linear curve (just above the diagonal)
CurveSpec almost_linear_curve(int m, int n);
// reflection across the main diagonal: reverse the word and swap R <-> U
CurveSpec transpose_curve(const CurveSpec& c);

struct CurveStats {
    int m = 0, n = 0;
    int k = 0;                        // number of lattice segments
    std::vector<CurveSpec> segments;  // primitive pieces
    std::vector<int> heights;         // h(x), x = 0..m: path height per column
    std::vector<int> lambda;          // lambda_0..lambda_m
    std::vector<int> b;               // b_1..b_m
    std::vector<int> S;               // columns i in {1..m-1} with on-curve points
    std::vector<int> eps;             // eps_1..eps_{m-1}
    std::vector<std::pair<int, int>> on_points; // interior on-curve points (x, y)
    long area = 0;                    // area under the path P_C
    long below = 0;                   // b(C): interior points strictly below
    long writhe = 0;                  // w(C) = (k-1) + (m-1) + 2 b(C)
};

CurveStats curve_stats(const CurveSpec& c);

// true if the given lattice point is strictly above the curve
bool point_above(const CurveSpec& c, int x, int y);
bool point_on(const CurveSpec& c, int x, int y);

// Z-convexity per the eps-shifted hull construction; weak mode only shifts
// the two endpoints
bool z_convex(const CurveSpec& c, bool weak);

// resolves every * into the signed combination of primitive curves, peeling
// the leftmost star first; coefficients are +-(qt)^j
std::vector<std::pair<Poly, CurveSpec>> skein_expand(const CurveSpec& c);

// the local skein triple at the leftmost star of c0 (which must have one):
// returns {C_+, C_-}, with F(c0) = F(C_+) - qt F(C_-)
std::pair<CurveSpec, CurveSpec> skein_triple_at_leftmost_star(const CurveSpec& c0);

// a piecewise almost linear curve, as its list of segment endpoints
struct PiecewiseAL {
    std::vector<std::pair<int, int>> segments; // (m_i, n_i)
    CurveSpec curve() const;                   // word with stars at the nodes
    bool slopes_weakly_decreasing() const;     // the (1.14)-style criterion
};

// all Z-convex piecewise almost linear curves weakly above a primitive
// Z-convex curve, with coefficients (-1)^{k-1}/(qt)^{k-1+a}; the Poly paired
// with each term is the numerator sign times (qt)^{-(k-1+a)} as a monomial
std::vector<std::pair<Poly, PiecewiseAL>> convex_expand(const CurveSpec& c);

std::string stats_json(const CurveSpec& c);

} // namespace mono
