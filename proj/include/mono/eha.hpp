// Engine B: the fast symmetric-function route. Curve operators are realized
// as compositions of the D_k operators defined by
//   sum_k (-z)^{-k} D_k = Omega[-z^{-1} X]^bullet Omega[z M X]^perp,
// M = (1-t)(1-q), acting on 1, with the geometric crossing factors expanded
// as shift sums that terminate by degree reasons. Also: symbolic expansions
// of curve elements over the u_{(m,n)} generators, and operator-level
// verification of the generator relations with actions realized by Engine A.
#pragma once

#include "mono/calibration.hpp"
#include "mono/curve.hpp"
#include "mono/symfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace mono {

// D_k F; degree(result) = degree(F) + k
SymF apply_Dk(const SymRing& ring, int k, const SymF& F);

// D_{b,eps} . 1: composition x_1^{b_1}..x_m^{b_m} / prod (1-qt x_{i-1}/x_i)^{eps_{i-1}}
// acting through D operators on 1
SymF D_beps_one(const SymRing& ring, const std::vector<int>& b, const std::vector<int>& eps);

class EhaEngine {
public:
    EhaEngine(SymRing& ring, Calibration calib) : ring_(ring), calib_(std::move(calib)) {
        calib_.require();
    }

    // F_C: primitive curves via the calibrated composition, starred curves
    // via skein expansion into primitives; results memoized per word
    SymF F(const CurveSpec& c) const;
    // fills the memo for every primitive piece of the given curves; call
    // before reading F() from parallel workers
    void warm(const std::vector<CurveSpec>& curves, int jobs);

    const Calibration& calibration() const { return calib_; }
    SymRing& ring() const { return ring_; }

    SymF F_primitive(const CurveSpec& c) const; // uncached single evaluation

private:
    SymRing& ring_;
    Calibration calib_;
    mutable std::map<std::string, SymF> memo_;
};

// formal sums over the EHA generators u_x (bookkeeping only; no rewriting)
struct EhaTerm {
    Ratio coeff;
    std::vector<std::pair<std::pair<int, int>, int>> factors; // (vector, power)
};
struct EhaExpr {
    std::vector<EhaTerm> terms;

    EhaExpr& operator+=(const EhaExpr& o);
    EhaExpr operator*(const EhaExpr& o) const; // concatenates factor lists
    EhaExpr operator*(const Ratio& c) const;
    // merge equal factor lists; sorts factors within a term (valid for the
    // collinear products produced here)
    EhaExpr normalized() const;
    bool equals(const EhaExpr& o) const;
    std::string str() const;
    std::string json() const;
};

// D_{m,n} = sum_{la |- d} c^d_la prod_j (q^{la_j} - 1) u_{la_j (m,n)/d},
// c^d_la = (-t)^d eps_la z_la^{-1} prod (1 - t^{-la_i})
EhaExpr almost_linear_expansion(int m, int n);

// u_x as an operator on symmetric functions, realized through Engine A
// (x must have positive first coordinate, or be (1,0))
SymF apply_u(SymRing& ring, std::pair<int, int> x, const SymF& f);

struct RelationReport {
    std::string name;
    bool pass;
    std::string detail;
};

// checks [u_y,u_x] = eps u_{x+y} on sample pairs, the u_{2,2} relation, and
// collinear commutativity, as operator identities on Lambda_{<= D}
std::vector<RelationReport> verify_relations(SymRing& ring, int D);

} // namespace mono
