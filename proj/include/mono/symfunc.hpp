// The ring of symmetric functions over exact rational functions of q^{1/2},
// t^{1/2}: classical bases, Macdonald polynomials P / modified H~, plethysm,
// the omega involution, Hall and (q,t)-deformed inner products, nabla, and
// truncated plethystic exponentials.
//
// All multiplication and plethysm run through the power basis (diagonal
// inner products, concatenation products); Schur output goes through cached
// Murnaghan-Nakayama character tables. Caches are write-once: call warm_up()
// before reading from concurrent workers.
#pragma once

#include "mono/partition.hpp"
#include "mono/poly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace mono {

enum class Basis { monomial, elementary, homogeneous, power, schur, macdonaldP, modifiedMacdonald };

const char* basis_name(Basis b);
std::optional<Basis> basis_from_name(const std::string& s);

struct SymF {
    Basis basis = Basis::power;
    std::map<Partition, Ratio> terms; // graded by |lambda|; empty partition = constant

    bool is_zero() const;
    int max_degree() const;
    void add(const Partition& p, const Ratio& c);
    SymF& operator+=(const SymF& o); // same basis
    SymF& operator-=(const SymF& o);
    SymF operator*(const Ratio& c) const;
    SymF graded_part(int d) const;
};

class degree_error : public std::runtime_error {
public:
    explicit degree_error(const std::string& m) : std::runtime_error(m) {}
};

// One term of a formal alphabet: coeff * a^.. q^../2 t^../2 z^z * X? / prod(1 - t^g).
// Numeric coefficients pass through plethysm linearly; variables are raised
// to the k-th power by p_k.
struct AlphabetTerm {
    Rat coeff = Rat(1);
    Mono mono;
    int zexp = 0;
    bool hasX = false;
    std::vector<int> geom;
};

struct Alphabet {
    std::vector<AlphabetTerm> terms;

    static Alphabet X();                       // the standard alphabet
    static Alphabet X_over_one_minus_t();      // X/(1-t)
    static Alphabet X_times(Mono scale);       // e.g. X(1-t^{-1}) built from terms
    static Alphabet a_minus_ainv();            // a - a^{-1}
    static Alphabet a_minus_ainv_over(int geom_t); // (a-a^{-1})/(1-t^{geom_t})
    Alphabet operator+(const Alphabet& o) const;
    Alphabet operator-() const;
    Alphabet scaled_z(int dz) const;           // multiply every term by z^dz
};

class SymRing {
public:
    explicit SymRing(int degree_bound = 12);

    int degree_bound() const { return bound_; }
    void warm_up(int degree);                     // build caches serially
    void require_degree(int d) const;

    // basis conversion (exact, cached matrices)
    SymF convert(const SymF& f, Basis target) const;
    SymF to_power(const SymF& f) const;

    SymF zero() const { return SymF{Basis::power, {}}; }
    SymF one() const;
    SymF p(const Partition& la) const; // p_lambda
    SymF e(int n) const;
    SymF h(int n) const;
    SymF s(const Partition& la) const; // in power coords
    SymF multiply(const SymF& f, const SymF& g) const;
    SymF omega(const SymF& f) const;
    SymF scale(const SymF& f, const Ratio& c) const;

    Ratio hall(const SymF& f, const SymF& g) const;
    Ratio hall_qt(const SymF& f, const SymF& g) const;

    // p_k -> scale(k) * p_k  (alphabets of the form X*A with A scalar)
    SymF plethysm_pk_scale(const SymF& f, const std::function<Ratio(int)>& sc) const;
    // p_k -> value(k)        (alphabets without X; scalar result)
    Ratio plethysm_scalar(const SymF& f, const std::function<Ratio(int)>& val) const;
    // general alphabet (no z); returns a power-basis SymF, constant term allowed
    SymF plethysm(const SymF& f, const Alphabet& A) const;

    // coefficient-wise substitutions (require polynomial coefficients)
    SymF swap_qt(const SymF& f) const;
    SymF subst(const SymF& f, Poly (Poly::*fn)() const) const;

    SymF macdonaldP(const Partition& la) const;
    SymF macdonaldJ(const Partition& la) const;
    SymF modifiedMacdonald(const Partition& la) const;
    Poly nabla_eigenvalue(const Partition& la, int power) const; // T_lambda^power
    SymF nabla(const SymF& f, int power) const;

    // Omega[A] = exp(sum p_k[A]/k) truncated at z-order; A must have every
    // term of positive z-degree (or be empty)
    std::vector<SymF> omega_exp(const Alphabet& A, int order) const;

    bool equal(const SymF& f, const SymF& g) const;
    std::string schur_str(const SymF& f) const; // paper-style rendering

    Rat character(const Partition& la, const Partition& mu) const;

private:
    int bound_;

    struct DegreeCache {
        std::vector<Partition> parts;                 // partitions_of(d)
        std::map<Partition, int> index;
        std::vector<std::vector<Rat>> chi;            // chi[la_idx][mu_idx]
        std::vector<std::vector<Rat>> m_in_p;         // m_in_p[mu][la]
        std::vector<std::vector<Rat>> h_in_p, e_in_p; // same layout
        bool classical_done = false;
        std::vector<std::vector<Ratio>> P_in_p;       // Macdonald P
        std::vector<Ratio> P_norm;                    // <P,P>_{q,t}
        std::vector<std::vector<Ratio>> H_in_p;       // modified Macdonald
        bool macdonald_done = false;
        std::vector<std::vector<Ratio>> H_inv;        // p-coords -> H~ coords
        bool hinv_done = false;
    };
    mutable std::vector<DegreeCache> cache_;

    DegreeCache& grade(int d) const;
    void build_classical(DegreeCache& g, int d) const;
    void build_macdonald(DegreeCache& g, int d) const;
    void build_hinv(DegreeCache& g, int d) const;
    std::vector<Ratio> power_coords(const SymF& f, int d) const;
    SymF from_power_coords(const std::vector<Ratio>& v, int d, Basis tag) const;
};

} // namespace mono
