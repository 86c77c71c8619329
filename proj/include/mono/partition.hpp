// Integer partitions and standard Young tableaux (French convention).
#pragma once

#include "mono/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace mono {

struct Partition {
    std::vector<int> parts; // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;   // |lambda|
    int length() const { return int(parts.size()); }
    Partition conjugate() const;
    long n_stat() const;          // n(lambda) = sum (i-1) lambda_i
    std::vector<int> mults() const; // m_i, index 1..max part
    Rat z() const;                // z_lambda
    int eps() const;              // (-1)^{|lambda|-l(lambda)}

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) {
        return x.parts <=> y.parts;
    }
};

// all partitions of n, in the order used throughout (lex descending)
const std::vector<Partition>& partitions_of(int n);
// union of two partitions as multisets
Partition union_parts(const Partition& a, const Partition& b);

// Standard Young tableau of a given shape; entries[r][c] with box (r+1, c+1)
// in French coordinates (row 1 at the bottom).
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    // q,t content q^{c-1} t^{r-1} of the box holding entry i, as (c-1, r-1)
    std::pair<int, int> box_of(int entry) const;
};

const std::vector<Tableau>& syt_of_shape(const Partition& shape);
std::vector<Tableau> syt_of_size(int m); // all shapes, all tableaux
Int hook_length_count(const Partition& shape);

} // namespace mono
