#include "mono/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mono {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); i++) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    if (parts.empty()) return {};
    std::vector<int> c(size_t(parts[0]), 0);
    for (int p : parts)
        for (int i = 0; i < p; i++) c[size_t(i)]++;
    return Partition(std::move(c));
}

long Partition::n_stat() const {
    long s = 0;
    for (size_t i = 0; i < parts.size(); i++) s += long(i) * parts[i];
    return s;
}

std::vector<int> Partition::mults() const {
    std::vector<int> m(parts.empty() ? 1 : size_t(parts[0]) + 1, 0);
    for (int p : parts) m[size_t(p)]++;
    return m;
}

Rat Partition::z() const {
    Rat r(1);
    auto m = mults();
    for (size_t i = 1; i < m.size(); i++) {
        for (int k = 0; k < m[i]; k++) r *= Rat(long(i));
        for (int k = 2; k <= m[i]; k++) r *= k;
    }
    return r;
}

int Partition::eps() const { return (size() - length()) % 2 == 0 ? 1 : -1; }

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); i++) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

static void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; p--) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> p = a.parts;
    p.insert(p.end(), b.parts.begin(), b.parts.end());
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

std::pair<int, int> Tableau::box_of(int entry) const {
    for (size_t r = 0; r < rows.size(); r++)
        for (size_t c = 0; c < rows[r].size(); c++)
            if (rows[r][c] == entry) return {int(c), int(r)};
    throw std::logic_error("Tableau::box_of: entry not found");
}

static void gen_syt(const Partition& shape, int next, std::vector<int>& rowfill,
                    std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
    int m = shape.size();
    if (next > m) {
        out.push_back(Tableau{shape, rows});
        return;
    }
    for (size_t r = 0; r < shape.parts.size(); r++) {
        if (rowfill[r] >= shape.parts[r]) continue;
        if (r > 0 && rowfill[r] >= rowfill[r - 1]) continue; // column must grow upward
        rows[r].push_back(next);
        rowfill[r]++;
        gen_syt(shape, next + 1, rowfill, rows, out);
        rowfill[r]--;
        rows[r].pop_back();
    }
}

const std::vector<Tableau>& syt_of_shape(const Partition& shape) {
    static std::map<Partition, std::vector<Tableau>> cache;
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
    std::vector<Tableau> out;
    std::vector<int> rowfill(shape.parts.size(), 0);
    std::vector<std::vector<int>> rows(shape.parts.size());
    gen_syt(shape, 1, rowfill, rows, out);
    return cache.emplace(shape, std::move(out)).first->second;
}

std::vector<Tableau> syt_of_size(int m) {
    std::vector<Tableau> out;
    for (const Partition& sh : partitions_of(m)) {
        const auto& v = syt_of_shape(sh);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Int hook_length_count(const Partition& shape) {
    Int num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(shape.size()));
    Partition conj = shape.conjugate();
    Int den(1);
    for (size_t r = 0; r < shape.parts.size(); r++)
        for (int c = 0; c < shape.parts[r]; c++) {
            long arm = shape.parts[r] - c - 1;
            long leg = conj.parts[size_t(c)] - long(r) - 1;
            den *= Int(arm + leg + 1);
        }
    return num / den;
}

} // namespace mono
