#include "mono/braid.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace mono {

BraidWord BraidWord::conjugated(int gen, int sign) const {
    BraidWord r;
    r.strands = strands;
    r.letters.push_back({gen, sign});
    r.letters.insert(r.letters.end(), letters.begin(), letters.end());
    r.letters.push_back({gen, -sign});
    return r;
}

BraidWord BraidWord::stabilized(int sign) const {
    BraidWord r;
    r.strands = strands + 1;
    r.letters = letters;
    r.letters.push_back({strands, sign});
    return r;
}

std::vector<int> BraidWord::closure_permutation() const {
    std::vector<int> p(static_cast<size_t>(strands));
    std::iota(p.begin(), p.end(), 0);
    for (auto [i, s] : letters) std::swap(p[size_t(i - 1)], p[size_t(i)]);
    return p;
}

int BraidWord::components() const {
    std::vector<int> p = closure_permutation();
    std::vector<bool> seen(p.size(), false);
    int c = 0;
    for (size_t i = 0; i < p.size(); i++) {
        if (seen[i]) continue;
        c++;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = size_t(p[j]);
        }
    }
    return c;
}

std::string BraidWord::str() const {
    std::ostringstream os;
    if (letters.empty()) return "e";
    for (size_t k = 0; k < letters.size(); k++) {
        if (k) os << ".";
        os << "s" << letters[k].first;
        if (letters[k].second < 0) os << "'";
    }
    return os.str();
}

BraidWord coxeter_braid(const std::vector<int>& b, const std::vector<int>& eps) {
    BraidWord w;
    w.strands = int(b.size());
    for (int i = 1; i <= int(b.size()); i++) {
        // l_i^{b_i}
        for (int rep = 0; rep < b[size_t(i - 1)]; rep++) {
            for (int j = i - 1; j >= 1; j--) w.letters.push_back({j, 1});
            for (int j = 1; j <= i - 1; j++) w.letters.push_back({j, 1});
        }
    }
    for (size_t i = 0; i < eps.size(); i++)
        if (eps[i] == 1) w.letters.push_back({int(i) + 1, 1});
    return w;
}

BraidWord coxeter_braid(const CurveSpec& c) {
    CurveStats st = curve_stats(c);
    return coxeter_braid(st.b, st.eps);
}

} // namespace mono
