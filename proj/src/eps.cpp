#include "mono/eps.hpp"

namespace mono {

int eps_orient(const EpsPoint& p1, const EpsPoint& p2, const EpsPoint& p3) {
    if (p1.x.degree() > 1 || p1.y.degree() > 1 || p2.x.degree() > 1 || p2.y.degree() > 1 ||
        p3.x.degree() > 1 || p3.y.degree() > 1)
        throw std::logic_error("eps_orient: coordinates must have eps-degree <= 1");
    EpsScalar ax = p2.x - p1.x, ay = p2.y - p1.y;
    EpsScalar bx = p3.x - p1.x, by = p3.y - p1.y;
    return (ax * by - ay * bx).sign();
}

} // namespace mono
