// The one-time convention calibration for the symmetric-function engines.
// The operator-composition route and the tableau route each admit a small
// finite set of sign / axis / involution conventions; the calibration run
// selects the unique candidate matching the DAHA engine on every curve with
// m, n <= 3 and persists the choice. Both engines refuse to run without it.
#pragma once

#include <stdexcept>
#include <string>

namespace mono {

class SymRing;

class calibration_error : public std::runtime_error {
public:
    explicit calibration_error(const std::string& m) : std::runtime_error(m) {}
};

struct Calibration {
    bool locked = false;
    // operator-composition engine
    bool b_transpose = false;    // read b from the axis-swapped curve
    bool b_omega = false;        // apply omega to the composed result
    bool b_segment_sign = false; // extra (-1)^{m+gcd(m,n)} per primitive piece
    // tableau engine
    bool c_transpose = false;
    bool c_omega = false;

    std::string id() const; // content hash, embedded in downstream outputs
    std::string to_json() const;
    static Calibration from_json(const std::string& text);
    void save(const std::string& path) const;
    static Calibration load(const std::string& path);

    void require() const {
        if (!locked) throw calibration_error("engine convention calibration is not locked; run 'mono calibrate'");
    }
};

// runs the calibration against the DAHA engine; throws calibration_error if
// zero or multiple candidates match
Calibration calibrate(SymRing& ring);

} // namespace mono
