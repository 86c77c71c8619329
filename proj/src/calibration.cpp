#include "mono/calibration.hpp"
#include "mono/daha.hpp"
#include "mono/eha.hpp"
#include "mono/magic.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mono {

static std::string fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string Calibration::to_json() const {
    nlohmann::json j;
    j["version"] = 1;
    j["engine_b"] = {{"transpose", b_transpose}, {"omega", b_omega}, {"segment_sign", b_segment_sign}};
    j["engine_c"] = {{"transpose", c_transpose}, {"omega", c_omega}};
    j["id"] = id();
    return j.dump(2);
}

std::string Calibration::id() const {
    std::ostringstream os;
    os << "b:" << b_transpose << b_omega << b_segment_sign << ";c:" << c_transpose << c_omega;
    return fnv1a(os.str());
}

Calibration Calibration::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Calibration c;
    c.b_transpose = j.at("engine_b").at("transpose").get<bool>();
    c.b_omega = j.at("engine_b").at("omega").get<bool>();
    c.b_segment_sign = j.at("engine_b").at("segment_sign").get<bool>();
    c.c_transpose = j.at("engine_c").at("transpose").get<bool>();
    c.c_omega = j.at("engine_c").at("omega").get<bool>();
    c.locked = true;
    if (j.contains("id") && j["id"].get<std::string>() != c.id())
        throw calibration_error("calibration record id mismatch");
    return c;
}

void Calibration::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write calibration record to " + path);
    out << to_json() << "\n";
}

Calibration Calibration::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw calibration_error("missing calibration record " + path + "; run 'mono calibrate'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

Calibration calibrate(SymRing& ring) {
    ring.warm_up(3);
    std::vector<CurveSpec> curves;
    for (int m = 1; m <= 3; m++)
        for (int n = 1; n <= 3; n++)
            for (const CurveSpec& c : enumerate_curves(m, n)) curves.push_back(c);
    std::vector<SymF> reference;
    reference.reserve(curves.size());
    for (const CurveSpec& c : curves) reference.push_back(daha_F(ring, c));

    Calibration found;
    int b_matches = 0;
    for (bool tr : {false, true})
        for (bool om : {false, true})
            for (bool sg : {false, true}) {
                Calibration cand;
                cand.locked = true;
                cand.b_transpose = tr;
                cand.b_omega = om;
                cand.b_segment_sign = sg;
                EhaEngine eng(ring, cand);
                bool ok = true;
                for (size_t i = 0; i < curves.size() && ok; i++)
                    ok = ring.equal(eng.F(curves[i]), reference[i]);
                if (ok) {
                    b_matches++;
                    found.b_transpose = tr;
                    found.b_omega = om;
                    found.b_segment_sign = sg;
                }
            }
    if (b_matches != 1)
        throw calibration_error("operator-composition engine: " + std::to_string(b_matches) +
                                " conventions match the reference (expected exactly 1)");

    int c_matches = 0;
    for (bool tr : {false, true})
        for (bool om : {false, true}) {
            Calibration cand = found;
            cand.locked = true;
            cand.c_transpose = tr;
            cand.c_omega = om;
            bool ok = true;
            for (size_t i = 0; i < curves.size() && ok; i++)
                ok = ring.equal(magic_F(ring, cand, curves[i]), reference[i]);
            if (ok) {
                c_matches++;
                found.c_transpose = tr;
                found.c_omega = om;
            }
        }
    if (c_matches != 1)
        throw calibration_error("tableau engine: " + std::to_string(c_matches) +
                                " conventions match the reference (expected exactly 1)");
    found.locked = true;
    return found;
}

} // namespace mono
