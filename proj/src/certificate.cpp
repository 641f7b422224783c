#include "otkit/certificate.hpp"

namespace otkit {

void Certificate::add(std::string name, bool pass, ojson evidence) {
    add_verdict(std::move(name), pass ? "pass" : "fail", std::move(evidence));
}

void Certificate::add_verdict(std::string name, std::string verdict, ojson evidence) {
    verdicts.push_back({std::move(name), std::move(verdict), std::move(evidence)});
}

void Certificate::finalize() {
    overall = "pass";
    for (const auto& v : verdicts) {
        if (v.verdict == "fail") {
            overall = "fail";
            return;
        }
        if (v.verdict == "inconclusive") overall = "inconclusive";
    }
}

int Certificate::exit_code() const {
    if (overall == "pass") return 0;
    if (overall == "fail") return 1;
    return 2;
}

std::string Certificate::to_text() const {
    ojson j;
    j["tool"] = "otkit";
    j["version"] = version;
    j["command"] = command;
    j["seed"] = seed;
    j["policy"] = ojson{{"working_bits", bits}, {"tolerance", "2^-" + std::to_string(tolerance_exp)}};
    j["inputs"] = inputs;
    if (!caveats.empty()) j["caveats"] = caveats;
    ojson vs = ojson::array();
    for (const auto& v : verdicts)
        vs.push_back(ojson{{"name", v.name}, {"verdict", v.verdict}, {"evidence", v.evidence}});
    j["verdicts"] = vs;
    j["overall"] = overall;
    return j.dump(2) + "\n";
}

std::string evidence_interval(const Interval& iv, int digits) { return iv.decimal(digits); }

std::string evidence_value(const BigFloat& v, int digits) { return v.str(digits); }

ojson evidence_cinterval(const CInterval& z, int digits) {
    return ojson{{"re", z.re.decimal(digits)}, {"im", z.im.decimal(digits)}};
}

}  // namespace otkit
