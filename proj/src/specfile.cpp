#include "otkit/specfile.hpp"

#include <fstream>
#include <sstream>

namespace otkit {

ojson parse_json_text(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("spec parse error: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw input_error("cannot open spec file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

Poly parse_coeff_array(const ojson& j, const std::string& what) {
    if (!j.is_array()) throw input_error(what + " must be an array of coefficient strings");
    std::vector<std::string> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(c.get<std::string>());
        else if (c.is_number_integer())
            coeffs.push_back(std::to_string(c.get<long long>()));
        else
            throw input_error(what + ": coefficients must be strings or integers");
    }
    try {
        return Poly::from_coeff_strings(coeffs);
    } catch (const input_error& e) {
        throw input_error(what + ": " + e.what());
    }
}

std::vector<Poly> parse_poly_list(const ojson& j, const std::string& what) {
    if (!j.is_array()) throw input_error(what + " must be an array of coefficient arrays");
    std::vector<Poly> out;
    int k = 0;
    for (const auto& item : j) out.push_back(parse_coeff_array(item, what + "[" + std::to_string(k++) + "]"));
    return out;
}

}  // namespace

FieldSpec parse_field_spec(const ojson& j) {
    if (!j.is_object() || !j.contains("defining"))
        throw input_error("field spec needs a 'defining' coefficient array");
    FieldSpec fs;
    fs.defining = parse_coeff_array(j.at("defining"), "'defining'");
    fs.label = j.value("label", std::string{});
    fs.echo = ojson{{"defining", fs.defining.coeff_strings()}, {"label", fs.label}};
    return fs;
}

OTSpec parse_ot_spec(const ojson& j) {
    if (!j.is_object() || !j.contains("field")) throw input_error("OT spec needs a 'field' object");
    OTSpec spec{parse_field_spec(j.at("field")), std::nullopt, std::nullopt};
    if (j.contains("units")) spec.units = parse_poly_list(j.at("units"), "'units'");
    if (j.contains("policy")) {
        const auto& p = j.at("policy");
        if (!p.is_object() || !p.contains("working_bits") ||
            !p.at("working_bits").is_number_integer())
            throw input_error("'policy' must be an object with integer 'working_bits'");
        spec.working_bits = p.at("working_bits").get<long>();
    }
    return spec;
}

InoueSpec parse_inoue_spec(const ojson& j) {
    if (!j.is_object()) throw input_error("Inoue spec must be an object");
    InoueSpec spec;
    if (j.contains("matrix")) {
        const auto& m = j.at("matrix");
        if (!m.is_array() || m.size() != 9)
            throw input_error("'matrix' must hold 9 integers, row-major");
        std::vector<Int> vals;
        for (const auto& v : m) {
            if (v.is_number_integer())
                vals.emplace_back(static_cast<long>(v.get<long long>()));
            else if (v.is_string())
                vals.emplace_back(Int(v.get<std::string>()));
            else
                throw input_error("'matrix' entries must be integers");
        }
        spec.matrix = std::move(vals);
        return spec;
    }
    if (j.contains("field") && j.contains("unit")) {
        spec.field = parse_field_spec(j.at("field"));
        spec.unit = parse_coeff_array(j.at("unit"), "'unit'");
        return spec;
    }
    throw input_error("Inoue spec needs either 'matrix' or 'field' + 'unit'");
}

EmbedSpec parse_embed_spec(const ojson& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("eta"))
        throw input_error("embed spec needs 'field' and 'eta'");
    EmbedSpec spec{parse_field_spec(j.at("field")), parse_coeff_array(j.at("eta"), "'eta'"),
                   std::nullopt};
    if (j.contains("pool")) spec.pool = parse_poly_list(j.at("pool"), "'pool'");
    return spec;
}

ProbeSpec parse_probe_spec(const ojson& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("candidates"))
        throw input_error("probe spec needs 'field' and 'candidates'");
    return ProbeSpec{parse_field_spec(j.at("field")),
                     parse_poly_list(j.at("candidates"), "'candidates'")};
}

}  // namespace otkit
