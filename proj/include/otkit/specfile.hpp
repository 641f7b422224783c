#pragma once

#include "otkit/certificate.hpp"
#include "otkit/inoue.hpp"

#include <optional>
#include <string>
#include <vector>

namespace otkit {

/// { "defining": ["-1","-1","0","1"], "label": "plastic" }
/// Coefficients ascending, decimal integer or rational strings.
struct FieldSpec {
    Poly defining;
    std::string label;
    ojson echo;  // parsed content echoed into certificates
};

/// { "field": {...}, "units": [ ["0","1","0"], ... ],
///   "policy": {"working_bits": 128} }  (units and policy optional)
struct OTSpec {
    FieldSpec field;
    std::optional<std::vector<Poly>> units;
    std::optional<long> working_bits;
};

/// { "matrix": [9 integers, row-major] }  or  { "field": {...}, "unit": [...] }
struct InoueSpec {
    std::optional<std::vector<Int>> matrix;
    std::optional<FieldSpec> field;
    std::optional<Poly> unit;
};

/// { "field": {...K...}, "eta": [residue coeffs], "pool": [ [...], ... ] }
struct EmbedSpec {
    FieldSpec field;
    Poly eta;
    std::optional<std::vector<Poly>> pool;
};

/// { "field": {...}, "candidates": [ [...], ... ] }
struct ProbeSpec {
    FieldSpec field;
    std::vector<Poly> candidates;
};

ojson parse_json_text(const std::string& text);  // throws input_error with location
FieldSpec parse_field_spec(const ojson& j);
OTSpec parse_ot_spec(const ojson& j);
InoueSpec parse_inoue_spec(const ojson& j);
EmbedSpec parse_embed_spec(const ojson& j);
ProbeSpec parse_probe_spec(const ojson& j);

std::string read_text_file(const std::string& path);

}  // namespace otkit
