#pragma once

#include "otkit/kernel_form.hpp"
#include "otkit/specfile.hpp"
#include "otkit/subfield_embedder.hpp"

namespace otkit {

struct RunOptions {
    long bits = 128;
    std::uint64_t seed = 0;
    int trials = 1000;
    long bound = 5;  // unit-search coefficient box

    PrecisionPolicy policy() const { return PrecisionPolicy::with_bits(bits); }
};

Certificate run_signature(const FieldSpec& spec, const RunOptions& opt);
Certificate run_units(const FieldSpec& spec, const RunOptions& opt);
Certificate run_admissible(const OTSpec& spec, const RunOptions& opt);
Certificate run_build_ot(const OTSpec& spec, const RunOptions& opt);
Certificate run_check_form(const OTSpec& spec, const RunOptions& opt);
Certificate run_inoue(const InoueSpec& spec, const RunOptions& opt);
Certificate run_embed(const EmbedSpec& spec, const RunOptions& opt);
Certificate run_probe(const ProbeSpec& spec, const RunOptions& opt);

/// Dispatch by command name on raw spec text. Unknown commands and malformed
/// specs raise input_error.
Certificate run_command(const std::string& command, const std::string& spec_text,
                        const RunOptions& opt);

const std::vector<std::string>& command_names();

}  // namespace otkit
