#pragma once

#include <string>
#include <vector>

#include "flatk/engine.hpp"
#include "flatk/errors.hpp"
#include "flatk/json_io.hpp"
#include "flatk/quotient.hpp"

namespace flatk {

// Carries every constraint a spec file violates, so callers can report all of
// them at once instead of stopping at the first.
class SpecValidationError : public SpecError {
public:
    explicit SpecValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v);
    std::vector<std::string> violations_;
};

// Parses "A1", "C2", ... and returns the cached datum.
const RootDatum& datum_from_label(const std::string& label);

IndexJob index_job_from_json(const ordered_json& spec);
PairingRequest pairing_request_from_json(const ordered_json& spec);

// Output options shared by the commands; spec fields are overridable by CLI
// flags.
struct OutputOptions {
    bool breakdown = false;
    std::string mode = "multiplicity"; // or "derivative"
    long period = 0;                   // 0 = derive from the marked weights
    int max_degree = 6;
};

OutputOptions output_options_from_json(const ordered_json& spec);

}  // namespace flatk
