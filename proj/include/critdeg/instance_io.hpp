#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "critdeg/report.hpp"

namespace critdeg {

inline constexpr const char* kToolVersion = "0.1.0";

// Raised on malformed or inconsistent instance files; the CLI maps it to exit
// code 2 with the message as the diagnostic.
struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk instance: vertex lists plus either explicit section coefficients or
// a generic-seed marker (never both).
struct InstanceFile {
    int n = 0;
    std::vector<std::vector<IntVec>> polytopes;  // n+1 vertex lists
    std::optional<std::vector<SparseSection>> sections;
    std::optional<std::uint64_t> generic_seed;
};

InstanceFile parse_instance_text(const std::string& text);
InstanceFile load_instance(const std::string& path);
std::string serialize_instance(const InstanceFile& instance);

PolytopeFamily family_from_instance(const InstanceFile& instance);

// Oracle configuration implied by the instance: explicit sections, a generic
// marker, or disabled when neither is present.
OracleOptions oracle_from_instance(const InstanceFile& instance,
                                   const PolytopeFamily& family);

// Deterministic serialization: sorted keys, two-space indent, trailing newline.
std::string report_json_string(const CodimReport& report);
nlohmann::json report_to_json(const CodimReport& report);
CodimReport report_from_json(const nlohmann::json& j);
std::string report_text(const CodimReport& report);

std::string e1_table_text(const CodimReport& report);

}  // namespace critdeg
