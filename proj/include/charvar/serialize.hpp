#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "charvar/flow.hpp"
#include "charvar/mixing.hpp"
#include "charvar/nilpotent.hpp"
#include "charvar/skew_form.hpp"
#include "charvar/spectral.hpp"
#include "charvar/torus.hpp"

namespace charvar {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const SpectralClass& c);
nlohmann::json to_json(const MixingSeries& s);
nlohmann::json to_json(const EscapeReport& r, bool include_entries = false);
nlohmann::json to_json(const SkewFormFp& z);
nlohmann::json to_json(const InducedActionReport& r);
nlohmann::json to_json(const IntMatrix& m);

std::string escape_report_csv(const EscapeReport& r);

/// The JSON result envelope every CLI command emits. Re-running an identical
/// config byte-reproduces everything but the timestamp (keys are sorted,
/// doubles round-trip).
struct ResultEnvelope {
  std::string command;
  nlohmann::json parameters;
  std::optional<std::uint64_t> seed;
  std::string tool_version = kToolVersion;
  nlohmann::json results;
  std::string timestamp;

  nlohmann::json to_json() const;
};

ResultEnvelope make_envelope(const std::string& command, nlohmann::json parameters,
                             std::optional<std::uint64_t> seed, nlohmann::json results);

/// Checks the envelope against the per-command results schema; throws
/// ValidationError on mismatch.
void validate_envelope(const nlohmann::json& envelope);

}  // namespace charvar
