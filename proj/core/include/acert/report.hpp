#ifndef ACERT_REPORT_HPP
#define ACERT_REPORT_HPP

#include <string>
#include <vector>

#include "acert/verifier.hpp"

namespace acert {

// Stable-field-order JSON: {version, engine_options, certificates: [...]}.
// Rationals are rendered as exact strings. Byte-identical across runs with
// identical options (timings are zero unless explicitly enabled).
std::string report_json(const std::vector<Certificate>& certs, const EngineOptions& opt);

// One section per certificate, with the solved constants and verdict.
std::string report_markdown(const std::vector<Certificate>& certs,
                            const EngineOptions& opt);

}  // namespace acert

#endif
