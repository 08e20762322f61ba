#pragma once

// JSON forms of graphs, drawings and reports.

#include <string>
#include <string_view>

#include "td13/certificate.hpp"
#include "td13/embedder.hpp"
#include "td13/validator.hpp"

namespace td13 {

/// {"n": int, "outer_order": [int...], "edges": [[int, int]...]}.
/// Throws ParseError on malformed JSON or a wrong shape.
PlaneGraphInput graph_from_json(std::string_view text);
std::string graph_to_json(const PlaneGraphInput& g);

std::string drawing_to_json(const Drawing& d);
/// Throws ParseError.
Drawing drawing_from_json(std::string_view text);

std::string report_to_json(const ValidationReport& r);
std::string certificate_to_json(const CertificateReport& r);

}  // namespace td13
