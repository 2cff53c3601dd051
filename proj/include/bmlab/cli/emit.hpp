#pragma once

#include <string>
#include <vector>

#include "bmlab/cli/certificate.hpp"

namespace bmlab::cli {

enum class Format { Json, Csv, Markdown };

/// "json", "csv", "markdown" (or "md"); throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

/// JSON document: {"schema", "count", "passed", "certificates": [...]}, two-space indent.
std::string render_json(const std::vector<Certificate>& certs);
/// One header row, then one row per certificate; fields quoted when they hold , " or newline.
std::string render_csv(const std::vector<Certificate>& certs);
/// Table of identity_id, residual, tolerance, status, plus a pass count line.
std::string render_markdown(const std::vector<Certificate>& certs);
std::string render(const std::vector<Certificate>& certs, Format f);

/// Inverse of render_json.
std::vector<Certificate> parse_json_report(const std::string& text);

/// Writes render(certs, f) to path, or to stdout when path is empty or "-". Throws std::runtime_error
/// on I/O failure.
void emit(const std::vector<Certificate>& certs, Format f, const std::string& path);

}  // namespace bmlab::cli
