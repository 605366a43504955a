#pragma once

#include <string>

#include "terza/spectra.hpp"

namespace terza {

// JSON rendering of a classification report. Keys appear in a fixed order
// and numbers use shortest round-trip formatting, so equal reports give
// byte-identical text.
std::string report_json(const ClassifyReport& rep, int indent = 2);

// Multi-line human readable summary.
std::string report_text(const ClassifyReport& rep);

}  // namespace terza
