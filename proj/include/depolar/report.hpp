#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "depolar/figures.hpp"
#include "depolar/optimize.hpp"
#include "depolar/verify.hpp"

namespace depolar {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 12 significant digits, '.' decimal separator, locale-independent.
std::string format_number(double value);

// CSV builders. One header line, LF endings, deterministic given the rows.
std::string scan_csv(const std::vector<ThetaScanPoint>& rows);
std::string fig1_csv(const std::vector<Fig1Row>& rows);
std::string fig2_csv(const std::vector<Fig2Row>& rows);

/// Sample CSV with deficit = i2_max(eta) - I2 per record. When a control
/// row is supplied (size 4 runs) it is appended with seed_index -1: four
/// orthogonal product states, whose deficit must be ~0.
std::string sample_csv(const std::vector<SampleRecord>& records, double i2_maximum,
                       const double* control_i2 = nullptr);

std::string capacity_report(double eta);
std::string verification_report(const std::vector<CheckResult>& results);

/// Writes text to a file, LF endings as-is; throws IoError on failure.
void write_text_file(const std::string& path, const std::string& text);

} // namespace depolar
