#include "depolar/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace depolar {

std::string format_number(double value) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string scan_csv(const std::vector<ThetaScanPoint>& rows) {
    std::string out = "theta,I2\n";
    for (const ThetaScanPoint& r : rows)
        out += format_number(r.theta) + "," + format_number(r.i2) + "\n";
    return out;
}

std::string fig1_csv(const std::vector<Fig1Row>& rows) {
    std::string out = "theta,beta,I2\n";
    for (const Fig1Row& r : rows)
        out += format_number(r.theta) + "," + format_number(r.beta) + "," +
               format_number(r.i2) + "\n";
    return out;
}

std::string fig2_csv(const std::vector<Fig2Row>& rows) {
    std::string out = "eta,I2_product,I2_bell\n";
    for (const Fig2Row& r : rows)
        out += format_number(r.eta) + "," + format_number(r.i2_product) + "," +
               format_number(r.i2_bell) + "\n";
    return out;
}

std::string sample_csv(const std::vector<SampleRecord>& records, double i2_maximum,
                       const double* control_i2) {
    std::string out = "seed_index,I2,max_entanglement,deficit\n";
    for (const SampleRecord& r : records)
        out += std::to_string(r.index) + "," + format_number(r.mutual_information) + "," +
               format_number(r.max_entanglement) + "," +
               format_number(i2_maximum - r.mutual_information) + "\n";
    if (control_i2 != nullptr)
        out += "-1," + format_number(*control_i2) + ",0," +
               format_number(i2_maximum - *control_i2) + "\n";
    return out;
}

std::string capacity_report(double eta) {
    const double pe = 3.0 * (1.0 - eta) / 4.0;
    const double maximum = i2_max(eta);
    const double pipeline =
        mutual_information(depolarising(eta), figure1_ensemble(0.0, 0.0))
            .mutual_information;
    std::string out;
    out += "eta          = " + format_number(eta) + "\n";
    out += "p_e          = " + format_number(pe) + "\n";
    out += "I2_max       = " + format_number(maximum) + " bits\n";
    out += "C1           = " + format_number(one_shot_capacity(eta)) + " bits\n";
    out += "I2_pipeline  = " + format_number(pipeline) + " bits\n";
    out += "|difference| = " + format_number(std::abs(pipeline - maximum)) + "\n";
    return out;
}

std::string verification_report(const std::vector<CheckResult>& results) {
    std::string out;
    for (const CheckResult& r : results) {
        out += r.passed ? "PASS " : "FAIL ";
        out += r.name + " (worst " + format_number(r.worst) + ", tolerance " +
               format_number(r.tolerance) + ")\n";
    }
    out += all_passed(results) ? "verification: all checks passed\n"
                               : "verification: FAILURES detected\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream)
        throw IoError("cannot open for writing: " + path);
    stream << text;
    stream.flush();
    if (!stream)
        throw IoError("write failed: " + path);
}

} // namespace depolar
