#ifndef HSURF_REPORT_HPP
#define HSURF_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "hsurf/ratmap.hpp"

namespace hsurf {

// Line-delimited structured report with a versioned header: one record per
// line, `key value...`, certificate lines carrying their quotients so a
// consumer can re-verify every divisibility independently.
class Report {
public:
    explicit Report(std::string title) : title_(std::move(title)) {}

    void add_record(const std::string& key, const std::string& value);
    void add_check(const CertCheck& c);
    void add_report(const VerifyReport& vr);

    // all certificate lines true (vacuously true with no certificates)
    bool ok() const;
    void write(std::ostream& os) const;

private:
    struct Line {
        std::string key;
        std::string value;
    };
    std::string title_;
    std::vector<Line> lines_;
    std::vector<bool> cert_status_;
};

// Flattens polynomials into single-line text safe for the record format.
std::string report_escape(const std::string& s);

} // namespace hsurf

#endif
