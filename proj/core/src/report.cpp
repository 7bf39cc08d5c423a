#include "hsurf/report.hpp"

#include <algorithm>

namespace hsurf {

std::string report_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out += (c == '\n' || c == '\r') ? ' ' : c;
    return out;
}

void Report::add_record(const std::string& key, const std::string& value) {
    lines_.push_back({key, report_escape(value)});
}

void Report::add_check(const CertCheck& c) {
    cert_status_.push_back(c.ok);
    lines_.push_back({"cert", std::string(c.ok ? "ok " : "FAIL ") + report_escape(c.name)});
    if (!c.note.empty()) lines_.push_back({"cert.note", report_escape(c.note)});
    if (c.quotient) lines_.push_back({"cert.quotient", report_escape(c.quotient->to_string())});
    if (c.residual) lines_.push_back({"cert.residual", report_escape(c.residual->to_string())});
}

void Report::add_report(const VerifyReport& vr) {
    for (const auto& c : vr.checks) add_check(c);
    if (!vr.certified && !vr.failure.empty()) lines_.push_back({"failure", report_escape(vr.failure)});
}

bool Report::ok() const {
    return std::all_of(cert_status_.begin(), cert_status_.end(), [](bool b) { return b; });
}

void Report::write(std::ostream& os) const {
    os << "#hsurf-report v1 " << title_ << "\n";
    os << "status " << (ok() ? "ok" : "fail") << "\n";
    for (const auto& l : lines_) os << l.key << " " << l.value << "\n";
}

} // namespace hsurf
