#ifndef TRISECT_REPORT_HPP
#define TRISECT_REPORT_HPP

#include <string>
#include <vector>

#include "trisect/trisection.hpp"

namespace trisect {

/// Machine reports are JSON; the human rendering is an indented key/value
/// view of the same tree, so verdict fields agree by construction.
enum class ReportFormat { Human, Machine };

std::string render_verification_report(const GroupTrisection& t, const VerificationReport& r,
                                        ReportFormat format);
std::string render_fingerprint_report(const GroupTrisection& t, const Fingerprint& fp,
                                      ReportFormat format);
std::string render_kernel_search_report(const GroupTrisection& t, int max_length,
                                        const std::vector<Word>& words, ReportFormat format);
std::string render_pushout_report(const GroupTrisection& t, int i, int j, const PushoutResult& p,
                                  ReportFormat format);
std::string render_euler_report(const GroupTrisection& t, ReportFormat format);

}  // namespace trisect

#endif  // TRISECT_REPORT_HPP
