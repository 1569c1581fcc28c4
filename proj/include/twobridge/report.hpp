#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "twobridge/certifier.hpp"

namespace twobridge {

/// Serialized form of a certification run. Polynomials are coefficient lists,
/// constant term first; rationals are "num/den" strings; the Alexander
/// polynomial is an integer array.
struct ReportDocument {
    struct Input {
        std::string kind;   // "cf", "pq" or "family-j"
        std::string value;  // as given on the command line
        std::int64_t p = 0;
        std::int64_t q = 0;
        bool operator==(const Input&) const = default;
    };
    struct PresentationStrings {
        std::string w, v, relator, longitude, meridian;
        bool operator==(const PresentationStrings&) const = default;
    };
    struct CertificateSummary {
        std::string fraction;
        std::string verdict;
        int qualifying_roots = 0;
        bool any_qualifying_rigid = false;
        bool all_qualifying_rigid = false;
        bool meridian_trace_ok = false;
        bool one_is_root = false;
        std::vector<std::string> assumptions;
        bool operator==(const CertificateSummary&) const = default;
    };

    std::string schema_version = "1";
    Input input;
    PresentationStrings presentation;
    std::vector<Integer> alexander;
    std::vector<SquarefreeFactor> factors;
    std::vector<RootBranchReport> branches;
    CertificateSummary certificate;
    std::map<std::string, double> timings;

    bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(const ReportDocument::Input& input, const Certificate& cert);

nlohmann::ordered_json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

}  // namespace twobridge
