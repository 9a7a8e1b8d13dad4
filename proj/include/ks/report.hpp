// Lossless JSON encodings of exact values and the job runner shared by the CLI and the tests.
#pragma once

#include <json.hpp>

#include "ks/period.hpp"

namespace ks {

using json = nlohmann::json;

json to_json(const Rational& q);  // "p/q"
json to_json(const Integer& z);   // "n"
json to_json(const QuadExt& x);   // {"rational": .., "sqrt2": .., "text": ..}
json to_json(const GaussQuad& x); // {"re": .., "im": .., "text": ..}
json to_json(const QuatQ& q);     // [w, x, y, z] plus text
json to_json(const QuatR& q);
json to_json(const CElemQ& x);    // {"text": .., "terms": {"e{..}": ..}}

template <class S>
json to_json(const Mat<S>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (size_t j = 0; j < m.cols; ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

QuadExt quad_from_json(const json& j);  // string expression or {"rational","sqrt2"}
PeriodPoint point_from_json(const json& j);
json point_to_json(const PeriodPoint& p);
// "e1 entries;e2 entries", comma separated Q(sqrt2) expressions, or "reference".
PeriodPoint parse_point(const std::string& s);

// Collects named boolean checks; the job fails if any is false.
struct CheckList {
    json items = json::object();
    bool all = true;
    void add(const std::string& name, bool ok) {
        items[name] = ok;
        all = all && ok;
    }
};

struct StageError : std::runtime_error {
    std::string stage;
    StageError(const std::string& st, const std::string& what) : std::runtime_error(st + ": " + what), stage(st) {}
};

// Stage reports. Each adds its invariants to `checks`.
json clifford_info(const std::vector<std::string>& summands, CheckList& checks);
json glue_report(const std::string& left, const std::string& right, CheckList& checks);
json rep_report(const KSData& ks, const std::string& element);
json decompose_report(const KSData& ks, size_t lambda_index, CheckList& checks);
json attributes_report(const AttributeReport& a, CheckList& checks);
json period_report(const PeriodContext& ctx, const PeriodPoint& p, Frame frame, bool auto_sign, CheckList& checks);
json scan_report(const PeriodContext& ctx, const std::vector<PeriodPoint>& pts, Frame frame, CheckList& checks);
json rank_check_report(const KSData& ks, CheckList& checks);

// Normalizes a job (fills defaults, validates fields). Throws ParseError on bad input.
json normalize_job(const json& job);
// Runs the stages named in job["commands"]; the result echoes the normalized job under "job".
json run_job(const json& job);

std::vector<std::string> split_summands(const std::string& s);  // "U+U(2)+D4minus"

}  // namespace ks
