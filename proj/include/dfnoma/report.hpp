// CSV and JSON serialization of KPI and comparison reports. Every row embeds
// the fully resolved operating point, the seed and the tool version, so any
// output file can be reproduced from itself. Numbers are written with
// shortest round-trip formatting and '.' decimals regardless of locale;
// a rerun with identical inputs produces a byte-identical file.

#pragma once

#include <string>
#include <vector>

#include "dfnoma/fairness.hpp"

namespace dfnoma {

std::string format_double(double v);  // shortest round-trip; "inf"/"-inf"/"nan"

struct ReportMeta {
    std::string job;  // analyze | simulate | sweep | compare | validate
    SeedSpec seed;
};

// One labeled row; the writers derive the header from the first row.
using Row = std::vector<std::pair<std::string, std::string>>;

Row kpi_row(const KpiReport& report, const ReportMeta& meta);
Row comparison_row(const ComparisonReport& report, const ReportMeta& meta);

std::string rows_to_csv(const std::vector<Row>& rows);
std::string rows_to_json(const std::vector<Row>& rows, const ReportMeta& meta);

std::string kpi_csv(const std::vector<KpiReport>& reports, const ReportMeta& meta);
std::string kpi_json(const std::vector<KpiReport>& reports, const ReportMeta& meta);
std::string comparison_csv(const std::vector<ComparisonReport>& reports,
                           const ReportMeta& meta);
std::string comparison_json(const std::vector<ComparisonReport>& reports,
                            const ReportMeta& meta);

}  // namespace dfnoma
