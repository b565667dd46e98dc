#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spfcomb/panel.hpp"

namespace spfcomb {

/// Column-name remapping for the survey panel CSV.
struct PanelCsvSchema {
    std::string round_col = "survey_round";
    std::string indicator_col = "indicator";
    std::string horizon_col = "horizon_years";
    std::string forecaster_col = "forecaster_id";
    std::string value_col = "forecast";
};

struct TruthCsvSchema {
    std::string period_col = "period";
    std::string indicator_col = "indicator";
    std::string value_col = "value";
};

struct PanelKey {
    Indicator indicator = Indicator::GdpGrowth;
    int horizon_years = 1;

    friend auto operator<=>(const PanelKey&, const PanelKey&) = default;
};

struct ParseReport {
    std::size_t rows_read = 0;
    std::size_t cells_present = 0;
    std::size_t cells_absent = 0;
    std::vector<std::string> warnings;  // e.g. dropped zero-response periods
};

/// Parses the survey CSV into one panel per requested (indicator, horizon).
/// An empty `requested` selects every pair found in the file. Rows with an
/// empty value become absent cells; periods with zero responses are dropped
/// with a warning. Throws DataError on malformed rows, bad period tokens,
/// unknown indicators, or duplicate cells with conflicting values.
std::vector<ForecastPanel> parse_panel_csv(std::istream& in, const PanelCsvSchema& schema,
                                           std::span<const PanelKey> requested = {},
                                           ParseReport* report = nullptr);

/// Parses the truth CSV, keeping only rows for `indicator`.
TruthSeries parse_truth_csv(std::istream& in, const TruthCsvSchema& schema,
                            Indicator indicator);

/// Inverse of parse_panel_csv for present cells (absent cells are written as
/// empty values so the matrix shape survives a round trip).
void write_panel_csv(std::ostream& out, std::span<const ForecastPanel> panels,
                     const PanelCsvSchema& schema = {});

void write_truth_csv(std::ostream& out, const TruthSeries& truth,
                     const TruthCsvSchema& schema = {});

}  // namespace spfcomb
