#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spfcomb/period.hpp"

namespace spfcomb {

enum class Indicator { GdpGrowth, HicpInflation, Unemployment };

/// Wire codes used in CSV files: GDP, HICP, UNEMP.
std::string_view indicator_code(Indicator ind);
std::optional<Indicator> indicator_from_code(std::string_view code);

/// One (indicator, horizon) slice of the survey: a periods x forecasters
/// matrix of point forecasts with missing cells. Immutable once built.
struct ForecastPanel {
    Indicator indicator = Indicator::GdpGrowth;
    int horizon_years = 1;  // 1 or 2
    std::vector<SurveyPeriod> periods;      // strictly increasing
    std::vector<std::string> forecasters;   // sorted, unique, opaque ids
    std::map<SurveyPeriod, std::map<std::string, double>> cells;

    const std::map<std::string, double>* forecasts_at(SurveyPeriod p) const;
    std::optional<double> cell(SurveyPeriod p, const std::string& forecaster) const;
    bool has_period(SurveyPeriod p) const;
};

/// Realized values X_j for one indicator.
struct TruthSeries {
    Indicator indicator = Indicator::GdpGrowth;
    std::map<SurveyPeriod, double> values;
};

/// Panel joined with truth. evaluable_periods have both >=1 forecast and a
/// realized value, in time order.
struct AlignedDataset {
    ForecastPanel panel;
    TruthSeries truth;
    std::vector<SurveyPeriod> evaluable_periods;
};

/// Throws DataError on indicator mismatch or an empty intersection.
AlignedDataset align(ForecastPanel panel, TruthSeries truth);

/// The fixed-length slice fed to a combiner for one target period. Nothing
/// dated at or after the target appears outside current_forecasts.
struct HistoryWindow {
    SurveyPeriod target;
    int window_len = 3;
    /// Realized (period, value) pairs for window periods, time-ordered,
    /// all strictly before target.
    std::vector<std::pair<SurveyPeriod, double>> truth_history;
    /// Per-forecaster (period, forecast) over the window; only the periods
    /// that forecaster answered. Keyed by forecasters present at target.
    std::map<std::string, std::vector<std::pair<SurveyPeriod, double>>> expert_histories;
    std::map<std::string, double> current_forecasts;

    /// No prior data at all: neither truth history nor any expert history.
    bool cold_start() const;
};

/// Builds the window of the window_len periods immediately before target.
/// Throws DataError when the target has no forecasts or window_len < 1.
HistoryWindow window_slice(const AlignedDataset& dataset, SurveyPeriod target,
                           int window_len = 3);

}  // namespace spfcomb
