#include "spfcomb/panel.hpp"

#include <algorithm>

#include "spfcomb/errors.hpp"

namespace spfcomb {

std::string_view indicator_code(Indicator ind) {
    switch (ind) {
        case Indicator::GdpGrowth: return "GDP";
        case Indicator::HicpInflation: return "HICP";
        case Indicator::Unemployment: return "UNEMP";
    }
    return "GDP";
}

std::optional<Indicator> indicator_from_code(std::string_view code) {
    if (code == "GDP") return Indicator::GdpGrowth;
    if (code == "HICP") return Indicator::HicpInflation;
    if (code == "UNEMP") return Indicator::Unemployment;
    return std::nullopt;
}

const std::map<std::string, double>* ForecastPanel::forecasts_at(SurveyPeriod p) const {
    auto it = cells.find(p);
    return it == cells.end() ? nullptr : &it->second;
}

std::optional<double> ForecastPanel::cell(SurveyPeriod p, const std::string& forecaster) const {
    auto it = cells.find(p);
    if (it == cells.end()) return std::nullopt;
    auto jt = it->second.find(forecaster);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

bool ForecastPanel::has_period(SurveyPeriod p) const {
    return std::binary_search(periods.begin(), periods.end(), p);
}

AlignedDataset align(ForecastPanel panel, TruthSeries truth) {
    if (panel.indicator != truth.indicator) {
        throw DataError("align: indicator mismatch (panel " +
                        std::string(indicator_code(panel.indicator)) + ", truth " +
                        std::string(indicator_code(truth.indicator)) + ")");
    }
    std::vector<SurveyPeriod> evaluable;
    for (const auto& p : panel.periods) {
        const auto* fc = panel.forecasts_at(p);
        if (fc && !fc->empty() && truth.values.count(p)) {
            evaluable.push_back(p);
        }
    }
    if (evaluable.empty()) {
        throw DataError("align: no period has both forecasts and a realized value");
    }
    return AlignedDataset{std::move(panel), std::move(truth), std::move(evaluable)};
}

bool HistoryWindow::cold_start() const {
    if (!truth_history.empty()) return false;
    for (const auto& [id, hist] : expert_histories) {
        if (!hist.empty()) return false;
    }
    return true;
}

HistoryWindow window_slice(const AlignedDataset& dataset, SurveyPeriod target,
                           int window_len) {
    if (window_len < 1) {
        throw DataError("window_slice: window_len must be >= 1");
    }
    const auto* current = dataset.panel.forecasts_at(target);
    if (!current || current->empty()) {
        throw DataError("window_slice: target " + target.str() + " has no forecasts");
    }

    HistoryWindow window;
    window.target = target;
    window.window_len = window_len;
    window.current_forecasts = *current;

    for (int back = window_len; back >= 1; --back) {
        SurveyPeriod p = target.minus(back);
        auto truth_it = dataset.truth.values.find(p);
        if (truth_it != dataset.truth.values.end()) {
            window.truth_history.emplace_back(p, truth_it->second);
        }
    }

    for (const auto& [id, fc] : *current) {
        auto& hist = window.expert_histories[id];
        for (int back = window_len; back >= 1; --back) {
            SurveyPeriod p = target.minus(back);
            if (auto v = dataset.panel.cell(p, id)) {
                hist.emplace_back(p, *v);
            }
        }
        (void)fc;
    }
    return window;
}

}  // namespace spfcomb
