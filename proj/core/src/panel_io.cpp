#include "spfcomb/panel_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

#include "spfcomb/csv.hpp"
#include "spfcomb/errors.hpp"
#include "spfcomb/util.hpp"

namespace spfcomb {

namespace {

int parse_horizon(const std::string& text, std::size_t line) {
    int h = 0;
    auto t = trim(text);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), h);
    if (ec != std::errc{} || p != t.data() + t.size() || (h != 1 && h != 2)) {
        throw DataError("csv line " + std::to_string(line) +
                        ": horizon_years must be 1 or 2, got '" + text + "'");
    }
    return h;
}

Indicator parse_indicator(const std::string& text, std::size_t line) {
    auto ind = indicator_from_code(trim(text));
    if (!ind) {
        throw DataError("csv line " + std::to_string(line) + ": unknown indicator '" +
                        text + "' (expected GDP, HICP or UNEMP)");
    }
    return *ind;
}

}  // namespace

std::vector<ForecastPanel> parse_panel_csv(std::istream& in, const PanelCsvSchema& schema,
                                           std::span<const PanelKey> requested,
                                           ParseReport* report) {
    csv::Table table(in, {schema.round_col, schema.indicator_col, schema.horizon_col,
                          schema.forecaster_col, schema.value_col});

    ParseReport local;
    ParseReport& rep = report ? *report : local;

    struct Accum {
        std::map<SurveyPeriod, std::map<std::string, double>> cells;
        std::set<SurveyPeriod> seen_periods;  // includes zero-response periods
    };
    std::map<PanelKey, Accum> accums;
    const bool take_all = requested.empty();
    for (const auto& key : requested) {
        accums[key];  // requested panels exist even if the file has no rows for them
    }

    csv::Row row;
    while (table.next(row)) {
        ++rep.rows_read;
        const auto period = SurveyPeriod::parse(table.field(row, schema.round_col));
        const auto indicator = parse_indicator(table.field(row, schema.indicator_col), row.line);
        const int horizon = parse_horizon(table.field(row, schema.horizon_col), row.line);

        PanelKey key{indicator, horizon};
        if (!take_all && !accums.count(key)) continue;
        auto& acc = accums[key];
        acc.seen_periods.insert(period);

        const std::string forecaster = trim(table.field(row, schema.forecaster_col));
        if (forecaster.empty()) {
            throw DataError("csv line " + std::to_string(row.line) + ": empty forecaster id");
        }

        const std::string value_text = trim(table.field(row, schema.value_col));
        if (value_text.empty()) {
            ++rep.cells_absent;
            continue;
        }
        double value = 0.0;
        if (!parse_double(value_text, value)) {
            throw DataError("csv line " + std::to_string(row.line) +
                            ": forecast value '" + value_text + "' is not a finite number");
        }

        auto [it, inserted] = acc.cells[period].emplace(forecaster, value);
        if (!inserted) {
            if (it->second != value) {
                throw DataError("csv line " + std::to_string(row.line) + ": duplicate cell (" +
                                period.str() + ", " + forecaster + ") with conflicting values " +
                                format_double(it->second) + " and " + format_double(value));
            }
            continue;  // identical duplicate, keep one
        }
        ++rep.cells_present;
    }

    std::vector<ForecastPanel> panels;
    panels.reserve(accums.size());
    for (auto& [key, acc] : accums) {
        ForecastPanel panel;
        panel.indicator = key.indicator;
        panel.horizon_years = key.horizon_years;

        std::set<std::string> forecaster_set;
        for (const auto& p : acc.seen_periods) {
            auto it = acc.cells.find(p);
            if (it == acc.cells.end() || it->second.empty()) {
                rep.warnings.push_back("panel " + std::string(indicator_code(key.indicator)) +
                                       " h=" + std::to_string(key.horizon_years) + ": period " +
                                       p.str() + " has zero responses, dropped");
                continue;
            }
            panel.periods.push_back(p);
            panel.cells[p] = it->second;
            for (const auto& [id, v] : it->second) forecaster_set.insert(id);
        }
        panel.forecasters.assign(forecaster_set.begin(), forecaster_set.end());
        panels.push_back(std::move(panel));
    }
    return panels;
}

TruthSeries parse_truth_csv(std::istream& in, const TruthCsvSchema& schema,
                            Indicator indicator) {
    csv::Table table(in, {schema.period_col, schema.indicator_col, schema.value_col});

    TruthSeries truth;
    truth.indicator = indicator;

    csv::Row row;
    while (table.next(row)) {
        if (parse_indicator(table.field(row, schema.indicator_col), row.line) != indicator) {
            continue;
        }
        const auto period = SurveyPeriod::parse(table.field(row, schema.period_col));
        double value = 0.0;
        const std::string value_text = trim(table.field(row, schema.value_col));
        if (!parse_double(value_text, value)) {
            throw DataError("csv line " + std::to_string(row.line) + ": truth value '" +
                            value_text + "' is not a finite number");
        }
        auto [it, inserted] = truth.values.emplace(period, value);
        if (!inserted && it->second != value) {
            throw DataError("csv line " + std::to_string(row.line) +
                            ": duplicate truth for " + period.str() +
                            " with conflicting values");
        }
    }
    return truth;
}

void write_panel_csv(std::ostream& out, std::span<const ForecastPanel> panels,
                     const PanelCsvSchema& schema) {
    out << csv::join_row({schema.round_col, schema.indicator_col, schema.horizon_col,
                          schema.forecaster_col, schema.value_col});
    for (const auto& panel : panels) {
        for (const auto& p : panel.periods) {
            const auto* fc = panel.forecasts_at(p);
            if (!fc) continue;
            for (const auto& [id, value] : *fc) {
                out << csv::join_row({p.str(), std::string(indicator_code(panel.indicator)),
                                      std::to_string(panel.horizon_years), id,
                                      format_double(value)});
            }
        }
    }
}

void write_truth_csv(std::ostream& out, const TruthSeries& truth,
                     const TruthCsvSchema& schema) {
    out << csv::join_row({schema.period_col, schema.indicator_col, schema.value_col});
    for (const auto& [p, v] : truth.values) {
        out << csv::join_row({p.str(), std::string(indicator_code(truth.indicator)),
                              format_double(v)});
    }
}

}  // namespace spfcomb
