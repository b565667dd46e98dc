#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace spfcomb {

/// A quarterly survey round, e.g. "1999Q4". Ordered by (year, quarter);
/// the successor of Q4 is Q1 of the next year.
struct SurveyPeriod {
    int year = 0;
    int quarter = 1;  // 1..4

    static std::optional<SurveyPeriod> try_parse(std::string_view token);
    /// Throws DataError on a token that is not "YYYYQq".
    static SurveyPeriod parse(std::string_view token);

    std::string str() const;

    /// Linear index used for period arithmetic.
    int index() const { return year * 4 + (quarter - 1); }
    static SurveyPeriod from_index(int idx);

    SurveyPeriod next() const { return from_index(index() + 1); }
    SurveyPeriod prev() const { return from_index(index() - 1); }
    SurveyPeriod minus(int quarters) const { return from_index(index() - quarters); }

    friend auto operator<=>(const SurveyPeriod&, const SurveyPeriod&) = default;
};

}  // namespace spfcomb
