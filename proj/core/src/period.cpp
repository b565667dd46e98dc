#include "spfcomb/period.hpp"

#include <cctype>
#include <charconv>

#include "spfcomb/errors.hpp"

namespace spfcomb {

std::optional<SurveyPeriod> SurveyPeriod::try_parse(std::string_view token) {
    // "YYYYQq": four-digit year, 'Q' or 'q', quarter digit 1..4.
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
        token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
        token.remove_suffix(1);
    }
    if (token.size() != 6) return std::nullopt;
    if (token[4] != 'Q' && token[4] != 'q') return std::nullopt;

    int year = 0;
    auto [yp, yec] = std::from_chars(token.data(), token.data() + 4, year);
    if (yec != std::errc{} || yp != token.data() + 4) return std::nullopt;

    int quarter = token[5] - '0';
    if (quarter < 1 || quarter > 4) return std::nullopt;
    return SurveyPeriod{year, quarter};
}

SurveyPeriod SurveyPeriod::parse(std::string_view token) {
    auto p = try_parse(token);
    if (!p) {
        throw DataError("unparseable survey period token: '" + std::string(token) + "'");
    }
    return *p;
}

std::string SurveyPeriod::str() const {
    std::string out(6, '0');
    int y = year;
    for (int i = 3; i >= 0; --i) {
        out[i] = static_cast<char>('0' + y % 10);
        y /= 10;
    }
    out[4] = 'Q';
    out[5] = static_cast<char>('0' + quarter);
    return out;
}

SurveyPeriod SurveyPeriod::from_index(int idx) {
    int y = idx / 4;
    int q = idx % 4;
    if (q < 0) {  // floor division for negative indices
        y -= 1;
        q += 4;
    }
    return SurveyPeriod{y, q + 1};
}

}  // namespace spfcomb
