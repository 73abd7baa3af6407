#include "hlx/timeutil.hpp"

#include <cstdio>

#include "hlx/common.hpp"

namespace hlx {

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;   // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {static_cast<int>(y + (m <= 2)), m, d};
}

namespace {

bool parse_fixed_uint(std::string_view s, std::size_t pos, std::size_t len, long& out) {
    if (pos + len > s.size()) return false;
    long v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        char c = s[i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

}  // namespace

std::int64_t parse_iso8601(std::string_view s) {
    long y, mo, d, h = 0, mi = 0, sec = 0;
    bool ok = s.size() >= 10 && parse_fixed_uint(s, 0, 4, y) && s[4] == '-' &&
              parse_fixed_uint(s, 5, 2, mo) && s[7] == '-' && parse_fixed_uint(s, 8, 2, d);
    std::size_t rest = 10;
    if (ok && s.size() > 10) {
        ok = (s[10] == 'T' || s[10] == ' ') && parse_fixed_uint(s, 11, 2, h) &&
             s.size() >= 19 && s[13] == ':' && parse_fixed_uint(s, 14, 2, mi) &&
             s[16] == ':' && parse_fixed_uint(s, 17, 2, sec);
        rest = 19;
    }
    if (ok && s.size() > rest) ok = s.size() == rest + 1 && s[rest] == 'Z';
    ok = ok && mo >= 1 && mo <= 12 && d >= 1 && d <= 31 && h <= 23 && mi <= 59 && sec <= 60;
    require(ok, "malformed ISO-8601 timestamp: '" + std::string(s) + "'");
    return days_from_civil(static_cast<int>(y), static_cast<unsigned>(mo),
                           static_cast<unsigned>(d)) *
               86400 +
           h * 3600 + mi * 60 + sec;
}

std::string format_iso8601(std::int64_t ts) {
    std::int64_t days = ts / 86400;
    std::int64_t sod = ts % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    CivilDate cd = civil_from_days(days);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", cd.year, cd.month,
                  cd.day, static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod / 60) % 60), static_cast<long long>(sod % 60));
    return buf;
}

Bucket parse_bucket(std::string_view name) {
    if (name == "day") return Bucket::day;
    if (name == "week") return Bucket::week;
    if (name == "month") return Bucket::month;
    if (name == "quarter") return Bucket::quarter;
    if (name == "year") return Bucket::year;
    throw Error("unknown bucket '" + std::string(name) +
                "' (expected day|week|month|quarter|year)");
}

std::string bucket_name(Bucket b) {
    switch (b) {
        case Bucket::day: return "day";
        case Bucket::week: return "week";
        case Bucket::month: return "month";
        case Bucket::quarter: return "quarter";
        case Bucket::year: return "year";
    }
    return "?";
}

std::int64_t bucket_start(std::int64_t ts, Bucket b) {
    std::int64_t days = ts / 86400;
    if (ts % 86400 < 0) days -= 1;
    if (b == Bucket::day) return days * 86400;
    if (b == Bucket::week) {
        // 1970-01-01 was a Thursday; align weeks to Monday.
        std::int64_t dow = ((days % 7) + 7 + 3) % 7;
        return (days - dow) * 86400;
    }
    CivilDate cd = civil_from_days(days);
    unsigned month = 1;
    if (b == Bucket::month) month = cd.month;
    if (b == Bucket::quarter) month = 1 + 3 * ((cd.month - 1) / 3);
    return days_from_civil(cd.year, month, 1) * 86400;
}

std::int64_t next_bucket(std::int64_t start, Bucket b) {
    std::int64_t days = start / 86400;
    switch (b) {
        case Bucket::day: return start + 86400;
        case Bucket::week: return start + 7 * 86400;
        case Bucket::month: {
            CivilDate cd = civil_from_days(days);
            int y = cd.year + (cd.month == 12 ? 1 : 0);
            unsigned m = cd.month == 12 ? 1 : cd.month + 1;
            return days_from_civil(y, m, 1) * 86400;
        }
        case Bucket::quarter: {
            CivilDate cd = civil_from_days(days);
            unsigned m = cd.month + 3;
            int y = cd.year;
            if (m > 12) {
                m -= 12;
                y += 1;
            }
            return days_from_civil(y, m, 1) * 86400;
        }
        case Bucket::year: {
            CivilDate cd = civil_from_days(days);
            return days_from_civil(cd.year + 1, 1, 1) * 86400;
        }
    }
    return start;
}

}  // namespace hlx
