#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hlx {

// Calendar timestamps are carried as seconds since the Unix epoch, UTC.
// ISO-8601 parsing/formatting is done by hand: std::chrono::parse is not
// available in the toolchains we target and strptime is locale-sensitive.

struct CivilDate {
    int year;
    unsigned month;  // 1..12
    unsigned day;    // 1..31
};

// Days since 1970-01-01 (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, unsigned m, unsigned d);
CivilDate civil_from_days(std::int64_t z);

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS", optional trailing "Z".
// Throws hlx::Error on malformed input.
std::int64_t parse_iso8601(std::string_view s);

// Always "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(std::int64_t epoch_seconds);

enum class Bucket { day, week, month, quarter, year };

Bucket parse_bucket(std::string_view name);
std::string bucket_name(Bucket b);

// Start (epoch seconds) of the calendar bucket containing ts.
std::int64_t bucket_start(std::int64_t ts, Bucket b);
// Start of the bucket immediately after the one starting at start.
std::int64_t next_bucket(std::int64_t start, Bucket b);

}  // namespace hlx
