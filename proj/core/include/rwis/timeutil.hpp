// Copyright 2026 The rwis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rwis {

/// Minutes since the Unix epoch, UTC. All station timelines use this unit.
using Minute = std::int64_t;

struct CivilTime {
  int year = 1970;
  int month = 1;   // 1..12
  int day = 1;     // 1..31
  int hour = 0;    // 0..23
  int minute = 0;  // 0..59
};

bool is_leap_year(int year);

/// Days since 1970-01-01 for a civil date (proleptic Gregorian).
std::int64_t days_from_civil(int year, int month, int day);
CivilTime civil_from_minute(Minute m);
Minute minute_from_civil(const CivilTime& c);

/// 1-based day of year plus the year length (365 or 366).
struct DayOfYear {
  int day;
  int days_in_year;
};
DayOfYear day_of_year(Minute m);
int hour_of_day(Minute m);

/// Parses "YYYY-MM-DDThh:mm[:ss][Z|±hh:mm]". Seconds are truncated to
/// minute precision; the offset is normalized away so the result is UTC.
/// Throws FormatError on malformed input.
Minute parse_iso8601(std::string_view text);

/// Formats as "YYYY-MM-DDThh:mm:00Z".
std::string format_iso8601(Minute m);

}  // namespace rwis
