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

#include "rwis/timeutil.hpp"

#include <array>
#include <cstdio>

#include "rwis/errors.hpp"

namespace rwis {

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

// Howard Hinnant's civil calendar algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

static void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

CivilTime civil_from_minute(Minute m) {
  std::int64_t days = m / 1440;
  std::int64_t rem = m % 1440;
  if (rem < 0) {
    rem += 1440;
    days -= 1;
  }
  CivilTime c;
  civil_from_days(days, c.year, c.month, c.day);
  c.hour = static_cast<int>(rem / 60);
  c.minute = static_cast<int>(rem % 60);
  return c;
}

Minute minute_from_civil(const CivilTime& c) {
  return days_from_civil(c.year, c.month, c.day) * 1440 + c.hour * 60 + c.minute;
}

DayOfYear day_of_year(Minute m) {
  const CivilTime c = civil_from_minute(m);
  const std::int64_t jan1 = days_from_civil(c.year, 1, 1);
  const std::int64_t today = days_from_civil(c.year, c.month, c.day);
  return {static_cast<int>(today - jan1) + 1, is_leap_year(c.year) ? 366 : 365};
}

int hour_of_day(Minute m) {
  return civil_from_minute(m).hour;
}

Minute parse_iso8601(std::string_view text) {
  // YYYY-MM-DDThh:mm with optional :ss and a mandatory zone designator.
  const std::string s(text);
  int y, mo, d, h, mi;
  int consumed = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d%n", &y, &mo, &d, &h, &mi,
                  &consumed) != 5) {
    throw FormatError("bad timestamp: " + s);
  }
  std::size_t pos = static_cast<std::size_t>(consumed);
  if (pos + 2 < s.size() && s[pos] == ':') {
    int sec;
    if (std::sscanf(s.c_str() + pos, ":%2d%n", &sec, &consumed) != 1) {
      throw FormatError("bad timestamp seconds: " + s);
    }
    pos += static_cast<std::size_t>(consumed);
  }
  if (pos >= s.size()) {
    throw FormatError("timestamp missing UTC offset: " + s);
  }
  int offset_min = 0;
  if (s[pos] == 'Z') {
    if (pos + 1 != s.size()) throw FormatError("trailing characters: " + s);
  } else if (s[pos] == '+' || s[pos] == '-') {
    int oh, om;
    if (std::sscanf(s.c_str() + pos + 1, "%2d:%2d%n", &oh, &om, &consumed) != 2 ||
        pos + 1 + static_cast<std::size_t>(consumed) != s.size()) {
      throw FormatError("bad UTC offset: " + s);
    }
    offset_min = oh * 60 + om;
    if (s[pos] == '-') offset_min = -offset_min;
  } else {
    throw FormatError("timestamp missing UTC offset: " + s);
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 ||
      mi > 59) {
    throw FormatError("timestamp fields out of range: " + s);
  }
  const CivilTime c{y, mo, d, h, mi};
  return minute_from_civil(c) - offset_min;
}

std::string format_iso8601(Minute m) {
  const CivilTime c = civil_from_minute(m);
  std::array<char, 24> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02d-%02dT%02d:%02d:00Z", c.year,
                c.month, c.day, c.hour, c.minute);
  return std::string(buf.data());
}

}  // namespace rwis
