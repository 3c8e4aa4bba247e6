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

#include "rwis/series.hpp"

#include <cmath>
#include <limits>

#include "rwis/errors.hpp"

namespace rwis {

std::string_view channel_name(Channel ch) {
  switch (ch) {
    case Channel::air: return "air";
    case Channel::road: return "road";
    case Channel::underground: return "underground";
    case Channel::humidity: return "humidity";
  }
  throw OutOfRangeError("invalid channel value");
}

Channel channel_from_name(std::string_view name) {
  for (Channel ch : kAllChannels) {
    if (channel_name(ch) == name) return ch;
  }
  throw OutOfRangeError("unknown channel name: " + std::string(name));
}

Horizon horizon_from_hours(int hours) {
  switch (hours) {
    case 1: return Horizon::h1;
    case 2: return Horizon::h2;
    case 3: return Horizon::h3;
  }
  throw OutOfRangeError("unsupported horizon: " + std::to_string(hours));
}

double Observation::value(Channel ch) const {
  switch (ch) {
    case Channel::air: return air_temp;
    case Channel::road: return road_temp;
    case Channel::underground: return underground_temp;
    case Channel::humidity: return humidity;
  }
  throw OutOfRangeError("invalid channel value");
}

void Observation::set_value(Channel ch, double v) {
  switch (ch) {
    case Channel::air: air_temp = v; return;
    case Channel::road: road_temp = v; return;
    case Channel::underground: underground_temp = v; return;
    case Channel::humidity: humidity = v; return;
  }
  throw OutOfRangeError("invalid channel value");
}

bool Observation::plausible() const {
  const auto temp_ok = [](double t) {
    return std::isfinite(t) && t >= -90.0 && t <= 90.0;
  };
  return temp_ok(air_temp) && temp_ok(road_temp) && temp_ok(underground_temp) &&
         std::isfinite(humidity) && humidity >= 0.0 && humidity <= 100.0;
}

bool StationSeries::gap_free() const {
  for (bool g : gap_mask) {
    if (g) return false;
  }
  return true;
}

double StationSeries::channel_stddev(Channel ch) const {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    if (is_gap(i)) continue;
    sum += value(i, ch);
    ++n;
  }
  if (n < 2) return 0.0;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    if (is_gap(i)) continue;
    const double d = value(i, ch) - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

namespace {

// Nearest cadence slot; an exact half-cadence tie rounds toward the
// earlier slot.
std::int64_t nearest_slot(Minute t, Minute origin, std::int64_t cadence) {
  const std::int64_t offset = t - origin;
  std::int64_t q = offset / cadence;
  std::int64_t r = offset % cadence;
  if (r < 0) {
    q -= 1;
    r += cadence;
  }
  const std::int64_t twice = 2 * r;
  if (twice > cadence) return q + 1;
  return q;  // includes the exact tie (twice == cadence)
}

struct SlotPick {
  std::size_t row;
  std::int64_t distance;
};

}  // namespace

StationSeries regularize(const StationSeries& series,
                         std::int64_t cadence_minutes,
                         RegularizeReport* report) {
  StationInput in;
  in.series = series;
  return regularize_input(in, cadence_minutes, report).series;
}

StationInput regularize_input(const StationInput& input,
                              std::int64_t cadence_minutes,
                              RegularizeReport* report) {
  if (cadence_minutes <= 0) {
    throw OutOfRangeError("cadence must be positive");
  }
  const StationSeries& raw = input.series;
  StationInput out;
  out.series.station_id = raw.station_id;
  out.series.cadence_minutes = cadence_minutes;
  if (raw.observations.empty()) {
    if (report) *report = {};
    return out;
  }
  if (!input.forcing.empty() && input.forcing.size() != raw.observations.size()) {
    throw LengthMismatchError("forcing length does not match series");
  }

  // Grid anchored on cadence-aligned epoch boundaries.
  const Minute origin =
      nearest_slot(raw.observations.front().timestamp, 0, cadence_minutes) *
      cadence_minutes;

  std::int64_t max_slot = 0;
  std::vector<std::int64_t> slot_of(raw.observations.size());
  for (std::size_t i = 0; i < raw.observations.size(); ++i) {
    slot_of[i] = nearest_slot(raw.observations[i].timestamp, origin, cadence_minutes);
    if (slot_of[i] > max_slot) max_slot = slot_of[i];
    if (slot_of[i] < 0) {
      throw OutOfRangeError("timestamps not sorted against grid origin");
    }
  }
  const std::size_t slot_count = static_cast<std::size_t>(max_slot) + 1;

  std::vector<SlotPick> picks(slot_count,
                              SlotPick{0, std::numeric_limits<std::int64_t>::max()});
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < raw.observations.size(); ++i) {
    const auto slot = static_cast<std::size_t>(slot_of[i]);
    const Minute slot_time = origin + slot_of[i] * cadence_minutes;
    const std::int64_t dist = std::llabs(raw.observations[i].timestamp - slot_time);
    SlotPick& pick = picks[slot];
    if (pick.distance == std::numeric_limits<std::int64_t>::max()) {
      pick = {i, dist};
    } else {
      ++collisions;
      if (dist < pick.distance) pick = {i, dist};  // earlier row wins ties
    }
  }
  if (2 * collisions > raw.observations.size()) {
    throw CadenceTooCoarseError(
        "more than half of the rows collide into shared slots at cadence " +
        std::to_string(cadence_minutes) + "m");
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.series.observations.resize(slot_count);
  out.series.gap_mask.assign(slot_count, true);
  if (input.has_forcing()) out.forcing.resize(slot_count);
  std::size_t gaps = slot_count;
  for (std::size_t slot = 0; slot < slot_count; ++slot) {
    Observation& obs = out.series.observations[slot];
    obs.station_id = raw.station_id;
    obs.timestamp = origin + static_cast<std::int64_t>(slot) * cadence_minutes;
    if (picks[slot].distance == std::numeric_limits<std::int64_t>::max()) {
      obs.air_temp = obs.road_temp = obs.underground_temp = obs.humidity = nan;
      continue;
    }
    const Observation& src = raw.observations[picks[slot].row];
    obs.air_temp = src.air_temp;
    obs.road_temp = src.road_temp;
    obs.underground_temp = src.underground_temp;
    obs.humidity = src.humidity;
    out.series.gap_mask[slot] = false;
    --gaps;
    if (input.has_forcing()) out.forcing[slot] = input.forcing[picks[slot].row];
  }
  if (report) *report = {collisions, gaps};
  return out;
}

}  // namespace rwis
