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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rwis/timeutil.hpp"

namespace rwis {

/// The four sensor channels every station reports.
enum class Channel : int { air = 0, road = 1, underground = 2, humidity = 3 };

inline constexpr std::array<Channel, 4> kAllChannels = {
    Channel::air, Channel::road, Channel::underground, Channel::humidity};
inline constexpr int kChannelCount = 4;

std::string_view channel_name(Channel ch);
Channel channel_from_name(std::string_view name);

/// Forecast lead times supported by the model grid.
enum class Horizon : int { h1 = 1, h2 = 2, h3 = 3 };

inline constexpr std::array<Horizon, 3> kAllHorizons = {Horizon::h1, Horizon::h2,
                                                        Horizon::h3};
inline constexpr int kHorizonCount = 3;

inline int horizon_hours(Horizon h) { return static_cast<int>(h); }
Horizon horizon_from_hours(int hours);

/// One timestamped multi-sensor reading. Temperatures in degC, humidity in
/// percent. Plausibility bounds: temperatures within [-90, 90], humidity
/// within [0, 100].
struct Observation {
  std::string station_id;
  Minute timestamp = 0;
  double air_temp = 0.0;
  double road_temp = 0.0;
  double underground_temp = 0.0;
  double humidity = 0.0;

  double value(Channel ch) const;
  void set_value(Channel ch, double v);
  bool plausible() const;
};

/// Radiative and wind forcing attached to an observation row when the CSV
/// carries the extended meteo columns.
struct ForcingRecord {
  double shortwave_in = 0.0;      // W/m^2
  double longwave_in = 0.0;       // W/m^2
  double wind_speed = 0.0;        // m/s
  double precip_phase_flux = 0.0; // kg/(m^2 s), + freezing / - melting
};

/// One station's timeline. Raw after parsing (cadence_minutes == 0,
/// arbitrary spacing); slot-aligned after regularize(): one entry per grid
/// slot, gap slots flagged in gap_mask and holding NaN channel values.
struct StationSeries {
  std::string station_id;
  std::int64_t cadence_minutes = 0;
  std::vector<Observation> observations;
  std::vector<bool> gap_mask;

  std::size_t size() const { return observations.size(); }
  bool regular() const { return cadence_minutes > 0; }
  bool is_gap(std::size_t slot) const {
    return slot < gap_mask.size() && gap_mask[slot];
  }
  bool gap_free() const;
  double value(std::size_t slot, Channel ch) const {
    return observations[slot].value(ch);
  }
  Minute timestamp(std::size_t slot) const {
    return observations[slot].timestamp;
  }
  /// Sample standard deviation of one channel over non-gap slots.
  double channel_stddev(Channel ch) const;
};

/// A station timeline plus (optionally) its per-slot forcing. `forcing` is
/// either empty or the same length as the series.
struct StationInput {
  StationSeries series;
  std::vector<ForcingRecord> forcing;

  bool has_forcing() const { return !forcing.empty(); }
};

struct RegularizeReport {
  std::size_t collisions = 0;  // raw rows displaced by a nearer row
  std::size_t gaps = 0;
};

/// Snaps a raw series onto a fixed cadence grid. Nearest slot wins; an
/// exact half-cadence tie goes to the earlier slot. When two raw rows land
/// on one slot the row closer to the slot centre is kept (earlier row on an
/// exact tie). Empty slots are flagged in gap_mask; values are never
/// imputed. Throws CadenceTooCoarseError when more than half of the raw
/// rows collide into shared slots.
StationSeries regularize(const StationSeries& series, std::int64_t cadence_minutes,
                         RegularizeReport* report = nullptr);

/// regularize() applied to series and forcing rows together.
StationInput regularize_input(const StationInput& input,
                              std::int64_t cadence_minutes,
                              RegularizeReport* report = nullptr);

}  // namespace rwis
