/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <chrono>
#include <cstdint>

namespace ipond {

// Absolute simulation time, microseconds since the start of the run.
// Kept integral so event ordering never depends on float rounding.
using SimTime = std::chrono::microseconds;
using Millis = std::chrono::milliseconds;

constexpr SimTime from_ms(std::int64_t v)
{
  return std::chrono::duration_cast<SimTime>(Millis(v));
}

constexpr double to_ms(SimTime t)
{
  return static_cast<double>(t.count()) / 1000.0;
}

} // namespace ipond
