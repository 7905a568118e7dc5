/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "sim/network.hpp"

namespace ipond::sim {

// RFC 4180-style CSV renders of one run, one row per flow / per node.
// Output is a pure function of the run result, so repeated identical runs
// produce byte-identical files.

std::string flows_csv(const RunResult& result);
std::string nodes_csv(const RunResult& result);

/// "%.6f", with NaN rendered as the empty field.
std::string csv_double(double v);

} // namespace ipond::sim
