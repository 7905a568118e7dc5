/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* ipond: IP-over-NDN gateway simulator, C API.
 *
 * Handles are opaque; every fallible call returns an ipond_status and the
 * last failure message is available from ipond_last_error() (thread
 * local). Results are immutable once produced; CSV accessors return
 * pointers owned by the result handle.
 */
#ifndef IPOND_H
#define IPOND_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ipond_scenario ipond_scenario;
typedef struct ipond_result ipond_result;
typedef struct ipond_comparison ipond_comparison;

typedef enum ipond_status {
  IPOND_OK = 0,
  IPOND_ERR_IO = 1,       /* file missing or unreadable */
  IPOND_ERR_PARSE = 2,    /* malformed scenario document */
  IPOND_ERR_VALIDATE = 3, /* scenario violates a topology invariant */
  IPOND_ERR_BADARG = 4,   /* null handle, bad mode, non-positive duration */
  IPOND_ERR_INTERNAL = 5
} ipond_status;

typedef enum ipond_mode {
  IPOND_MODE_BASIC = 0,   /* one NDN exchange per IP packet */
  IPOND_MODE_IMPROVED = 1 /* macro-packets amortize the exchange */
} ipond_mode;

const char* ipond_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* ipond_last_error(void);

ipond_status ipond_scenario_load(const char* path, ipond_scenario** out);
ipond_status ipond_scenario_parse(const char* text, size_t len, ipond_scenario** out);

/* Topology/workload invariant check only; no simulation. */
ipond_status ipond_scenario_validate(const ipond_scenario* scenario);

void ipond_scenario_free(ipond_scenario* scenario);

ipond_status ipond_run(const ipond_scenario* scenario, ipond_mode mode, uint64_t seed,
                       int64_t duration_ms, ipond_result** out);

/* One row per flow / per node; owned by the result. */
const char* ipond_result_flows_csv(const ipond_result* result);
const char* ipond_result_nodes_csv(const ipond_result* result);

typedef struct ipond_run_summary {
  double goodput_bps;
  double jitter_ms; /* NaN when fewer than two packets arrived */
  double loss_pct;
  uint64_t captured_datagrams;
  uint64_t delivered_datagrams;
  uint64_t gateway_ndn_packets;
  double overhead_ratio; /* gateway NDN packets per delivered datagram */
} ipond_run_summary;

ipond_status ipond_result_summary(const ipond_result* result, ipond_run_summary* out);

void ipond_result_free(ipond_result* result);

/* Runs every seed under both modes and aggregates mean / 95% CI. */
ipond_status ipond_compare(const ipond_scenario* scenario, const uint64_t* seeds, size_t n_seeds,
                           int64_t duration_ms, ipond_comparison** out);

const char* ipond_comparison_csv(const ipond_comparison* comparison);
const char* ipond_comparison_runs_csv(const ipond_comparison* comparison);
const char* ipond_comparison_table(const ipond_comparison* comparison);

typedef struct ipond_mode_summary {
  double goodput_mean_bps;
  double goodput_ci95_bps; /* NaN with fewer than two seeds */
  double jitter_mean_ms;
  double jitter_ci95_ms;
  double loss_mean_pct;
  double loss_ci95_pct;
  double overhead_ratio_mean;
  double overhead_ratio_ci95;
} ipond_mode_summary;

ipond_status ipond_comparison_summary(const ipond_comparison* comparison, ipond_mode mode,
                                      ipond_mode_summary* out);

void ipond_comparison_free(ipond_comparison* comparison);

#ifdef __cplusplus
}
#endif

#endif /* IPOND_H */
