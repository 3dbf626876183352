#pragma once

// Scenario runners behind the CLI. Each throws ParseError or UsageError before
// doing any work when the scenario is unusable.

#include "wfs/scenario.hpp"

namespace wfs {

struct RunOptions {
  bool timing = false;  // record elapsed_ms per check; off keeps reports byte-stable
};

Report run_zmod6_counterexample(const Scenario& s, const RunOptions& o = {});
Report run_mset_counterexample(const Scenario& s, const RunOptions& o = {});
/// awfs-laws and cloven-laws.
Report run_law_suite(const Scenario& s, const RunOptions& o = {});
Report run_lift_query(const Scenario& s, const RunOptions& o = {});
Report run_eq12(const Scenario& s, const RunOptions& o = {});

Report run_scenario(const Scenario& s, const RunOptions& o = {});

}  // namespace wfs
