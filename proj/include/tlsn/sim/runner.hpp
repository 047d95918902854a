#ifndef TLSN_SIM_RUNNER_HPP_
#define TLSN_SIM_RUNNER_HPP_

#include <functional>

#include "tlsn/sim/channel.hpp"

namespace tlsn::sim {

struct AbortInfo {
    Party party;
    std::string phase;
    std::string cause;
    std::string detail;
};

struct RunResult {
    std::vector<AbortInfo> aborts;
    bool ok() const { return aborts.empty(); }
    // first substantive abort (channel closures are knock-on effects)
    const AbortInfo* root_cause() const;
    bool aborted_with(std::string_view cause) const;
};

struct PartyJob {
    Party party;
    std::function<void()> fn;
    // closed when the job ends so blocked peers unwind deterministically
    std::vector<Endpoint*> endpoints;
};

// Runs each job on its own thread and joins them all; protocol aborts become
// AbortInfo entries instead of escaping.
RunResult run_parties(std::vector<PartyJob> jobs);

}  // namespace tlsn::sim

#endif
