#include "tlsn/sim/runner.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "tlsn/errors.hpp"

namespace tlsn::sim {

const AbortInfo* RunResult::root_cause() const {
    const AbortInfo* fallback = nullptr;
    const AbortInfo* best = nullptr;
    for (const auto& a : aborts) {
        if (!fallback) fallback = &a;
        if (a.cause != errc::ChannelError) {
            if (!best || static_cast<int>(a.party) < static_cast<int>(best->party)) best = &a;
        }
    }
    return best ? best : fallback;
}

bool RunResult::aborted_with(std::string_view cause) const {
    for (const auto& a : aborts)
        if (a.cause == cause) return true;
    return false;
}

RunResult run_parties(std::vector<PartyJob> jobs) {
    RunResult result;
    std::mutex mtx;
    std::vector<std::thread> threads;
    threads.reserve(jobs.size());

    for (auto& job : jobs) {
        threads.emplace_back([&job, &result, &mtx] {
            try {
                job.fn();
            } catch (const ProtocolError& e) {
                std::lock_guard lock(mtx);
                result.aborts.push_back({job.party, e.phase(), e.cause(), e.detail()});
            } catch (const std::exception& e) {
                std::lock_guard lock(mtx);
                result.aborts.push_back({job.party, "", "Exception", e.what()});
            }
            for (auto* ep : job.endpoints) ep->close();
        });
    }
    for (auto& t : threads) t.join();

    // stable report order: by party, then phase
    std::sort(result.aborts.begin(), result.aborts.end(), [](const AbortInfo& a, const AbortInfo& b) {
        return static_cast<int>(a.party) < static_cast<int>(b.party);
    });
    return result;
}

}  // namespace tlsn::sim
