#ifndef TLSN_SIM_CHANNEL_HPP_
#define TLSN_SIM_CHANNEL_HPP_

#include <array>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "tlsn/sim/message.hpp"

namespace tlsn::sim {

// Per-party ordered view of everything the party sent or received. Parties
// are single threads, so appends are program-ordered and the view is
// scheduler independent.
struct PartyLog {
    struct Event {
        bool sent;
        PartyMessage msg;
    };
    std::vector<Event> events;
};

struct AdversaryRule {
    enum class Action { FlipBit, ReplaceField, Drop, Reorder };
    Party receiver;               // mutate messages delivered to this party
    std::string type;             // message type to match
    int occurrence = 0;           // n-th match, 0-based
    Action action = Action::FlipBit;
    size_t field_index = 0;
    size_t byte_offset = 0;       // FlipBit
    uint8_t xor_mask = 0x01;      // FlipBit
    Bytes replacement;            // ReplaceField
};

struct AdversaryState {
    std::vector<AdversaryRule> rules;
    std::mutex mtx;
    std::map<std::pair<Party, std::string>, int> match_counts;
    std::vector<bool> used;
    std::vector<std::string> applied;  // human-readable log of applications
};

// Shared per-session context: sequence counters, logs, adversary, transcript
// recording switch.
struct SessionContext {
    explicit SessionContext(uint64_t id, bool record = true) : session_id(id), record_transcript(record) {
        for (auto& c : seq) c = 0;
    }
    uint64_t session_id;
    bool record_transcript;
    std::array<std::atomic<uint64_t>, 4> seq;
    std::array<PartyLog, 4> logs;
    std::shared_ptr<AdversaryState> adversary;

    const PartyLog& log(Party p) const { return logs[static_cast<size_t>(p)]; }
};

namespace detail {
struct ChannelCore;
}

// One side of an in-process duplex FIFO channel.
class Endpoint {
public:
    void send(std::string_view phase, std::string_view type, std::vector<Bytes> fields);
    // Blocks for the next message; throws ChannelError on close, drop marker,
    // or unexpected type.
    PartyMessage recv(std::string_view expect_type);
    PartyMessage recv_any();

    Party self() const { return self_; }
    Party peer() const { return peer_; }
    void close();

    Endpoint(const Endpoint&) = delete;
    Endpoint& operator=(const Endpoint&) = delete;
    Endpoint(Endpoint&&) = default;
    ~Endpoint();

private:
    friend class Channel;
    Endpoint(std::shared_ptr<detail::ChannelCore> core, int side, Party self, Party peer,
             SessionContext* ctx);
    std::shared_ptr<detail::ChannelCore> core_;
    int side_;
    Party self_, peer_;
    SessionContext* ctx_;
};

// Duplex channel between two parties of a session.
class Channel {
public:
    Channel(SessionContext& ctx, Party a, Party b);
    Endpoint& a() { return *a_; }
    Endpoint& b() { return *b_; }

private:
    std::unique_ptr<Endpoint> a_, b_;
};

}  // namespace tlsn::sim

#endif
