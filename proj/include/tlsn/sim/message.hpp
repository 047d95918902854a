#ifndef TLSN_SIM_MESSAGE_HPP_
#define TLSN_SIM_MESSAGE_HPP_

#include <cstdint>
#include <string>

#include "tlsn/bytes.hpp"

namespace tlsn::sim {

enum class Party : uint8_t { client = 0, notary = 1, server = 2, verifier = 3 };

inline const char* party_name(Party p) {
    switch (p) {
        case Party::client: return "client";
        case Party::notary: return "notary";
        case Party::server: return "server";
        default: return "verifier";
    }
}

// Framed protocol message. `payload` carries pack_fields framing; scalar and
// coordinate fields inside are lowercase hex, big-endian.
struct PartyMessage {
    uint64_t session_id = 0;
    Party sender = Party::client;
    std::string phase;
    std::string type;
    Bytes payload;
    uint64_t seq = 0;

    std::vector<Bytes> fields() const { return unpack_fields(payload); }
    Bytes canonical() const;
};

}  // namespace tlsn::sim

#endif
