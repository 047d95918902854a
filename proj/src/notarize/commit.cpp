#include "tlsn/notarize/commit.hpp"

#include <stdexcept>

namespace tlsn::notarize {

Commitment commit_payload(std::span<const uint8_t> payload, std::span<const uint8_t> salt) {
    if (salt.size() != kSaltLen) throw std::invalid_argument("commitment salt must be 16 bytes");
    Commitment c;
    c.digest = sha256_concat({payload, salt});
    return c;
}

bool verify_commitment(const Commitment& com, std::span<const uint8_t> payload,
                       std::span<const uint8_t> salt) {
    if (salt.size() != kSaltLen) return false;
    return commit_payload(payload, salt).digest == com.digest;
}

Bytes random_salt(Prg& prg) { return prg.bytes(kSaltLen); }

}  // namespace tlsn::notarize
