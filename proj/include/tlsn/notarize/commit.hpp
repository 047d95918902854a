#ifndef TLSN_NOTARIZE_COMMIT_HPP_
#define TLSN_NOTARIZE_COMMIT_HPP_

#include "tlsn/bytes.hpp"
#include "tlsn/hash.hpp"

namespace tlsn::notarize {

inline constexpr size_t kSaltLen = 16;

// Salted hash commitment: digest = SHA-256(payload || salt), 16-byte salt.
struct Commitment {
    Digest digest{};
    std::string scheme_id = "sha256-salted-v1";

    bool operator==(const Commitment& o) const {
        return digest == o.digest && scheme_id == o.scheme_id;
    }

    Bytes bytes() const { return Bytes(digest.begin(), digest.end()); }
    std::string to_hex() const { return tlsn::to_hex(digest); }
};

Commitment commit_payload(std::span<const uint8_t> payload, std::span<const uint8_t> salt);
bool verify_commitment(const Commitment& com, std::span<const uint8_t> payload,
                       std::span<const uint8_t> salt);
Bytes random_salt(Prg& prg);

}  // namespace tlsn::notarize

#endif
