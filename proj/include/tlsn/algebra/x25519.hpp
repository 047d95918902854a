#ifndef TLSN_ALGEBRA_X25519_HPP_
#define TLSN_ALGEBRA_X25519_HPP_

#include "tlsn/bytes.hpp"

namespace tlsn::algebra {

// X25519 scalar multiplication on curve25519 u-coordinates (RFC 7748
// conventions: 32-byte little-endian strings, scalar clamping, Montgomery
// ladder). Throws LowOrderPoint when the shared secret comes out all-zero.
Bytes x25519_derive(std::span<const uint8_t> sk, std::span<const uint8_t> pk);

// public key for a secret: X25519(sk, base point 9)
Bytes x25519_base(std::span<const uint8_t> sk);

}  // namespace tlsn::algebra

#endif
