#ifndef TLSN_CIRCUITS_LIBRARY_HPP_
#define TLSN_CIRCUITS_LIBRARY_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "tlsn/circuits/circuit.hpp"

namespace tlsn::circuits {

// 2x2 bit multiplier, groups a:2 b:2, 4 output bits; 6 AND + 2 XOR.
CircuitBundle build_multiplier_bundle();

// Desk block cipher: 16-bit block, 32-bit key SPN, 4 rounds of
// (xor round key, 4-bit S-box per nibble, rotl 3) plus final whitening.
// Groups key:32 block:16.
CircuitBundle build_toy_cipher_circuit();

// Software implementation of the same SPN (the plain oracle).
uint16_t toy_cipher_encrypt(uint32_t key, uint16_t block);

// Bit equality comparator: groups a:w b:w, one output bit (a == b).
CircuitBundle build_equality_circuit(uint32_t width);

// CTR-mode block circuits with the counter block folded in as constants.
// Key arrives as two shares: key = kc xor kn.
//   encrypt: f(kc, kn, p) = Enc(kc^kn, ctr) ^ p        groups kc:32 kn:32 p:16
//   mask:    f(kc, kn, z) = Enc(kc^kn, ctr) ^ z        groups kc:32 kn:32 z:16
// Both expose the pre-xor cipher output as tap "ectr".
CircuitBundle build_ctr_encrypt_circuit(uint16_t ctr_block);
CircuitBundle build_ctr_mask_circuit(uint16_t ctr_block);

// Consistency comparator for the decryption proof: groups p:16 ectr:16,
// one output bit ((p ^ ectr) == c) with the public ciphertext block folded in.
CircuitBundle build_xor_equals_const_circuit(uint16_t c_block);

// (a + b) mod p over w-bit inputs, w = bit length of p; w output bits.
// Groups a:w b:w. Used by the session key schedule.
CircuitBundle build_add_mod_circuit(const boost::multiprecision::uint512_t& modulus);

// Session key schedule: k32 = low16(pms) || (low16(pms) ^ 0xA5C3), computed
// from additive pms shares and xor-masked with the client mask:
// f(sc, m, sn) = kdf((sc + sn) mod p) ^ m. Groups sc:w m:32 sn:w, 32 outputs.
CircuitBundle build_key_schedule_circuit(const boost::multiprecision::uint512_t& modulus);

// The same schedule as plain software, for the mock server.
uint32_t key_schedule(const boost::multiprecision::uint512_t& pms);

}  // namespace tlsn::circuits

#endif
