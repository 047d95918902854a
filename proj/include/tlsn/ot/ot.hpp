#ifndef TLSN_OT_OT_HPP_
#define TLSN_OT_OT_HPP_

#include "tlsn/algebra/curve.hpp"
#include "tlsn/notarize/commit.hpp"
#include "tlsn/sim/channel.hpp"

namespace tlsn::ot {

// ECDH-based 1-of-2 base OT. The sender's two messages are equal-length
// byte strings (wire labels in practice); encryption is a SHA-256 keystream
// over the ECDH secret with an 8-byte zero tag so the receiver can tell a
// valid decryption apart.

struct OtSenderInput {
    Bytes m0, m1;
};

// Batched interface: one pk message per side plus one ciphertext message for
// the whole batch. A batch of one is the plain protocol.
void base_ot_send(sim::Endpoint& ch, const algebra::CurveParams& curve,
                  std::span<const OtSenderInput> inputs, Prg& rng,
                  std::string_view phase = "ot");
std::vector<Bytes> base_ot_recv(sim::Endpoint& ch, const algebra::CurveParams& curve,
                                const std::vector<bool>& choices, Prg& rng,
                                std::string_view phase = "ot");

// single transfer
void run_base_ot_sender(sim::Endpoint& ch, const algebra::CurveParams& curve,
                        const OtSenderInput& input, Prg& rng);
Bytes run_base_ot_receiver(sim::Endpoint& ch, const algebra::CurveParams& curve, bool choice,
                           Prg& rng);

// test hook: keystream decrypt + tag check for a recorded ciphertext
std::optional<Bytes> try_open_cipher(const algebra::CurvePoint& key, std::span<const uint8_t> cipher);

// Correlated OT: sender ends with random r, receiver with r xor delta*b.
std::vector<Bytes> cot_send(sim::Endpoint& ch, const algebra::CurveParams& curve,
                            std::span<const uint8_t> delta, size_t count, Prg& rng);
std::vector<Bytes> cot_recv(sim::Endpoint& ch, const algebra::CurveParams& curve,
                            const std::vector<bool>& choices, Prg& rng);

// ---- committed OT -----------------------------------------------------

struct CommittedOtSeed {
    Bytes rho;   // 32 bytes
    Bytes salt;  // commitment salt, stays sender-side until opening
    notarize::Commitment com_rho;
};

CommittedOtSeed make_committed_seed(Prg& rng);

// Receiver-side record of one committed batch; enough to replay the sender
// bytes once rho is opened.
struct CommittedBatchRecord {
    uint64_t schedule_base = 0;  // counter base into PRG(rho)
    Bytes sender_pk;
    std::vector<Bytes> receiver_pks;
    std::vector<Bytes> ciphers;  // c0, c1 interleaved
    std::vector<bool> choices;
};

struct CommittedRecvResult {
    std::vector<Bytes> messages;
    CommittedBatchRecord record;
};

// Sender randomness (ephemeral scalars) comes from PRG(rho) at a fixed
// counter schedule; schedule_base advances by the batch size.
void committed_ot_send(sim::Endpoint& ch, const algebra::CurveParams& curve,
                       std::span<const OtSenderInput> inputs, std::span<const uint8_t> rho,
                       uint64_t schedule_base, std::string_view phase = "ot");
CommittedRecvResult committed_ot_recv(sim::Endpoint& ch, const algebra::CurveParams& curve,
                                      const std::vector<bool>& choices, Prg& rng,
                                      uint64_t schedule_base, std::string_view phase = "ot");

// Replays the sender side of a recorded batch from rho and the expected
// message pairs; true iff every recorded byte matches.
bool committed_ot_replay(const CommittedBatchRecord& record, const algebra::CurveParams& curve,
                         std::span<const uint8_t> rho,
                         std::span<const OtSenderInput> expected);

// scalar schedule shared by send and replay
algebra::FieldElement committed_scalar(const algebra::CurveParams& curve,
                                       std::span<const uint8_t> rho, uint64_t counter);

}  // namespace tlsn::ot

#endif
