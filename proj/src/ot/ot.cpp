#include "tlsn/ot/ot.hpp"

#include "tlsn/errors.hpp"

namespace tlsn::ot {

using algebra::CurveParams;
using algebra::CurvePoint;
using algebra::FieldElement;

namespace {

constexpr size_t kTagLen = 8;

// SHA-256 counter keystream keyed on the encoded ECDH point
void xor_keystream(const CurvePoint& key, std::span<uint8_t> body) {
    Bytes input = key.encode();
    size_t base = input.size();
    input.resize(base + 10);
    std::memcpy(input.data() + base, "ot-pad", 6);
    base += 6;
    for (uint32_t blk = 0; blk * 32 < body.size(); ++blk) {
        for (int i = 0; i < 4; ++i) input[base + i] = static_cast<uint8_t>(blk >> (8 * i));
        Digest d = sha256(input);
        size_t off = blk * size_t{32};
        size_t take = std::min(body.size() - off, size_t{32});
        for (size_t i = 0; i < take; ++i) body[off + i] ^= d[i];
    }
}

Bytes seal(const CurvePoint& key, std::span<const uint8_t> msg) {
    Bytes body(msg.begin(), msg.end());
    body.resize(msg.size() + kTagLen, 0);
    xor_keystream(key, body);
    return body;
}

Bytes open_checked(const CurvePoint& key, std::span<const uint8_t> cipher) {
    auto m = try_open_cipher(key, cipher);
    if (!m)
        throw ProtocolError(errc::DecryptionFailure, "OT ciphertext failed its tag check");
    return *m;
}

Bytes hex_field(const CurvePoint& p) { return hex_bytes(p.encode()); }

CurvePoint point_from_hex_field(const CurveParams& curve, const Bytes& field) {
    return CurvePoint::decode(curve, unhex_field(field));
}

// One ephemeral sender key covers a whole batch; each transfer still uses a
// fresh receiver key. The second sender secret c_sk * C_pk equals
// (c_sk^2) * G, which stays on the fixed base.
void send_batch_impl(sim::Endpoint& ch, const CurveParams& curve,
                     std::span<const OtSenderInput> inputs, const FieldElement& c_sk,
                     std::string_view phase) {
    const size_t n = inputs.size();
    for (const auto& in : inputs)
        if (in.m0.size() != in.m1.size())
            throw std::invalid_argument("OT messages must have equal length");

    auto g = CurvePoint::generator(curve);
    CurvePoint c_pk = ec_scalar_mul(c_sk, g);
    CurvePoint shift = ec_scalar_mul(c_sk * c_sk, g);
    ch.send(phase, "ot_sender_pk", {hex_field(c_pk)});

    auto reply = ch.recv("ot_receiver_pk");
    auto rfields = reply.fields();
    if (rfields.size() != n) throw ProtocolError(errc::ChannelError, "OT batch size mismatch");

    std::vector<Bytes> cipher_fields;
    cipher_fields.reserve(2 * n);
    for (size_t i = 0; i < n; ++i) {
        CurvePoint n_pk = point_from_hex_field(curve, rfields[i]);
        CurvePoint k0 = ec_scalar_mul(c_sk, n_pk);
        CurvePoint k1 = k0 - shift;
        cipher_fields.push_back(hex_bytes(seal(k0, inputs[i].m0)));
        cipher_fields.push_back(hex_bytes(seal(k1, inputs[i].m1)));
    }
    ch.send(phase, "ot_cipher", cipher_fields);
}

}  // namespace

std::optional<Bytes> try_open_cipher(const CurvePoint& key, std::span<const uint8_t> cipher) {
    if (cipher.size() < kTagLen) return std::nullopt;
    Bytes body(cipher.begin(), cipher.end());
    xor_keystream(key, body);
    for (size_t i = body.size() - kTagLen; i < body.size(); ++i)
        if (body[i] != 0) return std::nullopt;
    body.resize(body.size() - kTagLen);
    return body;
}

void base_ot_send(sim::Endpoint& ch, const CurveParams& curve,
                  std::span<const OtSenderInput> inputs, Prg& rng, std::string_view phase) {
    send_batch_impl(ch, curve, inputs, FieldElement::random_nonzero(*curve.scalar, rng), phase);
}

std::vector<Bytes> base_ot_recv(sim::Endpoint& ch, const CurveParams& curve,
                                const std::vector<bool>& choices, Prg& rng, std::string_view phase) {
    const size_t n = choices.size();
    auto msg = ch.recv("ot_sender_pk");
    auto pk_fields = msg.fields();
    if (pk_fields.size() != 1) throw ProtocolError(errc::ChannelError, "OT batch header mismatch");

    auto g = CurvePoint::generator(curve);
    CurvePoint c_pk = point_from_hex_field(curve, pk_fields[0]);
    algebra::PointWindow window(c_pk);

    std::vector<FieldElement> sks(n);
    std::vector<Bytes> reply(n);
    for (size_t i = 0; i < n; ++i) {
        sks[i] = FieldElement::random_nonzero(*curve.scalar, rng);
        CurvePoint n_pk = ec_scalar_mul(sks[i], g);
        if (choices[i]) n_pk = c_pk + n_pk;
        reply[i] = hex_field(n_pk);
    }
    ch.send(phase, "ot_receiver_pk", reply);

    auto cmsg = ch.recv("ot_cipher");
    auto cf = cmsg.fields();
    if (cf.size() != 2 * n) throw ProtocolError(errc::ChannelError, "OT cipher count mismatch");

    std::vector<Bytes> out(n);
    for (size_t i = 0; i < n; ++i) {
        CurvePoint kb = window.mul(sks[i]);
        const Bytes& chosen = cf[2 * i + (choices[i] ? 1 : 0)];
        out[i] = open_checked(kb, unhex_field(chosen));
    }
    return out;
}

void run_base_ot_sender(sim::Endpoint& ch, const CurveParams& curve, const OtSenderInput& input,
                        Prg& rng) {
    base_ot_send(ch, curve, std::span(&input, 1), rng);
}

Bytes run_base_ot_receiver(sim::Endpoint& ch, const CurveParams& curve, bool choice, Prg& rng) {
    return base_ot_recv(ch, curve, std::vector<bool>{choice}, rng)[0];
}

std::vector<Bytes> cot_send(sim::Endpoint& ch, const CurveParams& curve,
                            std::span<const uint8_t> delta, size_t count, Prg& rng) {
    if (delta.empty()) throw std::invalid_argument("COT correlation must be nonempty");
    std::vector<OtSenderInput> inputs(count);
    std::vector<Bytes> rs(count);
    for (size_t i = 0; i < count; ++i) {
        rs[i] = rng.bytes(delta.size());
        inputs[i].m0 = rs[i];
        inputs[i].m1 = rs[i];
        for (size_t j = 0; j < delta.size(); ++j) inputs[i].m1[j] ^= delta[j];
    }
    base_ot_send(ch, curve, inputs, rng);
    return rs;
}

std::vector<Bytes> cot_recv(sim::Endpoint& ch, const CurveParams& curve,
                            const std::vector<bool>& choices, Prg& rng) {
    return base_ot_recv(ch, curve, choices, rng);
}

CommittedOtSeed make_committed_seed(Prg& rng) {
    CommittedOtSeed s;
    s.rho = rng.bytes(32);
    s.salt = notarize::random_salt(rng);
    s.com_rho = notarize::commit_payload(s.rho, s.salt);
    return s;
}

FieldElement committed_scalar(const CurveParams& curve, std::span<const uint8_t> rho,
                              uint64_t counter) {
    Bytes seed(rho.begin(), rho.end());
    append_u64le(seed, counter);
    Prg prg(std::move(seed), "cot-scalar");
    return FieldElement::random_nonzero(*curve.scalar, prg);
}

void committed_ot_send(sim::Endpoint& ch, const CurveParams& curve,
                       std::span<const OtSenderInput> inputs, std::span<const uint8_t> rho,
                       uint64_t schedule_base, std::string_view phase) {
    send_batch_impl(ch, curve, inputs, committed_scalar(curve, rho, schedule_base), phase);
}

CommittedRecvResult committed_ot_recv(sim::Endpoint& ch, const CurveParams& curve,
                                      const std::vector<bool>& choices, Prg& rng,
                                      uint64_t schedule_base, std::string_view phase) {
    const size_t n = choices.size();
    CommittedRecvResult res;
    res.record.schedule_base = schedule_base;
    res.record.choices.assign(choices.begin(), choices.end());

    auto msg = ch.recv("ot_sender_pk");
    auto pk_fields = msg.fields();
    if (pk_fields.size() != 1) throw ProtocolError(errc::ChannelError, "OT batch header mismatch");

    auto g = CurvePoint::generator(curve);
    CurvePoint c_pk = point_from_hex_field(curve, pk_fields[0]);
    algebra::PointWindow window(c_pk);
    res.record.sender_pk = pk_fields[0];

    std::vector<FieldElement> sks(n);
    std::vector<Bytes> reply(n);
    for (size_t i = 0; i < n; ++i) {
        sks[i] = FieldElement::random_nonzero(*curve.scalar, rng);
        CurvePoint n_pk = ec_scalar_mul(sks[i], g);
        if (choices[i]) n_pk = c_pk + n_pk;
        reply[i] = hex_field(n_pk);
    }
    res.record.receiver_pks = reply;
    ch.send(phase, "ot_receiver_pk", reply);

    auto cmsg = ch.recv("ot_cipher");
    auto cf = cmsg.fields();
    if (cf.size() != 2 * n) throw ProtocolError(errc::ChannelError, "OT cipher count mismatch");
    res.record.ciphers = cf;

    res.messages.resize(n);
    for (size_t i = 0; i < n; ++i) {
        CurvePoint kb = window.mul(sks[i]);
        const Bytes& chosen = cf[2 * i + (choices[i] ? 1 : 0)];
        res.messages[i] = open_checked(kb, unhex_field(chosen));
    }
    return res;
}

bool committed_ot_replay(const CommittedBatchRecord& record, const CurveParams& curve,
                         std::span<const uint8_t> rho, std::span<const OtSenderInput> expected) {
    const size_t n = record.choices.size();
    if (expected.size() != n || record.receiver_pks.size() != n || record.ciphers.size() != 2 * n)
        return false;
    auto g = CurvePoint::generator(curve);
    FieldElement sk = committed_scalar(curve, rho, record.schedule_base);
    CurvePoint pk = ec_scalar_mul(sk, g);
    if (hex_field(pk) != record.sender_pk) return false;
    CurvePoint shift = ec_scalar_mul(sk * sk, g);
    for (size_t i = 0; i < n; ++i) {
        CurvePoint n_pk = point_from_hex_field(curve, record.receiver_pks[i]);
        CurvePoint k0 = ec_scalar_mul(sk, n_pk);
        CurvePoint k1 = k0 - shift;
        if (hex_bytes(seal(k0, expected[i].m0)) != record.ciphers[2 * i]) return false;
        if (hex_bytes(seal(k1, expected[i].m1)) != record.ciphers[2 * i + 1]) return false;
    }
    return true;
}

}  // namespace tlsn::ot
