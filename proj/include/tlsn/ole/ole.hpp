#ifndef TLSN_OLE_OLE_HPP_
#define TLSN_OLE_OLE_HPP_

#include "tlsn/algebra/field.hpp"
#include "tlsn/algebra/gf2k.hpp"
#include "tlsn/errors.hpp"
#include "tlsn/ot/ot.hpp"

namespace tlsn::ole {

// Field plugs. OLE, the zero check and the share conversions are generic
// over Z_p and GF(2^k) through these two adapters.

struct FeOps {
    using Elem = algebra::FieldElement;
    const algebra::PrimeField* field;

    explicit FeOps(const algebra::PrimeField& f) : field(&f) {}
    unsigned width() const { return field->bits; }
    const char* tag() const { return field->id.c_str(); }
    Elem zero() const { return Elem::from_u64(*field, 0); }
    Elem one() const { return Elem::from_u64(*field, 1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return a.neg(); }
    Elem inv(const Elem& a) const { return algebra::fe_inv(a); }
    Elem random(Prg& prg) const { return Elem::random(*field, prg); }
    Elem random_nonzero(Prg& prg) const { return Elem::random_nonzero(*field, prg); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool coord(const Elem& x, unsigned i) const { return x.bit(i); }
    Elem basis_step(const Elem& t) const { return t + t; }
    Bytes encode(const Elem& a) const { return a.encode(); }
    Elem decode(std::span<const uint8_t> raw) const { return Elem::decode(*field, raw); }
    void check(const Elem& a) const {
        if (&a.field() != field) throw ProtocolError(errc::FieldMismatch, "OLE input from wrong field");
    }
};

struct GfOps {
    using Elem = algebra::Gf2kElement;
    algebra::Gf2kId id;

    explicit GfOps(algebra::Gf2kId i) : id(i) {}
    unsigned width() const { return algebra::gf2k_width(id); }
    const char* tag() const { return algebra::gf2k_name(id); }
    Elem zero() const { return Elem::zero(id); }
    Elem one() const { return Elem::one(id); }
    Elem add(const Elem& a, const Elem& b) const { return a ^ b; }
    Elem sub(const Elem& a, const Elem& b) const { return a ^ b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    Elem random(Prg& prg) const { return Elem::random(id, prg); }
    Elem random_nonzero(Prg& prg) const { return Elem::random_nonzero(id, prg); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool coord(const Elem& x, unsigned i) const { return x.coord(i); }
    Elem basis_step(const Elem& t) const { return t.mulx(); }
    Bytes encode(const Elem& a) const { return a.encode(); }
    Elem decode(std::span<const uint8_t> raw) const { return Elem::decode(id, raw); }
    void check(const Elem& a) const {
        if (a.id() != id) throw ProtocolError(errc::FieldMismatch, "OLE input from wrong field");
    }
};

// Party views of an executed OLE y = a*x + b; retained for the zero check.
template <class Ops>
struct OleSenderView {
    typename Ops::Elem a, b;
};
template <class Ops>
struct OleReceiverView {
    typename Ops::Elem x, y;
};

namespace detail {
template <class Ops>
Bytes hex_elem(const Ops& ops, const typename Ops::Elem& e) {
    return str_bytes(to_hex(ops.encode(e)));
}
template <class Ops>
typename Ops::Elem elem_from_hex(const Ops& ops, const Bytes& field) {
    return ops.decode(from_hex(std::string(field.begin(), field.end())));
}
}  // namespace detail

// ---- OLE (Gilboa decomposition over base OTs) --------------------------
//
// One OT per basis coordinate of the receiver input: message pair for
// coordinate i is (s_i, s_i + a*2^i), with the s_i summing to b.

template <class Ops>
void ole_send(sim::Endpoint& ch, const Ops& ops, const algebra::CurveParams& ot_curve,
              const typename Ops::Elem& a, const typename Ops::Elem& b, Prg& rng,
              std::string_view phase = "ole") {
    ops.check(a);
    ops.check(b);
    ch.send(phase, "ole_init", {str_bytes(ops.tag())});

    const unsigned k = ops.width();
    std::vector<typename Ops::Elem> shares(k);
    typename Ops::Elem acc = ops.zero();
    for (unsigned i = 1; i < k; ++i) {
        shares[i] = ops.random(rng);
        acc = ops.add(acc, shares[i]);
    }
    shares[0] = ops.sub(b, acc);

    std::vector<ot::OtSenderInput> inputs(k);
    typename Ops::Elem step = a;
    for (unsigned i = 0; i < k; ++i) {
        inputs[i].m0 = ops.encode(shares[i]);
        inputs[i].m1 = ops.encode(ops.add(shares[i], step));
        step = ops.basis_step(step);
    }
    ot::base_ot_send(ch, ot_curve, inputs, rng, phase);
}

template <class Ops>
typename Ops::Elem ole_recv(sim::Endpoint& ch, const Ops& ops,
                            const algebra::CurveParams& ot_curve, const typename Ops::Elem& x,
                            Prg& rng, std::string_view phase = "ole") {
    ops.check(x);
    auto init = ch.recv("ole_init");
    auto fields = init.fields();
    if (fields.size() != 1 || fields[0] != str_bytes(ops.tag()))
        throw ProtocolError(errc::FieldMismatch, "OLE peers disagree on the field");

    const unsigned k = ops.width();
    std::vector<bool> choices(k);
    for (unsigned i = 0; i < k; ++i) choices[i] = ops.coord(x, i);
    auto transfers = ot::base_ot_recv(ch, ot_curve, choices, rng, phase);

    typename Ops::Elem y = ops.zero();
    for (unsigned i = 0; i < k; ++i) y = ops.add(y, ops.decode(transfers[i]));
    return y;
}

// convenience wrappers that retain the protocol views
template <class Ops>
OleSenderView<Ops> run_ole_sender(sim::Endpoint& ch, const Ops& ops,
                                  const algebra::CurveParams& ot_curve,
                                  const typename Ops::Elem& a, const typename Ops::Elem& b,
                                  Prg& rng, std::string_view phase = "ole") {
    ole_send(ch, ops, ot_curve, a, b, rng, phase);
    return {a, b};
}

template <class Ops>
OleReceiverView<Ops> run_ole_receiver(sim::Endpoint& ch, const Ops& ops,
                                      const algebra::CurveParams& ot_curve,
                                      const typename Ops::Elem& x, Prg& rng,
                                      std::string_view phase = "ole") {
    return {x, ole_recv(ch, ops, ot_curve, x, rng, phase)};
}

// ---- ROLE: both inputs pseudorandom from the party seeds ----------------

template <class Ops>
OleSenderView<Ops> run_role_sender(sim::Endpoint& ch, const Ops& ops,
                                   const algebra::CurveParams& ot_curve, Prg& rng,
                                   std::string_view phase = "ole") {
    typename Ops::Elem a = ops.random(rng), b = ops.random(rng);
    return run_ole_sender(ch, ops, ot_curve, a, b, rng, phase);
}

template <class Ops>
OleReceiverView<Ops> run_role_receiver(sim::Endpoint& ch, const Ops& ops,
                                       const algebra::CurveParams& ot_curve, Prg& rng,
                                       std::string_view phase = "ole") {
    typename Ops::Elem x = ops.random(rng);
    return run_ole_receiver(ch, ops, ot_curve, x, rng, phase);
}

// ---- VOLE: n OLE relations sharing one receiver x ------------------------

template <class Ops>
void run_vole_sender(sim::Endpoint& ch, const Ops& ops, const algebra::CurveParams& ot_curve,
                     std::span<const typename Ops::Elem> a, std::span<const typename Ops::Elem> b,
                     Prg& rng) {
    if (a.size() != b.size())
        throw ProtocolError(errc::LengthMismatch, "VOLE vectors differ in length");
    for (size_t i = 0; i < a.size(); ++i) ole_send(ch, ops, ot_curve, a[i], b[i], rng);
}

template <class Ops>
std::vector<typename Ops::Elem> run_vole_receiver(sim::Endpoint& ch, const Ops& ops,
                                                  const algebra::CurveParams& ot_curve,
                                                  const typename Ops::Elem& x, size_t n,
                                                  Prg& rng) {
    std::vector<typename Ops::Elem> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(ole_recv(ch, ops, ot_curve, x, rng));
    return out;
}

// ---- zero-input detection -------------------------------------------------
//
// Checks that the checker party fed no zero into the base OLEs. One masking
// ROLE (index 0) joins the bases, then one mirrored OLE per base where the
// checker inputs the inverse of its base input and the verifier feeds back
// its base output. The checker publishes
//     s = -sum inv(a_k) * b_k  -  sum b'_k
// and the verifier asserts sum x_k == s + sum y'_k; with the roles of the
// base OLEs swapped the same construction checks the receiver inputs.
// A checker holding a zero input has to guess the verifier's secret to make
// the sum close, so detection fails with probability 1/|F|.

template <class Ops>
void zero_check_prove_sender(sim::Endpoint& ch, const Ops& ops,
                             const algebra::CurveParams& ot_curve,
                             std::span<const OleSenderView<Ops>> base, Prg& rng) {
    std::vector<OleSenderView<Ops>> all(base.begin(), base.end());
    all.push_back(run_role_sender(ch, ops, ot_curve, rng, "zero-check"));

    typename Ops::Elem s = ops.zero();
    for (const auto& v : all) {
        // a zero input has no inverse; claim a random one and face detection
        typename Ops::Elem ainv =
            ops.is_zero(v.a) ? ops.random_nonzero(rng) : ops.inv(v.a);
        auto mirror = run_ole_sender(ch, ops, ot_curve, ainv, ops.random(rng), rng, "zero-check");
        s = ops.sub(s, ops.mul(ainv, v.b));
        s = ops.sub(s, mirror.b);
    }
    ch.send("zero-check", "zc_s", {detail::hex_elem(ops, s)});
    auto verdict = ch.recv("zc_verdict");
    if (verdict.fields().at(0) != str_bytes("ok"))
        throw ProtocolError(errc::ZeroInputDetected, "peer rejected the zero check", "zero-check");
}

template <class Ops>
void zero_check_verify_sender(sim::Endpoint& ch, const Ops& ops,
                              const algebra::CurveParams& ot_curve,
                              std::span<const OleReceiverView<Ops>> base, Prg& rng) {
    std::vector<OleReceiverView<Ops>> all(base.begin(), base.end());
    all.push_back(run_role_receiver(ch, ops, ot_curve, rng, "zero-check"));

    typename Ops::Elem lhs = ops.zero(), mirror_sum = ops.zero();
    for (const auto& v : all) {
        auto mirror = run_ole_receiver(ch, ops, ot_curve, v.y, rng, "zero-check");
        lhs = ops.add(lhs, v.x);
        mirror_sum = ops.add(mirror_sum, mirror.y);
    }
    auto smsg = ch.recv("zc_s");
    typename Ops::Elem s = detail::elem_from_hex(ops, smsg.fields().at(0));
    bool ok = lhs == ops.add(s, mirror_sum);
    ch.send("zero-check", "zc_verdict", {str_bytes(ok ? "ok" : "fail")});
    if (!ok)
        throw ProtocolError(errc::ZeroInputDetected, "zero OLE sender input detected", "zero-check");
}

template <class Ops>
void zero_check_prove_receiver(sim::Endpoint& ch, const Ops& ops,
                               const algebra::CurveParams& ot_curve,
                               std::span<const OleReceiverView<Ops>> base, Prg& rng) {
    std::vector<OleReceiverView<Ops>> all(base.begin(), base.end());
    all.push_back(run_role_receiver(ch, ops, ot_curve, rng, "zero-check"));

    typename Ops::Elem s = ops.zero();
    for (const auto& v : all) {
        typename Ops::Elem xinv =
            ops.is_zero(v.x) ? ops.random_nonzero(rng) : ops.inv(v.x);
        auto mirror = run_ole_sender(ch, ops, ot_curve, xinv, ops.random(rng), rng, "zero-check");
        s = ops.add(s, ops.mul(v.y, xinv));
        s = ops.add(s, mirror.b);
    }
    ch.send("zero-check", "zc_s", {detail::hex_elem(ops, s)});
    auto verdict = ch.recv("zc_verdict");
    if (verdict.fields().at(0) != str_bytes("ok"))
        throw ProtocolError(errc::ZeroInputDetected, "peer rejected the zero check", "zero-check");
}

template <class Ops>
void zero_check_verify_receiver(sim::Endpoint& ch, const Ops& ops,
                                const algebra::CurveParams& ot_curve,
                                std::span<const OleSenderView<Ops>> base, Prg& rng) {
    std::vector<OleSenderView<Ops>> all(base.begin(), base.end());
    all.push_back(run_role_sender(ch, ops, ot_curve, rng, "zero-check"));

    typename Ops::Elem rhs = ops.zero();
    for (const auto& v : all) {
        auto mirror = run_ole_receiver(ch, ops, ot_curve, v.b, rng, "zero-check");
        rhs = ops.add(rhs, ops.add(v.a, mirror.y));
    }
    auto smsg = ch.recv("zc_s");
    typename Ops::Elem s = detail::elem_from_hex(ops, smsg.fields().at(0));
    bool ok = s == rhs;
    ch.send("zero-check", "zc_verdict", {str_bytes(ok ? "ok" : "fail")});
    if (!ok)
        throw ProtocolError(errc::ZeroInputDetected, "zero OLE receiver input detected", "zero-check");
}

}  // namespace tlsn::ole

#endif
