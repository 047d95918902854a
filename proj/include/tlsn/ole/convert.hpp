#ifndef TLSN_OLE_CONVERT_HPP_
#define TLSN_OLE_CONVERT_HPP_

#include "tlsn/ole/ole.hpp"

namespace tlsn::ole {

// A2M / M2A share conversion. The "zholder" endpoint samples the fresh
// share z; by convention that is the Notary side unless the handshake's
// dual execution swaps the roles.

struct Malice {
    bool zero_ole_input = false;  // feed 0 into the conversion OLE
};

// additive -> multiplicative: returns z with z_zholder * z_other = x_z + x_o.
// zholder samples z, inverts it and plays OLE sender twice:
//   OLE1 (a = z^-1, b = r) against the peer's x share,
//   OLE2 (a = z^-1 * x_own, b = -r) against the constant 1,
// then proves its OLE inputs nonzero. The peer's sum u1+u2 is
// z^-1 * (x_z + x_o); a zero total surfaces as ZeroSum on both sides.
template <class Ops>
typename Ops::Elem a2m_zholder(sim::Endpoint& ch, const Ops& ops,
                               const algebra::CurveParams& ot_curve,
                               const typename Ops::Elem& x_own, Prg& rng) {
    ops.check(x_own);
    typename Ops::Elem z = ops.random_nonzero(rng);
    typename Ops::Elem w = ops.inv(z);
    typename Ops::Elem r = ops.random(rng);

    auto v1 = run_ole_sender(ch, ops, ot_curve, w, r, rng, "a2m");
    run_ole_sender(ch, ops, ot_curve, ops.mul(w, x_own), ops.neg(r), rng, "a2m");

    std::vector<OleSenderView<Ops>> checked{v1};
    zero_check_prove_sender(ch, ops, ot_curve, std::span<const OleSenderView<Ops>>(checked), rng);

    auto status = ch.recv("a2m_status");
    if (status.fields().at(0) != str_bytes("ok"))
        throw ProtocolError(errc::ZeroSum, "additive shares sum to zero", "a2m");
    return z;
}

template <class Ops>
typename Ops::Elem a2m_other(sim::Endpoint& ch, const Ops& ops,
                             const algebra::CurveParams& ot_curve,
                             const typename Ops::Elem& x_own, Prg& rng) {
    ops.check(x_own);
    auto v1 = run_ole_receiver(ch, ops, ot_curve, x_own, rng, "a2m");
    auto v2 = run_ole_receiver(ch, ops, ot_curve, ops.one(), rng, "a2m");

    std::vector<OleReceiverView<Ops>> checked{v1};
    zero_check_verify_sender(ch, ops, ot_curve, std::span<const OleReceiverView<Ops>>(checked), rng);

    typename Ops::Elem z = ops.add(v1.y, v2.y);
    bool zero = ops.is_zero(z);
    ch.send("a2m", "a2m_status", {str_bytes(zero ? "zero" : "ok")});
    if (zero) throw ProtocolError(errc::ZeroSum, "additive shares sum to zero", "a2m");
    return z;
}

// multiplicative -> additive: returns z with z_zholder + z_other = x_z * x_o.
// One OLE (a = x_own, b = -z) plus the paper's zero check in both
// directions, so either party feeding a zero multiplicative share aborts.
template <class Ops>
typename Ops::Elem m2a_zholder(sim::Endpoint& ch, const Ops& ops,
                               const algebra::CurveParams& ot_curve,
                               const typename Ops::Elem& x_own, Prg& rng,
                               Malice malice = {}) {
    ops.check(x_own);
    typename Ops::Elem z = ops.random(rng);
    typename Ops::Elem a = malice.zero_ole_input ? ops.zero() : x_own;
    auto view = run_ole_sender(ch, ops, ot_curve, a, ops.neg(z), rng, "m2a");

    std::vector<OleSenderView<Ops>> own{view};
    zero_check_prove_sender(ch, ops, ot_curve, std::span<const OleSenderView<Ops>>(own), rng);
    zero_check_verify_receiver(ch, ops, ot_curve, std::span<const OleSenderView<Ops>>(own), rng);
    return z;
}

template <class Ops>
typename Ops::Elem m2a_other(sim::Endpoint& ch, const Ops& ops,
                             const algebra::CurveParams& ot_curve,
                             const typename Ops::Elem& x_own, Prg& rng, Malice malice = {}) {
    ops.check(x_own);
    typename Ops::Elem x = malice.zero_ole_input ? ops.zero() : x_own;
    auto view = run_ole_receiver(ch, ops, ot_curve, x, rng, "m2a");

    std::vector<OleReceiverView<Ops>> own{view};
    zero_check_verify_sender(ch, ops, ot_curve, std::span<const OleReceiverView<Ops>>(own), rng);
    zero_check_prove_receiver(ch, ops, ot_curve, std::span<const OleReceiverView<Ops>>(own), rng);
    return view.y;
}

}  // namespace tlsn::ole

#endif
