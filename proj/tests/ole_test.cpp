#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlsn/ole/convert.hpp"
#include "tlsn/sim/runner.hpp"

using namespace tlsn;
using namespace tlsn::algebra;
using namespace tlsn::ole;
using sim::Party;

namespace {

const CurveParams& otCurve() { return curve("toy"); }

template <class Ops, class SenderFn, class ReceiverFn>
sim::RunResult run_pair(SenderFn sender, ReceiverFn receiver) {
    sim::SessionContext ctx(1, false);
    sim::Channel ch(ctx, Party::notary, Party::client);
    return sim::run_parties({{Party::notary, [&] { sender(ch.a()); }, {&ch.a()}},
                             {Party::client, [&] { receiver(ch.b()); }, {&ch.b()}}});
}

}  // namespace

TEST_CASE("base OT delivers m_b and only m_b") {
    Prg rng(42);
    const auto& c = otCurve();
    for (int trial = 0; trial < 50; ++trial) {
        sim::SessionContext ctx(1, false);
        sim::Channel ch(ctx, Party::client, Party::notary);
        ot::OtSenderInput in{rng.bytes(16), rng.bytes(16)};
        bool b = rng.bit();
        Bytes got;
        Prg srng = rng.child("s" + std::to_string(trial));
        Prg rrng = rng.child("r" + std::to_string(trial));
        auto res = sim::run_parties(
            {{Party::client, [&] { ot::run_base_ot_sender(ch.a(), c, in, srng); }, {&ch.a()}},
             {Party::notary, [&] { got = ot::run_base_ot_receiver(ch.b(), c, b, rrng); }, {&ch.b()}}});
        REQUIRE(res.ok());
        CHECK(got == (b ? in.m1 : in.m0));
    }
}

TEST_CASE("COT correlation r xor out = delta * b") {
    Prg rng(7);
    const auto& c = otCurve();
    Bytes delta = rng.bytes(16);
    std::vector<bool> choices;
    for (int i = 0; i < 64; ++i) choices.push_back(rng.bit());

    sim::SessionContext ctx(1, false);
    sim::Channel ch(ctx, Party::client, Party::notary);
    std::vector<Bytes> rs, outs;
    Prg srng = rng.child("s"), rrng = rng.child("r");
    auto res = sim::run_parties(
        {{Party::client, [&] { rs = ot::cot_send(ch.a(), c, delta, choices.size(), srng); }, {&ch.a()}},
         {Party::notary, [&] { outs = ot::cot_recv(ch.b(), c, choices, rrng); }, {&ch.b()}}});
    REQUIRE(res.ok());
    for (size_t i = 0; i < choices.size(); ++i) {
        Bytes expect = rs[i];
        if (choices[i])
            for (size_t j = 0; j < delta.size(); ++j) expect[j] ^= delta[j];
        CHECK(outs[i] == expect);
    }
}

TEST_CASE("OLE relation holds in both fields") {
    Prg rng(11);
    FeOps fe(prime_field("p256-base"));
    GfOps gf(Gf2kId::gf16);

    for (int trial = 0; trial < 8; ++trial) {
        auto a = fe.random(rng), b = fe.random(rng), x = fe.random(rng);
        FieldElement y;
        sim::SessionContext ctx(1, false);
        sim::Channel ch(ctx, Party::notary, Party::client);
        Prg srng = rng.child("fs" + std::to_string(trial));
        Prg rrng = rng.child("fr" + std::to_string(trial));
        auto res = sim::run_parties(
            {{Party::notary, [&] { ole_send(ch.a(), fe, otCurve(), a, b, srng); }, {&ch.a()}},
             {Party::client, [&] { y = ole_recv(ch.b(), fe, otCurve(), x, rrng); }, {&ch.b()}}});
        REQUIRE(res.ok());
        CHECK(y == a * x + b);
    }

    for (int trial = 0; trial < 50; ++trial) {
        auto a = gf.random(rng), b = gf.random(rng), x = gf.random(rng);
        Gf2kElement y;
        sim::SessionContext ctx(1, false);
        sim::Channel ch(ctx, Party::notary, Party::client);
        Prg srng = rng.child("gs" + std::to_string(trial));
        Prg rrng = rng.child("gr" + std::to_string(trial));
        auto res = sim::run_parties(
            {{Party::notary, [&] { ole_send(ch.a(), gf, otCurve(), a, b, srng); }, {&ch.a()}},
             {Party::client, [&] { y = ole_recv(ch.b(), gf, otCurve(), x, rrng); }, {&ch.b()}}});
        REQUIRE(res.ok());
        CHECK(y == ((a * x) ^ b));
    }
}

TEST_CASE("OLE with x = 0 returns b") {
    Prg rng(13);
    GfOps gf(Gf2kId::gf16);
    auto a = gf.random(rng), b = gf.random(rng);
    Gf2kElement y;
    sim::SessionContext ctx(1, false);
    sim::Channel ch(ctx, Party::notary, Party::client);
    Prg srng = rng.child("s"), rrng = rng.child("r");
    auto res = sim::run_parties(
        {{Party::notary, [&] { ole_send(ch.a(), gf, otCurve(), a, b, srng); }, {&ch.a()}},
         {Party::client, [&] { y = ole_recv(ch.b(), gf, otCurve(), gf.zero(), rrng); }, {&ch.b()}}});
    REQUIRE(res.ok());
    CHECK(y == b);
}

TEST_CASE("OLE implements OT with a = m1 - m0, b = m0") {
    Prg rng(17);
    FeOps fe(prime_field("toy-base"));
    auto m0 = fe.random(rng), m1 = fe.random(rng);
    for (int bit = 0; bit <= 1; ++bit) {
        FieldElement y;
        sim::SessionContext ctx(1, false);
        sim::Channel ch(ctx, Party::notary, Party::client);
        Prg srng = rng.child("s" + std::to_string(bit));
        Prg rrng = rng.child("r" + std::to_string(bit));
        auto x = FieldElement::from_u64(*fe.field, bit);
        auto res = sim::run_parties(
            {{Party::notary, [&] { ole_send(ch.a(), fe, otCurve(), m1 - m0, m0, srng); }, {&ch.a()}},
             {Party::client, [&] { y = ole_recv(ch.b(), fe, otCurve(), x, rrng); }, {&ch.b()}}});
        REQUIRE(res.ok());
        CHECK(y == (bit ? m1 : m0));
    }
}

TEST_CASE("zero check: honest pass, zero sender input detected") {
    Prg rng(23);
    GfOps gf(Gf2kId::gf16);
    const auto& c = otCurve();

    auto run_check = [&](bool malicious, int trial) {
        sim::SessionContext ctx(1, false);
        sim::Channel ch(ctx, Party::notary, Party::client);
        Prg srng = rng.child("s" + std::to_string(trial) + (malicious ? "m" : "h"));
        Prg rrng = rng.child("r" + std::to_string(trial) + (malicious ? "m" : "h"));
        auto a = malicious ? gf.zero() : gf.random_nonzero(srng);
        auto b = gf.random(srng);
        auto x = gf.random(rrng);
        return sim::run_parties(
            {{Party::notary,
              [&] {
                  auto v = run_ole_sender(ch.a(), gf, c, a, b, srng);
                  std::vector<OleSenderView<GfOps>> base{v};
                  zero_check_prove_sender(ch.a(), gf, c,
                                          std::span<const OleSenderView<GfOps>>(base), srng);
              },
              {&ch.a()}},
             {Party::client,
              [&] {
                  auto v = run_ole_receiver(ch.b(), gf, c, x, rrng);
                  std::vector<OleReceiverView<GfOps>> base{v};
                  zero_check_verify_sender(ch.b(), gf, c,
                                           std::span<const OleReceiverView<GfOps>>(base), rrng);
              },
              {&ch.b()}}});
    };

    int honest_pass = 0, malicious_caught = 0;
    for (int t = 0; t < 30; ++t) {
        if (run_check(false, t).ok()) ++honest_pass;
        if (run_check(true, t).aborted_with(errc::ZeroInputDetected)) ++malicious_caught;
    }
    CHECK(honest_pass == 30);
    CHECK(malicious_caught == 30);
}

TEST_CASE("a2m then m2a round trip preserves the secret") {
    Prg rng(31);
    FeOps fe(prime_field("p256-base"));
    GfOps gf(Gf2kId::gf16);
    const auto& c = otCurve();

    auto round_trip = [&](auto ops, int trial) {
        using Ops = decltype(ops);
        using Elem = typename Ops::Elem;
        Prg nrng = rng.child(std::string(ops.tag()) + "n" + std::to_string(trial));
        Prg crng = rng.child(std::string(ops.tag()) + "c" + std::to_string(trial));
        Elem xn = ops.random(nrng), xc = ops.random(crng);
        if (ops.is_zero(ops.add(xn, xc))) return true;  // ZeroSum domain exclusion

        Elem zn, zc, an, ac;
        {
            sim::SessionContext ctx(1, false);
            sim::Channel ch(ctx, Party::notary, Party::client);
            auto res = sim::run_parties(
                {{Party::notary, [&] { zn = a2m_zholder(ch.a(), ops, c, xn, nrng); }, {&ch.a()}},
                 {Party::client, [&] { zc = a2m_other(ch.b(), ops, c, xc, crng); }, {&ch.b()}}});
            if (!res.ok()) return false;
        }
        if (ops.mul(zn, zc) != ops.add(xn, xc)) return false;
        {
            sim::SessionContext ctx(2, false);
            sim::Channel ch(ctx, Party::notary, Party::client);
            auto res = sim::run_parties(
                {{Party::notary, [&] { an = m2a_zholder(ch.a(), ops, c, zn, nrng); }, {&ch.a()}},
                 {Party::client, [&] { ac = m2a_other(ch.b(), ops, c, zc, crng); }, {&ch.b()}}});
            if (!res.ok()) return false;
        }
        return ops.add(an, ac) == ops.add(xn, xc);
    };

    for (int t = 0; t < 5; ++t) CHECK(round_trip(fe, t));
    for (int t = 0; t < 20; ++t) CHECK(round_trip(gf, t));
}

TEST_CASE("a2m rejects a zero sum") {
    Prg rng(37);
    GfOps gf(Gf2kId::gf16);
    auto x = gf.random_nonzero(rng);
    sim::SessionContext ctx(1, false);
    sim::Channel ch(ctx, Party::notary, Party::client);
    Prg nrng = rng.child("n"), crng = rng.child("c");
    Gf2kElement zn, zc;
    auto res = sim::run_parties(
        {{Party::notary, [&] { zn = a2m_zholder(ch.a(), gf, otCurve(), x, nrng); }, {&ch.a()}},
         {Party::client, [&] { zc = a2m_other(ch.b(), gf, otCurve(), x, crng); }, {&ch.b()}}});
    CHECK(res.aborted_with(errc::ZeroSum));
}

TEST_CASE("m2a detects a zero multiplicative share from the receiver side") {
    Prg rng(41);
    GfOps gf(Gf2kId::gf16);
    int caught = 0;
    for (int t = 0; t < 20; ++t) {
        Prg nrng = rng.child("n" + std::to_string(t));
        Prg crng = rng.child("c" + std::to_string(t));
        auto xn = gf.random_nonzero(nrng), xc = gf.random_nonzero(crng);
        sim::SessionContext ctx(1, false);
        sim::Channel ch(ctx, Party::notary, Party::client);
        Gf2kElement zn, zc;
        auto res = sim::run_parties(
            {{Party::notary, [&] { zn = m2a_zholder(ch.a(), gf, otCurve(), xn, nrng); }, {&ch.a()}},
             {Party::client,
              [&] { zc = m2a_other(ch.b(), gf, otCurve(), xc, crng, Malice{true}); },
              {&ch.b()}}});
        if (res.aborted_with(errc::ZeroInputDetected)) ++caught;
    }
    CHECK(caught == 20);
}

TEST_CASE("VOLE equals elementwise OLE under one x") {
    Prg rng(43);
    GfOps gf(Gf2kId::gf16);
    const size_t n = 8;
    std::vector<Gf2kElement> a, b, y;
    for (size_t i = 0; i < n; ++i) {
        a.push_back(gf.random(rng));
        b.push_back(gf.random(rng));
    }
    auto x = gf.random(rng);
    sim::SessionContext ctx(1, false);
    sim::Channel ch(ctx, Party::notary, Party::client);
    Prg srng = rng.child("s"), rrng = rng.child("r");
    auto res = sim::run_parties(
        {{Party::notary,
          [&] {
              run_vole_sender(ch.a(), gf, otCurve(), std::span<const Gf2kElement>(a),
                              std::span<const Gf2kElement>(b), srng);
          },
          {&ch.a()}},
         {Party::client,
          [&] { y = run_vole_receiver(ch.b(), gf, otCurve(), x, n, rrng); },
          {&ch.b()}}});
    REQUIRE(res.ok());
    for (size_t i = 0; i < n; ++i) CHECK(y[i] == ((a[i] * x) ^ b[i]));
}

TEST_CASE("committed OT batch replays from rho and flags substitution") {
    Prg rng(47);
    const auto& c = otCurve();
    Prg seed_rng = rng.child("seed");
    auto seed = ot::make_committed_seed(seed_rng);

    std::vector<ot::OtSenderInput> inputs(8);
    std::vector<bool> choices(8);
    for (int i = 0; i < 8; ++i) {
        inputs[i] = {rng.bytes(16), rng.bytes(16)};
        choices[i] = rng.bit();
    }

    ot::CommittedRecvResult got;
    {
        sim::SessionContext ctx(1, false);
        sim::Channel ch(ctx, Party::notary, Party::client);
        Prg rrng = rng.child("r");
        auto res = sim::run_parties(
            {{Party::notary,
              [&] { ot::committed_ot_send(ch.a(), c, inputs, seed.rho, 100); },
              {&ch.a()}},
             {Party::client,
              [&] { got = ot::committed_ot_recv(ch.b(), c, choices, rrng, 100); },
              {&ch.b()}}});
        REQUIRE(res.ok());
    }
    for (int i = 0; i < 8; ++i) CHECK(got.messages[i] == (choices[i] ? inputs[i].m1 : inputs[i].m0));

    CHECK(notarize::verify_commitment(seed.com_rho, seed.rho, seed.salt));
    CHECK(ot::committed_ot_replay(got.record, c, seed.rho, inputs));

    // wrong rho fails the commitment and the replay
    Bytes bad = seed.rho;
    bad[0] ^= 1;
    CHECK_FALSE(notarize::verify_commitment(seed.com_rho, bad, seed.salt));
    CHECK_FALSE(ot::committed_ot_replay(got.record, c, bad, inputs));

    // sender substituting a message outside the schedule is caught
    auto tampered = inputs;
    tampered[3].m0[0] ^= 1;
    CHECK_FALSE(ot::committed_ot_replay(got.record, c, seed.rho, tampered));
}
