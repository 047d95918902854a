#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlsn/algebra/curve.hpp"
#include "tlsn/algebra/x25519.hpp"
#include "tlsn/circuits/library.hpp"

using namespace tlsn;
using namespace tlsn::algebra;

TEST_CASE("toy curve generator sanity") {
    const auto& c = curve("toy");
    auto g = CurvePoint::generator(c);
    CHECK(ec_scalar_mul(2, g) == g + g);
    CHECK(ec_scalar_mul(65171, g).is_identity());
    auto p2 = ec_scalar_mul(2, g);
    CHECK(p2.x().as_u64() == 45585);
    CHECK(p2.y().as_u64() == 53117);
    auto p7 = ec_scalar_mul(7, g);
    CHECK(p7.x().as_u64() == 5257);
    CHECK(p7.y().as_u64() == 59651);
}

TEST_CASE("x25519 fixture") {
    Bytes csk = from_hex("202122232425262728292a2b2c2d2e2f303132333435363738393a3b3c3d3e3f");
    Bytes ssk = from_hex("909192939495969798999a9b9c9d9e9fa0a1a2a3a4a5a6a7a8a9aaabacadaeaf");
    Bytes spk = x25519_base(ssk);
    Bytes shared = x25519_derive(csk, spk);
    CHECK(to_hex(shared) == "df4a291baa1eb7cfa6934b29b474baad2697e29f1f920dcc77c8a0a088447624");
}

TEST_CASE("toy cipher circuit equals software") {
    auto bundle = circuits::build_toy_cipher_circuit();
    circuits::InputAssignment in;
    in["key"] = circuits::bits_lsb(0xDEADBEEF, 32);
    in["block"] = circuits::bits_lsb(0x1234, 16);
    auto out = circuits::eval_plain(bundle.circuit, in);
    CHECK(circuits::bits_to_u64(out) == circuits::toy_cipher_encrypt(0xDEADBEEF, 0x1234));
}

TEST_CASE("multiplier 3*3") {
    auto bundle = circuits::build_multiplier_bundle();
    CHECK(bundle.circuit.gates().size() == 8);
    circuits::InputAssignment in;
    in["a"] = circuits::bits_lsb(3, 2);
    in["b"] = circuits::bits_lsb(3, 2);
    CHECK(circuits::bits_to_u64(circuits::eval_plain(bundle.circuit, in)) == 9);
}
