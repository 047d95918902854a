#include "tlsn/algebra/x25519.hpp"

#include "tlsn/algebra/field.hpp"
#include "tlsn/errors.hpp"

namespace tlsn::algebra {

namespace {

const PrimeField& f25519() {
    static const PrimeField& f = prime_field("c25519-base");
    return f;
}

FieldElement decode_u(std::span<const uint8_t> u) {
    U512 v = 0;
    for (size_t i = 0; i < 32; ++i) v |= U512(u[i]) << (8 * i);
    v &= (U512(1) << 255) - 1;  // mask the unused top bit
    return FieldElement(f25519(), v);
}

Bytes encode_u(const FieldElement& x) {
    Bytes out(32);
    U512 v = x.value();
    for (size_t i = 0; i < 32; ++i) {
        out[i] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
    return out;
}

}  // namespace

Bytes x25519_derive(std::span<const uint8_t> sk, std::span<const uint8_t> pk) {
    if (sk.size() != 32 || pk.size() != 32)
        throw std::invalid_argument("x25519 inputs must be 32 bytes");

    uint8_t k[32];
    for (int i = 0; i < 32; ++i) k[i] = sk[i];
    k[0] &= 248;
    k[31] &= 127;
    k[31] |= 64;

    const PrimeField& f = f25519();
    FieldElement x1 = decode_u(pk);
    FieldElement x2 = FieldElement::from_u64(f, 1), z2 = FieldElement::from_u64(f, 0);
    FieldElement x3 = x1, z3 = FieldElement::from_u64(f, 1);
    FieldElement a24 = FieldElement::from_u64(f, 121665);

    unsigned swap = 0;
    auto cswap = [](unsigned s, FieldElement& a, FieldElement& b) {
        if (s) std::swap(a, b);
    };

    for (int t = 254; t >= 0; --t) {
        unsigned kt = (k[t / 8] >> (t % 8)) & 1;
        swap ^= kt;
        cswap(swap, x2, x3);
        cswap(swap, z2, z3);
        swap = kt;

        FieldElement a = x2 + z2;
        FieldElement aa = a.square();
        FieldElement b = x2 - z2;
        FieldElement bb = b.square();
        FieldElement e = aa - bb;
        FieldElement c = x3 + z3;
        FieldElement d = x3 - z3;
        FieldElement da = d * a;
        FieldElement cb = c * b;
        x3 = (da + cb).square();
        z3 = x1 * (da - cb).square();
        x2 = aa * bb;
        z2 = e * (aa + a24 * e);
    }
    cswap(swap, x2, x3);
    cswap(swap, z2, z3);

    FieldElement out = z2.is_zero() ? FieldElement::from_u64(f, 0) : x2 * fe_inv(z2);
    if (out.is_zero())
        throw ProtocolError(errc::LowOrderPoint, "x25519 produced the all-zero secret");
    return encode_u(out);
}

Bytes x25519_base(std::span<const uint8_t> sk) {
    Bytes base(32, 0);
    base[0] = 9;
    return x25519_derive(sk, base);
}

}  // namespace tlsn::algebra
