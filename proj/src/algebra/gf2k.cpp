#include "tlsn/algebra/gf2k.hpp"

#include "tlsn/errors.hpp"

namespace tlsn::algebra {

namespace {
constexpr uint32_t kGf16Poly = 0x1002B;  // x^16+x^5+x^3+x+1
constexpr uint64_t kGcmR = 0xE100000000000000ULL;

void check_same(const Gf2kElement& a, const Gf2kElement& b) {
    if (a.id() != b.id())
        throw ProtocolError(errc::FieldMismatch, "mixed GF(2^k) fields");
}

uint16_t gf16_mul(uint16_t a, uint16_t b) {
    uint32_t z = 0;
    for (unsigned i = 0; i < 16; ++i)
        if ((b >> i) & 1) z ^= static_cast<uint32_t>(a) << i;
    for (int i = 30; i >= 16; --i)
        if ((z >> i) & 1) z ^= kGf16Poly << (i - 16);
    return static_cast<uint16_t>(z);
}
}  // namespace

const char* gf2k_name(Gf2kId id) { return id == Gf2kId::gf16 ? "gf16" : "gf128"; }

Gf2kElement Gf2kElement::one(Gf2kId id) {
    // in the GCM bit order the unit polynomial is the MSB-set block
    return id == Gf2kId::gf16 ? Gf2kElement(id, 0, 1)
                              : Gf2kElement(id, 0x8000000000000000ULL, 0);
}

Gf2kElement Gf2kElement::from_u64(Gf2kId id, uint64_t v) {
    if (id == Gf2kId::gf16) return Gf2kElement(id, 0, v & 0xFFFF);
    return Gf2kElement(id, 0, v);
}

Gf2kElement Gf2kElement::random(Gf2kId id, Prg& prg) {
    if (id == Gf2kId::gf16) return Gf2kElement(id, 0, prg.u64() & 0xFFFF);
    uint64_t hi = prg.u64(), lo = prg.u64();
    return Gf2kElement(id, hi, lo);
}

Gf2kElement Gf2kElement::random_nonzero(Gf2kId id, Prg& prg) {
    for (;;) {
        Gf2kElement e = random(id, prg);
        if (!e.is_zero()) return e;
    }
}

Gf2kElement Gf2kElement::decode(Gf2kId id, std::span<const uint8_t> be) {
    if (be.size() != gf2k_byte_len(id))
        throw std::invalid_argument("bad GF(2^k) block length");
    uint64_t hi = 0, lo = 0;
    if (id == Gf2kId::gf16) {
        lo = static_cast<uint64_t>(be[0]) << 8 | be[1];
    } else {
        for (int i = 0; i < 8; ++i) hi = hi << 8 | be[i];
        for (int i = 8; i < 16; ++i) lo = lo << 8 | be[i];
    }
    return Gf2kElement(id, hi, lo);
}

Gf2kElement Gf2kElement::from_hex(Gf2kId id, std::string_view hex) {
    Bytes raw = tlsn::from_hex(hex);
    return decode(id, raw);
}

Gf2kElement Gf2kElement::operator^(const Gf2kElement& o) const {
    check_same(*this, o);
    return Gf2kElement(id_, hi_ ^ o.hi_, lo_ ^ o.lo_);
}

Gf2kElement Gf2kElement::operator*(const Gf2kElement& o) const {
    check_same(*this, o);
    if (id_ == Gf2kId::gf16)
        return Gf2kElement(id_, 0, gf16_mul(static_cast<uint16_t>(lo_), static_cast<uint16_t>(o.lo_)));
    // GCM reference multiplication (SP 800-38D, right-shift variant)
    uint64_t zh = 0, zl = 0, vh = o.hi_, vl = o.lo_;
    for (int i = 127; i >= 0; --i) {
        uint64_t bit = i >= 64 ? (hi_ >> (i - 64)) & 1 : (lo_ >> i) & 1;
        if (bit) {
            zh ^= vh;
            zl ^= vl;
        }
        uint64_t lsb = vl & 1;
        vl = (vl >> 1) | (vh << 63);
        vh >>= 1;
        if (lsb) vh ^= kGcmR;
    }
    return Gf2kElement(id_, zh, zl);
}

Gf2kElement Gf2kElement::pow(uint64_t e) const {
    Gf2kElement acc = one(id_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base.square();
        e >>= 1;
    }
    return acc;
}

Gf2kElement Gf2kElement::inv() const {
    if (is_zero()) throw ProtocolError(errc::ZeroInverse, "inverse of zero in GF(2^k)");
    // x^(2^k - 2) by square-and-multiply over the all-but-lowest-bit exponent
    unsigned k = gf2k_width(id_);
    Gf2kElement result = one(id_), base = square();
    for (unsigned i = 1; i < k; ++i) {
        result = result * base;
        base = base.square();
    }
    return result;
}

bool Gf2kElement::coord(unsigned i) const {
    if (id_ == Gf2kId::gf16) return (lo_ >> i) & 1;
    unsigned bit = 127 - i;  // x^i lives at block bit position i (MSB-first)
    return bit >= 64 ? (hi_ >> (bit - 64)) & 1 : (lo_ >> bit) & 1;
}

Gf2kElement Gf2kElement::mulx() const {
    if (id_ == Gf2kId::gf16) {
        uint32_t z = static_cast<uint32_t>(lo_) << 1;
        if (z & 0x10000) z ^= kGf16Poly;
        return Gf2kElement(id_, 0, z & 0xFFFF);
    }
    uint64_t lsb = lo_ & 1;
    uint64_t lo = (lo_ >> 1) | (hi_ << 63);
    uint64_t hi = hi_ >> 1;
    if (lsb) hi ^= kGcmR;
    return Gf2kElement(id_, hi, lo);
}

Bytes Gf2kElement::encode() const {
    Bytes out(gf2k_byte_len(id_));
    if (id_ == Gf2kId::gf16) {
        out[0] = static_cast<uint8_t>(lo_ >> 8);
        out[1] = static_cast<uint8_t>(lo_);
    } else {
        for (int i = 0; i < 8; ++i) out[i] = static_cast<uint8_t>(hi_ >> (56 - 8 * i));
        for (int i = 0; i < 8; ++i) out[8 + i] = static_cast<uint8_t>(lo_ >> (56 - 8 * i));
    }
    return out;
}

Gf2kElement gf2k_mul(const Gf2kElement& a, const Gf2kElement& b) { return a * b; }

}  // namespace tlsn::algebra
