#include "tlsn/algebra/field.hpp"

#include <map>

#include "tlsn/errors.hpp"

namespace tlsn::algebra {

namespace {

U512 u512_from_hex(std::string_view hex) {
    U512 v = 0;
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("bad hex");
        v = (v << 4) | d;
    }
    return v;
}

PrimeField make_field(std::string id, U512 modulus) {
    PrimeField f;
    f.id = std::move(id);
    f.modulus = modulus;
    f.bits = static_cast<unsigned>(boost::multiprecision::msb(modulus)) + 1;
    f.byte_len = (f.bits + 7) / 8;
    f.small = modulus < (U512(1) << 63);
    f.m64 = f.small ? static_cast<uint64_t>(modulus) : 0;
    return f;
}

const std::map<std::string, PrimeField, std::less<>>& registry() {
    static const std::map<std::string, PrimeField, std::less<>> reg = [] {
        std::map<std::string, PrimeField, std::less<>> m;
        // Toy curve group: y^2 = x^3 + 2x + 13 over F_65521, order 65171 (prime).
        m.emplace("toy-base", make_field("toy-base", U512(65521)));
        m.emplace("toy-scalar", make_field("toy-scalar", U512(65171)));
        m.emplace("p256-base",
                  make_field("p256-base",
                             u512_from_hex("ffffffff00000001000000000000000000000000ffffffffff"
                                           "ffffffffffffff")));
        m.emplace("p256-scalar",
                  make_field("p256-scalar",
                             u512_from_hex("ffffffff00000000ffffffffffffffffbce6faada7179e84f3"
                                           "b9cac2fc632551")));
        m.emplace("c25519-base",
                  make_field("c25519-base", (U512(1) << 255) - 19));
        return m;
    }();
    return reg;
}

}  // namespace

const PrimeField& prime_field(std::string_view id) {
    const auto& reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw std::invalid_argument("unknown prime field: " + std::string(id));
    return it->second;
}

FieldElement::FieldElement(const PrimeField& field, const U512& value) : field_(&field) {
    if (field.small) {
        uint64_t v = value < field.modulus ? static_cast<uint64_t>(value)
                                           : static_cast<uint64_t>(value % field.modulus);
        value_ = v;
    } else {
        value_ = value < field.modulus ? value : value % field.modulus;
    }
}

FieldElement FieldElement::from_u64(const PrimeField& field, uint64_t v) {
    FieldElement r;
    r.field_ = &field;
    r.value_ = field.small ? v % field.m64 : v;
    if (!field.small && r.value_ >= field.modulus) r.value_ %= field.modulus;
    return r;
}

FieldElement FieldElement::random(const PrimeField& field, Prg& prg) {
    if (field.small) return from_u64(field, prg.uniform(field.m64));
    // rejection sampling over the fixed byte width
    uint8_t raw[64];
    auto buf = std::span(raw, field.byte_len);
    for (;;) {
        prg.fill(buf);
        unsigned excess = static_cast<unsigned>(field.byte_len * 8 - field.bits);
        if (excess) raw[0] &= static_cast<uint8_t>(0xff >> excess);
        U512 v;
        boost::multiprecision::import_bits(v, buf.begin(), buf.end(), 8, true);
        if (v < field.modulus) {
            FieldElement r;
            r.field_ = &field;
            r.value_ = v;
            return r;
        }
    }
}

FieldElement FieldElement::random_nonzero(const PrimeField& field, Prg& prg) {
    for (;;) {
        FieldElement e = random(field, prg);
        if (!e.is_zero()) return e;
    }
}

FieldElement FieldElement::decode(const PrimeField& field, std::span<const uint8_t> be) {
    if (be.empty()) return from_u64(field, 0);
    U512 v;
    boost::multiprecision::import_bits(v, be.begin(), be.end(), 8, true);
    return FieldElement(field, v);
}

FieldElement FieldElement::from_hex(const PrimeField& field, std::string_view hex) {
    Bytes raw = tlsn::from_hex(hex);
    return decode(field, raw);
}

const PrimeField& FieldElement::field() const {
    if (!field_) throw std::logic_error("uninitialized FieldElement");
    return *field_;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ == nullptr || o.field_ == nullptr || field_ != o.field_)
        throw ProtocolError(errc::FieldMismatch,
                            "mixed prime fields in arithmetic");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    if (field_->small) {
        uint64_t s = as_u64() + o.as_u64();
        if (s >= field_->m64) s -= field_->m64;
        return from_u64(*field_, s);
    }
    U512 s = value_ + o.value_;
    if (s >= field_->modulus) s -= field_->modulus;
    FieldElement r;
    r.field_ = field_;
    r.value_ = s;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    if (field_->small) {
        uint64_t a = as_u64(), b = o.as_u64();
        return from_u64(*field_, a >= b ? a - b : a + field_->m64 - b);
    }
    FieldElement r;
    r.field_ = field_;
    r.value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + field_->modulus - o.value_;
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    if (field_->small) {
        unsigned __int128 p = static_cast<unsigned __int128>(as_u64()) * o.as_u64();
        return from_u64(*field_, static_cast<uint64_t>(p % field_->m64));
    }
    FieldElement r;
    r.field_ = field_;
    r.value_ = (value_ * o.value_) % field_->modulus;
    return r;
}

FieldElement FieldElement::neg() const {
    if (!field_) throw std::logic_error("uninitialized FieldElement");
    FieldElement r;
    r.field_ = field_;
    r.value_ = value_ == 0 ? U512(0) : field_->modulus - value_;
    return r;
}

FieldElement FieldElement::pow(const U512& e) const {
    if (!field_) throw std::logic_error("uninitialized FieldElement");
    FieldElement base = *this;
    FieldElement acc = from_u64(*field_, 1);
    U512 k = e;
    while (k != 0) {
        if (boost::multiprecision::bit_test(k, 0)) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

FieldElement FieldElement::shifted(unsigned i) const {
    if (!field_) throw std::logic_error("uninitialized FieldElement");
    FieldElement r = *this;
    for (unsigned j = 0; j < i; ++j) r = r + r;
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && value_ == o.value_;
}

Bytes FieldElement::encode() const {
    if (!field_) throw std::logic_error("uninitialized FieldElement");
    Bytes out(field_->byte_len, 0);
    if (field_->small) {
        uint64_t v = static_cast<uint64_t>(value_);
        for (size_t i = out.size(); i-- > 0;) {
            out[i] = static_cast<uint8_t>(v & 0xff);
            v >>= 8;
        }
        return out;
    }
    Bytes raw;
    raw.reserve(field_->byte_len);
    boost::multiprecision::export_bits(value_, std::back_inserter(raw), 8, true);
    // export skips leading zero bytes; right-align into the fixed width
    std::copy(raw.begin(), raw.end(), out.begin() + (out.size() - raw.size()));
    return out;
}

FieldElement fe_inv(const FieldElement& x) {
    if (x.is_zero()) throw ProtocolError(errc::ZeroInverse, "inverse of zero in " + x.field().id);
    const PrimeField& f = x.field();
    // binary extended gcd; modulus is odd (all registry primes are)
    U512 u = x.value(), v = f.modulus;
    U512 x1 = 1, x2 = 0;
    auto halve = [&](U512& a) {
        if (boost::multiprecision::bit_test(a, 0)) a += f.modulus;
        a >>= 1;
    };
    while (u != 1 && v != 1) {
        while (!boost::multiprecision::bit_test(u, 0)) {
            u >>= 1;
            halve(x1);
        }
        while (!boost::multiprecision::bit_test(v, 0)) {
            v >>= 1;
            halve(x2);
        }
        if (u >= v) {
            u -= v;
            x1 = x1 >= x2 ? x1 - x2 : x1 + f.modulus - x2;
        } else {
            v -= u;
            x2 = x2 >= x1 ? x2 - x1 : x2 + f.modulus - x1;
        }
    }
    return FieldElement(f, u == 1 ? x1 : x2);
}

}  // namespace tlsn::algebra
