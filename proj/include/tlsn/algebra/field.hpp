#ifndef TLSN_ALGEBRA_FIELD_HPP_
#define TLSN_ALGEBRA_FIELD_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "tlsn/bytes.hpp"
#include "tlsn/hash.hpp"

namespace tlsn::algebra {

using U512 = boost::multiprecision::uint512_t;

// Compiled-in prime field parameters. Instances are interned; FieldElement
// compares field identity by pointer.
struct PrimeField {
    std::string id;
    U512 modulus;
    unsigned bits;     // bit length of modulus
    size_t byte_len;   // fixed big-endian encoding width
    bool small;        // modulus fits u64 arithmetic
    uint64_t m64;
};

// Known ids: "toy-base", "toy-scalar", "p256-base", "p256-scalar", "c25519-base".
const PrimeField& prime_field(std::string_view id);

class FieldElement {
public:
    FieldElement() : field_(nullptr) {}
    FieldElement(const PrimeField& field, const U512& value);

    static FieldElement from_u64(const PrimeField& field, uint64_t v);
    static FieldElement random(const PrimeField& field, Prg& prg);
    static FieldElement random_nonzero(const PrimeField& field, Prg& prg);
    static FieldElement decode(const PrimeField& field, std::span<const uint8_t> be);
    static FieldElement from_hex(const PrimeField& field, std::string_view hex);

    const PrimeField& field() const;
    const U512& value() const { return value_; }
    uint64_t as_u64() const { return static_cast<uint64_t>(value_); }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement neg() const;
    FieldElement square() const { return *this * *this; }
    FieldElement pow(const U512& e) const;

    // x * 2^i mod p; the basis scalars of the Gilboa decomposition
    FieldElement shifted(unsigned i) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    bool bit(unsigned i) const { return boost::multiprecision::bit_test(value_, i); }

    Bytes encode() const;  // fixed-width big-endian
    std::string to_hex() const { return tlsn::to_hex(encode()); }

private:
    void check_same(const FieldElement& o) const;
    const PrimeField* field_;
    U512 value_;
};

// Multiplicative inverse; throws ZeroInverse when x = 0.
FieldElement fe_inv(const FieldElement& x);

}  // namespace tlsn::algebra

#endif
