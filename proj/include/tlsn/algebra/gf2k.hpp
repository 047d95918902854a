#ifndef TLSN_ALGEBRA_GF2K_HPP_
#define TLSN_ALGEBRA_GF2K_HPP_

#include <cstdint>
#include <string>

#include "tlsn/bytes.hpp"
#include "tlsn/hash.hpp"

namespace tlsn::algebra {

// Binary extension fields.
//  gf16  : GF(2^16), reduction x^16+x^5+x^3+x+1, coefficient i = integer bit i.
//  gf128 : GF(2^128) exactly as in the GCM specification: the leftmost bit of
//          the 16-byte block is the x^0 coefficient, reduction
//          x^128+x^7+x^2+x+1.
enum class Gf2kId { gf16, gf128 };

inline unsigned gf2k_width(Gf2kId id) { return id == Gf2kId::gf16 ? 16 : 128; }
inline size_t gf2k_byte_len(Gf2kId id) { return id == Gf2kId::gf16 ? 2 : 16; }
const char* gf2k_name(Gf2kId id);

class Gf2kElement {
public:
    Gf2kElement() : id_(Gf2kId::gf16), hi_(0), lo_(0) {}

    static Gf2kElement zero(Gf2kId id) { return Gf2kElement(id, 0, 0); }
    static Gf2kElement one(Gf2kId id);
    static Gf2kElement from_u64(Gf2kId id, uint64_t v);  // gf16 only takes low 16 bits
    static Gf2kElement random(Gf2kId id, Prg& prg);
    static Gf2kElement random_nonzero(Gf2kId id, Prg& prg);
    static Gf2kElement decode(Gf2kId id, std::span<const uint8_t> be);
    static Gf2kElement from_hex(Gf2kId id, std::string_view hex);

    Gf2kId id() const { return id_; }
    bool is_zero() const { return hi_ == 0 && lo_ == 0; }
    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }
    uint16_t as_u16() const { return static_cast<uint16_t>(lo_); }

    Gf2kElement operator^(const Gf2kElement& o) const;  // field addition
    Gf2kElement operator*(const Gf2kElement& o) const;
    Gf2kElement square() const { return *this * *this; }
    Gf2kElement pow(uint64_t e) const;
    Gf2kElement inv() const;  // throws ZeroInverse on 0

    // coefficient of x^i, and multiplication by x (basis step)
    bool coord(unsigned i) const;
    Gf2kElement mulx() const;

    bool operator==(const Gf2kElement& o) const {
        return id_ == o.id_ && hi_ == o.hi_ && lo_ == o.lo_;
    }
    bool operator!=(const Gf2kElement& o) const { return !(*this == o); }

    Bytes encode() const;  // fixed-width big-endian block
    std::string to_hex() const { return tlsn::to_hex(encode()); }

private:
    Gf2kElement(Gf2kId id, uint64_t hi, uint64_t lo) : id_(id), hi_(hi), lo_(lo) {}
    Gf2kId id_;
    uint64_t hi_, lo_;
};

Gf2kElement gf2k_mul(const Gf2kElement& a, const Gf2kElement& b);

}  // namespace tlsn::algebra

#endif
