#ifndef TLSN_ALGEBRA_CURVE_HPP_
#define TLSN_ALGEBRA_CURVE_HPP_

#include <string>
#include <string_view>

#include "tlsn/algebra/field.hpp"

namespace tlsn::algebra {

// Short Weierstrass curve y^2 = x^3 + ax + b with a named parameter set.
// Affine coordinates with an explicit identity marker; arithmetic here is
// plain-schoolbook and not constant time (correctness artifact, not
// production crypto).
struct CurveParams {
    std::string id;
    const PrimeField* base;
    const PrimeField* scalar;  // Z_n, n = group order (prime for both sets)
    U512 a, b;
    U512 gx, gy;
    U512 order;
    bool small;  // u64 arithmetic kernel applies
};

// Known ids: "toy" (full group enumerable), "p256".
const CurveParams& curve(std::string_view id);

class CurvePoint {
public:
    CurvePoint() : curve_(nullptr), identity_(true) {}

    static CurvePoint identity(const CurveParams& c);
    // validates the curve equation, throws OffCurvePoint
    static CurvePoint make(const CurveParams& c, const FieldElement& x, const FieldElement& y);
    static CurvePoint generator(const CurveParams& c);
    static CurvePoint decode(const CurveParams& c, std::span<const uint8_t> enc);

    const CurveParams& curve() const;
    bool is_identity() const { return identity_; }
    const FieldElement& x() const;
    const FieldElement& y() const;

    CurvePoint operator+(const CurvePoint& o) const;
    CurvePoint operator-(const CurvePoint& o) const { return *this + o.neg(); }
    CurvePoint neg() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

    Bytes encode() const;  // 0x00 for identity, else 0x04 || x || y big-endian
    std::string to_hex() const { return tlsn::to_hex(encode()); }

private:
    friend CurvePoint ec_scalar_mul(const FieldElement&, const CurvePoint&);
    friend CurvePoint ec_scalar_mul(uint64_t, const CurvePoint&);
    // internal arithmetic results stay on the curve; only wire input re-checks
    static CurvePoint trusted(const CurveParams& c, FieldElement x, FieldElement y);

    const CurveParams* curve_;
    bool identity_;
    FieldElement x_, y_;
};

// k-fold group addition; k is an element of the curve's scalar field.
CurvePoint ec_scalar_mul(const FieldElement& k, const CurvePoint& p);
CurvePoint ec_scalar_mul(uint64_t k, const CurvePoint& p);

// Precomputed doubling ladder for repeated multiplications of one point.
class PointWindow {
public:
    explicit PointWindow(const CurvePoint& base);
    CurvePoint mul(const FieldElement& k) const;

private:
    std::vector<CurvePoint> pow2_;
};

}  // namespace tlsn::algebra

#endif
