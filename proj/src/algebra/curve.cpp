#include "tlsn/algebra/curve.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "tlsn/errors.hpp"

namespace tlsn::algebra {

namespace {

U512 u512_from_hex(std::string_view hex) {
    U512 v = 0;
    for (char c : hex) {
        int d = c >= 'a' ? c - 'a' + 10 : c - '0';
        v = (v << 4) | d;
    }
    return v;
}

const std::map<std::string, CurveParams, std::less<>>& registry() {
    static const std::map<std::string, CurveParams, std::less<>> reg = [] {
        std::map<std::string, CurveParams, std::less<>> m;

        // Enumerable desk curve: y^2 = x^3 + 2x + 13 over F_65521,
        // prime group order 65171, generator (2775, 42052).
        CurveParams toy;
        toy.id = "toy";
        toy.base = &prime_field("toy-base");
        toy.scalar = &prime_field("toy-scalar");
        toy.a = 2;
        toy.b = 13;
        toy.gx = 2775;
        toy.gy = 42052;
        toy.order = 65171;
        toy.small = true;
        m.emplace("toy", toy);

        CurveParams p256;
        p256.id = "p256";
        p256.base = &prime_field("p256-base");
        p256.scalar = &prime_field("p256-scalar");
        p256.a = p256.base->modulus - 3;
        p256.b = u512_from_hex("5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b");
        p256.gx = u512_from_hex("6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296");
        p256.gy = u512_from_hex("4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5");
        p256.order = p256.scalar->modulus;
        p256.small = false;
        m.emplace("p256", p256);

        return m;
    }();
    return reg;
}

// ---- u64 affine kernel for the small (toy) curve --------------------------
// The base-OT hot loop runs thousands of scalar multiplications on the toy
// curve; going through FieldElement there costs ~10x.

struct SmallPoint {
    uint64_t x = 0, y = 0;
    bool inf = true;
};

inline uint64_t sm_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline uint64_t sm_sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t sm_inv(uint64_t a, uint64_t p) {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

SmallPoint sm_add(const SmallPoint& pt, const SmallPoint& qt, uint64_t p, uint64_t a) {
    if (pt.inf) return qt;
    if (qt.inf) return pt;
    uint64_t lam;
    if (pt.x == qt.x) {
        if ((pt.y + qt.y) % p == 0) return SmallPoint{};
        uint64_t num = (sm_mul(3, sm_mul(pt.x, pt.x, p), p) + a) % p;
        lam = sm_mul(num, sm_inv((2 * pt.y) % p, p), p);
    } else {
        lam = sm_mul(sm_sub(qt.y, pt.y, p), sm_inv(sm_sub(qt.x, pt.x, p), p), p);
    }
    uint64_t x3 = sm_sub(sm_sub(sm_mul(lam, lam, p), pt.x, p), qt.x, p);
    uint64_t y3 = sm_sub(sm_mul(lam, sm_sub(pt.x, x3, p), p), pt.y, p);
    return SmallPoint{x3, y3, false};
}

SmallPoint sm_mul_point(uint64_t k, SmallPoint pt, uint64_t p, uint64_t a) {
    SmallPoint acc{};
    while (k) {
        if (k & 1) acc = sm_add(acc, pt, p, a);
        pt = sm_add(pt, pt, p, a);
        k >>= 1;
    }
    return acc;
}

// Full multiples-of-G table for enumerable curves; the OT hot loop does
// three fixed-base multiplications per transfer.
const std::vector<SmallPoint>& small_base_table(const CurveParams& c) {
    static std::mutex mtx;
    static std::map<const CurveParams*, std::vector<SmallPoint>> tables;
    std::lock_guard lock(mtx);
    auto it = tables.find(&c);
    if (it != tables.end()) return it->second;

    uint64_t n = static_cast<uint64_t>(c.order);
    std::vector<SmallPoint> tab(n);
    SmallPoint g{static_cast<uint64_t>(c.gx), static_cast<uint64_t>(c.gy), false};
    SmallPoint acc{};
    for (uint64_t k = 0; k < n; ++k) {
        tab[k] = acc;
        acc = sm_add(acc, g, c.base->m64, static_cast<uint64_t>(c.a));
    }
    return tables.emplace(&c, std::move(tab)).first->second;
}

}  // namespace

const CurveParams& curve(std::string_view id) {
    const auto& reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw std::invalid_argument("unknown curve: " + std::string(id));
    return it->second;
}

CurvePoint CurvePoint::identity(const CurveParams& c) {
    CurvePoint p;
    p.curve_ = &c;
    p.identity_ = true;
    return p;
}

CurvePoint CurvePoint::make(const CurveParams& c, const FieldElement& x, const FieldElement& y) {
    if (&x.field() != c.base || &y.field() != c.base)
        throw ProtocolError(errc::OffCurvePoint, "coordinates from wrong base field");
    FieldElement lhs = y * y;
    FieldElement rhs = x * x * x + FieldElement(*c.base, c.a) * x + FieldElement(*c.base, c.b);
    if (lhs != rhs)
        throw ProtocolError(errc::OffCurvePoint, "point fails curve equation on " + c.id);
    CurvePoint p;
    p.curve_ = &c;
    p.identity_ = false;
    p.x_ = x;
    p.y_ = y;
    return p;
}

CurvePoint CurvePoint::generator(const CurveParams& c) {
    return make(c, FieldElement(*c.base, c.gx), FieldElement(*c.base, c.gy));
}

CurvePoint CurvePoint::trusted(const CurveParams& c, FieldElement x, FieldElement y) {
    CurvePoint p;
    p.curve_ = &c;
    p.identity_ = false;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
}

const CurveParams& CurvePoint::curve() const {
    if (!curve_) throw std::logic_error("uninitialized CurvePoint");
    return *curve_;
}

const FieldElement& CurvePoint::x() const {
    if (identity_) throw std::logic_error("identity point has no coordinates");
    return x_;
}

const FieldElement& CurvePoint::y() const {
    if (identity_) throw std::logic_error("identity point has no coordinates");
    return y_;
}

CurvePoint CurvePoint::operator+(const CurvePoint& o) const {
    const CurveParams& c = curve();
    if (curve_ != o.curve_) throw ProtocolError(errc::OffCurvePoint, "points on different curves");
    if (identity_) return o;
    if (o.identity_) return *this;

    if (c.small) {
        SmallPoint r = sm_add(SmallPoint{x_.as_u64(), y_.as_u64(), false},
                              SmallPoint{o.x_.as_u64(), o.y_.as_u64(), false},
                              c.base->m64, static_cast<uint64_t>(c.a));
        if (r.inf) return identity(c);
        CurvePoint p;
        p.curve_ = &c;
        p.identity_ = false;
        p.x_ = FieldElement::from_u64(*c.base, r.x);
        p.y_ = FieldElement::from_u64(*c.base, r.y);
        return p;
    }

    FieldElement lam;
    if (x_ == o.x_) {
        if ((y_ + o.y_).is_zero()) return identity(c);
        FieldElement three = FieldElement::from_u64(*c.base, 3);
        FieldElement two = FieldElement::from_u64(*c.base, 2);
        lam = (three * x_ * x_ + FieldElement(*c.base, c.a)) * fe_inv(two * y_);
    } else {
        lam = (o.y_ - y_) * fe_inv(o.x_ - x_);
    }
    FieldElement x3 = lam * lam - x_ - o.x_;
    FieldElement y3 = lam * (x_ - x3) - y_;
    CurvePoint p;
    p.curve_ = &c;
    p.identity_ = false;
    p.x_ = x3;
    p.y_ = y3;
    return p;
}

CurvePoint CurvePoint::neg() const {
    if (identity_) return *this;
    CurvePoint p = *this;
    p.y_ = y_.neg();
    return p;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (curve_ != o.curve_) return false;
    if (identity_ || o.identity_) return identity_ == o.identity_;
    return x_ == o.x_ && y_ == o.y_;
}

Bytes CurvePoint::encode() const {
    const CurveParams& c = curve();
    if (identity_) return Bytes{0x00};
    Bytes out{0x04};
    append(out, x_.encode());
    append(out, y_.encode());
    (void)c;
    return out;
}

CurvePoint CurvePoint::decode(const CurveParams& c, std::span<const uint8_t> enc) {
    if (enc.empty()) throw ProtocolError(errc::OffCurvePoint, "empty point encoding");
    if (enc[0] == 0x00) {
        if (enc.size() != 1) throw ProtocolError(errc::OffCurvePoint, "bad identity encoding");
        return identity(c);
    }
    size_t w = c.base->byte_len;
    if (enc[0] != 0x04 || enc.size() != 1 + 2 * w)
        throw ProtocolError(errc::OffCurvePoint, "bad point encoding");
    FieldElement x = FieldElement::decode(*c.base, enc.subspan(1, w));
    FieldElement y = FieldElement::decode(*c.base, enc.subspan(1 + w, w));
    return make(c, x, y);
}

CurvePoint ec_scalar_mul(const FieldElement& k, const CurvePoint& p) {
    const CurveParams& c = p.curve();
    if (&k.field() != c.scalar)
        throw ProtocolError(errc::FieldMismatch, "scalar from wrong field for " + c.id);
    if (c.small) return ec_scalar_mul(k.as_u64(), p);
    if (p.is_identity() || k.is_zero()) return CurvePoint::identity(c);
    U512 e = k.value();
    CurvePoint acc = CurvePoint::identity(c);
    CurvePoint base = p;
    while (e != 0) {
        if (boost::multiprecision::bit_test(e, 0)) acc = acc + base;
        base = base + base;
        e >>= 1;
    }
    return acc;
}

PointWindow::PointWindow(const CurvePoint& base) {
    const CurveParams& c = base.curve();
    unsigned bits = c.scalar->bits;
    pow2_.reserve(bits);
    CurvePoint acc = base;
    for (unsigned j = 0; j < bits; ++j) {
        pow2_.push_back(acc);
        acc = acc + acc;
    }
}

CurvePoint PointWindow::mul(const FieldElement& k) const {
    const CurveParams& c = pow2_.front().curve();
    CurvePoint acc = CurvePoint::identity(c);
    for (unsigned j = 0; j < pow2_.size(); ++j)
        if (k.bit(j)) acc = acc + pow2_[j];
    return acc;
}

CurvePoint ec_scalar_mul(uint64_t k, const CurvePoint& p) {
    const CurveParams& c = p.curve();
    if (p.is_identity() || k == 0) return CurvePoint::identity(c);
    if (c.small) {
        k %= static_cast<uint64_t>(c.order);
        SmallPoint r;
        if (p.x().as_u64() == static_cast<uint64_t>(c.gx) &&
            p.y().as_u64() == static_cast<uint64_t>(c.gy)) {
            r = small_base_table(c)[k];
        } else {
            r = sm_mul_point(k, SmallPoint{p.x().as_u64(), p.y().as_u64(), false}, c.base->m64,
                             static_cast<uint64_t>(c.a));
        }
        if (r.inf) return CurvePoint::identity(c);
        return CurvePoint::trusted(c, FieldElement::from_u64(*c.base, r.x),
                                   FieldElement::from_u64(*c.base, r.y));
    }
    return ec_scalar_mul(FieldElement(*c.scalar, U512(k)), p);
}

}  // namespace tlsn::algebra
