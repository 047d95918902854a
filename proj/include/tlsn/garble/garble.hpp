#ifndef TLSN_GARBLE_GARBLE_HPP_
#define TLSN_GARBLE_GARBLE_HPP_

#include <array>
#include <map>
#include <optional>

#include "tlsn/circuits/circuit.hpp"
#include "tlsn/errors.hpp"

namespace tlsn::garble {

// 128-bit wire labels; the low bit of the last byte is the point-and-permute
// bit. The two labels of every wire differ by the circuit's global offset
// delta (lsb of delta forced 1 so siblings disagree on the permute bit).
using WireLabel = std::array<uint8_t, 16>;

inline WireLabel operator^(const WireLabel& a, const WireLabel& b) {
    WireLabel r;
    for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] ^ b[i];
    return r;
}
inline bool label_lsb(const WireLabel& l) { return l[15] & 1; }

// encrypted row: 16-byte label + 32-bit zero tag
inline constexpr size_t kRowLen = 20;
using Row = std::array<uint8_t, kRowLen>;

// projective encoding: the 0-label per input wire plus the shared offset
struct EncodingInfo {
    WireLabel delta{};
    std::vector<WireLabel> zero_labels;  // indexed by input wire id

    WireLabel label(uint32_t wire, bool bit) const;
};

struct GarbledCircuit {
    Digest circuit_hash{};
    std::array<uint8_t, 16> tweak_base{};
    std::vector<Row> rows;  // 4 per AND gate, permute-bit order

    Bytes serialize() const;
    static GarbledCircuit deserialize(std::span<const uint8_t> raw);
    bool operator==(const GarbledCircuit& o) const = default;
};

// permute bit of the 0-label per output wire (translation table)
struct DecodingInfo {
    std::vector<bool> permute;
    bool operator==(const DecodingInfo& o) const = default;
};

// one label per wire of an ordered wire list
struct ActiveLabels {
    std::vector<WireLabel> labels;
};

// full garbler view: encoding of the inputs plus every internal 0-label
// (the record layer reuses internal wire labels across circuits)
struct GarbleOutput {
    GarbledCircuit gc;
    EncodingInfo encoding;
    DecodingInfo decoding;
    std::vector<WireLabel> zero_labels;  // all wires
};

// injected label material: the record layer pins plaintext-wire labels to
// the session encoder seed and shares one delta across its garblings
struct GarbleOverrides {
    std::optional<WireLabel> delta;
    std::map<uint32_t, WireLabel> input_zero_labels;
};

// Gb: deterministic in (circuit, seed, overrides).
GarbleOutput garble(const circuits::BooleanCircuit& c, const Bytes& seed,
                    const GarbleOverrides& overrides = {});

// En: select the active input labels for x.
ActiveLabels encode(const EncodingInfo& e, const std::vector<bool>& bits);

// Ev: decrypt one row per AND gate; throws RowTagFailure on any off-path or
// corrupted row.
struct EvalTrace {
    ActiveLabels outputs;
    std::vector<WireLabel> wire_labels;  // active label per wire
};
EvalTrace evaluate_trace(const GarbledCircuit& f, const circuits::BooleanCircuit& c,
                         const ActiveLabels& x);
ActiveLabels evaluate(const GarbledCircuit& f, const circuits::BooleanCircuit& c,
                      const ActiveLabels& x);

// De: permute-bit translation.
std::vector<bool> decode(const DecodingInfo& d, const ActiveLabels& y);

// re-garbles from the opened seed material and compares byte for byte
bool verify_garbling(const GarbledCircuit& f, const circuits::BooleanCircuit& c,
                     const Bytes& seed, const GarbleOverrides& overrides = {});

// row pad H(k_a || k_b || tweak); exposed for the obliviousness tests
Row row_pad(const std::array<uint8_t, 16>& tweak_base, uint32_t gate_index, const WireLabel& ka,
            const WireLabel& kb);

}  // namespace tlsn::garble

#endif
