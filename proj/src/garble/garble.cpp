#include "tlsn/garble/garble.hpp"

#include <cstring>

namespace tlsn::garble {

using circuits::BooleanCircuit;
using circuits::Gate;
using circuits::GateKind;

namespace {

WireLabel random_label(Prg& prg) {
    WireLabel l;
    prg.fill(l);
    return l;
}

WireLabel with_bit(WireLabel l, bool bit) {
    l[15] = static_cast<uint8_t>((l[15] & ~1u) | (bit ? 1 : 0));
    return l;
}

}  // namespace

WireLabel EncodingInfo::label(uint32_t wire, bool bit) const {
    WireLabel l = zero_labels.at(wire);
    return bit ? l ^ delta : l;
}

Row row_pad(const std::array<uint8_t, 16>& tweak_base, uint32_t gate_index, const WireLabel& ka,
            const WireLabel& kb) {
    // ka || kb || tweak_base || gate_index fits one compression block
    uint8_t input[52];
    std::memcpy(input, ka.data(), 16);
    std::memcpy(input + 16, kb.data(), 16);
    std::memcpy(input + 32, tweak_base.data(), 16);
    for (int i = 0; i < 4; ++i) input[48 + i] = static_cast<uint8_t>(gate_index >> (8 * i));
    Digest d = sha256(std::span(input, sizeof input));
    Row r;
    std::memcpy(r.data(), d.data(), kRowLen);
    return r;
}

GarbleOutput garble(const BooleanCircuit& c, const Bytes& seed, const GarbleOverrides& overrides) {
    Prg prg(seed, "garble");
    GarbleOutput out;

    out.encoding.delta = overrides.delta ? *overrides.delta : with_bit(random_label(prg), true);
    if (!label_lsb(out.encoding.delta))
        throw std::invalid_argument("garbling offset must have its permute bit set");
    const WireLabel& delta = out.encoding.delta;

    prg.fill(out.gc.tweak_base);
    out.gc.circuit_hash = c.hash();

    std::vector<WireLabel>& zero = out.zero_labels;
    zero.resize(c.wire_count());
    for (uint32_t w = 0; w < c.input_width(); ++w) {
        auto it = overrides.input_zero_labels.find(w);
        zero[w] = it != overrides.input_zero_labels.end() ? it->second : random_label(prg);
    }

    out.gc.rows.reserve(4 * c.and_count());
    uint32_t gate_index = 0;
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::Xor:
                zero[g.out] = zero[g.in0] ^ zero[g.in1];
                break;
            case GateKind::Inv:
                // free: the 0-label of the output is the 1-label of the input
                zero[g.out] = zero[g.in0] ^ delta;
                break;
            case GateKind::And: {
                zero[g.out] = random_label(prg);
                for (int slot = 0; slot < 4; ++slot) {
                    bool sa = slot & 2, sb = slot & 1;
                    bool va = sa ^ label_lsb(zero[g.in0]);
                    bool vb = sb ^ label_lsb(zero[g.in1]);
                    WireLabel ka = va ? zero[g.in0] ^ delta : zero[g.in0];
                    WireLabel kb = vb ? zero[g.in1] ^ delta : zero[g.in1];
                    WireLabel kout = (va && vb) ? zero[g.out] ^ delta : zero[g.out];
                    Row row = row_pad(out.gc.tweak_base, gate_index, ka, kb);
                    for (int i = 0; i < 16; ++i) row[i] ^= kout[i];
                    out.gc.rows.push_back(row);
                }
                break;
            }
        }
        ++gate_index;
    }

    out.encoding.zero_labels.assign(zero.begin(), zero.begin() + c.input_width());
    out.decoding.permute.reserve(c.output_wires().size());
    for (uint32_t w : c.output_wires()) out.decoding.permute.push_back(label_lsb(zero[w]));
    return out;
}

ActiveLabels encode(const EncodingInfo& e, const std::vector<bool>& bits) {
    if (bits.size() != e.zero_labels.size())
        throw ProtocolError(errc::WidthMismatch, "encode input width mismatch");
    ActiveLabels x;
    x.labels.reserve(bits.size());
    for (size_t i = 0; i < bits.size(); ++i)
        x.labels.push_back(bits[i] ? e.zero_labels[i] ^ e.delta : e.zero_labels[i]);
    return x;
}

EvalTrace evaluate_trace(const GarbledCircuit& f, const BooleanCircuit& c, const ActiveLabels& x) {
    if (x.labels.size() != c.input_width())
        throw ProtocolError(errc::WidthMismatch, "evaluate needs one label per input wire");
    if (f.circuit_hash != c.hash())
        throw ProtocolError(errc::ValidationError, "garbled table belongs to a different circuit");

    EvalTrace trace;
    std::vector<WireLabel>& wires = trace.wire_labels;
    wires.resize(c.wire_count());
    std::copy(x.labels.begin(), x.labels.end(), wires.begin());

    uint32_t gate_index = 0;
    size_t and_index = 0;
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::Xor:
                wires[g.out] = wires[g.in0] ^ wires[g.in1];
                break;
            case GateKind::Inv:
                // relabeling only; the decoding table flips the meaning
                wires[g.out] = wires[g.in0];
                break;
            case GateKind::And: {
                const WireLabel& ka = wires[g.in0];
                const WireLabel& kb = wires[g.in1];
                size_t slot = static_cast<size_t>(label_lsb(ka)) * 2 + label_lsb(kb);
                Row row = f.rows.at(4 * and_index + slot);
                Row pad = row_pad(f.tweak_base, gate_index, ka, kb);
                for (size_t i = 0; i < kRowLen; ++i) row[i] ^= pad[i];
                for (size_t i = 16; i < kRowLen; ++i)
                    if (row[i] != 0)
                        throw ProtocolError(errc::RowTagFailure,
                                            "row tag check failed at gate " + std::to_string(gate_index));
                std::memcpy(wires[g.out].data(), row.data(), 16);
                ++and_index;
                break;
            }
        }
        ++gate_index;
    }

    trace.outputs.labels.reserve(c.output_wires().size());
    for (uint32_t w : c.output_wires()) trace.outputs.labels.push_back(wires[w]);
    return trace;
}

ActiveLabels evaluate(const GarbledCircuit& f, const BooleanCircuit& c, const ActiveLabels& x) {
    return evaluate_trace(f, c, x).outputs;
}

std::vector<bool> decode(const DecodingInfo& d, const ActiveLabels& y) {
    if (d.permute.size() != y.labels.size())
        throw ProtocolError(errc::WidthMismatch, "decode width mismatch");
    std::vector<bool> bits(y.labels.size());
    for (size_t i = 0; i < bits.size(); ++i) bits[i] = label_lsb(y.labels[i]) != d.permute[i];
    return bits;
}

bool verify_garbling(const GarbledCircuit& f, const BooleanCircuit& c, const Bytes& seed,
                     const GarbleOverrides& overrides) {
    GarbleOutput again = garble(c, seed, overrides);
    return again.gc.serialize() == f.serialize();
}

Bytes GarbledCircuit::serialize() const {
    Bytes out;
    append_u32le(out, static_cast<uint32_t>(rows.size()));
    for (const Row& r : rows) append(out, r);
    append(out, circuit_hash);
    append(out, tweak_base);
    return out;
}

GarbledCircuit GarbledCircuit::deserialize(std::span<const uint8_t> raw) {
    if (raw.size() < 4) throw ProtocolError(errc::ValidationError, "garbled circuit blob truncated");
    uint32_t count = static_cast<uint32_t>(raw[0]) | raw[1] << 8 | raw[2] << 16 |
                     static_cast<uint32_t>(raw[3]) << 24;
    size_t need = 4 + size_t{count} * kRowLen + 32 + 16;
    if (raw.size() != need) throw ProtocolError(errc::ValidationError, "garbled circuit blob truncated");
    GarbledCircuit gc;
    size_t pos = 4;
    gc.rows.resize(count);
    for (auto& r : gc.rows) {
        std::memcpy(r.data(), raw.data() + pos, kRowLen);
        pos += kRowLen;
    }
    std::memcpy(gc.circuit_hash.data(), raw.data() + pos, 32);
    pos += 32;
    std::memcpy(gc.tweak_base.data(), raw.data() + pos, 16);
    return gc;
}

}  // namespace tlsn::garble
