#include "tlsn/circuits/library.hpp"

#include <array>

namespace tlsn::circuits {

namespace {

using boost::multiprecision::uint512_t;

// PRESENT S-box
constexpr std::array<uint8_t, 16> kSbox = {0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                           0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2};

uint16_t rotl3(uint16_t v) { return static_cast<uint16_t>((v << 3) | (v >> 13)); }

// 4-bit S-box as shared-pair minterms: 4 INV + 24 AND + xor trees.
std::array<uint32_t, 4> sbox_gates(CircuitBuilder& b, const std::array<uint32_t, 4>& in) {
    std::array<uint32_t, 4> inv;
    for (int j = 0; j < 4; ++j) inv[j] = b.inv_gate(in[j]);
    auto lit = [&](int j, int v) { return v ? in[j] : inv[j]; };

    std::array<uint32_t, 4> lo, hi;
    for (int v = 0; v < 4; ++v) {
        lo[v] = b.and_gate(lit(0, v & 1), lit(1, (v >> 1) & 1));
        hi[v] = b.and_gate(lit(2, v & 1), lit(3, (v >> 1) & 1));
    }
    std::array<uint32_t, 16> minterm;
    for (int v = 0; v < 16; ++v) minterm[v] = b.and_gate(lo[v & 3], hi[v >> 2]);

    std::array<uint32_t, 4> out{};
    for (int bit = 0; bit < 4; ++bit) {
        uint32_t acc = UINT32_MAX;
        for (int v = 0; v < 16; ++v) {
            if (!((kSbox[v] >> bit) & 1)) continue;
            acc = acc == UINT32_MAX ? minterm[v] : b.xor_gate(acc, minterm[v]);
        }
        // every PRESENT S-box output column has at least one set entry
        out[bit] = acc;
    }
    return out;
}

// key bit j of round i; round keys alternate low/high key halves
uint32_t round_key_wire(const std::vector<uint32_t>& key, int round, int bit) {
    int base = (16 * round) % 32;
    return key[base + bit];
}

// shared SPN body: returns the 16 cipher output wires ("ectr" tap when the
// block input is a constant counter)
std::vector<uint32_t> spn_gates(CircuitBuilder& b, const std::vector<uint32_t>& key,
                                const std::vector<uint32_t>& block,
                                const uint16_t* const_block) {
    std::vector<uint32_t> state(16);
    // round 0 key mix; constant blocks fold to INV/passthrough on key wires
    for (int j = 0; j < 16; ++j) {
        uint32_t kw = round_key_wire(key, 0, j);
        if (const_block) {
            state[j] = ((*const_block >> j) & 1) ? b.inv_gate(kw) : kw;
        } else {
            state[j] = b.xor_gate(block[j], kw);
        }
    }
    for (int round = 0;; ++round) {
        // S-box layer
        std::vector<uint32_t> after(16);
        for (int nib = 0; nib < 4; ++nib) {
            std::array<uint32_t, 4> in{state[4 * nib], state[4 * nib + 1], state[4 * nib + 2],
                                       state[4 * nib + 3]};
            auto out = sbox_gates(b, in);
            for (int j = 0; j < 4; ++j) after[4 * nib + j] = out[j];
        }
        // rotl3 is a wire permutation: output bit j comes from input bit (j-3) mod 16
        for (int j = 0; j < 16; ++j) state[j] = after[(j + 13) % 16];
        if (round == 3) break;
        for (int j = 0; j < 16; ++j) state[j] = b.xor_gate(state[j], round_key_wire(key, round + 1, j));
    }
    // final whitening with round key 4
    std::vector<uint32_t> out(16);
    for (int j = 0; j < 16; ++j) out[j] = b.xor_gate(state[j], round_key_wire(key, 4, j));
    return out;
}

std::vector<uint32_t> group_wires(uint32_t first, uint32_t width) {
    std::vector<uint32_t> w(width);
    for (uint32_t i = 0; i < width; ++i) w[i] = first + i;
    return w;
}

std::vector<uint32_t> xor_shares(CircuitBuilder& b, const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& c) {
    std::vector<uint32_t> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = b.xor_gate(a[i], c[i]);
    return out;
}

// (a + b) mod p gate logic; returns w result wires (emitted last)
std::vector<uint32_t> add_mod_gates(CircuitBuilder& b, const std::vector<uint32_t>& a,
                                    const std::vector<uint32_t>& bw, const uint512_t& p,
                                    unsigned w) {
    // ripple adder, w+1 bit sum
    std::vector<uint32_t> sum(w + 1);
    uint32_t carry = UINT32_MAX;
    for (unsigned j = 0; j < w; ++j) {
        uint32_t x = b.xor_gate(a[j], bw[j]);
        if (carry == UINT32_MAX) {
            sum[j] = x;
            carry = b.and_gate(a[j], bw[j]);
        } else {
            sum[j] = b.xor_gate(x, carry);
            uint32_t t1 = b.and_gate(a[j], bw[j]);
            uint32_t t2 = b.and_gate(x, carry);
            carry = b.xor_gate(t1, t2);
        }
    }
    sum[w] = carry;

    // subtract the constant p over w+1 bits; final borrow set means sum < p
    std::vector<uint32_t> diff(w + 1);
    uint32_t borrow = UINT32_MAX;  // borrow-in 0, folded
    for (unsigned j = 0; j <= w; ++j) {
        bool pj = boost::multiprecision::bit_test(p, j);
        uint32_t s = sum[j];
        uint32_t d, nb;
        if (borrow == UINT32_MAX) {
            d = pj ? b.inv_gate(s) : s;
            nb = pj ? b.inv_gate(s) : UINT32_MAX;  // borrow stays clear for pj=0
        } else if (pj) {
            d = b.inv_gate(b.xor_gate(s, borrow));
            uint32_t t1 = b.inv_gate(s);
            uint32_t t2 = b.and_gate(s, borrow);
            nb = b.xor_gate(t1, t2);
        } else {
            d = b.xor_gate(s, borrow);
            nb = b.and_gate(b.inv_gate(s), borrow);
        }
        diff[j] = d;
        borrow = nb;
    }
    if (borrow == UINT32_MAX) throw std::logic_error("modulus must be nonzero");

    // select: borrow==1 -> sum (< p), else diff; result fits w bits
    std::vector<uint32_t> mux(w);
    for (unsigned j = 0; j < w; ++j) {
        uint32_t x = b.xor_gate(sum[j], diff[j]);
        mux[j] = b.and_gate(borrow, x);
    }
    std::vector<uint32_t> out(w);
    for (unsigned j = 0; j < w; ++j) out[j] = b.xor_gate(diff[j], mux[j]);
    return out;
}

std::vector<uint32_t> equality_gates(CircuitBuilder& b, const std::vector<uint32_t>& x,
                                     const std::vector<uint32_t>& y) {
    std::vector<uint32_t> match(x.size());
    for (size_t j = 0; j < x.size(); ++j) match[j] = b.inv_gate(b.xor_gate(x[j], y[j]));
    uint32_t acc = match[0];
    for (size_t j = 1; j < x.size(); ++j) acc = b.and_gate(acc, match[j]);
    return {acc};
}

}  // namespace

CircuitBundle build_multiplier_bundle() {
    CircuitBuilder b;
    uint32_t a = b.add_group("a", 2);
    uint32_t bb = b.add_group("b", 2);
    uint32_t a0 = a, a1 = a + 1, b0 = bb, b1 = bb + 1;

    uint32_t t1 = b.and_gate(a0, b1);
    uint32_t t2 = b.and_gate(a1, b0);
    uint32_t t3 = b.and_gate(a1, b1);
    uint32_t c1 = b.and_gate(t1, t2);
    uint32_t o0 = b.and_gate(a0, b0);
    uint32_t o1 = b.xor_gate(t1, t2);
    uint32_t o2 = b.xor_gate(t3, c1);
    uint32_t o3 = b.and_gate(t3, c1);

    CircuitBundle bundle;
    bundle.circuit = b.finish({o0, o1, o2, o3});
    bundle.name = "mul2x2";
    bundle.metadata = "2-bit x 2-bit multiplier, inputs a:2 b:2, output product:4";
    return bundle;
}

uint16_t toy_cipher_encrypt(uint32_t key, uint16_t block) {
    auto rk = [&](int i) -> uint16_t {
        return static_cast<uint16_t>(key >> ((16 * i) % 32));
    };
    uint16_t s = block;
    for (int round = 0; round < 4; ++round) {
        s ^= rk(round);
        uint16_t t = 0;
        for (int nib = 0; nib < 4; ++nib)
            t |= static_cast<uint16_t>(kSbox[(s >> (4 * nib)) & 0xF]) << (4 * nib);
        s = rotl3(t);
    }
    return s ^ rk(4);
}

CircuitBundle build_toy_cipher_circuit() {
    CircuitBuilder b;
    auto key = group_wires(b.add_group("key", 32), 32);
    auto block = group_wires(b.add_group("block", 16), 16);
    auto out = spn_gates(b, key, block, nullptr);

    CircuitBundle bundle;
    bundle.circuit = b.finish(out);
    bundle.name = "toy-cipher";
    bundle.metadata = "16-bit block 32-bit key SPN, inputs key:32 block:16, output enc:16";
    return bundle;
}

CircuitBundle build_equality_circuit(uint32_t width) {
    CircuitBuilder b;
    auto a = group_wires(b.add_group("a", width), width);
    auto bb = group_wires(b.add_group("b", width), width);
    auto out = equality_gates(b, a, bb);

    CircuitBundle bundle;
    bundle.circuit = b.finish(out);
    bundle.name = "eq" + std::to_string(width);
    bundle.metadata = "bit equality comparator, inputs a:w b:w, output 1 bit";
    return bundle;
}

CircuitBundle build_ctr_encrypt_circuit(uint16_t ctr_block) {
    CircuitBuilder b;
    auto kc = group_wires(b.add_group("kc", 32), 32);
    auto kn = group_wires(b.add_group("kn", 32), 32);
    auto p = group_wires(b.add_group("p", 16), 16);
    auto key = xor_shares(b, kc, kn);
    auto ectr = spn_gates(b, key, {}, &ctr_block);
    std::vector<uint32_t> out(16);
    for (int j = 0; j < 16; ++j) out[j] = b.xor_gate(ectr[j], p[j]);

    CircuitBundle bundle;
    bundle.circuit = b.finish(out);
    bundle.name = "ctr-enc-" + std::to_string(ctr_block);
    bundle.metadata = "Enc(kc^kn, ctr) ^ p, counter folded constant";
    bundle.taps["ectr"] = ectr;
    return bundle;
}

CircuitBundle build_ctr_mask_circuit(uint16_t ctr_block) {
    CircuitBuilder b;
    auto kc = group_wires(b.add_group("kc", 32), 32);
    auto kn = group_wires(b.add_group("kn", 32), 32);
    auto z = group_wires(b.add_group("z", 16), 16);
    auto key = xor_shares(b, kc, kn);
    auto ectr = spn_gates(b, key, {}, &ctr_block);
    std::vector<uint32_t> out(16);
    for (int j = 0; j < 16; ++j) out[j] = b.xor_gate(ectr[j], z[j]);

    CircuitBundle bundle;
    bundle.circuit = b.finish(out);
    bundle.name = "ctr-mask-" + std::to_string(ctr_block);
    bundle.metadata = "Enc(kc^kn, ctr) ^ z, masked counter encryption";
    bundle.taps["ectr"] = ectr;
    return bundle;
}

CircuitBundle build_xor_equals_const_circuit(uint16_t c_block) {
    CircuitBuilder b;
    auto p = group_wires(b.add_group("p", 16), 16);
    auto ectr = group_wires(b.add_group("ectr", 16), 16);
    std::vector<uint32_t> match(16);
    for (int j = 0; j < 16; ++j) {
        uint32_t t = b.xor_gate(p[j], ectr[j]);
        match[j] = ((c_block >> j) & 1) ? t : b.inv_gate(t);
    }
    uint32_t acc = match[0];
    for (int j = 1; j < 16; ++j) acc = b.and_gate(acc, match[j]);

    CircuitBundle bundle;
    bundle.circuit = b.finish({acc});
    bundle.name = "xor-eq-const";
    bundle.metadata = "(p ^ ectr) == c, ciphertext block folded constant";
    return bundle;
}

CircuitBundle build_add_mod_circuit(const uint512_t& modulus) {
    unsigned w = static_cast<unsigned>(boost::multiprecision::msb(modulus)) + 1;
    CircuitBuilder b;
    auto a = group_wires(b.add_group("a", w), w);
    auto bb = group_wires(b.add_group("b", w), w);
    auto out = add_mod_gates(b, a, bb, modulus, w);

    CircuitBundle bundle;
    bundle.circuit = b.finish(out);
    bundle.name = "addmod" + std::to_string(w);
    bundle.metadata = "(a + b) mod p, inputs a:w b:w, output w bits";
    return bundle;
}

CircuitBundle build_key_schedule_circuit(const uint512_t& modulus) {
    unsigned w = static_cast<unsigned>(boost::multiprecision::msb(modulus)) + 1;
    CircuitBuilder b;
    auto sc = group_wires(b.add_group("sc", w), w);
    auto mask = group_wires(b.add_group("m", 32), 32);
    auto sn = group_wires(b.add_group("sn", w), w);
    auto pms = add_mod_gates(b, sc, sn, modulus, w);

    std::vector<uint32_t> out(32);
    constexpr uint16_t kTweak = 0xA5C3;
    for (int j = 0; j < 16; ++j) {
        uint32_t low = j < static_cast<int>(w) ? pms[j] : UINT32_MAX;
        // pms has at least 16 bits for every registered modulus
        out[j] = b.xor_gate(low, mask[j]);
        uint32_t high = ((kTweak >> j) & 1) ? b.inv_gate(low) : low;
        out[16 + j] = b.xor_gate(high, mask[16 + j]);
    }

    CircuitBundle bundle;
    bundle.circuit = b.finish(out);
    bundle.name = "keysched" + std::to_string(w);
    bundle.metadata = "k32 = kdf((sc+sn) mod p) ^ m";
    return bundle;
}

uint32_t key_schedule(const uint512_t& pms) {
    uint16_t low = static_cast<uint16_t>(pms & 0xFFFF);
    return static_cast<uint32_t>(low) | (static_cast<uint32_t>(low ^ 0xA5C3) << 16);
}

}  // namespace tlsn::circuits
