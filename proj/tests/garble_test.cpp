#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlsn/circuits/library.hpp"
#include "tlsn/garble/garble.hpp"

using namespace tlsn::garble;
using namespace tlsn::circuits;
using tlsn::Bytes;
using tlsn::Prg;
using tlsn::ProtocolError;

namespace {

std::vector<bool> concat_bits(std::initializer_list<std::vector<bool>> parts) {
    std::vector<bool> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

BooleanCircuit one_and_circuit() {
    return parse_circuit("inputs a:1 b:1\noutputs 1\nAND 0 1 2\n");
}

}  // namespace

TEST_CASE("garbled pipeline equals plain eval on the multiplier, all 16 inputs") {
    auto bundle = build_multiplier_bundle();
    Prg seed_rng(1);
    Bytes seed = seed_rng.bytes(32);
    auto g = garble(bundle.circuit, seed);

    for (unsigned a = 0; a < 4; ++a) {
        for (unsigned b = 0; b < 4; ++b) {
            auto bits = concat_bits({bits_lsb(a, 2), bits_lsb(b, 2)});
            auto x = encode(g.encoding, bits);
            auto y = evaluate(g.gc, bundle.circuit, x);
            auto out = decode(g.decoding, y);
            InputAssignment in{{"a", bits_lsb(a, 2)}, {"b", bits_lsb(b, 2)}};
            CHECK(out == eval_plain(bundle.circuit, in));
            CHECK(bits_to_u64(out) == a * b);
        }
    }
}

TEST_CASE("garbling is a pure function of circuit and seed") {
    auto bundle = build_toy_cipher_circuit();
    Bytes seed = Prg(7).bytes(32);
    auto g1 = garble(bundle.circuit, seed);
    auto g2 = garble(bundle.circuit, seed);
    CHECK(g1.gc.serialize() == g2.gc.serialize());
    CHECK(g1.encoding.zero_labels == g2.encoding.zero_labels);
    CHECK(g1.decoding == g2.decoding);

    auto g3 = garble(bundle.circuit, Prg(8).bytes(32));
    CHECK(g1.gc.serialize() != g3.gc.serialize());
}

TEST_CASE("free-offset structure: sibling labels differ by delta, permute bits differ") {
    auto bundle = build_multiplier_bundle();
    auto g = garble(bundle.circuit, Prg(3).bytes(32));
    for (uint32_t w = 0; w < bundle.circuit.input_width(); ++w) {
        WireLabel l0 = g.encoding.label(w, false), l1 = g.encoding.label(w, true);
        CHECK((l0 ^ l1) == g.encoding.delta);
        CHECK(label_lsb(l0) != label_lsb(l1));
    }
}

TEST_CASE("1-AND circuit: 4 rows, active labels open exactly one row") {
    auto c = one_and_circuit();
    auto g = garble(c, Prg(11).bytes(32));
    REQUIRE(g.gc.rows.size() == 4);

    for (int va = 0; va <= 1; ++va) {
        for (int vb = 0; vb <= 1; ++vb) {
            WireLabel ka = g.encoding.label(0, va), kb = g.encoding.label(1, vb);
            int valid = 0;
            for (int slot = 0; slot < 4; ++slot) {
                Row row = g.gc.rows[slot];
                Row pad = row_pad(g.gc.tweak_base, 0, ka, kb);
                bool tag_ok = true;
                for (size_t i = 16; i < kRowLen; ++i)
                    if ((row[i] ^ pad[i]) != 0) tag_ok = false;
                if (tag_ok) ++valid;
            }
            CHECK(valid == 1);  // the three off-path rows stay sealed
        }
    }

    // labels for (1,1) evaluate to the 1-output label
    auto x = encode(g.encoding, {true, true});
    auto y = evaluate(g.gc, c, x);
    CHECK(decode(g.decoding, y) == std::vector<bool>{true});
}

TEST_CASE("corrupted row is caught by the tag check") {
    auto c = one_and_circuit();
    auto g = garble(c, Prg(13).bytes(32));
    auto x = encode(g.encoding, {true, true});
    size_t slot = static_cast<size_t>(label_lsb(x.labels[0])) * 2 + label_lsb(x.labels[1]);
    auto tampered = g.gc;
    tampered.rows[slot][5] ^= 0x40;
    CHECK_THROWS_WITH_AS(evaluate(tampered, c, x), doctest::Contains("row tag"), ProtocolError);
}

TEST_CASE("toy cipher garbled vs plain on random inputs") {
    auto bundle = build_toy_cipher_circuit();
    Prg rng(17);
    Bytes seed = rng.bytes(32);
    auto g = garble(bundle.circuit, seed);
    for (int t = 0; t < 25; ++t) {
        uint32_t key = static_cast<uint32_t>(rng.u64());
        uint16_t block = static_cast<uint16_t>(rng.u64());
        auto bits = concat_bits({bits_lsb(key, 32), bits_lsb(block, 16)});
        auto out = decode(g.decoding, evaluate(g.gc, bundle.circuit, encode(g.encoding, bits)));
        CHECK(static_cast<uint16_t>(bits_to_u64(out)) == toy_cipher_encrypt(key, block));
    }
}

TEST_CASE("encode flips exactly one label per flipped bit") {
    auto bundle = build_multiplier_bundle();
    auto g = garble(bundle.circuit, Prg(19).bytes(32));
    auto x0 = encode(g.encoding, {false, false, false, false});
    for (uint32_t w = 0; w < 4; ++w) CHECK(x0.labels[w] == g.encoding.zero_labels[w]);

    std::vector<bool> flipped{false, false, true, false};
    auto x1 = encode(g.encoding, flipped);
    int diff = 0;
    for (uint32_t w = 0; w < 4; ++w)
        if (x1.labels[w] != x0.labels[w]) ++diff;
    CHECK(diff == 1);
}

TEST_CASE("decoding the garbler's own zero labels yields the permute table") {
    auto bundle = build_multiplier_bundle();
    auto g = garble(bundle.circuit, Prg(23).bytes(32));
    ActiveLabels zeros;
    for (uint32_t w : bundle.circuit.output_wires()) zeros.labels.push_back(g.zero_labels[w]);
    auto bits = decode(g.decoding, zeros);
    for (bool b : bits) CHECK(b == false);
}

TEST_CASE("verify_garbling accepts honest tables and rejects any flipped byte") {
    Prg rng(29);
    for (int t = 0; t < 20; ++t) {
        auto bundle = (t % 2) ? build_multiplier_bundle() : build_equality_circuit(8);
        Bytes seed = rng.bytes(32);
        auto g = garble(bundle.circuit, seed);
        CHECK(verify_garbling(g.gc, bundle.circuit, seed));

        auto bad = g.gc;
        size_t row = rng.uniform(bad.rows.size());
        size_t byte = rng.uniform(kRowLen);
        bad.rows[row][byte] ^= static_cast<uint8_t>(1 + rng.uniform(255));
        CHECK_FALSE(verify_garbling(bad, bundle.circuit, seed));
    }
}

TEST_CASE("garble honors delta and input label overrides") {
    auto bundle = build_multiplier_bundle();
    Prg rng(31);
    GarbleOverrides ov;
    WireLabel delta;
    rng.fill(delta);
    delta[15] |= 1;
    ov.delta = delta;
    WireLabel w0;
    rng.fill(w0);
    ov.input_zero_labels[0] = w0;

    auto g = garble(bundle.circuit, rng.bytes(32), ov);
    CHECK(g.encoding.delta == delta);
    CHECK(g.encoding.zero_labels[0] == w0);
    CHECK(verify_garbling(g.gc, bundle.circuit, Bytes{}) == false);

    // correctness still holds with overrides in place
    auto x = encode(g.encoding, {true, true, true, true});
    auto out = decode(g.decoding, evaluate(g.gc, bundle.circuit, x));
    CHECK(bits_to_u64(out) == 9);
}

TEST_CASE("garbled circuit serialization round trip") {
    auto bundle = build_multiplier_bundle();
    auto g = garble(bundle.circuit, Prg(37).bytes(32));
    auto blob = g.gc.serialize();
    auto back = GarbledCircuit::deserialize(blob);
    CHECK(back == g.gc);
}
