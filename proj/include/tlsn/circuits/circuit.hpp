#ifndef TLSN_CIRCUITS_CIRCUIT_HPP_
#define TLSN_CIRCUITS_CIRCUIT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tlsn/bytes.hpp"
#include "tlsn/hash.hpp"

namespace tlsn::circuits {

enum class GateKind : uint8_t { And, Xor, Inv };

struct Gate {
    GateKind kind;
    uint32_t in0;
    uint32_t in1;  // ignored for Inv
    uint32_t out;
};

struct InputGroup {
    std::string name;
    uint32_t first;  // first wire id; group occupies [first, first+width)
    uint32_t width;
};

// Gate-list circuit over {AND, XOR, INV}. Wires are dense ids: inputs first,
// then one new wire per gate in topological order. The output wires are the
// last `output_width` wires, ascending (bit 0 first).
class BooleanCircuit {
public:
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<InputGroup>& input_groups() const { return groups_; }
    const std::vector<uint32_t>& output_wires() const { return outputs_; }
    uint32_t wire_count() const { return wire_count_; }
    uint32_t input_width() const { return input_width_; }
    size_t and_count() const;

    const InputGroup& group(std::string_view name) const;
    bool has_group(std::string_view name) const;

    std::string serialize() const;
    Digest hash() const { return sha256(str_bytes(serialize())); }

    friend class CircuitBuilder;
    friend BooleanCircuit parse_circuit(std::string_view text);

private:
    std::vector<Gate> gates_;
    std::vector<InputGroup> groups_;
    std::vector<uint32_t> outputs_;
    uint32_t wire_count_ = 0;
    uint32_t input_width_ = 0;
};

// Line format: `inputs <name:width> ...`, `outputs <width>`, one gate per
// line, `#` comments. Throws ParseError / ValidationError.
BooleanCircuit parse_circuit(std::string_view text);

using InputAssignment = std::map<std::string, std::vector<bool>, std::less<>>;

// Deterministic gate-by-gate evaluation; the plain oracle `ev`.
std::vector<bool> eval_plain(const BooleanCircuit& c, const InputAssignment& inputs);

// Incremental construction used by the circuit library.
class CircuitBuilder {
public:
    uint32_t add_group(std::string name, uint32_t width);
    uint32_t and_gate(uint32_t a, uint32_t b);
    uint32_t xor_gate(uint32_t a, uint32_t b);
    uint32_t inv_gate(uint32_t a);

    uint32_t wire_count() const { return c_.wire_count_; }

    // Outputs must be the most recent |outputs| wires in ascending order;
    // the builder inserts INV pairs to reposition anything else.
    BooleanCircuit finish(const std::vector<uint32_t>& outputs);

private:
    uint32_t new_wire();
    BooleanCircuit c_;
    bool inputs_closed_ = false;
};

struct CircuitBundle {
    BooleanCircuit circuit;
    std::string name;
    std::string metadata;  // human-readable width documentation
    std::map<std::string, std::vector<uint32_t>, std::less<>> taps;  // named internal wires
};

// helpers shared by tests and the record layer
std::vector<bool> bits_lsb(uint64_t value, unsigned width);
uint64_t bits_to_u64(const std::vector<bool>& bits);

}  // namespace tlsn::circuits

#endif
