#include "tlsn/circuits/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "tlsn/errors.hpp"

namespace tlsn::circuits {

namespace {
[[noreturn]] void parse_fail(size_t line, const std::string& reason) {
    throw ProtocolError(errc::ParseError, "line " + std::to_string(line) + ": " + reason);
}
[[noreturn]] void validation_fail(const std::string& kind) {
    throw ProtocolError(errc::ValidationError, kind);
}
}  // namespace

size_t BooleanCircuit::and_count() const {
    return static_cast<size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::And; }));
}

const InputGroup& BooleanCircuit::group(std::string_view name) const {
    for (const auto& g : groups_)
        if (g.name == name) return g;
    throw std::invalid_argument("no input group named " + std::string(name));
}

bool BooleanCircuit::has_group(std::string_view name) const {
    for (const auto& g : groups_)
        if (g.name == name) return true;
    return false;
}

std::string BooleanCircuit::serialize() const {
    std::ostringstream out;
    out << "inputs";
    for (const auto& g : groups_) out << ' ' << g.name << ':' << g.width;
    out << '\n';
    out << "outputs " << outputs_.size() << '\n';
    for (const auto& g : gates_) {
        switch (g.kind) {
            case GateKind::And: out << "AND " << g.in0 << ' ' << g.in1 << ' ' << g.out << '\n'; break;
            case GateKind::Xor: out << "XOR " << g.in0 << ' ' << g.in1 << ' ' << g.out << '\n'; break;
            case GateKind::Inv: out << "INV " << g.in0 << ' ' << g.out << '\n'; break;
        }
    }
    return out.str();
}

BooleanCircuit parse_circuit(std::string_view text) {
    BooleanCircuit c;
    std::istringstream stream{std::string(text)};
    std::string line;
    size_t lineno = 0;
    bool saw_inputs = false, saw_outputs = false;
    uint32_t output_width = 0;
    std::vector<bool> written;

    auto next_token = [](std::istringstream& ls, std::string& tok) { return bool(ls >> tok); };

    while (std::getline(stream, line)) {
        ++lineno;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.resize(hash_pos);
        std::istringstream ls(line);
        std::string tok;
        if (!next_token(ls, tok)) continue;

        if (tok == "inputs") {
            if (saw_inputs) parse_fail(lineno, "duplicate inputs header");
            saw_inputs = true;
            std::string spec;
            while (ls >> spec) {
                auto colon = spec.find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size())
                    parse_fail(lineno, "input group must be name:width");
                std::string name = spec.substr(0, colon);
                uint32_t width = 0;
                try {
                    width = static_cast<uint32_t>(std::stoul(spec.substr(colon + 1)));
                } catch (...) {
                    parse_fail(lineno, "bad input width");
                }
                if (width == 0) parse_fail(lineno, "zero-width input group");
                for (const auto& g : c.groups_)
                    if (g.name == name) parse_fail(lineno, "duplicate input group " + name);
                c.groups_.push_back({name, c.input_width_, width});
                c.input_width_ += width;
            }
            if (c.groups_.empty()) parse_fail(lineno, "inputs header without groups");
            c.wire_count_ = c.input_width_;
            written.assign(c.input_width_, true);
        } else if (tok == "outputs") {
            if (!saw_inputs) parse_fail(lineno, "outputs before inputs");
            if (saw_outputs) parse_fail(lineno, "duplicate outputs header");
            saw_outputs = true;
            if (!(ls >> output_width) || output_width == 0) parse_fail(lineno, "bad output width");
        } else if (tok == "AND" || tok == "XOR" || tok == "INV") {
            if (!saw_outputs) parse_fail(lineno, "gate before headers");
            Gate g{};
            g.kind = tok == "AND" ? GateKind::And : tok == "XOR" ? GateKind::Xor : GateKind::Inv;
            uint32_t args[3] = {0, 0, 0};
            int want = g.kind == GateKind::Inv ? 2 : 3;
            for (int i = 0; i < want; ++i)
                if (!(ls >> args[i])) parse_fail(lineno, "gate needs " + std::to_string(want) + " wire ids");
            std::string extra;
            if (ls >> extra) parse_fail(lineno, "trailing tokens after gate");
            g.in0 = args[0];
            g.in1 = g.kind == GateKind::Inv ? args[0] : args[1];
            g.out = g.kind == GateKind::Inv ? args[1] : args[2];

            auto check_read = [&](uint32_t w) {
                if (w >= written.size() || !written[w])
                    validation_fail("gate reads unwritten wire " + std::to_string(w));
            };
            check_read(g.in0);
            if (g.kind != GateKind::Inv) check_read(g.in1);
            if (g.out != c.wire_count_)
                validation_fail("gate output " + std::to_string(g.out) + " breaks dense wire order (expected " +
                                std::to_string(c.wire_count_) + ")");
            written.push_back(true);
            ++c.wire_count_;
            c.gates_.push_back(g);
        } else {
            parse_fail(lineno, "unknown directive " + tok);
        }
    }

    if (!saw_inputs || !saw_outputs) validation_fail("missing inputs/outputs header");
    if (output_width > c.wire_count_) validation_fail("output width exceeds wire count");
    for (uint32_t i = c.wire_count_ - output_width; i < c.wire_count_; ++i) c.outputs_.push_back(i);
    return c;
}

std::vector<bool> eval_plain(const BooleanCircuit& c, const InputAssignment& inputs) {
    std::vector<uint8_t> wires(c.wire_count(), 0);
    for (const auto& g : c.input_groups()) {
        auto it = inputs.find(g.name);
        if (it == inputs.end() || it->second.size() != g.width)
            throw ProtocolError(errc::InputWidthMismatch,
                                "input group " + g.name + " expects " + std::to_string(g.width) + " bits");
        for (uint32_t i = 0; i < g.width; ++i) wires[g.first + i] = it->second[i] ? 1 : 0;
    }
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::And: wires[g.out] = wires[g.in0] & wires[g.in1]; break;
            case GateKind::Xor: wires[g.out] = wires[g.in0] ^ wires[g.in1]; break;
            case GateKind::Inv: wires[g.out] = wires[g.in0] ^ 1; break;
        }
    }
    std::vector<bool> out;
    out.reserve(c.output_wires().size());
    for (uint32_t w : c.output_wires()) out.push_back(wires[w] != 0);
    return out;
}

uint32_t CircuitBuilder::add_group(std::string name, uint32_t width) {
    if (inputs_closed_) throw std::logic_error("input groups must precede gates");
    uint32_t first = c_.input_width_;
    c_.groups_.push_back({std::move(name), first, width});
    c_.input_width_ += width;
    c_.wire_count_ = c_.input_width_;
    return first;
}

uint32_t CircuitBuilder::new_wire() {
    inputs_closed_ = true;
    return c_.wire_count_++;
}

uint32_t CircuitBuilder::and_gate(uint32_t a, uint32_t b) {
    uint32_t out = new_wire();
    c_.gates_.push_back({GateKind::And, a, b, out});
    return out;
}

uint32_t CircuitBuilder::xor_gate(uint32_t a, uint32_t b) {
    uint32_t out = new_wire();
    c_.gates_.push_back({GateKind::Xor, a, b, out});
    return out;
}

uint32_t CircuitBuilder::inv_gate(uint32_t a) {
    uint32_t out = new_wire();
    c_.gates_.push_back({GateKind::Inv, a, a, out});
    return out;
}

BooleanCircuit CircuitBuilder::finish(const std::vector<uint32_t>& outputs) {
    std::vector<uint32_t> finals = outputs;
    uint32_t base = c_.wire_count_ - static_cast<uint32_t>(finals.size());
    bool in_place = true;
    for (size_t i = 0; i < finals.size(); ++i)
        if (finals[i] != base + i) in_place = false;

    if (!in_place) {
        // reposition through INV pairs: one mid pass, then a contiguous final pass
        std::vector<uint32_t> mids;
        mids.reserve(finals.size());
        for (uint32_t w : finals) mids.push_back(inv_gate(w));
        finals.clear();
        for (uint32_t m : mids) finals.push_back(inv_gate(m));
    }

    base = c_.wire_count_ - static_cast<uint32_t>(finals.size());
    for (size_t i = 0; i < finals.size(); ++i)
        if (finals[i] != base + i) throw std::logic_error("builder failed to place outputs last");
    c_.outputs_ = finals;
    return std::move(c_);
}

std::vector<bool> bits_lsb(uint64_t value, unsigned width) {
    std::vector<bool> bits(width);
    for (unsigned i = 0; i < width; ++i) bits[i] = (value >> i) & 1;
    return bits;
}

uint64_t bits_to_u64(const std::vector<bool>& bits) {
    uint64_t v = 0;
    for (size_t i = 0; i < bits.size() && i < 64; ++i)
        if (bits[i]) v |= uint64_t{1} << i;
    return v;
}

}  // namespace tlsn::circuits
