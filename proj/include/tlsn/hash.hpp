#ifndef TLSN_HASH_HPP_
#define TLSN_HASH_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "tlsn/bytes.hpp"

namespace tlsn {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);
Digest sha256_concat(std::initializer_list<std::span<const uint8_t>> parts);

// Deterministic byte stream: SHA-256(seed || label || counter) blocks.
// Every piece of protocol randomness flows through one of these so runs
// are reproducible from the session seeds.
class Prg {
public:
    explicit Prg(Bytes seed, std::string label = "");
    explicit Prg(uint64_t seed, std::string label = "");

    Bytes bytes(size_t n);
    void fill(std::span<uint8_t> out);
    uint8_t byte();
    uint64_t u64();
    // uniform in [0, bound) via rejection sampling
    uint64_t uniform(uint64_t bound);
    bool bit();

    // independent child stream; children with distinct labels never overlap
    Prg child(std::string_view label) const;

    const Bytes& seed() const { return seed_; }

private:
    void refill();
    Bytes seed_;
    std::string label_;
    Bytes input_;
    size_t counter_offset_ = 0;
    uint64_t counter_ = 0;
    std::array<uint8_t, 32> block_{};
    size_t used_ = 32;
};

}  // namespace tlsn

#endif
