#include "tlsn/hash.hpp"

#include <openssl/evp.h>

#include <cstring>

namespace tlsn {

Digest sha256(std::span<const uint8_t> data) {
    // cached digest context; the one-shot SHA256() refetches the provider on
    // every call, which dominates small-input hashing
    static const EVP_MD* md = EVP_MD_fetch(nullptr, "SHA256", nullptr);
    thread_local EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    Digest d;
    unsigned int len = 0;
    EVP_DigestInit_ex(ctx, md, nullptr);
    EVP_DigestUpdate(ctx, data.data(), data.size());
    EVP_DigestFinal_ex(ctx, d.data(), &len);
    return d;
}

Digest sha256_concat(std::initializer_list<std::span<const uint8_t>> parts) {
    Bytes buf;
    size_t total = 0;
    for (auto p : parts) total += p.size();
    buf.reserve(total);
    for (auto p : parts) append(buf, p);
    return sha256(buf);
}

Prg::Prg(Bytes seed, std::string label) : seed_(std::move(seed)), label_(std::move(label)) {}

Prg::Prg(uint64_t seed, std::string label) : label_(std::move(label)) {
    seed_.resize(8);
    for (int i = 0; i < 8; ++i) seed_[i] = static_cast<uint8_t>(seed >> (8 * i));
}

void Prg::refill() {
    // input buffer (seed || label || counter) is assembled once and the
    // counter bytes patched in place; this sits in the OT keystream hot loop
    if (input_.empty()) {
        input_ = seed_;
        append(input_, str_bytes(label_));
        counter_offset_ = input_.size();
        input_.resize(input_.size() + 8);
    }
    for (int i = 0; i < 8; ++i)
        input_[counter_offset_ + i] = static_cast<uint8_t>(counter_ >> (8 * i));
    ++counter_;
    block_ = sha256(input_);
    used_ = 0;
}

uint8_t Prg::byte() {
    if (used_ >= block_.size()) refill();
    return block_[used_++];
}

Bytes Prg::bytes(size_t n) {
    Bytes out(n);
    size_t filled = 0;
    while (filled < n) {
        if (used_ >= block_.size()) refill();
        size_t take = std::min(n - filled, block_.size() - used_);
        std::memcpy(out.data() + filled, block_.data() + used_, take);
        used_ += take;
        filled += take;
    }
    return out;
}

void Prg::fill(std::span<uint8_t> out) {
    size_t filled = 0;
    while (filled < out.size()) {
        if (used_ >= block_.size()) refill();
        size_t take = std::min(out.size() - filled, block_.size() - used_);
        std::memcpy(out.data() + filled, block_.data() + used_, take);
        used_ += take;
        filled += take;
    }
}

uint64_t Prg::u64() {
    uint8_t raw[8];
    fill(raw);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(raw[i]) << (8 * i);
    return v;
}

uint64_t Prg::uniform(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t v = u64();
        if (v < limit) return v % bound;
    }
}

bool Prg::bit() { return (byte() & 1) != 0; }

Prg Prg::child(std::string_view label) const {
    Bytes input = seed_;
    append(input, str_bytes(label_));
    append(input, str_bytes("/child/"));
    append(input, str_bytes(label));
    Digest d = sha256(input);
    return Prg(Bytes(d.begin(), d.end()), std::string(label));
}

}  // namespace tlsn
