#ifndef TLSN_BYTES_HPP_
#define TLSN_BYTES_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlsn {

using Bytes = std::vector<uint8_t>;

inline std::string to_hex(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

inline Bytes from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
        out[i] = static_cast<uint8_t>(hi << 4 | lo);
    }
    return out;
}

inline Bytes concat(std::span<const uint8_t> a, std::span<const uint8_t> b) {
    Bytes out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline void append(Bytes& out, std::span<const uint8_t> more) {
    out.insert(out.end(), more.begin(), more.end());
}

inline void append_u32le(Bytes& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 24));
}

inline void append_u64le(Bytes& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

// Packs a list of byte strings with u32 length prefixes. All protocol
// payloads use this framing so transcript audits can match whole fields.
inline Bytes pack_fields(const std::vector<Bytes>& fields) {
    Bytes out;
    append_u32le(out, static_cast<uint32_t>(fields.size()));
    for (const auto& f : fields) {
        append_u32le(out, static_cast<uint32_t>(f.size()));
        append(out, f);
    }
    return out;
}

inline std::vector<Bytes> unpack_fields(std::span<const uint8_t> data) {
    auto read_u32 = [&](size_t& pos) -> uint32_t {
        if (pos + 4 > data.size()) throw std::invalid_argument("truncated field framing");
        uint32_t v = static_cast<uint32_t>(data[pos]) | static_cast<uint32_t>(data[pos + 1]) << 8 |
                     static_cast<uint32_t>(data[pos + 2]) << 16 | static_cast<uint32_t>(data[pos + 3]) << 24;
        pos += 4;
        return v;
    };
    size_t pos = 0;
    uint32_t count = read_u32(pos);
    std::vector<Bytes> fields;
    fields.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        uint32_t len = read_u32(pos);
        if (pos + len > data.size()) throw std::invalid_argument("truncated field payload");
        fields.emplace_back(data.begin() + pos, data.begin() + pos + len);
        pos += len;
    }
    return fields;
}

inline Bytes str_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

// ascii-hex encoding as a byte string, for hex-valued message fields
inline Bytes hex_bytes(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    Bytes out(data.size() * 2);
    for (size_t i = 0; i < data.size(); ++i) {
        out[2 * i] = static_cast<uint8_t>(digits[data[i] >> 4]);
        out[2 * i + 1] = static_cast<uint8_t>(digits[data[i] & 0xf]);
    }
    return out;
}

inline Bytes unhex_field(const Bytes& field) {
    return from_hex(std::string_view(reinterpret_cast<const char*>(field.data()), field.size()));
}

}  // namespace tlsn

#endif
