#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hlx/common.hpp"

namespace hlx {

// Little-endian primitive IO for the model ("HLM1") and embedding-cache
// ("HLE1") binary formats. Doubles are written as raw IEEE-754 bits so that
// save/load round-trips are bit-exact.
class BinWriter {
public:
    explicit BinWriter(std::ostream& out) : out_(out) {}

    void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }

    void u32(std::uint32_t v) {
        char b[4];
        for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        out_.write(b, 4);
    }

    void u64(std::uint64_t v) {
        char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        out_.write(b, 8);
    }

    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        out_.write(s.data(), static_cast<std::streamsize>(s.size()));
    }

    void f64_vec(const std::vector<double>& v) {
        u64(v.size());
        for (double x : v) f64(x);
    }

    void magic(const char (&m)[5]) { out_.write(m, 4); }

private:
    std::ostream& out_;
};

class BinReader {
public:
    explicit BinReader(std::istream& in) : in_(in) {}

    std::uint8_t u8() {
        int c = in_.get();
        require(c != EOF, "binary stream truncated");
        return static_cast<std::uint8_t>(c);
    }

    std::uint32_t u32() {
        char b[4];
        read(b, 4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(static_cast<unsigned char>(b[i])) << (8 * i);
        return v;
    }

    std::uint64_t u64() {
        char b[8];
        read(b, 8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(static_cast<unsigned char>(b[i])) << (8 * i);
        return v;
    }

    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }

    double f64() { return std::bit_cast<double>(u64()); }

    std::string str() {
        std::uint32_t n = u32();
        std::string s(n, '\0');
        if (n > 0) read(s.data(), n);
        return s;
    }

    std::vector<double> f64_vec() {
        std::uint64_t n = u64();
        std::vector<double> v(n);
        for (auto& x : v) x = f64();
        return v;
    }

    void expect_magic(const char (&m)[5]) {
        char b[4];
        read(b, 4);
        require(std::memcmp(b, m, 4) == 0,
                std::string("bad magic, expected ") + m);
    }

private:
    void read(char* dst, std::size_t n) {
        in_.read(dst, static_cast<std::streamsize>(n));
        require(static_cast<std::size_t>(in_.gcount()) == n, "binary stream truncated");
    }

    std::istream& in_;
};

}  // namespace hlx
