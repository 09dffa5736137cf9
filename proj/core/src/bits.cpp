#include "herencode/bits.hpp"

#include <stdexcept>

#include "herencode/errors.hpp"

namespace herencode {

unsigned ceil_log2(std::uint64_t n) {
  unsigned w = 0;
  while (w < 64 && (std::uint64_t{1} << w) < n) ++w;
  return w;
}

unsigned bit_length(std::uint64_t n) {
  unsigned w = 1;
  while (w < 64 && (n >> w) != 0) ++w;
  return w;
}

void BitString::append(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) bits_.push_back((value >> i) & 1);
}

std::string BitString::to_binary() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitString BitString::from_binary(std::string_view s) {
  BitString out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw MalformedWordError("expected a binary digit", i);
    out.push_back(s[i] == '1');
  }
  return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
  return out;
}

BitString BitString::from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) throw MalformedWordError("bit count exceeds payload", bytes.size() * 8);
  BitString out;
  for (std::size_t i = 0; i < bit_count; ++i) out.push_back((bytes[i / 8] >> (7 - i % 8)) & 1);
  return out;
}

std::string BitString::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (auto byte : to_bytes()) {
    s.push_back(digits[byte >> 4]);
    s.push_back(digits[byte & 15]);
  }
  return s;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_count) {
  if (hex.size() % 2 != 0) throw MalformedWordError("odd number of hex digits", hex.size());
  std::vector<std::uint8_t> bytes;
  auto nibble = [&](std::size_t i) -> int {
    char c = hex[i];
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw MalformedWordError("invalid hex digit", i);
  };
  for (std::size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(static_cast<std::uint8_t>(nibble(i) << 4 | nibble(i + 1)));
  if ((bit_count + 7) / 8 != bytes.size()) throw MalformedWordError("hex length does not match bit count", hex.size());
  return from_bytes(bytes, bit_count);
}

bool BitReader::read_bit() {
  if (pos_ >= bits_.size()) throw MalformedWordError("unexpected end of bits", pos_);
  return bits_[pos_++];
}

std::uint64_t BitReader::read(unsigned width) {
  if (remaining() < width) throw MalformedWordError("unexpected end of bits", bits_.size());
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | (bits_[pos_++] ? 1 : 0);
  return v;
}

}  // namespace herencode
