#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace herencode {

// ceil(log2(n)) for n >= 1; 0 for n <= 1.
unsigned ceil_log2(std::uint64_t n);
// Number of bits of n in binary (0 -> 1).
unsigned bit_length(std::uint64_t n);

class BitString {
 public:
  BitString() = default;

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }

  void push_back(bool b) { bits_.push_back(b); }
  // Appends the low `width` bits of value, most significant first.
  void append(std::uint64_t value, unsigned width);
  void append(const BitString& o) { bits_.insert(bits_.end(), o.bits_.begin(), o.bits_.end()); }

  // "0101..." form.
  std::string to_binary() const;
  static BitString from_binary(std::string_view s);
  // Packed big-endian hex, last byte zero-padded; bit count kept separately.
  std::string to_hex() const;
  static BitString from_hex(std::string_view hex, std::size_t bit_count);
  std::vector<std::uint8_t> to_bytes() const;
  static BitString from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t bit_count);

  friend bool operator==(const BitString&, const BitString&) = default;
  friend bool operator<(const BitString& a, const BitString& b) { return a.bits_ < b.bits_; }

 private:
  std::vector<bool> bits_;
};

// Sequential reader; throws MalformedWordError on underflow.
class BitReader {
 public:
  explicit BitReader(const BitString& bits, std::size_t pos = 0) : bits_(bits), pos_(pos) {}

  bool read_bit();
  std::uint64_t read(unsigned width);
  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bits_.size() - pos_; }
  bool at_end() const { return pos_ == bits_.size(); }

 private:
  const BitString& bits_;
  std::size_t pos_;
};

}  // namespace herencode
