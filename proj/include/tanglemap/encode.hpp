#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tanglemap/sha256.hpp"

namespace tanglemap {

using Bytes = std::vector<std::uint8_t>;

// Little-endian, length-prefixed framing shared by content hashing and the
// on-disk call encodings. Field order is part of every id, so it never changes.
class ByteWriter {
 public:
  void put_u8(std::uint8_t v) { buf_.push_back(v); }

  void put_u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(std::uint8_t(v >> (8 * i)));
  }

  void put_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(std::uint8_t(v >> (8 * i)));
  }

  void put_i32(std::int32_t v) { put_u32(std::uint32_t(v)); }
  void put_i64(std::int64_t v) { put_u64(std::uint64_t(v)); }

  void put_bytes(std::span<const std::uint8_t> b) {
    put_u64(b.size());
    buf_.insert(buf_.end(), b.begin(), b.end());
  }

  void put_str(std::string_view s) {
    put_u64(s.size());
    buf_.insert(buf_.end(), s.begin(), s.end());
  }

  void put_hash(const Hash256& h) { buf_.insert(buf_.end(), h.begin(), h.end()); }

  void put_raw(std::span<const std::uint8_t> b) {
    buf_.insert(buf_.end(), b.begin(), b.end());
  }

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }
  Hash256 digest() const { return sha256(buf_); }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  bool ok() const { return ok_; }
  bool at_end() const { return pos_ == data_.size(); }

  std::uint8_t get_u8() {
    if (!need(1)) return 0;
    return data_[pos_++];
  }

  std::uint32_t get_u32() {
    if (!need(4)) return 0;
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(data_[pos_++]) << (8 * i);
    return v;
  }

  std::uint64_t get_u64() {
    if (!need(8)) return 0;
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(data_[pos_++]) << (8 * i);
    return v;
  }

  std::int32_t get_i32() { return std::int32_t(get_u32()); }
  std::int64_t get_i64() { return std::int64_t(get_u64()); }

  Bytes get_bytes() {
    const std::uint64_t n = get_u64();
    if (!need(n)) return {};
    Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
    pos_ += n;
    return out;
  }

  std::string get_str() {
    const std::uint64_t n = get_u64();
    if (!need(n)) return {};
    std::string out(reinterpret_cast<const char*>(data_.data() + pos_), n);
    pos_ += n;
    return out;
  }

  Hash256 get_hash() {
    Hash256 h{};
    if (!need(32)) return h;
    std::copy(data_.begin() + pos_, data_.begin() + pos_ + 32, h.begin());
    pos_ += 32;
    return h;
  }

 private:
  bool need(std::uint64_t n) {
    if (!ok_ || data_.size() - pos_ < n) {
      ok_ = false;
      return false;
    }
    return true;
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
  bool ok_ = true;
};

}  // namespace tanglemap
