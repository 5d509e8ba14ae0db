#include "rdv/message.h"

#include <bit>
#include <stdexcept>

#include "rdv/errors.h"

namespace rdv {

unsigned gamma_length(std::uint64_t value) {
  if (value == UINT64_MAX) throw std::invalid_argument("gamma value too large");
  return 2 * (std::bit_width(value + 1) - 1) + 1;
}

unsigned fixed_width(std::uint64_t bound) { return std::bit_width(bound); }

void Message::add_gamma(std::uint64_t value) {
  gamma_length(value);
  fields_.push_back({value, Coding::kGamma, 0});
}

void Message::add_fixed(std::uint64_t value, unsigned width) {
  if (width > 64 || static_cast<unsigned>(std::bit_width(value)) > width) {
    throw std::invalid_argument("value does not fit the fixed-width field");
  }
  fields_.push_back({value, Coding::kFixed, width});
}

std::vector<std::uint64_t> Message::payload() const {
  std::vector<std::uint64_t> out;
  out.reserve(fields_.size());
  for (const auto& f : fields_) out.push_back(f.value);
  return out;
}

std::size_t Message::bit_count() const {
  std::size_t total = 0;
  for (const auto& f : fields_) total += f.coding == Coding::kGamma ? gamma_length(f.value) : f.width;
  return total;
}

BitString Message::bits() const {
  BitString out;
  out.reserve(bit_count());
  auto put = [&out](std::uint64_t v, unsigned width) {
    for (unsigned i = width; i > 0; --i) out.push_back(((v >> (i - 1)) & 1U) != 0);
  };
  for (const auto& f : fields_) {
    if (f.coding == Coding::kFixed) {
      put(f.value, f.width);
      continue;
    }
    std::uint64_t shifted = f.value + 1;
    unsigned len = std::bit_width(shifted);
    for (unsigned i = 1; i < len; ++i) out.push_back(false);
    put(shifted, len);
  }
  return out;
}

bool BitReader::next() {
  if (pos_ >= bits_.size()) throw MalformedMessage("message truncated");
  return bits_[pos_++];
}

std::uint64_t BitReader::gamma() {
  unsigned zeros = 0;
  while (!next()) {
    if (++zeros > 63) throw MalformedMessage("gamma codeword too long");
  }
  std::uint64_t shifted = 1;
  for (unsigned i = 0; i < zeros; ++i) shifted = (shifted << 1) | (next() ? 1U : 0U);
  return shifted - 1;
}

std::uint64_t BitReader::fixed(unsigned width) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | (next() ? 1U : 0U);
  return v;
}

void BitReader::expect_end() const {
  if (pos_ != bits_.size()) throw MalformedMessage("trailing bits in message");
}

}  // namespace rdv
