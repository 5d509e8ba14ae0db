#ifndef RDV_MESSAGE_H_
#define RDV_MESSAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rdv {

using BitString = std::vector<bool>;

// Fields whose upper bound is public knowledge use fixed width; everything
// else uses Elias gamma of (value + 1) so zero is representable.
enum class Coding { kGamma, kFixed };

struct Field {
  std::uint64_t value;
  Coding coding;
  unsigned width;  // kFixed only

  friend bool operator==(const Field&, const Field&) = default;
};

// Bit length of the gamma code for value: 2*floor(log2(value+1)) + 1.
unsigned gamma_length(std::uint64_t value);
// ceil(log2(bound + 1)): enough bits for any integer in [0, bound].
unsigned fixed_width(std::uint64_t bound);

// Ordered sequence of integer fields sent at time 0.
class Message {
 public:
  void add_gamma(std::uint64_t value);
  // Throws std::invalid_argument if value needs more than width bits.
  void add_fixed(std::uint64_t value, unsigned width);

  std::span<const Field> fields() const { return fields_; }
  std::vector<std::uint64_t> payload() const;
  std::size_t bit_count() const;
  BitString bits() const;

  friend bool operator==(const Message&, const Message&) = default;

 private:
  std::vector<Field> fields_;
};

inline std::size_t message_bits(const Message& message) { return message.bit_count(); }

// Sequential decoder over a received bit string. Every read past the end or
// invalid codeword throws MalformedMessage.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(bits) {}

  std::uint64_t gamma();
  std::uint64_t fixed(unsigned width);
  // Throws MalformedMessage if unread bits remain.
  void expect_end() const;

 private:
  bool next();

  const BitString& bits_;
  std::size_t pos_ = 0;
};

}  // namespace rdv

#endif  // RDV_MESSAGE_H_
