#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topk/core.hpp"

namespace topk {

class InvalidCode : public Error {
 public:
  using Error::Error;
};

namespace lzw {

// Plain LZW: 256 single-byte roots, unbounded dictionary, no clear/stop
// codes. Codes are 9 bits wide until the next free dictionary index reaches
// 512, then 10 bits until 1024, and so on.

struct LzwResult {
  std::vector<std::uint32_t> codes;
  std::uint64_t bit_length = 0;
  std::uint64_t dict_final_size = 256;
};

/// Width in bits of the j-th emitted code (0-based). The encoder adds one
/// dictionary entry after each emission, so index 256 + j is next free.
std::uint32_t code_width(std::uint64_t emission_index);

LzwResult compress(std::string_view data);

struct PrefixBits {
  std::uint64_t prefix = 0;  // compress(data.substr(0, cut)).bit_length
  std::uint64_t whole = 0;   // compress(data).bit_length
};

/// Both bit lengths from a single pass over `data`. Throws out_of_range if
/// cut > data.size().
PrefixBits compressed_bits(std::string_view data, std::size_t cut);

/// Throws InvalidCode on a code the decoder cannot have seen yet.
std::string decompress(const LzwResult& r);

}  // namespace lzw
}  // namespace topk
