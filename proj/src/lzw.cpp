#include "topk/lzw.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace topk::lzw {

namespace {

constexpr std::uint32_t kRoots = 256;
constexpr std::uint32_t kMinWidth = 9;

std::uint64_t edge_key(std::uint32_t prefix, unsigned char byte) {
  return (static_cast<std::uint64_t>(prefix) << 8) | byte;
}

// Open-addressing map from (phrase code, next byte) to phrase code. Linear
// probing, load factor kept at or below 1/2.
class EdgeTable {
 public:
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

  EdgeTable() { rehash(std::size_t{1} << 12); }

  std::uint32_t find(std::uint64_t key) const {
    for (std::size_t i = slot(key);; i = (i + 1) & mask_) {
      const Slot& s = slots_[i];
      if (s.key == key) return s.code;
      if (s.key == kEmpty) return kAbsent;
    }
  }

  void insert(std::uint64_t key, std::uint32_t code) {
    if (2 * (size_ + 1) > slots_.size()) rehash(2 * slots_.size());
    place(key, code);
    ++size_;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  struct Slot {
    std::uint64_t key;
    std::uint32_t code;
  };

  std::size_t slot(std::uint64_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> shift_);
  }

  void place(std::uint64_t key, std::uint32_t code) {
    std::size_t i = slot(key);
    while (slots_[i].key != kEmpty) i = (i + 1) & mask_;
    slots_[i] = {key, code};
  }

  void rehash(std::size_t capacity) {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(capacity, Slot{kEmpty, 0});
    mask_ = capacity - 1;
    shift_ = 64 - std::countr_zero(capacity);
    for (const Slot& s : old) {
      if (s.key != kEmpty) place(s.key, s.code);
    }
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  int shift_ = 64;
  std::size_t size_ = 0;
};

}  // namespace

std::uint32_t code_width(std::uint64_t emission_index) {
  const auto next_free = kRoots + emission_index;
  const auto width = static_cast<std::uint32_t>(std::bit_width(next_free));
  return width < kMinWidth ? kMinWidth : width;
}

namespace {

// Runs the encoder, calling emit(code) per output code and at_cut() once the
// first `cut` bytes have been consumed (before the pending phrase is flushed).
template <typename Emit, typename AtCut>
std::uint32_t encode(std::string_view data, std::size_t cut, Emit emit,
                     AtCut at_cut) {
  EdgeTable dict;
  std::uint32_t next = kRoots;
  std::uint32_t phrase = static_cast<unsigned char>(data[0]);
  for (std::size_t i = 1; i < data.size(); ++i) {
    if (i == cut) at_cut();
    const auto byte = static_cast<unsigned char>(data[i]);
    const auto key = edge_key(phrase, byte);
    if (const auto code = dict.find(key); code != EdgeTable::kAbsent) {
      phrase = code;
      continue;
    }
    emit(phrase);
    dict.insert(key, next++);
    phrase = byte;
  }
  if (cut == data.size()) at_cut();
  emit(phrase);
  return next;
}

}  // namespace

LzwResult compress(std::string_view data) {
  LzwResult out;
  if (data.empty()) return out;
  out.dict_final_size = encode(
      data, data.size(),
      [&](std::uint32_t code) {
        out.bit_length += code_width(out.codes.size());
        out.codes.push_back(code);
      },
      [] {});
  return out;
}

PrefixBits compressed_bits(std::string_view data, std::size_t cut) {
  if (cut > data.size()) {
    throw std::out_of_range("cut " + std::to_string(cut) +
                            " exceeds input size " +
                            std::to_string(data.size()));
  }
  PrefixBits out;
  if (data.empty()) return out;
  std::uint64_t emitted = 0;
  encode(
      data, cut,
      [&](std::uint32_t) { out.whole += code_width(emitted++); },
      [&] { out.prefix = out.whole + code_width(emitted); });
  return out;
}

std::string decompress(const LzwResult& r) {
  std::string out;
  if (r.codes.empty()) return out;

  // Entry i >= 256 is (prefix code, last byte); first byte cached for KwKwK.
  struct Entry {
    std::uint32_t prefix;
    unsigned char last;
    unsigned char first;
  };
  std::vector<Entry> entries;
  entries.reserve(r.codes.size());
  std::string scratch;

  auto first_byte = [&](std::uint32_t code) -> unsigned char {
    return code < kRoots ? static_cast<unsigned char>(code)
                         : entries[code - kRoots].first;
  };
  auto append = [&](std::uint32_t code) {
    scratch.clear();
    while (code >= kRoots) {
      const Entry& e = entries[code - kRoots];
      scratch.push_back(static_cast<char>(e.last));
      code = e.prefix;
    }
    scratch.push_back(static_cast<char>(code));
    out.append(scratch.rbegin(), scratch.rend());
  };

  std::uint32_t prev = r.codes[0];
  if (prev >= kRoots) throw InvalidCode("first code must be a single byte");
  append(prev);
  for (std::size_t i = 1; i < r.codes.size(); ++i) {
    const std::uint32_t code = r.codes[i];
    const auto next = static_cast<std::uint32_t>(kRoots + entries.size());
    if (code > next) {
      throw InvalidCode("code " + std::to_string(code) + " at position " +
                        std::to_string(i) + " exceeds next free index " +
                        std::to_string(next));
    }
    // code == next is the KwKwK case: the phrase is prev + first(prev).
    const unsigned char head = code == next ? first_byte(prev) : first_byte(code);
    entries.push_back({prev, head, first_byte(prev)});
    append(code);
    prev = code;
  }
  return out;
}

}  // namespace topk::lzw
