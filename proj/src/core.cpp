#include "topk/core.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <sstream>

namespace topk {

namespace {

constexpr std::string_view kWhitespace = " \t\r\f\v";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

// Open-addressing index from label to position, built over a fixed label
// vector. Slots keep 32 hash bits so most probes skip the string compare.
class LabelIndex {
 public:
  static constexpr std::size_t npos = ~std::size_t{0};

  explicit LabelIndex(const std::vector<std::string>& labels)
      : labels_(labels),
        slots_(std::bit_ceil(2 * labels.size() + 2), Slot{0, kNone}),
        mask_(slots_.size() - 1) {}

  // Adds labels[pos]; returns the position already holding an equal label,
  // or npos if it was new.
  std::size_t insert(std::size_t pos) {
    const std::string_view label = labels_[pos];
    const std::size_t h = std::hash<std::string_view>{}(label);
    for (std::size_t i = h & mask_;; i = (i + 1) & mask_) {
      Slot& s = slots_[i];
      if (s.pos == kNone) {
        s = {static_cast<std::uint32_t>(h >> 32), static_cast<std::uint32_t>(pos)};
        return npos;
      }
      if (matches(s, h, label)) return s.pos;
    }
  }

  std::size_t find(std::string_view label) const {
    const std::size_t h = std::hash<std::string_view>{}(label);
    for (std::size_t i = h & mask_;; i = (i + 1) & mask_) {
      const Slot& s = slots_[i];
      if (s.pos == kNone) return npos;
      if (matches(s, h, label)) return s.pos;
    }
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  struct Slot {
    std::uint32_t tag;
    std::uint32_t pos;
  };

  bool matches(const Slot& s, std::size_t h, std::string_view label) const {
    return s.tag == static_cast<std::uint32_t>(h >> 32) &&
           labels_[s.pos] == label;
  }

  const std::vector<std::string>& labels_;
  std::vector<Slot> slots_;
  std::size_t mask_;
};

LabelIndex index_of(const RankedList& list) {
  LabelIndex index(list.labels());
  for (std::size_t i = 0; i < list.size(); ++i) index.insert(i);
  return index;
}

}  // namespace

DuplicateLabel::DuplicateLabel(std::string label, std::size_t first_rank,
                               std::size_t second_rank)
    : ParseError("duplicate label '" + label + "' at ranks " +
                 std::to_string(first_rank) + " and " +
                 std::to_string(second_rank)),
      label_(std::move(label)),
      first_rank_(first_rank),
      second_rank_(second_rank) {}

KOutOfRange::KOutOfRange(std::size_t k, std::size_t length)
    : Error("k = " + std::to_string(k) + " out of range [1, " +
            std::to_string(length) + "]") {}

LengthMismatch::LengthMismatch(std::size_t a, std::size_t b)
    : Error("length mismatch: " + std::to_string(a) + " vs " +
            std::to_string(b)) {}

RankedList::RankedList(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw EmptyInput();
  LabelIndex seen(labels_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const std::string& label = labels_[i];
    if (label.empty()) {
      throw InvalidLabel("empty label at rank " + std::to_string(i + 1));
    }
    if (label.find('\n') != std::string::npos) {
      throw InvalidLabel("label at rank " + std::to_string(i + 1) +
                         " contains a newline");
    }
    if (const auto first = seen.insert(i); first != LabelIndex::npos) {
      throw DuplicateLabel(label, first + 1, i + 1);
    }
  }
}

RankedList parse_list(std::string_view text) {
  std::vector<std::string> labels;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto line = trim(text.substr(0, eol));
    if (!line.empty()) labels.emplace_back(line);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return RankedList(std::move(labels));
}

RankedList read_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_list(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

RankedList top_k(const RankedList& list, std::size_t k) {
  if (k < 1 || k > list.size()) throw KOutOfRange(k, list.size());
  return RankedList(std::vector<std::string>(
      list.labels().begin(),
      list.labels().begin() + static_cast<std::ptrdiff_t>(k)));
}

OverlapDecomposition decompose(const RankedList& t1, const RankedList& t2) {
  if (t1.size() != t2.size()) throw LengthMismatch(t1.size(), t2.size());
  const std::size_t k = t1.size();
  const auto in_t2 = index_of(t2);

  OverlapDecomposition d;
  d.b1.assign(k, 0);
  d.b2.assign(k, 0);
  // ordinal[j] = 1-based position of t2[j] among the commons in t1-order.
  std::vector<std::uint32_t> ordinal(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = in_t2.find(t1[i]);
    if (j == LabelIndex::npos) continue;
    d.b1[i] = 1;
    d.b2[j] = 1;
    ordinal[j] = static_cast<std::uint32_t>(++d.m);
  }
  d.sigma.reserve(d.m);
  d.tau2_only.reserve(k - d.m);
  for (std::size_t j = 0; j < k; ++j) {
    if (d.b2[j]) {
      d.sigma.push_back(ordinal[j]);
    } else {
      d.tau2_only.push_back(t2[j]);
    }
  }
  return d;
}

RankedList recompose(const RankedList& t1, const OverlapDecomposition& d) {
  std::vector<std::string_view> commons;
  commons.reserve(d.m);
  for (std::size_t i = 0; i < t1.size(); ++i) {
    if (d.b1[i]) commons.push_back(t1[i]);
  }
  std::vector<std::string> labels;
  labels.reserve(d.b2.size());
  std::size_t next_common = 0;
  std::size_t next_other = 0;
  for (const auto bit : d.b2) {
    if (bit) {
      labels.emplace_back(commons.at(d.sigma.at(next_common++) - 1));
    } else {
      labels.push_back(d.tau2_only.at(next_other++));
    }
  }
  return RankedList(std::move(labels));
}

std::size_t union_size(const RankedList& t1, const RankedList& t2) {
  const auto in_t1 = index_of(t1);
  std::size_t extra = 0;
  for (const auto& label : t2.labels()) {
    if (in_t1.find(label) == LabelIndex::npos) ++extra;
  }
  return t1.size() + extra;
}

}  // namespace topk
