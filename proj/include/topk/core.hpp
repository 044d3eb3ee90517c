#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace topk {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto exit codes: ParseError -> 2, everything else -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public ParseError {
 public:
  EmptyInput() : ParseError("empty input: no labels found") {}
};

class DuplicateLabel : public ParseError {
 public:
  DuplicateLabel(std::string label, std::size_t first_rank,
                 std::size_t second_rank);

  const std::string& label() const { return label_; }
  std::size_t first_rank() const { return first_rank_; }
  std::size_t second_rank() const { return second_rank_; }

 private:
  std::string label_;
  std::size_t first_rank_;
  std::size_t second_rank_;
};

class InvalidLabel : public ParseError {
 public:
  using ParseError::ParseError;
};

class KOutOfRange : public Error {
 public:
  KOutOfRange(std::size_t k, std::size_t length);
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t a, std::size_t b);
};

/// Sequence over {0,1}; element i is bit i (left to right).
using BitMask = std::vector<std::uint8_t>;

/// An ordered sequence of distinct, non-empty labels. The rank of a label
/// is its 1-based position.
class RankedList {
 public:
  /// Throws EmptyInput, DuplicateLabel or InvalidLabel.
  explicit RankedList(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }

  friend bool operator==(const RankedList&, const RankedList&) = default;

 private:
  std::vector<std::string> labels_;
};

/// One label per line; blank lines dropped, surrounding whitespace trimmed.
RankedList parse_list(std::string_view text);

/// Reads and parses a list file. I/O failures raise ParseError.
RankedList read_list_file(const std::string& path);

/// First k labels of `list`; requires 1 <= k <= list.size().
RankedList top_k(const RankedList& list, std::size_t k);

/// What Bob needs, besides t1, to rebuild t2.
struct OverlapDecomposition {
  BitMask b1;  // b1[i] set iff t1[i] occurs in t2
  BitMask b2;  // b2[j] set iff t2[j] occurs in t1
  std::size_t m = 0;
  // sigma[j] (1-based) = position, in t1-order of the common elements, of
  // the j-th common element met while scanning t2.
  std::vector<std::uint32_t> sigma;
  std::vector<std::string> tau2_only;
};

OverlapDecomposition decompose(const RankedList& t1, const RankedList& t2);

/// Inverse of decompose: rebuilds t2 from t1 and the decomposition.
RankedList recompose(const RankedList& t1, const OverlapDecomposition& d);

/// Number of distinct labels in t1 and t2 together.
std::size_t union_size(const RankedList& t1, const RankedList& t2);

}  // namespace topk
