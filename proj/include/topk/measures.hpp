#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topk/codes.hpp"
#include "topk/core.hpp"
#include "topk/factoradic.hpp"

namespace topk {

class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Size of the element domain, when it is known to both parties.
struct DomainSpec {
  std::optional<std::uint64_t> size;

  static DomainSpec known(std::uint64_t n) { return {n}; }
  static DomainSpec unknown() { return {}; }
  bool is_known() const { return size.has_value(); }

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

enum class B2Scheme { Optimal, Adaptive };

// How the labels of t2-only elements are charged when the domain is known:
// Sequential codes the j-th of them among the N - k - (j - 1) labels not yet
// used; Pooled charges log2(N - |t1 ∪ t2|) bits each.
enum class Step6Scheme { Sequential, Pooled };

struct MeasureOptions {
  B2Scheme b2_scheme = B2Scheme::Optimal;
  Step6Scheme step6_scheme = Step6Scheme::Sequential;
};

struct KendallParams {
  double p = 0.5;
};

/// Per-step bit counts for one (t1, t2) pair plus the two-part total.
struct MeasureReport {
  DomainSpec mode;
  std::size_t k = 0;
  // Known domain: size, tau1_labels, b1, b2, perm, tau2_only.
  // Unknown domain: union_size, k_size, lzw_labels, b1, b2, perm.
  std::vector<std::pair<std::string, Bits>> step_bits;
  Bits i_tau1 = 0.0;
  Bits i_tau2_given_tau1 = 0.0;
  Bits null_bits = 0.0;
  Bits total_bits = 0.0;
  bool used_null = false;

  /// Throws std::out_of_range for an unknown step id.
  Bits step(std::string_view id) const;
};

namespace measures {

/// Two-part message length when the domain has N elements.
/// Throws LengthMismatch, DomainTooSmall.
MeasureReport info_case1(const RankedList& t1, const RankedList& t2,
                         std::uint64_t N, const MeasureOptions& opts = {});

/// Two-part message length when the domain is unknown; labels of t1 ∪ t2
/// are sent LZW-compressed. Throws LengthMismatch.
MeasureReport info_case2(const RankedList& t1, const RankedList& t2,
                         const MeasureOptions& opts = {});

MeasureReport info_total(const RankedList& t1, const RankedList& t2,
                         const DomainSpec& domain,
                         const MeasureOptions& opts = {});

/// I(t1, t2) - I(t1, t1).
Bits info_cost(const RankedList& t1, const RankedList& t2,
               const DomainSpec& domain, const MeasureOptions& opts = {});

/// Bytes fed to LZW: each label followed by '\n'.
std::string serialize_labels(const std::vector<std::string>& first,
                             const std::vector<std::string>& second = {});

/// Extended Spearman footrule (missing elements at rank k + 1).
double footrule_ext(const RankedList& t1, const RankedList& t2);

/// Extended Kendall tau with penalty p in [0, 1]. Throws InvalidParameter.
double kendall_ext(const RankedList& t1, const RankedList& t2,
                   const KendallParams& params = {});

/// Σ over t1 ∪ t2 of |r1 - r2| / (r1 + r2), missing ranks set to k + 1.
double canberra_topk(const RankedList& t1, const RankedList& t2);

struct PermMeasures {
  double footrule = 0.0;
  double kendall = 0.0;
  double canberra = 0.0;
  Bits info_bits = 0.0;
};

/// All four measures of p against the identity.
PermMeasures perm_measures(const Permutation& p);

/// Same, reusing a truncated-code table with max_range() >= p.size().
PermMeasures perm_measures(const Permutation& p,
                           const codes::TruncatedWtcCode& code);

}  // namespace measures
}  // namespace topk
