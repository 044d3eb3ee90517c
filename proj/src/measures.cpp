#include "topk/measures.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "topk/lzw.hpp"

namespace topk {

Bits MeasureReport::step(std::string_view id) const {
  for (const auto& [name, bits] : step_bits) {
    if (name == id) return bits;
  }
  throw std::out_of_range("no step '" + std::string(id) + "' in report");
}

namespace measures {

namespace {

struct ConditionalSteps {
  Bits b1 = 0.0;
  Bits b2 = 0.0;
  Bits perm = 0.0;
};

// Steps shared by both domain cases: which of t1's elements recur, where
// they sit in t2, and in what order.
ConditionalSteps overlap_steps(const OverlapDecomposition& d, std::size_t k,
                               const MeasureOptions& opts) {
  ConditionalSteps s;
  s.b1 = codes::adaptive_mask_len(d.b1);
  s.b2 = opts.b2_scheme == B2Scheme::Optimal
             ? codes::optimal_positions_len(k, d.m)
             : codes::agreement_code_len(d.b1, d.b2);
  s.perm = factoradic::perm_info_len(Permutation(d.sigma));
  return s;
}

void settle(MeasureReport& r) {
  const Bits conditional = r.i_tau1 + r.i_tau2_given_tau1;
  r.used_null = r.null_bits < conditional;
  r.total_bits = r.used_null ? r.null_bits : conditional;
}

// log2(N! / (N - k)!), summed term by term to avoid cancellation.
Bits log2_falling_factorial(std::uint64_t N, std::uint64_t k) {
  Bits total = 0.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    total += std::log2(static_cast<double>(N - i));
  }
  return total;
}

std::uint64_t lzw_bits(const std::string& bytes) {
  return lzw::compressed_bits(bytes, bytes.size()).whole;
}

// Integer-valued pieces of the rank baselines, read off the decomposition.
struct RankTerms {
  std::int64_t displacement = 0;  // Σ over commons of |t1 rank - t2 rank|
  std::int64_t missing1 = 0;      // Σ t1 ranks of t1-only elements
  std::int64_t missing2 = 0;      // Σ t2 ranks of t2-only elements
  double canberra = 0.0;
};

RankTerms rank_terms(const OverlapDecomposition& d) {
  const auto k = static_cast<std::int64_t>(d.b1.size());
  std::vector<std::int64_t> common_rank1;
  common_rank1.reserve(d.m);
  RankTerms t;
  for (std::int64_t i = 0; i < k; ++i) {
    if (d.b1[i]) {
      common_rank1.push_back(i + 1);
    } else {
      t.missing1 += i + 1;
      t.canberra += static_cast<double>(k + 1 - (i + 1)) /
                    static_cast<double>(k + 1 + (i + 1));
    }
  }
  std::size_t next_common = 0;
  for (std::int64_t j = 0; j < k; ++j) {
    const std::int64_t r2 = j + 1;
    if (d.b2[j]) {
      const std::int64_t r1 = common_rank1[d.sigma[next_common++] - 1];
      t.displacement += std::abs(r1 - r2);
      t.canberra +=
          static_cast<double>(std::abs(r1 - r2)) / static_cast<double>(r1 + r2);
    } else {
      t.missing2 += r2;
      t.canberra +=
          static_cast<double>(k + 1 - r2) / static_cast<double>(k + 1 + r2);
    }
  }
  return t;
}

}  // namespace

std::string serialize_labels(const std::vector<std::string>& first,
                             const std::vector<std::string>& second) {
  std::size_t bytes = 0;
  for (const auto& l : first) bytes += l.size() + 1;
  for (const auto& l : second) bytes += l.size() + 1;
  std::string out;
  out.reserve(bytes);
  for (const auto* labels : {&first, &second}) {
    for (const auto& l : *labels) {
      out += l;
      out += '\n';
    }
  }
  return out;
}

MeasureReport info_case1(const RankedList& t1, const RankedList& t2,
                         std::uint64_t N, const MeasureOptions& opts) {
  const auto d = decompose(t1, t2);
  const std::uint64_t k = t1.size();
  const std::uint64_t only2 = k - d.m;
  const std::uint64_t united = k + only2;
  if (N < united) {
    throw DomainTooSmall("domain size " + std::to_string(N) +
                         " is smaller than the union size " +
                         std::to_string(united));
  }

  Bits tau2_only = 0.0;
  if (opts.step6_scheme == Step6Scheme::Sequential) {
    tau2_only = log2_falling_factorial(N - k, only2);
  } else if (only2 > 0) {
    if (N == united) {
      throw DomainTooSmall(
          "domain size equals the union size; no labels left to choose "
          "t2-only elements from");
    }
    tau2_only = static_cast<double>(only2) *
                std::log2(static_cast<double>(N - united));
  }

  const auto s = overlap_steps(d, k, opts);
  MeasureReport r;
  r.mode = DomainSpec::known(N);
  r.k = k;
  const Bits size = std::log2(static_cast<double>(N));
  const Bits tau1_labels = log2_falling_factorial(N, k);
  r.step_bits = {{"size", size}, {"tau1_labels", tau1_labels},
                 {"b1", s.b1},   {"b2", s.b2},
                 {"perm", s.perm}, {"tau2_only", tau2_only}};
  r.i_tau1 = size + tau1_labels;
  r.i_tau2_given_tau1 = s.b1 + s.b2 + s.perm + tau2_only;
  r.null_bits = 2.0 * r.i_tau1;
  settle(r);
  return r;
}

MeasureReport info_case2(const RankedList& t1, const RankedList& t2,
                         const MeasureOptions& opts) {
  const auto d = decompose(t1, t2);
  const std::uint64_t k = t1.size();
  const std::uint64_t united = k + d.tau2_only.size();

  const auto s = overlap_steps(d, k, opts);
  const Bits union_bits = static_cast<double>(codes::wtc_len(united));
  const Bits k_bits = static_cast<double>(codes::wtc_len(k));
  const std::string joint = serialize_labels(t1.labels(), d.tau2_only);
  // t1's serialization is a prefix of the joint one.
  std::size_t t1_bytes = 0;
  for (const auto& l : t1.labels()) t1_bytes += l.size() + 1;
  const auto lzw = lzw::compressed_bits(joint, t1_bytes);
  const Bits labels_bits = static_cast<double>(lzw.whole);

  MeasureReport r;
  r.mode = DomainSpec::unknown();
  r.k = k;
  r.step_bits = {{"union_size", union_bits}, {"k_size", k_bits},
                 {"lzw_labels", labels_bits}, {"b1", s.b1},
                 {"b2", s.b2},                {"perm", s.perm}};
  r.i_tau1 = union_bits + k_bits + labels_bits;
  r.i_tau2_given_tau1 = s.b1 + s.b2 + s.perm;
  r.null_bits = 2.0 * k_bits + static_cast<double>(lzw.prefix) +
                static_cast<double>(lzw_bits(serialize_labels(t2.labels())));
  settle(r);
  return r;
}

MeasureReport info_total(const RankedList& t1, const RankedList& t2,
                         const DomainSpec& domain, const MeasureOptions& opts) {
  return domain.is_known() ? info_case1(t1, t2, *domain.size, opts)
                           : info_case2(t1, t2, opts);
}

Bits info_cost(const RankedList& t1, const RankedList& t2,
               const DomainSpec& domain, const MeasureOptions& opts) {
  return info_total(t1, t2, domain, opts).total_bits -
         info_total(t1, t1, domain, opts).total_bits;
}

double footrule_ext(const RankedList& t1, const RankedList& t2) {
  const auto d = decompose(t1, t2);
  const auto k = static_cast<std::int64_t>(t1.size());
  const auto m = static_cast<std::int64_t>(d.m);
  const auto t = rank_terms(d);
  return static_cast<double>(2 * (k - m) * (k + 1) + t.displacement -
                             t.missing1 - t.missing2);
}

double kendall_ext(const RankedList& t1, const RankedList& t2,
                   const KendallParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw InvalidParameter("kendall penalty p must lie in [0, 1]");
  }
  const auto d = decompose(t1, t2);
  const auto k = static_cast<double>(t1.size());
  const auto m = static_cast<double>(d.m);
  const double p = params.p;
  const auto t = rank_terms(d);
  const auto discordant = factoradic::inversions(Permutation(d.sigma));
  return (k - m) * ((2.0 + p) * k - p * m + 1.0 - p) +
         static_cast<double>(static_cast<std::int64_t>(discordant) -
                             t.missing1 - t.missing2);
}

double canberra_topk(const RankedList& t1, const RankedList& t2) {
  return rank_terms(decompose(t1, t2)).canberra;
}

PermMeasures perm_measures(const Permutation& p) {
  return perm_measures(p, codes::TruncatedWtcCode(p.size()));
}

PermMeasures perm_measures(const Permutation& p,
                           const codes::TruncatedWtcCode& code) {
  PermMeasures out;
  std::int64_t footrule = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto pos = static_cast<std::int64_t>(i + 1);
    const auto val = static_cast<std::int64_t>(p[i]);
    footrule += std::abs(val - pos);
    out.canberra +=
        static_cast<double>(std::abs(val - pos)) / static_cast<double>(val + pos);
  }
  out.footrule = static_cast<double>(footrule);
  const auto digits = factoradic::lehmer(p);
  std::uint64_t inversions = 0;
  for (const auto f : digits.values()) inversions += f;
  out.kendall = static_cast<double>(inversions);
  out.info_bits = factoradic::perm_info_len(digits, code);
  return out;
}

}  // namespace measures
}  // namespace topk
