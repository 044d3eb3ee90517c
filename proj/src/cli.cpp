#include "topk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "topk/factoradic.hpp"
#include "topk/measures.hpp"

namespace topk::cli {

namespace {

using Json = nlohmann::ordered_json;

class NOutOfRange : public Error {
 public:
  using Error::Error;
};

// Flags shared by info, sweep and matrix.
struct MeasureFlags {
  std::optional<std::uint64_t> domain_size;
  bool unknown_domain = false;
  std::string b2 = "optimal";
  std::string step6 = "sequential";
  double kendall_p = 0.5;

  DomainSpec domain() const {
    return domain_size ? DomainSpec::known(*domain_size) : DomainSpec::unknown();
  }

  MeasureOptions options() const {
    MeasureOptions o;
    o.b2_scheme = b2 == "adaptive" ? B2Scheme::Adaptive : B2Scheme::Optimal;
    o.step6_scheme = step6 == "pooled" ? Step6Scheme::Pooled
                                              : Step6Scheme::Sequential;
    return o;
  }
};

void add_measure_flags(CLI::App& cmd, MeasureFlags& f) {
  auto* known = cmd.add_option("--domain-size", f.domain_size,
                               "Known domain size N (switches to case 1)")
                    ->check(CLI::PositiveNumber);
  auto* unknown = cmd.add_flag("--unknown-domain", f.unknown_domain,
                               "Domain unknown (default)");
  known->excludes(unknown);
  cmd.add_option("--b2", f.b2, "Code for positions of shared elements in t2")
      ->check(CLI::IsMember({"optimal", "adaptive"}));
  cmd.add_option("--step6", f.step6, "Code for t2-only labels (known domain)")
      ->check(CLI::IsMember({"sequential", "pooled"}));
  cmd.add_option("--kendall-p", f.kendall_p, "Kendall penalty p")
      ->check(CLI::Range(0.0, 1.0));
}

double fixed4(double x) { return std::stod(format_fixed4(x)); }

void require_csv_safe(const RankedList& list, const std::string& source) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].find(',') != std::string::npos) {
      throw ParseError(source + ": label at rank " + std::to_string(i + 1) +
                       " contains a comma");
    }
  }
}

std::size_t resolve_k(std::optional<std::size_t> k,
                      const std::vector<RankedList>& lists) {
  std::size_t shortest = lists.front().size();
  for (const auto& l : lists) shortest = std::min(shortest, l.size());
  return k.value_or(shortest);
}

struct PairRow {
  MeasureReport report;
  double info_cost = 0.0;
  double footrule = 0.0;
  double kendall = 0.0;
  double canberra = 0.0;
};

PairRow evaluate(const RankedList& a, const RankedList& b, std::size_t k,
                 const MeasureFlags& flags) {
  const auto t1 = top_k(a, k);
  const auto t2 = top_k(b, k);
  PairRow row;
  row.report = measures::info_total(t1, t2, flags.domain(), flags.options());
  row.info_cost = row.report.total_bits -
                  measures::info_total(t1, t1, flags.domain(), flags.options())
                      .total_bits;
  row.footrule = measures::footrule_ext(t1, t2);
  row.kendall = measures::kendall_ext(t1, t2, {flags.kendall_p});
  row.canberra = measures::canberra_topk(t1, t2);
  return row;
}

Json mode_json(const DomainSpec& d) {
  Json j;
  if (d.is_known()) {
    j["kind"] = "known";
    j["domain_size"] = *d.size;
  } else {
    j["kind"] = "unknown";
  }
  return j;
}

void emit_info(const PairRow& row, const std::string& format,
               std::ostream& out) {
  const auto& r = row.report;
  if (format == "json") {
    Json doc;
    doc["mode"] = mode_json(r.mode);
    doc["k"] = r.k;
    Json steps = Json::object();
    for (const auto& [id, bits] : r.step_bits) steps[id] = fixed4(bits);
    doc["step_bits"] = steps;
    doc["i_tau1"] = fixed4(r.i_tau1);
    doc["i_tau2_given_tau1"] = fixed4(r.i_tau2_given_tau1);
    doc["null_bits"] = fixed4(r.null_bits);
    doc["total_bits"] = fixed4(r.total_bits);
    doc["used_null"] = r.used_null;
    doc["info_cost"] = fixed4(row.info_cost);
    doc["footrule_ext"] = fixed4(row.footrule);
    doc["kendall_ext"] = fixed4(row.kendall);
    doc["canberra"] = fixed4(row.canberra);
    out << doc.dump(2) << '\n';
    return;
  }
  std::string header = "mode,k";
  std::string values =
      r.mode.is_known() ? "known:" + std::to_string(*r.mode.size) : "unknown";
  values += "," + std::to_string(r.k);
  for (const auto& [id, bits] : r.step_bits) {
    header += ",step_bits." + id;
    values += "," + format_fixed4(bits);
  }
  header +=
      ",i_tau1,i_tau2_given_tau1,null_bits,total_bits,used_null,info_cost,"
      "footrule_ext,kendall_ext,canberra";
  for (const double v : {r.i_tau1, r.i_tau2_given_tau1, r.null_bits,
                         r.total_bits}) {
    values += "," + format_fixed4(v);
  }
  values += r.used_null ? ",true" : ",false";
  for (const double v : {row.info_cost, row.footrule, row.kendall,
                         row.canberra}) {
    values += "," + format_fixed4(v);
  }
  out << header << '\n' << values << '\n';
}

int cmd_info(const std::vector<std::string>& files,
             std::optional<std::size_t> k, const MeasureFlags& flags,
             const std::string& format, std::ostream& out) {
  std::vector<RankedList> lists;
  for (const auto& f : files) lists.push_back(read_list_file(f));
  if (format == "csv") {
    for (std::size_t i = 0; i < lists.size(); ++i) {
      require_csv_safe(lists[i], files[i]);
    }
  }
  emit_info(evaluate(lists[0], lists[1], resolve_k(k, lists), flags), format,
            out);
  return kExitOk;
}

int cmd_sweep(const std::vector<std::string>& files, std::size_t k_min,
              std::optional<std::size_t> k_max_opt, std::size_t step,
              const MeasureFlags& flags, std::ostream& out) {
  std::vector<RankedList> lists;
  for (const auto& f : files) {
    lists.push_back(read_list_file(f));
    require_csv_safe(lists.back(), f);
  }
  const std::size_t k_max = resolve_k(k_max_opt, lists);
  if (k_min < 1 || k_min > k_max) {
    throw KOutOfRange(k_min, k_max);
  }
  for (const auto& l : lists) {
    if (k_max > l.size()) throw KOutOfRange(k_max, l.size());
  }

  std::string buf =
      "k,info_total,info_cost,null_bits,footrule_ext,kendall_ext,canberra\n";
  for (std::size_t k = k_min; k <= k_max; k += step) {
    const auto row = evaluate(lists[0], lists[1], k, flags);
    buf += std::to_string(k);
    for (const double v : {row.report.total_bits, row.info_cost,
                           row.report.null_bits, row.footrule, row.kendall,
                           row.canberra}) {
      buf += ',';
      buf += format_fixed4(v);
    }
    buf += '\n';
  }
  out << buf;
  return kExitOk;
}

int cmd_permscan(std::size_t n, std::ostream& out) {
  if (n < 2 || n > 10) {
    throw NOutOfRange("--n must lie in [2, 10], got " + std::to_string(n));
  }
  const codes::TruncatedWtcCode code(n);
  std::vector<std::uint32_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<std::uint32_t>(i + 1);

  std::string buf = "index,perm,footrule,kendall,canberra,info_bits\n";
  std::string letters(n, 'a');
  std::uint64_t index = 0;
  do {
    const Permutation p(seq);
    const auto m = measures::perm_measures(p, code);
    for (std::size_t i = 0; i < n; ++i) {
      letters[i] = static_cast<char>('a' + seq[i] - 1);
    }
    buf += std::to_string(index++);
    buf += ',';
    buf += letters;
    for (const double v : {m.footrule, m.kendall, m.canberra}) {
      buf += ',';
      buf += format_fixed4(v);
    }
    buf += ',';
    buf += format_fixed(m.info_bits, kPermscanBitsDecimals);
    buf += '\n';
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  out << buf;
  return kExitOk;
}

int cmd_matrix(const std::vector<std::string>& files,
               std::optional<std::size_t> k_opt, const std::string& measure,
               const MeasureFlags& flags, std::ostream& out) {
  if (files.size() < 2) throw ParseError("matrix needs at least two files");
  std::vector<RankedList> lists;
  std::vector<std::string> names;
  for (const auto& f : files) {
    lists.push_back(read_list_file(f));
    require_csv_safe(lists.back(), f);
    names.push_back(std::filesystem::path(f).filename().string());
    if (names.back().find(',') != std::string::npos) {
      throw ParseError(f + ": file name contains a comma");
    }
  }
  const std::size_t k = resolve_k(k_opt, lists);
  std::vector<RankedList> tops;
  for (const auto& l : lists) tops.push_back(top_k(l, k));

  auto entry = [&](const RankedList& a, const RankedList& b) -> double {
    if (measure == "footrule") return measures::footrule_ext(a, b);
    if (measure == "kendall") {
      return measures::kendall_ext(a, b, {flags.kendall_p});
    }
    if (measure == "canberra") return measures::canberra_topk(a, b);
    return measures::info_total(a, b, flags.domain(), flags.options())
        .total_bits;
  };

  std::string buf;
  for (const auto& name : names) buf += "," + name;
  buf += '\n';
  for (std::size_t i = 0; i < tops.size(); ++i) {
    buf += names[i];
    for (std::size_t j = 0; j < tops.size(); ++j) {
      buf += ',';
      buf += format_fixed4(entry(tops[i], tops[j]));
    }
    buf += '\n';
  }
  out << buf;
  return kExitOk;
}

}  // namespace

std::string format_fixed(double x, int decimals) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string format_fixed4(double x) { return format_fixed(x, 4); }

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compare top-k ranked lists by two-part message length"};
  app.require_subcommand(1);

  MeasureFlags flags;
  std::vector<std::string> files;
  std::optional<std::size_t> k;
  std::string format = "json";
  std::size_t k_min = 1;
  std::optional<std::size_t> k_max;
  std::size_t step = 1;
  std::size_t n = 0;
  std::string measure = "info";

  auto* info = app.add_subcommand("info", "Measure one pair of lists");
  info->add_option("files", files, "List A and list B")
      ->required()
      ->expected(2);
  info->add_option("--k", k, "Compare the top k of both lists")
      ->check(CLI::PositiveNumber);
  add_measure_flags(*info, flags);
  info->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* sweep = app.add_subcommand("sweep", "Measures for a range of k");
  sweep->add_option("files", files, "List A and list B")
      ->required()
      ->expected(2);
  sweep->add_option("--k-min", k_min, "First k")->check(CLI::PositiveNumber);
  sweep->add_option("--k-max", k_max, "Last k (default: shortest list)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--step", step, "Increment of k")
      ->check(CLI::PositiveNumber);
  add_measure_flags(*sweep, flags);

  auto* permscan =
      app.add_subcommand("permscan", "Measures over all permutations of n");
  permscan->add_option("--n", n, "Permutation size (2..10)")->required();

  auto* matrix = app.add_subcommand("matrix", "Pairwise measure matrix");
  matrix->add_option("files", files, "Two or more list files")
      ->required()
      ->expected(2, -1);
  matrix->add_option("--k", k, "Compare the top k of every list")
      ->check(CLI::PositiveNumber);
  matrix->add_option("--measure", measure, "Measure for the entries")
      ->check(CLI::IsMember({"info", "footrule", "kendall", "canberra"}));
  add_measure_flags(*matrix, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*info) return cmd_info(files, k, flags, format, out);
    if (*sweep) return cmd_sweep(files, k_min, k_max, step, flags, out);
    if (*permscan) return cmd_permscan(n, out);
    return cmd_matrix(files, k, measure, flags, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace topk::cli
