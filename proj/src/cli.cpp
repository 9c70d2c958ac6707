#include "shchain/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shchain/construct.hpp"
#include "shchain/core.hpp"
#include "shchain/count.hpp"
#include "shchain/oracle.hpp"

namespace shchain::cli {

namespace {

std::string render_witness(const Witness& w) {
  static constexpr const char* kNames[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < w.arity; ++i) {
    if (i) out += ',';
    out += kNames[i];
    out += "=a" + std::to_string(w.values[i]);
  }
  return out;
}

std::vector<ImplicationTable> collect(auto&& range) {
  std::vector<ImplicationTable> out;
  for (const auto& t : range) out.push_back(t);
  return out;
}

std::size_t stream_length(std::size_t n) {
  std::size_t count = 0;
  for (TableStream s(n); s.valid(); s.next()) ++count;
  return count;
}

class Matrix {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  std::vector<ComparisonResult> take() { return std::move(results_); }

 private:
  std::vector<ComparisonResult> results_;
};

void compare_counts(Matrix& m, const std::string& name, const BigCount& lhs,
                    const BigCount& rhs) {
  m.add(name, lhs == rhs, lhs == rhs ? "" : lhs.str() + " != " + rhs.str());
}

void compare_sets(Matrix& m, std::size_t n, OracleMode mode, const OracleLimits& limits) {
  auto built = collect(enumerate(n));
  auto truth = collect(oracle_enumerate(n, mode, limits));
  std::ranges::sort(built);
  std::ranges::sort(truth);
  const bool distinct = std::ranges::adjacent_find(built) == built.end();
  const bool equal = built == truth;
  std::string detail;
  if (!distinct) detail = "constructor emitted duplicates";
  else if (!equal)
    detail = std::to_string(built.size()) + " constructed vs " +
             std::to_string(truth.size()) + " from oracle";
  m.add("set(enumerate(" + std::to_string(n) + ")) vs set(oracle_enumerate(" +
            std::to_string(n) + ", " + to_string(mode) + "))",
        distinct && equal, detail);
}

// First n in [from, to] where pred fails, or 0.
std::size_t first_failure(std::size_t from, std::size_t to, auto&& pred) {
  for (std::size_t n = from; n <= to; ++n)
    if (!pred(n)) return n;
  return 0;
}

void range_check(Matrix& m, const std::string& name, std::size_t from, std::size_t to,
                 auto&& pred) {
  const std::string label = name + ", " + std::to_string(from) + " <= n <= " + std::to_string(to);
  if (to < from) {
    m.add(label, true, "empty range");
    return;
  }
  const auto bad = first_failure(from, to, pred);
  m.add(label, bad == 0, bad ? "first mismatch at n=" + std::to_string(bad) : "");
}

void table_invariants(Matrix& m, std::size_t n) {
  const auto suffix = " on enumerate(" + std::to_string(n) + ")";
  std::size_t axioms_bad = 0, lemmas_bad = 0, heyting = 0, restrict_bad = 0;
  for (const auto& t : enumerate(n)) {
    if (!(check_sh2(t) && check_sh3(t) && check_sh4(t) && check_structural(t))) ++axioms_bad;
    if (!check_lemma_zero(t) || !check_lemma_implication(t)) ++lemmas_bad;
    if (is_heyting(t)) ++heyting;
    if (n >= 2 && !is_valid(restrict(t))) ++restrict_bad;
  }
  m.add("SH2/SH3/SH4/structural hold" + suffix, axioms_bad == 0,
        axioms_bad ? std::to_string(axioms_bad) + " tables fail" : "");
  m.add("lemma invariants hold" + suffix, lemmas_bad == 0,
        lemmas_bad ? std::to_string(lemmas_bad) + " tables fail" : "");
  m.add("exactly one Heyting table" + suffix, heyting == 1,
        heyting == 1 ? "" : std::to_string(heyting) + " found");

  if (n < 2) return;
  std::size_t round_trip_bad = 0;
  for (const auto& sub : enumerate(n - 1)) {
    for (const auto& row : first_rows(n)) {
      const auto t = extend(sub, row);
      const auto r0 = t.row(0);
      const auto expected = row.induced_row();
      if (restrict(t) != sub || !std::ranges::equal(r0, expected)) ++round_trip_bad;
    }
  }
  m.add("restrict valid and restrict(extend(S, r)) = S" + suffix,
        restrict_bad == 0 && round_trip_bad == 0,
        restrict_bad + round_trip_bad
            ? std::to_string(restrict_bad) + " invalid restrictions, " +
                  std::to_string(round_trip_bad) + " round-trip mismatches"
            : "");
}

}  // namespace

std::optional<CountMethod> parse_count_method(std::string_view name) {
  if (name == "recursive") return CountMethod::Recursive;
  if (name == "product") return CountMethod::Product;
  if (name == "construct") return CountMethod::Construct;
  if (name == "oracle-pure") return CountMethod::OraclePure;
  if (name == "oracle-forced") return CountMethod::OracleForced;
  return std::nullopt;
}

int cmd_count(std::size_t n, CountMethod method, const Caps& caps, std::ostream& out,
              std::ostream& err) {
  if (n == 0) {
    err << "error: --n must be at least 1\n";
    return kExitInputError;
  }
  const OracleLimits limits{caps.max_pure, caps.max_forced};
  try {
    BigCount result;
    switch (method) {
      case CountMethod::Recursive: result = count_recursive(n); break;
      case CountMethod::Product: result = count_product(n); break;
      case CountMethod::Construct:
        if (n > caps.max_construct) {
          err << "error: counting by construction is capped at n <= " << caps.max_construct
              << " (raise with --max-construct); use --method recursive or --method product"
                 " for an exact count at any n\n";
          return kExitInputError;
        }
        result = stream_length(n);
        break;
      case CountMethod::OraclePure: result = oracle_count(n, OracleMode::Pure, limits); break;
      case CountMethod::OracleForced:
        result = oracle_count(n, OracleMode::Forced, limits);
        break;
    }
    out << result << '\n';
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what()
        << "; use --method recursive or --method product for an exact count at any n\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

int cmd_enumerate(std::size_t n, Format format, const std::string& destination,
                  std::optional<std::uint64_t> limit, std::ostream& out, std::ostream& err) {
  if (n == 0) {
    err << "error: --n must be at least 1\n";
    return kExitInputError;
  }
  if (format == Format::Auto) format = Format::Text;

  std::ofstream file;
  if (destination != "-") {
    file.open(destination, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << destination << "' for writing\n";
      return kExitInputError;
    }
  }
  std::ostream& sink = destination == "-" ? out : file;

  std::uint64_t written = 0;
  for (TableStream s(n); s.valid() && (!limit || written < *limit); s.next()) {
    if (format == Format::Text) {
      if (written) sink << '\n';
      sink << serialize(s.get(), Format::Text);
    } else {
      sink << serialize(s.get(), Format::Json) << '\n';
    }
    ++written;
    if (!sink) break;
  }
  sink.flush();
  if (!sink) {
    err << "error: failed writing to '" << destination << "'\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, Format format, std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot read '" << path << "'\n";
    return kExitInputError;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  std::optional<ImplicationTable> table;
  try {
    table = parse(buffer.str(), format);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitInputError;
  }

  for (auto check : {check_sh2, check_sh3, check_sh4, check_structural}) {
    if (auto report = check(*table); !report) {
      out << to_string(report.violation->axiom) << " fails at "
          << render_witness(report.violation->witness) << '\n';
      return kExitFailure;
    }
  }
  out << "VALID heyting=" << (is_heyting(*table) ? "yes" : "no") << '\n';
  return kExitOk;
}

CrosscheckHooks CrosscheckHooks::defaults() {
  return {[](std::size_t n) { return shchain::first_row_count(n); },
          [](std::size_t n) { return shchain::count_product(n); }};
}

std::vector<ComparisonResult> run_crosscheck(const Caps& caps, const CrosscheckHooks& hooks) {
  Matrix m;
  const OracleLimits limits{caps.max_pure, caps.max_forced};
  auto recursive = [&](std::size_t n) { return count_recursive(n, hooks.first_row_count); };
  const auto ns = [](std::size_t n) { return std::to_string(n); };

  for (std::size_t n = 1; n <= caps.max_pure; ++n)
    compare_counts(m, "count_recursive(" + ns(n) + ") vs oracle_count(" + ns(n) + ", pure)",
                   recursive(n), oracle_count(n, OracleMode::Pure, limits));
  for (std::size_t n = 1; n <= caps.max_forced; ++n)
    compare_counts(m, "count_recursive(" + ns(n) + ") vs oracle_count(" + ns(n) + ", forced)",
                   recursive(n), oracle_count(n, OracleMode::Forced, limits));
  for (std::size_t n = 1; n <= caps.max_construct; ++n)
    compare_counts(m, "count_recursive(" + ns(n) + ") vs length(enumerate(" + ns(n) + "))",
                   recursive(n), stream_length(n));

  for (std::size_t n = 1; n <= caps.max_pure; ++n) compare_sets(m, n, OracleMode::Pure, limits);
  for (std::size_t n = 1; n <= caps.max_forced; ++n)
    compare_sets(m, n, OracleMode::Forced, limits);

  range_check(m, "count_recursive(n) = count_product(n)", 1, caps.max_formula,
              [&](std::size_t n) { return recursive(n) == hooks.count_product(n); });
  range_check(m, "count_recursive(n) is even", 2, caps.max_formula,
              [&](std::size_t n) { return recursive(n) % 2 == 0; });
  range_check(m, "count_split(n) = (first_row_count(n), count_product(n-1))", 2,
              caps.max_formula, [&](std::size_t n) {
                const auto split = count_split(n);
                return split.first == hooks.first_row_count(n) &&
                       split.rest == hooks.count_product(n - 1);
              });

  for (std::size_t n = 1; n <= caps.max_forced; ++n) table_invariants(m, n);
  return m.take();
}

int cmd_crosscheck(const Caps& caps, std::ostream& out, std::ostream& err,
                   const CrosscheckHooks& hooks) {
  std::vector<ComparisonResult> results;
  try {
    results = run_crosscheck(caps, hooks);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const ComparisonResult* first_bad = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.passed) out << "  (" << r.detail << ')';
    out << '\n';
    if (!r.passed && !first_bad) first_bad = &r;
  }
  if (first_bad) {
    err << "crosscheck failed: " << first_bad->name << " (" << first_bad->detail << ")\n";
    return kExitFailure;
  }
  out << "all " << results.size() << " comparisons passed\n";
  return kExitOk;
}

}  // namespace shchain::cli
