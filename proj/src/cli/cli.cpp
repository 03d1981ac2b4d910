#include "stabkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/parallel.hpp"
#include "stabkit/potential.hpp"
#include "stabkit/serialize.hpp"
#include "stabkit/stabilizer.hpp"
#include "stabkit/symplectic.hpp"
#include "stabkit/weyl.hpp"

namespace stabkit::cli {

namespace {

struct RunConfig {
  std::string d = "2";
  std::string n = "1";
  std::string t = "1";
  unsigned t_max = 4;
  std::string method = "all";
  std::string format = "table";
  std::string output;
  std::uint64_t state_cap = kDefaultStateCap;
  std::uint64_t bruteforce_cap = kDefaultBruteforceCap;
  std::uint64_t enumeration_cap = symplectic::kDefaultEnumerationCap;
  std::size_t matrix_cap = kDefaultMatrixCap;
  std::optional<unsigned> threads;
  std::uint64_t seed = 0;  // reserved; every command is deterministic
  bool amplitudes = false;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned single(const std::string& text, const char* name) {
  const auto values = parse_range(text);
  if (values.size() != 1) throw InvalidArgument(std::string("--") + name + " takes a single value");
  return values.front();
}

std::string shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

using Table = std::vector<std::vector<std::string>>;

void write_table(std::ostream& out, const std::vector<std::string>& header, const Table& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) text += "  ";
      text += cells[c];
      if (c + 1 < cells.size()) text.append(width[c] - cells[c].size(), ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const Table& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c > 0 ? "," : "") << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void require_format(const std::string& format) {
  if (format != "table" && format != "csv" && format != "json") {
    throw InvalidArgument("--format must be table, csv or json (got '" + format + "')");
  }
}

// ---------------------------------------------------------------------------
// frame-potential

void cmd_frame_potential(const RunConfig& cfg, std::ostream& out) {
  static const std::vector<std::string> kMethods{"recursion", "combinatorial", "bruteforce", "fixed-state", "all"};
  if (std::find(kMethods.begin(), kMethods.end(), cfg.method) == kMethods.end()) {
    throw InvalidArgument("--method must be recursion, combinatorial, bruteforce, fixed-state or all");
  }
  require_format(cfg.format);
  const auto ds = parse_range(cfg.d);
  const auto ns = parse_range(cfg.n);
  const auto ts = parse_range(cfg.t);
  for (auto d : ds) combinatorics::require_prime(d);
  for (auto n : ns) {
    if (n == 0) throw InvalidArgument("n must be >= 1");
  }
  for (auto t : ts) {
    if (t == 0) throw InvalidArgument("t must be >= 1");
  }
  const bool all = cfg.method == "all";
  const bool want_bf = all || cfg.method == "bruteforce";
  const bool want_fixed = all || cfg.method == "fixed-state";
  const unsigned threads = parallel::resolve_threads(cfg.threads);

  std::vector<FramePotentialReport> reports;
  for (auto d : ds) {
    for (auto n : ns) {
      const ExactInteger total = combinatorics::stabilizer_count(d, n);
      // Explicitly requested engines fail loudly; `all` skips what does not fit.
      if (!all && want_bf && total > cfg.bruteforce_cap) {
        throw CapExceeded("bruteforce: S(" + std::to_string(d) + "," + std::to_string(n) + ") = " + total.str() +
                          " exceeds --bruteforce-cap " + std::to_string(cfg.bruteforce_cap));
      }
      if (!all && want_fixed && total > cfg.state_cap) {
        throw CapExceeded("fixed-state: S(" + std::to_string(d) + "," + std::to_string(n) + ") = " + total.str() +
                          " exceeds --state-cap " + std::to_string(cfg.state_cap));
      }
      const bool bf = want_bf && total <= cfg.bruteforce_cap;
      const bool fixed = want_fixed && total <= cfg.state_cap;
      std::vector<StateVector> states;
      if (bf || fixed) {
        states = potential::realize_states(d, n, std::max(cfg.bruteforce_cap, cfg.state_cap), cfg.matrix_cap, threads);
      }
      for (auto t : ts) {
        auto r = potential::report(d, n, t);
        if (bf) r.bruteforce = potential::bruteforce_from_vectors(states, t, threads);
        if (fixed) r.fixed_state = potential::fixed_state_from_vectors(states, t);
        reports.push_back(std::move(r));
      }
    }
  }
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.d, a.n, a.t) < std::tie(b.d, b.n, b.t);
  });

  if (cfg.format == "json") {
    serialize::Json arr = serialize::Json::array();
    for (const auto& r : reports) arr.push_back(serialize::report_to_json(r));
    out << arr.dump(2) << '\n';
    return;
  }
  const std::vector<std::string> header{"d",       "n",           "t",     "D",    "recursion", "combinatorial",
                                        "decimal", "bruteforce", "fixed_state", "welch", "is_design"};
  Table rows;
  for (const auto& r : reports) {
    rows.push_back({std::to_string(r.d), std::to_string(r.n), std::to_string(r.t), r.dimension.str(),
                    to_fraction_string(r.recursion), to_fraction_string(r.combinatorial),
                    to_decimal_string(r.combinatorial, 12), r.bruteforce ? shortest(*r.bruteforce) : "",
                    r.fixed_state ? shortest(*r.fixed_state) : "", to_fraction_string(r.welch),
                    r.is_design ? "true" : "false"});
  }
  if (cfg.format == "csv") {
    write_csv(out, header, rows);
  } else {
    for (auto& r : rows) {
      for (std::size_t c = 7; c <= 8; ++c) {
        if (r[c].empty()) r[c] = "-";
      }
    }
    write_table(out, header, rows);
  }
}

// ---------------------------------------------------------------------------
// enumerate

void cmd_enumerate(const std::string& what, const RunConfig& cfg, std::ostream& out) {
  const unsigned d = single(cfg.d, "d");
  const unsigned n = single(cfg.n, "n");
  combinatorics::require_prime(d);
  if (n == 0) throw InvalidArgument("n must be >= 1");

  if (what == "lagrangians") {
    for (const auto& m : symplectic::enumerate_lagrangians(d, n, cfg.enumeration_cap)) {
      out << serialize::subspace_to_json(m).dump() << '\n';
    }
    return;
  }
  if (what == "states") {
    if (cfg.amplitudes) weyl::hilbert_dim(d, n, cfg.matrix_cap);
    auto states = stabilizer::enumerate_states(d, n, cfg.state_cap);
    for (const auto& s : states) {
      std::optional<StateVector> amps;
      if (cfg.amplitudes) amps = stabilizer::state_vector(s, cfg.matrix_cap);
      out << serialize::state_to_json(s, amps).dump() << '\n';
    }
    return;
  }
  // spectrum
  require_format(cfg.format);
  auto lagrangians = symplectic::enumerate_lagrangians(d, n, cfg.enumeration_cap);
  const auto m = lagrangians.next();
  const auto spectrum = symplectic::intersection_spectrum(*m, cfg.enumeration_cap);
  struct Row3 {
    unsigned k;
    std::uint64_t enumerated;
    ExactInteger formula;
  };
  std::vector<Row3> rows;
  for (unsigned k = 0; k <= n; ++k) rows.push_back({k, spectrum.at(k), combinatorics::kappa(d, n, k)});
  if (cfg.format == "json") {
    serialize::Json arr = serialize::Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"d", d},
                     {"n", n},
                     {"k", r.k},
                     {"enumerated", r.enumerated},
                     {"formula", r.formula.str()},
                     {"match", ExactInteger(r.enumerated) == r.formula}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  const std::vector<std::string> header{"d", "n", "k", "enumerated", "formula", "match"};
  Table table;
  for (const auto& r : rows) {
    table.push_back({std::to_string(d), std::to_string(n), std::to_string(r.k), std::to_string(r.enumerated),
                     r.formula.str(), ExactInteger(r.enumerated) == r.formula ? "true" : "false"});
  }
  if (cfg.format == "csv") {
    write_csv(out, header, table);
  } else {
    write_table(out, header, table);
  }
}

// ---------------------------------------------------------------------------
// verify

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void record(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS" : "FAIL") << "  " << name << "  " << detail << '\n';
    ++total_;
    if (ok) ++passed_;
  }
  void residual(const std::string& name, double value, double tolerance) {
    record(name, value <= tolerance, "residual=" + sci(value) + " tol=" + sci(tolerance));
  }
  bool all_passed() const { return passed_ == total_; }
  void summary() { out_ << "summary: " << passed_ << "/" << total_ << " checks passed\n"; }

 private:
  std::ostream& out_;
  std::size_t total_ = 0;
  std::size_t passed_ = 0;
};

std::vector<PhaseVector> all_points(unsigned d, std::size_t n) {
  std::vector<PhaseVector> points;
  Subspace::full(d, 2 * n).for_each_element([&](const Row&, const PhaseVector& v) { points.push_back(v); });
  return points;
}

void verify_weyl(unsigned d, unsigned n, const RunConfig& cfg, unsigned threads, Checklist& checks) {
  const std::size_t dim = weyl::hilbert_dim(d, n, cfg.matrix_cap);
  const auto points = all_points(d, n);
  // Exhaustive over pairs when small; otherwise every u against the unit vectors.
  std::vector<PhaseVector> partners;
  std::string scope;
  if (points.size() * points.size() <= 65536 && dim <= 64) {
    partners = points;
    scope = "all pairs";
  } else {
    for (std::size_t i = 0; i < 2 * n; ++i) {
      Row e(2 * n, 0);
      e[i] = 1;
      partners.emplace_back(d, std::move(e));
    }
    scope = "u x unit vectors";
  }
  std::vector<double> comp(points.size()), comm(points.size()), unit(points.size()), trace(points.size());
  const DenseOperator identity = DenseOperator::identity(dim);
  parallel::parallel_for(points.size(), threads, [&](std::size_t i) {
    const auto& u = points[i];
    const DenseOperator w = weyl::weyl(u, cfg.matrix_cap);
    unit[i] = max_abs_diff(w * w.adjoint(), identity);
    const Complex expected = u.is_zero() ? Complex(static_cast<double>(dim), 0.0) : Complex(0.0, 0.0);
    trace[i] = std::abs(w.trace() - expected);
    for (const auto& v : partners) {
      comp[i] = std::max(comp[i], weyl::composition_residual(u, v, cfg.matrix_cap));
      comm[i] = std::max(comm[i], weyl::commutation_residual(u, v, cfg.matrix_cap));
    }
  });
  auto worst = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); };
  const std::string count = std::to_string(points.size() * partners.size());
  checks.residual("weyl-unitarity (" + std::to_string(points.size()) + " points)", worst(unit), 1e-12);
  checks.residual("weyl-trace (" + std::to_string(points.size()) + " points)", worst(trace), 1e-12);
  checks.residual("weyl-composition (" + scope + ", " + count + ")", worst(comp), 1e-12);
  checks.residual("weyl-commutation (" + scope + ", " + count + ")", worst(comm), 1e-12);
}

void verify_counting(unsigned d, unsigned n, const RunConfig& cfg, Checklist& checks) {
  const auto lagrangians = symplectic::enumerate_lagrangians(d, n, cfg.enumeration_cap).collect();
  const ExactInteger expected = combinatorics::lagrangian_count(d, n);
  checks.record("lagrangian-count", ExactInteger(lagrangians.size()) == expected,
                "enumerated=" + std::to_string(lagrangians.size()) + " formula=" + expected.str());

  const auto& m = lagrangians.front();
  std::map<std::size_t, std::uint64_t> spectrum;
  std::uint64_t graphs = 0;
  for (const auto& other : lagrangians) {
    ++spectrum[symplectic::intersect(m, other).dim()];
    if (symplectic::is_graph_lagrangian(other, m).is_graph) ++graphs;
  }
  bool spectrum_ok = true;
  std::string detail;
  for (unsigned k = 0; k <= n; ++k) {
    const ExactInteger formula = combinatorics::kappa(d, n, k);
    spectrum_ok = spectrum_ok && ExactInteger(spectrum[k]) == formula;
    detail += (k ? " " : "") + std::string("k") + std::to_string(k) + "=" + std::to_string(spectrum[k]) + "/" +
              formula.str();
  }
  checks.record("intersection-spectrum", spectrum_ok, detail);
  const ExactInteger transversal = combinatorics::transversal_count(d, n);
  checks.record("transversal-count", ExactInteger(spectrum[0]) == transversal && ExactInteger(graphs) == transversal,
                "transverse=" + std::to_string(spectrum[0]) + " graphs=" + std::to_string(graphs) +
                    " formula=" + transversal.str());

  bool extensions_ok = true;
  std::string ext_detail;
  for (unsigned k = 0; k <= n; ++k) {
    ExactInteger total = 0;
    for (const auto& kk : symplectic::subspaces_of(m, k, cfg.enumeration_cap)) {
      std::uint64_t count = 0;
      for (const auto& other : symplectic::extensions_through(m, kk, cfg.enumeration_cap)) {
        if (symplectic::intersect(m, other) != kk) extensions_ok = false;
        ++count;
      }
      total += count;
    }
    extensions_ok = extensions_ok && total == combinatorics::kappa(d, n, k);
    ext_detail += (k ? " " : "") + std::string("k") + std::to_string(k) + "=" + total.str();
  }
  checks.record("extension-counts", extensions_ok, ext_detail);
}

void verify_states(unsigned d, unsigned n, const RunConfig& cfg, unsigned threads, Checklist& checks) {
  const auto states = stabilizer::enumerate_states(d, n, cfg.state_cap).collect();
  const ExactInteger expected = combinatorics::stabilizer_count(d, n);
  checks.record("state-count", ExactInteger(states.size()) == expected,
                "enumerated=" + std::to_string(states.size()) + " formula=" + expected.str());

  std::vector<StateVector> vectors(states.size());
  std::vector<double> eigen(states.size());
  parallel::parallel_for(states.size(), threads, [&](std::size_t i) {
    vectors[i] = stabilizer::state_vector(states[i], cfg.matrix_cap);
    eigen[i] = stabilizer::eigen_residual(states[i], vectors[i], cfg.matrix_cap);
  });
  checks.residual("eigenvalue-equations", *std::max_element(eigen.begin(), eigen.end()), 1e-10);

  const std::size_t per_basis = weyl::hilbert_dim(d, n, cfg.matrix_cap);
  const std::size_t bases = states.size() / per_basis;
  std::vector<double> gram(bases);
  parallel::parallel_for(bases, threads, [&](std::size_t b) {
    for (std::size_t i = 0; i < per_basis; ++i) {
      for (std::size_t j = 0; j < per_basis; ++j) {
        const Complex g = kernels::inner(vectors[b * per_basis + i], vectors[b * per_basis + j]);
        gram[b] = std::max(gram[b], std::abs(g - Complex(i == j ? 1.0 : 0.0, 0.0)));
      }
    }
  });
  checks.residual("basis-orthonormality", *std::max_element(gram.begin(), gram.end()), 1e-10);

  // All pairs when the ensemble fits the bruteforce cap, else against the first state.
  const bool all_pairs = states.size() <= cfg.bruteforce_cap;
  const std::size_t rows = all_pairs ? states.size() : 1;
  std::vector<double> overlap(rows);
  parallel::parallel_for(rows, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const double numeric = std::norm(kernels::inner(vectors[i], vectors[j]));
      const double exact = to_double(stabilizer::overlap_exact(states[i], states[j]));
      overlap[i] = std::max(overlap[i], std::abs(numeric - exact));
    }
  });
  checks.residual("overlap-exact-vs-numeric (" + std::to_string(rows * states.size()) + " pairs)",
                  *std::max_element(overlap.begin(), overlap.end()), 1e-10);

  for (unsigned t = 1; t <= cfg.t_max; ++t) {
    const auto r = potential::report(d, n, t);
    const std::string tag = " t=" + std::to_string(t);
    checks.record("frame-potential-exact" + tag, r.recursion == r.combinatorial,
                  "recursion=" + to_fraction_string(r.recursion) +
                      " combinatorial=" + to_fraction_string(r.combinatorial));
    const double exact = to_double(r.combinatorial);
    const double numeric = all_pairs ? potential::bruteforce_from_vectors(vectors, t, threads)
                                     : potential::fixed_state_from_vectors(vectors, t);
    checks.residual(std::string(all_pairs ? "frame-potential-bruteforce" : "frame-potential-fixed-state") + tag,
                    std::abs(numeric - exact), 1e-9);
    const bool expect_design = t <= 2 || (t == 3 && d == 2);
    const bool ok = r.combinatorial >= r.welch && r.is_design == expect_design;
    checks.record("welch-bound" + tag, ok,
                  std::string(r.is_design ? "F=W" : "F>W") + " welch=" + to_fraction_string(r.welch) +
                      " design=" + (r.is_design ? "true" : "false"));
  }
}

void cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const unsigned d = single(cfg.d, "d");
  const unsigned n = single(cfg.n, "n");
  combinatorics::require_prime(d);
  if (n == 0) throw InvalidArgument("n must be >= 1");
  if (cfg.t_max == 0) throw InvalidArgument("--t-max must be >= 1");
  const ExactInteger total = combinatorics::stabilizer_count(d, n);
  if (total > cfg.state_cap) {
    throw CapExceeded("S(" + std::to_string(d) + "," + std::to_string(n) + ") = " + total.str() +
                      " states exceeds --state-cap " + std::to_string(cfg.state_cap));
  }
  weyl::hilbert_dim(d, n, cfg.matrix_cap);
  const unsigned threads = parallel::resolve_threads(cfg.threads);
  out << "verify d=" << d << " n=" << n << " t-max=" << cfg.t_max << " states=" << total.str() << '\n';
  Checklist checks(out);
  verify_weyl(d, n, cfg, threads, checks);
  verify_counting(d, n, cfg, checks);
  verify_states(d, n, cfg, threads, checks);
  checks.summary();
  if (!checks.all_passed()) throw VerificationFailed("one or more checks failed");
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--d", cfg.d, "Prime d (value or range a..b)");
  cmd->add_option("--n", cfg.n, "Number of qudits (value or range a..b)");
  cmd->add_option("--format", cfg.format, "table, csv or json");
  cmd->add_option("--output", cfg.output, "Write to this file instead of stdout");
  cmd->add_option("--threads", cfg.threads, "Worker threads (default: STABKIT_THREADS or all cores)");
  cmd->add_option("--state-cap", cfg.state_cap, "Maximum number of stabilizer states")->check(CLI::PositiveNumber);
  cmd->add_option("--bruteforce-cap", cfg.bruteforce_cap, "Maximum ensemble size for the double sum")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--enumeration-cap", cfg.enumeration_cap, "Maximum number of enumerated subspaces")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--matrix-cap", cfg.matrix_cap, "Maximum Hilbert-space dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Reserved; all commands are deterministic");
}

}  // namespace

std::vector<unsigned> parse_range(const std::string& text) {
  auto number = [&](std::string_view part) {
    unsigned value = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || res.ec != std::errc() || res.ptr != part.data() + part.size()) {
      throw InvalidArgument("malformed range '" + text + "' (expected a or a..b)");
    }
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {number(text)};
  const unsigned lo = number(std::string_view(text).substr(0, dots));
  const unsigned hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw InvalidArgument("empty range '" + text + "'");
  std::vector<unsigned> out;
  for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Stabilizer states, symplectic geometry and frame potentials", "stabkit"};
  app.require_subcommand(1);

  auto* fp = app.add_subcommand("frame-potential", "Frame potentials and Welch bounds per (d, n, t)");
  add_common(fp, cfg);
  fp->add_option("--t", cfg.t, "Design order (value or range a..b)");
  fp->add_option("--method", cfg.method, "recursion, combinatorial, bruteforce, fixed-state or all");

  auto* en = app.add_subcommand("enumerate", "Enumerate Lagrangians, states or the intersection spectrum");
  std::string what;
  en->add_option("what", what, "lagrangians, states or spectrum")
      ->required()
      ->check(CLI::IsMember({"lagrangians", "states", "spectrum"}));
  add_common(en, cfg);
  en->add_flag("--amplitudes", cfg.amplitudes, "Include realized state vectors");

  auto* ve = app.add_subcommand("verify", "Run the cross-check suite for one (d, n)");
  add_common(ve, cfg);
  ve->add_option("--t-max", cfg.t_max, "Largest design order to check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  std::ostringstream buffer;
  if (!cfg.output.empty()) sink = &buffer;

  try {
    if (fp->parsed()) {
      cmd_frame_potential(cfg, *sink);
    } else if (en->parsed()) {
      cmd_enumerate(what, cfg, *sink);
    } else {
      cmd_verify(cfg, *sink);
    }
  } catch (const VerificationFailed& e) {
    if (!cfg.output.empty()) std::ofstream(cfg.output, std::ios::binary) << buffer.str();
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace stabkit::cli
