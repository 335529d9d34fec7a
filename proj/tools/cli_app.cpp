#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "claspkit/clasp_expansion.hpp"
#include "claspkit/fusion.hpp"
#include "claspkit/kappa.hpp"
#include "claspkit/qnum.hpp"
#include "claspkit/render.hpp"
#include "claspkit/rep_combinatorics.hpp"
#include "claspkit/serialize.hpp"

namespace claspkit::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MemoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kJson, kCsv };

constexpr int kRecursionGrid = 12;
constexpr int kCorollaryGrid = 9;  // 10 x 10 weights
constexpr int kDoublingMax = 20;
// Past this many failing keys a broken system only costs time.
constexpr size_t kMaxReportedMismatches = 10;
constexpr size_t kMemoSamples = 5;
constexpr std::mt19937::result_type kMemoSeed = 20240611;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return Format::kText;
}

int parse_int(const std::string& s) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// "lo..hi" inclusive, or a single integer.
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(s);
    return {v, v};
  }
  const int lo = parse_int(s.substr(0, dots));
  const int hi = parse_int(s.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range: '" + s + "'");
  return {lo, hi};
}

// "x,y"
Weight parse_weight(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("weight must be 'x,y', got '" + s + "'");
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

std::vector<int> parse_path(const std::string& s) {
  std::vector<int> path;
  for (char c : s) {
    if (c != '1' && c != '2') throw BadPath("path letters must be 1 or 2, got '" + s + "'");
    path.push_back(c - '0');
  }
  return path;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string key_text(const KappaKey& k) { return "kappa[" + k.lambda.to_string() + "," + k.mu.to_string() + "]"; }

std::string path_text(const std::vector<int>& path) {
  std::string s;
  for (int l : path) s += static_cast<char>('0' + l);
  return s;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// Memo cache

std::optional<fs::path> memo_path() {
  const char* p = std::getenv("CLASPKIT_MEMO_PATH");
  if (p == nullptr || *p == '\0') return std::nullopt;
  return fs::path(p);
}

// Missing file means an empty cache. Anything unreadable or any sampled entry
// that disagrees with recomputation rejects the whole file.
std::vector<KappaRecord> load_memo(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::vector<KappaRecord> records;
  try {
    records = kappa_table_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw MemoError("memo cache " + path.string() + " is unreadable: " + e.what());
  }
  std::vector<KappaRecord> sample;
  std::mt19937 rng(kMemoSeed);
  std::sample(records.begin(), records.end(), std::back_inserter(sample), kMemoSamples, rng);
  for (const auto& r : sample) {
    const KappaKey key = r.key();
    if (!key.in_domain() || !(kappa_closed(key) == r.value)) {
      throw MemoError("memo cache " + path.string() + " failed validation at " + key_text(key));
    }
  }
  return records;
}

void save_memo(const fs::path& path, const std::map<KappaKey, RationalFunction>& entries) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write memo cache " + tmp.string());
    out << kappa_table_to_json(entries).dump() << '\n';
  }
  fs::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// kappa

struct KappaOptions {
  std::string a = "0..3";
  std::string b = "0..3";
  std::string mu;
  std::string mode = "closed";
};

struct KappaRow {
  KappaKey key;
  RationalFunction value;
  std::optional<RationalFunction> recursive;  // both mode only
  bool match = true;
};

int cmd_kappa(const KappaOptions& o, Format fmt, std::ostream& out, std::ostream& err) {
  const auto [a_lo, a_hi] = parse_range(o.a);
  const auto [b_lo, b_hi] = parse_range(o.b);
  if (a_lo < 0 || b_lo < 0) throw UsageError("weight ranges must be nonnegative");
  std::optional<Weight> mu_filter;
  if (!o.mu.empty()) {
    mu_filter = parse_weight(o.mu);
    fund_index_of(*mu_filter);
  }
  const bool want_closed = o.mode != "recursive";
  const bool want_recursive = o.mode != "closed";

  KappaTable closed(KappaMode::kClosed);
  KappaTable recursive(KappaMode::kRecursive);
  const auto memo = want_recursive ? memo_path() : std::nullopt;
  if (memo) {
    for (const auto& r : load_memo(*memo)) recursive.store(r.key(), r.value);
  }

  std::vector<KappaRow> rows;
  for (int a = a_lo; a <= a_hi; ++a) {
    for (int b = b_lo; b <= b_hi; ++b) {
      for (int index : {1, 2}) {
        for (Weight mu : fund_weights(index)) {
          if (mu_filter && mu != *mu_filter) continue;
          const KappaKey key{{a, b}, mu};
          if (!key.in_domain()) continue;
          KappaRow row{key, 0, std::nullopt, true};
          if (want_closed) row.value = kappa_value(key, closed);
          if (want_recursive) {
            const RationalFunction r = kappa_value(key, recursive);
            if (want_closed) {
              row.recursive = r;
              row.match = r == row.value;
            } else {
              row.value = r;
            }
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  if (memo) save_memo(*memo, recursive.snapshot());

  const long mismatches = std::count_if(rows.begin(), rows.end(), [](const KappaRow& r) { return !r.match; });
  switch (fmt) {
    case Format::kJson: {
      json records = json::array();
      json bad = json::array();
      for (const auto& r : rows) {
        json rec = to_json(KappaRecord{r.key.lambda.a, r.key.lambda.b, r.key.mu, r.value});
        rec["display"] = display(r.value);
        records.push_back(rec);
        if (!r.match) {
          bad.push_back({{"key", key_text(r.key)}, {"closed", to_json(r.value)}, {"recursive", to_json(*r.recursive)}});
        }
      }
      emit_json(out, {{"mode", o.mode}, {"count", rows.size()}, {"records", records}, {"mismatches", bad}});
      break;
    }
    case Format::kCsv:
      out << "a,b,mu_a,mu_b,value,numerator,denominator";
      if (o.mode == "both") out << ",match";
      out << '\n';
      for (const auto& r : rows) {
        out << r.key.lambda.a << ',' << r.key.lambda.b << ',' << r.key.mu.a << ',' << r.key.mu.b << ','
            << csv_field(display(r.value)) << ',' << csv_field(r.value.num().to_string()) << ','
            << csv_field(r.value.den().to_string());
        if (o.mode == "both") out << ',' << (r.match ? "true" : "false");
        out << '\n';
      }
      break;
    case Format::kText:
      for (const auto& r : rows) {
        out << key_text(r.key) << " = " << display(r.value);
        if (!r.match) out << "   MISMATCH: recursion gives " << display(*r.recursive);
        out << '\n';
      }
      out << rows.size() << " records";
      if (o.mode == "both") out << ", " << mismatches << " mismatches";
      out << '\n';
      break;
  }
  if (mismatches > 0) {
    err << "closed and recursive values disagree on " << mismatches << " keys\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string scope = "all";
  int perturb = 0;  // recursion id, negative-control builds only
};

struct CorollaryCheck {
  Weight varpi;
  int sign = 1;
  int derived_sign = 1;
  bool symbolic = false;
  bool ok() const { return symbolic && sign == derived_sign; }
};

int cmd_verify(const VerifyOptions& o, Format fmt, std::ostream& out, std::ostream& err) {
  const bool recursions = o.scope != "corollary";
  const bool corollary = o.scope != "recursions";
  RecursionSystem system = RecursionSystem::standard();
  if (o.perturb != 0) system = system.perturbed(o.perturb, Rational(2));

  bool ok = true;
  std::vector<IdentityCertificate> certs;
  std::vector<IdentityCertificate> cleared;
  std::optional<VerificationReport> grid;
  if (recursions) {
    for (const auto& r : system.recursions()) certs.push_back(certify_recursion(r.id, system));
    for (Weight mu : {Weight{-1, 1}, Weight{0, 0}}) cleared.push_back(cleared_identity(mu));
    grid = verify_recursion_numeric(kRecursionGrid, kRecursionGrid, system, kMaxReportedMismatches);
    for (const auto& c : certs) ok = ok && c.ok();
    for (const auto& c : cleared) ok = ok && c.ok();
    ok = ok && grid->ok();
  }
  std::vector<CorollaryCheck> checks;
  std::optional<VerificationReport> cgrid;
  bool doubling = true;
  if (corollary) {
    for (Weight w : extremal_weights()) {
      checks.push_back({w, corollary_sign(w), derive_corollary_sign(w), verify_corollary_symbolic(w)});
      ok = ok && checks.back().ok();
    }
    cgrid = verify_corollary_numeric(kCorollaryGrid, kCorollaryGrid);
    for (long n = 1; n <= kDoublingMax; ++n) doubling = doubling && qint_doubling_holds(n);
    ok = ok && cgrid->ok() && doubling;
  }

  const auto status = [](bool b) { return b ? "verified" : "failed"; };
  switch (fmt) {
    case Format::kJson: {
      json j{{"scope", o.scope}, {"status", status(ok)}};
      if (recursions) {
        j["certificates"] = json::array();
        for (const auto& c : certs) j["certificates"].push_back(to_json(c));
        j["cleared_identities"] = json::array();
        for (const auto& c : cleared) j["cleared_identities"].push_back(to_json(c));
        j["grid"] = to_json(*grid);
      }
      if (corollary) {
        j["corollary"] = json::array();
        for (const auto& c : checks) {
          j["corollary"].push_back({{"varpi", to_json(c.varpi)},
                                    {"sign", c.sign},
                                    {"derived_sign", c.derived_sign},
                                    {"symbolic", c.symbolic},
                                    {"status", status(c.ok())}});
        }
        j["corollary_grid"] = to_json(*cgrid);
        j["qint_doubling"] = {{"n_max", kDoublingMax}, {"status", status(doubling)}};
      }
      emit_json(out, j);
      break;
    }
    case Format::kCsv:
      out << "check,id,status,detail\n";
      for (const auto& c : certs) {
        out << "recursion," << c.recursion_id << ',' << status(c.ok()) << ',' << csv_field(c.difference.to_string())
            << '\n';
      }
      for (const auto& c : cleared) {
        out << "cleared_identity," << c.recursion_id << ',' << status(c.ok()) << ','
            << csv_field(c.difference.to_string()) << '\n';
      }
      if (grid) out << "recursion_grid,0.." << grid->a_max << ',' << status(grid->ok()) << ',' << grid->comparisons << '\n';
      for (const auto& c : checks) {
        out << "corollary," << csv_field(c.varpi.to_string()) << ',' << status(c.ok()) << ',' << c.sign << '\n';
      }
      if (cgrid) {
        out << "corollary_grid,0.." << cgrid->a_max << ',' << status(cgrid->ok()) << ',' << cgrid->comparisons << '\n';
        out << "qint_doubling,1.." << kDoublingMax << ',' << status(doubling) << ",\n";
      }
      break;
    case Format::kText:
      for (const auto& c : certs) {
        out << "recursion " << c.recursion_id << " mu=" << c.mu.to_string() << " [" << c.stratum
            << "]: " << status(c.ok()) << '\n';
        out << "  lhs = " << c.lhs.to_string() << "\n  rhs = " << c.rhs.to_string() << '\n';
        if (!c.ok()) out << "  difference = " << c.difference.to_string() << '\n';
      }
      for (const auto& c : cleared) {
        out << "cleared identity mu=" << c.mu.to_string() << ": " << status(c.ok()) << "\n  " << c.lhs_expr
            << "\n  = " << c.rhs_expr << '\n';
        if (!c.ok()) out << "  difference = " << c.difference.to_string() << '\n';
      }
      if (grid) {
        out << "recursion grid 0.." << grid->a_max << " x 0.." << grid->b_max << ": " << grid->comparisons
            << " comparisons, " << grid->mismatches.size() << " mismatches"
            << (grid->truncated ? " (stopped early)" : "") << '\n';
        for (const auto& k : grid->mismatches) out << "  mismatch at " << key_text(k) << '\n';
      }
      for (const auto& c : checks) {
        out << "corollary varpi=" << c.varpi.to_string() << " sign=" << (c.sign < 0 ? "-" : "+") << ": "
            << status(c.ok()) << '\n';
      }
      if (cgrid) {
        out << "corollary grid 0.." << cgrid->a_max << " x 0.." << cgrid->b_max << ": " << cgrid->comparisons
            << " comparisons, " << cgrid->mismatches.size() << " mismatches\n";
        out << "[2n]/[2] = [n]_{q^2} for n <= " << kDoublingMax << ": " << status(doubling) << '\n';
      }
      out << "overall: " << status(ok) << '\n';
      break;
  }
  if (!ok) {
    err << "verification failed\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// expand

struct ExpandOptions {
  int a = 0;
  int b = 0;
  std::string path;
  int ell = 0;  // 0: no existence report
};

int cmd_expand(const ExpandOptions& o, Format fmt, std::ostream& out) {
  const Weight target{o.a, o.b};
  const ClaspExpansionCertificate cert =
      o.path.empty() ? expansion_certificate(target) : expansion_certificate(target, parse_path(o.path));
  std::optional<ExistenceReport> report;
  if (o.ell != 0) report = existence_report(cert, o.ell);

  switch (fmt) {
    case Format::kJson: {
      json j{{"certificate", to_json(cert)}};
      if (report) j["existence"] = to_json(*report);
      emit_json(out, j);
      break;
    }
    case Format::kCsv:
      out << "step,from_a,from_b,letter,mu_a,mu_b,child_a,child_b,kappa\n";
      for (size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        for (const auto& c : s.corrections) {
          out << i + 1 << ',' << s.from.a << ',' << s.from.b << ',' << s.letter << ',' << c.mu.a << ',' << c.mu.b
              << ',' << c.child.a << ',' << c.child.b << ',' << csv_field(display(c.kappa)) << '\n';
        }
      }
      break;
    case Format::kText:
      out << "clasp " << target.to_string() << " along path " << path_text(cert.path) << '\n';
      for (size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        out << "step " << i + 1 << ": " << s.from.to_string() << " + w" << s.letter << " -> " << s.to.to_string()
            << ", " << s.corrections.size() << " corrections\n";
        for (const auto& c : s.corrections) {
          out << "  mu=" << c.mu.to_string() << " child=" << c.child.to_string() << " kappa=" << display(c.kappa)
              << " kappa^-1=" << display(c.kappa_inv) << '\n';
        }
      }
      if (report) {
        out << "exists at ell=" << report->ell << ": " << (report->exists ? "true" : "false") << '\n';
        if (report->failure) {
          const auto& f = *report->failure;
          out << "  step " << f.step + 1 << ": " << key_text({f.lambda, f.mu}) << " has a vanishing "
              << (f.numerator_vanishes ? "numerator" : "denominator") << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fusion

int cmd_fusion(int ell, Format fmt, std::ostream& out) {
  const FusionContext ctx(ell);
  const auto closure = upper_closure_weights(ctx);
  const auto interior = lowest_alcove_interior(ctx);
  const bool identity = ell == 8 && check_ell8_identity(ell);

  const auto weight_json = [&](Weight w) {
    return json{{"weight", to_json(w)},
                {"negligible", is_negligible(w, ctx)},
                {"quantum_dim", to_json(quantum_dim_at(w, ctx))},
                {"quantum_dim_text", quantum_dim_at(w, ctx).to_string()}};
  };
  switch (fmt) {
    case Format::kJson: {
      json uc = json::array();
      json in = json::array();
      for (Weight w : closure) uc.push_back(weight_json(w));
      for (Weight w : interior) in.push_back(weight_json(w));
      json j{{"ell", ell}, {"order", ctx.order()}, {"upper_closure", uc}, {"interior", in}};
      if (ell == 8) j["identity_check"] = {{"statement", "-[6][2]/[3] = -[2]_{q^2}"}, {"holds", identity}};
      emit_json(out, j);
      break;
    }
    case Format::kCsv:
      out << "set,a,b,negligible,quantum_dim\n";
      for (const auto* set : {&closure, &interior}) {
        for (Weight w : *set) {
          out << (set == &closure ? "upper_closure" : "interior") << ',' << w.a << ',' << w.b << ','
              << (is_negligible(w, ctx) ? "true" : "false") << ',' << csv_field(quantum_dim_at(w, ctx).to_string())
              << '\n';
        }
      }
      if (ell == 8) out << "identity_check,,," << (identity ? "true" : "false") << ",\n";
      break;
    case Format::kText:
      out << "ell=" << ell << ", q = z primitive of order " << ctx.order() << '\n';
      out << "upper closure:";
      for (Weight w : closure) out << ' ' << w.to_string();
      out << "\ninterior:";
      for (Weight w : interior) out << ' ' << w.to_string();
      out << '\n';
      for (const auto* set : {&closure, &interior}) {
        for (Weight w : *set) {
          out << "  " << w.to_string() << (is_negligible(w, ctx) ? " negligible" : " non-negligible")
              << ", qdim = " << quantum_dim_at(w, ctx).to_string() << '\n';
        }
      }
      if (ell == 8) out << "-[6][2]/[3] = -[2]_{q^2} at z: " << (identity ? "true" : "false") << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// dims

int cmd_dims(const std::string& word, Format fmt, std::ostream& out) {
  const WeightWord w = WeightWord::parse(word);
  const auto mult = weyl_multiplicities(w);
  long total = 0;
  for (const auto& [lambda, m] : mult) total += m * weyl_dim(lambda);
  const long end = dim_hom(w, w);

  switch (fmt) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& [lambda, m] : mult) {
        rows.push_back({{"weight", to_json(lambda)},
                        {"multiplicity", m},
                        {"weyl_dim", weyl_dim(lambda)},
                        {"quantum_dim", to_json(quantum_dim(lambda))},
                        {"quantum_dim_text", display(RationalFunction(quantum_dim(lambda)))}});
      }
      emit_json(out, {{"word", w.to_string()}, {"summands", rows}, {"total_dim", total}, {"dim_end", end}});
      break;
    }
    case Format::kCsv:
      out << "a,b,multiplicity,weyl_dim,quantum_dim\n";
      for (const auto& [lambda, m] : mult) {
        out << lambda.a << ',' << lambda.b << ',' << m << ',' << weyl_dim(lambda) << ','
            << csv_field(display(RationalFunction(quantum_dim(lambda)))) << '\n';
      }
      break;
    case Format::kText:
      out << "word " << w.to_string() << '\n';
      for (const auto& [lambda, m] : mult) {
        out << "  " << lambda.to_string() << ": multiplicity " << m << ", dim " << weyl_dim(lambda)
            << ", qdim " << display(RationalFunction(quantum_dim(lambda))) << '\n';
      }
      out << "total dim " << total << ", dim End " << end << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact clasp coefficients for the C2 web category", "claspkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  KappaOptions kopt;
  auto* kappa = app.add_subcommand("kappa", "Tabulate local intersection forms");
  kappa->add_option("--a", kopt.a, "Range lo..hi for a");
  kappa->add_option("--b", kopt.b, "Range lo..hi for b");
  kappa->add_option("--mu", kopt.mu, "Only this weight mu, as x,y");
  kappa->add_option("--mode", kopt.mode)->check(CLI::IsMember({"closed", "recursive", "both"}));

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Symbolic and grid verification");
  verify->add_option("--scope", vopt.scope)->check(CLI::IsMember({"recursions", "corollary", "all"}));
#ifdef CLASPKIT_NEGATIVE_CONTROL
  verify->add_option("--perturb", vopt.perturb, "Double the leading constant of this recursion")
      ->check(CLI::Range(1, 7));
#endif

  ExpandOptions eopt;
  auto* expand = app.add_subcommand("expand", "Clasp expansion certificate");
  expand->add_option("a", eopt.a)->required();
  expand->add_option("b", eopt.b)->required();
  expand->add_option("--path", eopt.path, "Letters 1 and 2 summing to the target");
  expand->add_option("--ell", eopt.ell, "Also report existence at this ell")->check(CLI::Range(3, 1 << 20));

  int ell = 0;
  auto* fusion = app.add_subcommand("fusion", "Upper closure, alcove interior and negligibility");
  fusion->add_option("ell", ell)->required();

  std::string word;
  auto* dims = app.add_subcommand("dims", "Multiplicities and dimensions for a word");
  dims->add_option("word", word)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = parse_format(format);
  try {
    if (*kappa) return cmd_kappa(kopt, fmt, out, err);
    if (*verify) return cmd_verify(vopt, fmt, out, err);
    if (*expand) return cmd_expand(eopt, fmt, out);
    if (*fusion) return cmd_fusion(ell, fmt, out);
    if (*dims) return cmd_dims(word, fmt, out);
  } catch (const MemoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace claspkit::cli
