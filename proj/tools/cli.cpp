#include "cli.hpp"

#include "report.hpp"

#include "adet/errors.hpp"
#include "adet/formulas.hpp"
#include "adet/oracle.hpp"
#include "adet/symmetric.hpp"
#include "adet/transition.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace adet::cli {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("not an integer: '" + s + "'");
  }
}

std::vector<Rational> parse_alphas(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const std::string& t : texts) out.push_back(parse_rational(t));
  return out;
}

// Options shared by the subcommands; each subcommand registers the ones it uses.
struct Common {
  std::string format = "text";
  std::vector<std::string> alphas;
  int max_size = kDefaultCap;

  void add_format(CLI::App* app) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  }
  void add_alpha(CLI::App* app) {
    app->add_option("--alpha", alphas, "Specialize alpha (p/q); repeatable")->take_all()->allow_extra_args(false);
  }
  void add_cap(CLI::App* app) {
    app->add_option("--max-size", max_size, "Largest n*l to enumerate")->check(CLI::PositiveNumber);
  }
};

void print_matrix(std::ostream& out, const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << to_string(m(r, c));
    out << "]\n";
  }
}

int cmd_decompose(int n, int l, const Common& c, bool oracle, bool matrices, std::ostream& out) {
  const DecompositionReport r = build_report(n, l, parse_alphas(c.alphas), matrices, oracle, c.max_size);
  if (c.format == "json") out << to_json(r).dump(2) << "\n";
  else if (c.format == "csv") write_csv(out, r);
  else write_text(out, r);
  return r.oracle && !r.oracle->agrees ? kExitVerificationFailed : kExitOk;
}

int cmd_transition(int n, int l, const std::string& lam_text, const Common& c, bool check, std::ostream& out) {
  const Partition lam = parse_partition(lam_text);
  const TransitionMatrix t = transition_matrix(n, l, lam, ClassFunctionH::alpha_power(), c.max_size);
  const std::vector<Rational> alphas = parse_alphas(c.alphas);
  const std::size_t grank = generic_rank(t.entries);

  std::vector<std::pair<std::string, bool>> checks;
  if (check) {
    checks.emplace_back("trace = trace_poly", t.trace == trace_poly(n, l, lam, c.max_size));
    if (n == 2) checks.emplace_back("n = 2 closed form", t.d == 1 && t.entries(0, 0) == n2_transition(l, lam.part(1)));
    checks.emplace_back("F(0) = I", is_identity_at_zero(t));
    checks.emplace_back("Gram self-adjoint", is_gram_self_adjoint(t));
  }
  const bool all_ok = std::all_of(checks.begin(), checks.end(), [](const auto& p) { return p.second; });

  if (c.format == "json") {
    json j = {{"n", n}, {"l", l}, {"lambda", lam.parts()}, {"d", t.d},
              {"matrix", matrix_to_json(t.entries)}, {"trace", poly_to_json(t.trace)},
              {"generic_rank", grank}};
    json ranks = json::array();
    for (const Rational& a : alphas) ranks.push_back({{"alpha", to_string(a)}, {"rank", rank_at(t.entries, a)}});
    j["ranks"] = std::move(ranks);
    if (check) {
      json cj = json::object();
      for (const auto& [name, ok] : checks) cj[name] = ok;
      j["checks"] = std::move(cj);
    }
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "row,col,entry\n";
    for (std::size_t r = 0; r < t.d; ++r)
      for (std::size_t k = 0; k < t.d; ++k) out << r << "," << k << ",\"" << to_string(t.entries(r, k)) << "\"\n";
  } else {
    out << "F for lambda = " << paren(lam) << ", n = " << n << ", l = " << l << " (d = " << t.d << ")\n";
    print_matrix(out, t.entries);
    out << "trace: " << to_string(t.trace) << "\n";
    out << "generic rank: " << grank << "\n";
    for (const Rational& a : alphas) out << "rank at a=" << to_string(a) << ": " << rank_at(t.entries, a) << "\n";
    for (const auto& [name, ok] : checks) out << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_trace(int n, int l, const std::string& lam_text, const Common& c, bool paper_variant, std::ostream& out) {
  const Partition lam = parse_partition(lam_text);
  const PolyQ tr = trace_poly(n, l, lam, c.max_size);
  const std::vector<Rational> alphas = parse_alphas(c.alphas);
  const bool hook = lam.length() == 2 && lam.part(1) == 1 && n >= 2;

  if (c.format == "json") {
    json j = {{"n", n}, {"l", l}, {"lambda", lam.parts()}, {"trace", poly_to_json(tr)}};
    json vals = json::array();
    for (const Rational& a : alphas) vals.push_back({{"alpha", to_string(a)}, {"value", to_string(tr.eval(a))}});
    j["values"] = std::move(vals);
    if (paper_variant && hook) {
      j["corrected_form"] = poly_to_json(hook_trace_closed_form(n, l));
      j["displayed_form"] = poly_to_json(hook_trace_minus_variant(n, l));
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "trace: " << to_string(tr) << "\n";
  for (const Rational& a : alphas) out << "at a=" << to_string(a) << ": " << to_string(tr.eval(a)) << "\n";
  if (paper_variant) {
    if (!hook) {
      out << "no closed form for this shape\n";
    } else {
      const PolyQ plus = hook_trace_closed_form(n, l);
      const PolyQ minus = hook_trace_minus_variant(n, l);
      out << "corrected form (1+(n-1)a)^(l-1): " << to_string(plus) << (plus == tr ? "  [matches]" : "  [differs]")
          << "\n";
      out << "displayed form (1-(n-1)a)^(l-1): " << to_string(minus) << (minus == tr ? "  [matches]" : "  [differs]")
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_zonal(int n, int l, const std::string& lam_text, const std::string& perm_text, int s, const Common& c,
              bool check, std::ostream& out) {
  const Partition lam = parse_partition(lam_text);
  if (lam.size() != n * l) throw SizeMismatch("lambda must be a partition of n*l");
  Permutation g;
  if (!perm_text.empty()) {
    g = parse_permutation(perm_text);
  } else {
    if (n != 2 || s < 0 || s > l) throw ParseError("--s needs n = 2 and 0 <= s <= l");
    g = g_s(l, s);
  }
  if (g.degree() != n * l) throw SizeMismatch("permutation must lie in S_{nl}");
  const Rational v = zonal(lam, g, n, l, c.max_size);
  bool ok = true;
  std::string note;
  if (check && perm_text.empty()) {
    const Rational h = hahn_Q(zonal_hahn_params(l, lam.part(1)), s);
    ok = h == v;
    note = to_string(h);
  }
  if (c.format == "json") {
    json j = {{"lambda", lam.parts()}, {"g", to_string(g)}, {"value", to_string(v)}};
    if (check && perm_text.empty()) j["hahn"] = note;
    out << j.dump(2) << "\n";
  } else {
    out << to_string(v) << "\n";
    if (check && perm_text.empty()) out << "hahn: " << note << (ok ? "  [matches]" : "  [differs]") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_adet(const std::string& path, const Common& c, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const RatMatrix A = parse_matrix_csv(buf.str());
  std::vector<Rational> alphas = parse_alphas(c.alphas);
  if (alphas.empty()) throw ParseError("adet needs at least one --alpha");
  if (c.format == "json") {
    json vals = json::array();
    for (const Rational& a : alphas)
      vals.push_back({{"alpha", to_string(a)}, {"value", to_string(adet_eval(A, a, c.max_size))}});
    out << json{{"values", vals}}.dump(2) << "\n";
  } else if (alphas.size() == 1) {
    out << to_string(adet_eval(A, alphas[0], c.max_size)) << "\n";
  } else {
    for (const Rational& a : alphas) out << "a=" << to_string(a) << ": " << to_string(adet_eval(A, a, c.max_size)) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, const std::string& format, std::ostream& out) {
  const std::vector<CaseResult> results = run_suite(suite, opts);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CaseResult& r) { return r.pass; });
  if (format == "json") {
    json cases = json::array();
    for (const CaseResult& r : results) cases.push_back({{"case", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << json{{"suite", suite}, {"pass", ok}, {"cases", cases}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "case,pass,detail\n";
    for (const CaseResult& r : results) out << '"' << r.name << "\"," << (r.pass ? 1 : 0) << ",\"" << r.detail << "\"\n";
  } else {
    for (const CaseResult& r : results) {
      out << (r.pass ? "pass " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
    out << suite << ": " << std::count_if(results.begin(), results.end(), [](const CaseResult& r) { return r.pass; })
        << "/" << results.size() << " passed\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_explore(int n, int l, const std::string& lam_text, const Common& c, std::ostream& out) {
  std::vector<Partition> shapes;
  if (lam_text.empty()) shapes = partitions_of(n * l, n);
  else shapes.push_back(parse_partition(lam_text));
  std::vector<Rational> samples = parse_alphas(c.alphas);
  if (samples.empty()) samples = {Rational(1, 2), Rational(2), Rational(-1, 3), Rational(3)};

  json report = json::array();
  for (const Partition& lam : shapes) {
    const TransitionMatrix t = transition_matrix(n, l, lam, ClassFunctionH::alpha_power(), c.max_size);
    bool diagonal = true;
    bool scalar = true;
    for (std::size_t r = 0; r < t.d; ++r)
      for (std::size_t k = 0; k < t.d; ++k) {
        if (r != k && !t.entries(r, k).is_zero()) diagonal = false;
        if (r != k ? !t.entries(r, k).is_zero() : !(t.entries(r, r) == t.entries(0, 0))) scalar = false;
      }
    std::vector<RatMatrix> evals;
    for (const Rational& a : samples) evals.push_back(evaluate(t.entries, a));
    bool commute = true;
    for (std::size_t i = 0; i < evals.size(); ++i)
      for (std::size_t j = i + 1; j < evals.size(); ++j)
        if (!(evals[i] * evals[j] == evals[j] * evals[i])) commute = false;

    json probes = json::array();
    for (std::size_t i = 0; i < samples.size(); ++i)
      probes.push_back({{"alpha", to_string(samples[i])},
                        {"rank", rank(evals[i])},
                        {"diagonalizable", is_diagonalizable(evals[i])}});
    report.push_back({{"lambda", lam.parts()}, {"d", t.d}, {"scalar", scalar}, {"diagonal", diagonal},
                      {"samples_commute", commute}, {"probes", probes}});
  }

  if (c.format == "json") {
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  for (const json& e : report) {
    out << paren(Partition(e["lambda"].get<std::vector<int>>())) << "  d=" << e["d"].get<std::size_t>()
        << "  scalar=" << (e["scalar"].get<bool>() ? "yes" : "no")
        << "  diagonal=" << (e["diagonal"].get<bool>() ? "yes" : "no")
        << "  samples commute=" << (e["samples_commute"].get<bool>() ? "yes" : "no") << "\n";
    for (const json& p : e["probes"])
      out << "    a=" << p["alpha"].get<std::string>() << "  rank " << p["rank"].get<std::size_t>()
          << "  diagonalizable " << (p["diagonalizable"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

} // namespace

std::vector<std::pair<int, int>> parse_cases(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  for (const std::string& item : split(text, ';')) {
    if (item.empty()) continue;
    const auto parts = split(item, ',');
    if (parts.size() != 2) throw ParseError("case must be 'n,l': '" + item + "'");
    const int n = parse_int(parts[0]);
    const int l = parse_int(parts[1]);
    if (n < 1 || l < 1) throw ParseError("case entries must be positive: '" + item + "'");
    out.emplace_back(n, l);
  }
  if (out.empty()) throw ParseError("no cases given");
  return out;
}

RatMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  for (const std::string& line : split(text, '\n')) {
    if (line.empty()) continue;
    std::vector<Rational> row;
    for (const std::string& cell : split(line, ',')) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size();
  RatMatrix A(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].size() != m) throw SizeMismatch("matrix is not square");
    for (std::size_t c = 0; c < m; ++c) A(r, c) = rows[r][c];
  }
  return A;
}

PolyQ characteristic_polynomial(const RatMatrix& m) {
  // Faddeev-LeVerrier: exact over Q, with n matrix products.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix M(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    M = m * M;
    for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
    const RatMatrix AM = m * M;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return PolyQ(std::move(c));
}

bool is_diagonalizable(const RatMatrix& m) {
  const PolyQ chi = characteristic_polynomial(m);
  const PolyQ radical = div_exact(chi, gcd(chi, chi.derivative()));
  RatMatrix acc(m.rows(), m.cols());
  for (int k = radical.degree(); k >= 0; --k) {
    acc = m * acc;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += radical.coeff(k);
  }
  return acc == RatMatrix(m.rows(), m.cols());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transition matrices and decompositions for powers of the alpha-determinant", "adet"};
  app.require_subcommand(1);

  Common common;
  int n = 0;
  int l = 0;
  std::string lambda;
  bool oracle = false;
  bool matrices = false;
  bool check = false;
  bool paper_variant = false;

  CLI::App* decompose = app.add_subcommand("decompose", "Multiplicity table for every lambda");
  decompose->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  decompose->add_option("--l", l, "Power")->required()->check(CLI::PositiveNumber);
  decompose->add_flag("--oracle", oracle, "Cross-check with the brute-force module construction");
  decompose->add_flag("--matrices", matrices, "Include every transition matrix");

  CLI::App* transition = app.add_subcommand("transition", "Transition matrix for one lambda");
  CLI::App* trace_cmd = app.add_subcommand("trace", "Trace of the transition matrix from zonal values");
  CLI::App* zonal_cmd = app.add_subcommand("zonal", "Zonal spherical function value");
  CLI::App* explore = app.add_subcommand("explore-diagonalizable", "Exploratory diagonalizability report");
  for (CLI::App* sub : {transition, trace_cmd, zonal_cmd, explore}) {
    sub->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
    sub->add_option("--l", l, "Power")->required()->check(CLI::PositiveNumber);
  }
  for (CLI::App* sub : {transition, trace_cmd, zonal_cmd})
    sub->add_option("--lambda", lambda, "Partition, e.g. 3,1")->required();
  explore->add_option("--lambda", lambda, "Restrict to one partition");
  transition->add_flag("--check", check, "Cross-validate against independent formulas");
  trace_cmd->add_flag("--paper-variant", paper_variant, "Show both closed forms for the hook shape");

  std::string perm;
  int s = -1;
  zonal_cmd->add_option("--perm", perm, "Permutation in one-line notation, 1-based");
  zonal_cmd->add_option("--s", s, "Use g_s (n = 2)");
  zonal_cmd->add_flag("--check", check, "Compare with the Hahn polynomial (n = 2, --s)");

  std::string matrix_path;
  CLI::App* adet_cmd = app.add_subcommand("adet", "alpha-determinant of a CSV matrix");
  adet_cmd->add_option("--matrix", matrix_path, "CSV file of p/q entries")->required();

  std::string suite;
  int max_l = -1;
  int max_n = -1;
  std::string cases;
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--max-l", max_l, "Largest l")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", max_n, "Largest n (frobenius)")->check(CLI::PositiveNumber);
  verify->add_option("--cases", cases, "Cases n,l separated by ';'");
  verify->add_flag("--paper-variant", paper_variant, "Also print the displayed hook-trace form");

  for (CLI::App* sub : {decompose, transition, trace_cmd, zonal_cmd, adet_cmd, verify, explore}) {
    common.add_format(sub);
    common.add_cap(sub);
  }
  for (CLI::App* sub : {decompose, transition, trace_cmd, adet_cmd, explore}) common.add_alpha(sub);
  // Accepted for uniformity; the oracle suite always runs the brute force.
  verify->add_flag("--oracle", oracle, "No effect");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*decompose) return cmd_decompose(n, l, common, oracle, matrices, out);
    if (*transition) return cmd_transition(n, l, lambda, common, check, out);
    if (*trace_cmd) return cmd_trace(n, l, lambda, common, paper_variant, out);
    if (*zonal_cmd) return cmd_zonal(n, l, lambda, perm, s, common, check, out);
    if (*adet_cmd) return cmd_adet(matrix_path, common, out);
    if (*explore) return cmd_explore(n, l, lambda, common, out);
    if (*verify) {
      VerifyOptions opts;
      opts.max_l = max_l;
      opts.max_n = max_n;
      if (!cases.empty()) opts.cases = parse_cases(cases);
      opts.cap = common.max_size;
      opts.paper_variant = paper_variant;
      return cmd_verify(suite, opts, common.format, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace adet::cli
