#include "report.hpp"

#include "adet/errors.hpp"
#include "adet/oracle.hpp"
#include "adet/symmetric.hpp"
#include "adet/transition.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace adet::cli {

using nlohmann::json;

std::string paren(const Partition& p) { return "(" + to_string(p) + ")"; }

DecompositionReport build_report(int n, int l, const std::vector<Rational>& alphas,
                                 bool with_matrices, bool with_oracle, int cap) {
  check_cap(n * l, cap, "decomposition");
  DecompositionReport report;
  report.n = n;
  report.l = l;
  const std::vector<Partition> shapes = partitions_of(n * l, n);
  report.rows.resize(shapes.size());
  std::vector<std::vector<std::size_t>> spec(shapes.size(), std::vector<std::size_t>(alphas.size()));

  // Any exception inside the parallel region is carried out and rethrown.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    try {
      const TransitionMatrix t = transition_matrix(n, l, shapes[i], ClassFunctionH::alpha_power(), cap);
      ReportRow& row = report.rows[i];
      row.lambda = shapes[i];
      row.kostka = t.d;
      row.generic_multiplicity = generic_rank(t.entries);
      row.trace = t.trace;
      if (with_matrices) row.transition = t.entries;
      for (std::size_t a = 0; a < alphas.size(); ++a) spec[i][a] = rank_at(t.entries, alphas[a]);
    } catch (...) {
#pragma omp critical(adet_report_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t a = 0; a < alphas.size(); ++a) {
    Specialization s{alphas[a], {}};
    for (std::size_t i = 0; i < shapes.size(); ++i) s.multiplicities.push_back(spec[i][a]);
    report.alpha_specializations.push_back(std::move(s));
  }

  if (with_oracle) {
    OracleSection o;
    const ModuleBasis generic = cyclic_closure(n, l);
    for (const Partition& lam : shapes) o.generic.push_back(hwv_multiplicity(generic, lam));
    bool agrees = true;
    for (std::size_t i = 0; i < shapes.size(); ++i)
      agrees = agrees && o.generic[i] == report.rows[i].generic_multiplicity;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const ModuleBasis at = cyclic_closure(n, l, alphas[a]);
      Specialization s{alphas[a], {}};
      for (const Partition& lam : shapes) s.multiplicities.push_back(hwv_multiplicity(at, lam));
      agrees = agrees && s.multiplicities == report.alpha_specializations[a].multiplicities;
      o.specializations.push_back(std::move(s));
    }
    o.agrees = agrees;
    report.oracle = std::move(o);
  }
  return report;
}

json poly_to_json(const PolyQ& p) { return to_coeff_strings(p); }

PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
  std::vector<std::string> coeffs;
  for (const json& c : j) {
    if (!c.is_string()) throw ParseError("polynomial coefficient must be a string");
    coeffs.push_back(c.get<std::string>());
  }
  return from_coeff_strings(coeffs);
}

json matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  PolyMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = poly_from_json(j[r][c]);
  }
  return m;
}

namespace {

json specialization_to_json(const Specialization& s) {
  return {{"alpha", to_string(s.alpha)}, {"multiplicities", s.multiplicities}};
}

Specialization specialization_from_json(const json& j) {
  Specialization s;
  s.alpha = parse_rational(j.at("alpha").get<std::string>());
  s.multiplicities = j.at("multiplicities").get<std::vector<std::size_t>>();
  return s;
}

} // namespace

json to_json(const DecompositionReport& r) {
  json rows = json::array();
  for (const ReportRow& row : r.rows) {
    json jr = {{"lambda", row.lambda.parts()},
               {"kostka", row.kostka},
               {"generic_multiplicity", row.generic_multiplicity},
               {"trace", poly_to_json(row.trace)}};
    if (row.transition) jr["transition"] = matrix_to_json(*row.transition);
    rows.push_back(std::move(jr));
  }
  json out = {{"n", r.n}, {"l", r.l}, {"rows", std::move(rows)}};
  json specs = json::array();
  for (const Specialization& s : r.alpha_specializations) specs.push_back(specialization_to_json(s));
  out["alpha_specializations"] = std::move(specs);
  if (r.oracle) {
    json os = json::array();
    for (const Specialization& s : r.oracle->specializations) os.push_back(specialization_to_json(s));
    out["oracle"] = {{"generic", r.oracle->generic},
                     {"specializations", std::move(os)},
                     {"agrees", r.oracle->agrees}};
  }
  return out;
}

DecompositionReport report_from_json(const json& j) {
  try {
    DecompositionReport r;
    r.n = j.at("n").get<int>();
    r.l = j.at("l").get<int>();
    for (const json& jr : j.at("rows")) {
      ReportRow row;
      row.lambda = Partition(jr.at("lambda").get<std::vector<int>>());
      row.kostka = jr.at("kostka").get<std::uint64_t>();
      row.generic_multiplicity = jr.at("generic_multiplicity").get<std::size_t>();
      row.trace = poly_from_json(jr.at("trace"));
      if (jr.contains("transition")) row.transition = matrix_from_json(jr.at("transition"));
      r.rows.push_back(std::move(row));
    }
    if (j.contains("alpha_specializations"))
      for (const json& s : j.at("alpha_specializations"))
        r.alpha_specializations.push_back(specialization_from_json(s));
    if (j.contains("oracle")) {
      const json& jo = j.at("oracle");
      OracleSection o;
      o.generic = jo.at("generic").get<std::vector<std::size_t>>();
      for (const json& s : jo.at("specializations")) o.specializations.push_back(specialization_from_json(s));
      o.agrees = jo.at("agrees").get<bool>();
      r.oracle = std::move(o);
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  } catch (const SizeMismatch& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

void write_text(std::ostream& out, const DecompositionReport& r) {
  out << "n = " << r.n << ", l = " << r.l << "\n";
  std::size_t w = std::string("lambda").size();
  for (const ReportRow& row : r.rows) w = std::max(w, paren(row.lambda).size());
  w += 2;

  out << std::left << std::setw(static_cast<int>(w)) << "lambda" << std::setw(8) << "kostka"
      << std::setw(6) << "mult";
  for (const Specialization& s : r.alpha_specializations)
    out << std::setw(12) << ("a=" + to_string(s.alpha));
  if (r.oracle) out << std::setw(8) << "oracle";
  out << "trace\n";

  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ReportRow& row = r.rows[i];
    out << std::setw(static_cast<int>(w)) << paren(row.lambda) << std::setw(8) << row.kostka
        << std::setw(6) << row.generic_multiplicity;
    for (const Specialization& s : r.alpha_specializations) out << std::setw(12) << s.multiplicities[i];
    if (r.oracle) out << std::setw(8) << r.oracle->generic[i];
    out << to_string(row.trace) << "\n";
    if (row.transition) {
      const PolyMatrix& m = *row.transition;
      for (std::size_t a = 0; a < m.rows(); ++a) {
        out << "    [";
        for (std::size_t b = 0; b < m.cols(); ++b) out << (b ? ", " : "") << to_string(m(a, b));
        out << "]\n";
      }
    }
  }
  if (r.oracle) {
    for (const Specialization& s : r.oracle->specializations) {
      out << "oracle at a=" << to_string(s.alpha) << ":";
      for (std::size_t m : s.multiplicities) out << " " << m;
      out << "\n";
    }
    out << "oracle agreement: " << (r.oracle->agrees ? "yes" : "NO") << "\n";
  }
  out << std::right;
}

void write_csv(std::ostream& out, const DecompositionReport& r) {
  out << "lambda,kostka,generic_multiplicity,trace";
  for (const Specialization& s : r.alpha_specializations) out << ",mult@" << to_string(s.alpha);
  if (r.oracle) {
    out << ",oracle_generic";
    for (const Specialization& s : r.oracle->specializations) out << ",oracle@" << to_string(s.alpha);
  }
  out << "\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ReportRow& row = r.rows[i];
    out << '"' << to_string(row.lambda) << "\"," << row.kostka << "," << row.generic_multiplicity
        << ",\"" << to_string(row.trace) << '"';
    for (const Specialization& s : r.alpha_specializations) out << "," << s.multiplicities[i];
    if (r.oracle) {
      out << "," << r.oracle->generic[i];
      for (const Specialization& s : r.oracle->specializations) out << "," << s.multiplicities[i];
    }
    out << "\n";
  }
}

} // namespace adet::cli
