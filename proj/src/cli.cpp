#include "wzint/cli.hpp"

#include "wzint/closedform.hpp"
#include "wzint/oracle.hpp"
#include "wzint/wz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wzint::cli {
namespace {

using nlohmann::json;

struct Range {
  unsigned lo = 0, hi = 0;
};

Range parse_range(const std::string &s, unsigned cap_lo, unsigned cap_hi,
                  const std::string &flag) {
  Range r;
  try {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
      r.lo = r.hi = static_cast<unsigned>(std::stoul(s));
    } else {
      r.lo = static_cast<unsigned>(std::stoul(s.substr(0, pos)));
      r.hi = static_cast<unsigned>(std::stoul(s.substr(pos + 2)));
    }
  } catch (const std::exception &) {
    throw std::domain_error(flag + ": expected A or A..B, got '" + s + "'");
  }
  if (r.lo > r.hi)
    throw std::domain_error(flag + ": empty range '" + s + "'");
  if (r.lo < cap_lo || r.hi > cap_hi)
    throw std::domain_error(flag + ": range '" + s + "' outside documented cap " +
                            std::to_string(cap_lo) + ".." + std::to_string(cap_hi));
  return r;
}

std::string format_micros(double micros) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", micros);
  return buf;
}

struct Row {
  unsigned k = 0, m = 0, n = 0;
  std::string method;
  std::string value;
  std::uint64_t terms = 0;
  double micros = 0.0;
  std::string status = "ok";
};

Row to_row(const EvalResult &r) {
  return Row{r.k,
             r.m,
             r.n,
             r.method,
             r.value.to_string(),
             r.term_count,
             static_cast<double>(r.wall.count()),
             "ok"};
}

json row_json(const Row &r) {
  json j{{"k", r.k},     {"m", r.m},         {"n", r.n},
         {"method", r.method}, {"value", r.value}, {"terms", r.terms},
         {"micros", r.micros}};
  if (r.status != "ok")
    j["status"] = r.status;
  return j;
}

// Plain tables omit the timing column so that output is byte-identical
// across runs; json/csv carry it as a separate field.
void emit_rows(std::ostream &out, const std::vector<Row> &rows,
               const std::string &format) {
  if (format == "plain") {
    out << "k\tm\tn\tmethod\tvalue\tterms\n";
    for (const auto &r : rows) {
      out << r.k << "\t" << r.m << "\t" << r.n << "\t" << r.method << "\t"
          << (r.status == "ok" ? r.value : r.status) << "\t" << r.terms
          << "\n";
    }
  } else if (format == "csv") {
    out << "k,m,n,method,value,terms,micros,status\n";
    for (const auto &r : rows)
      out << r.k << "," << r.m << "," << r.n << "," << r.method << ","
          << r.value << "," << r.terms << "," << format_micros(r.micros) << ","
          << r.status << "\n";
  }
}

EvalResult eval_one(const std::string &method, unsigned k, unsigned m,
                    unsigned n, const OracleBudget &budget) {
  if (method == "oracle")
    return lhs_exact(k, m, n, budget);
  if (method == "recurrence")
    return rhs_theorem(k, m, n);
  if (method == "corollary")
    return rhs_corollary(k, m, n);
  throw std::domain_error("unknown method '" + method + "'");
}

int cmd_eval(const std::string &method, unsigned k, unsigned m, unsigned n,
             const OracleBudget &budget, const std::string &format,
             std::ostream &out) {
  const EvalResult r = eval_one(method, k, m, n, budget);
  const Row row = to_row(r);
  if (format == "plain")
    out << row.value << "\n";
  else if (format == "json")
    out << row_json(row).dump(2) << "\n";
  else
    emit_rows(out, {row}, format);
  return 0;
}

int cmd_check(Range kr, Range mr, Range nr, const OracleBudget &budget,
              const std::string &format, bool inject_mismatch,
              std::ostream &out) {
  struct Cell {
    unsigned k, m, n;
  };
  std::vector<Cell> cells;
  for (unsigned k = kr.lo; k <= kr.hi; ++k)
    for (unsigned m = mr.lo; m <= mr.hi; ++m)
      for (unsigned n = nr.lo; n <= nr.hi; ++n) {
        if (k == 1 && m == 0)
          throw std::domain_error(
              "check: cell (k=1, m=0) is outside the comparable domain");
        cells.push_back({k, m, n});
      }

  // Cells are independent; fan out and re-sort on collection.
  std::vector<std::future<std::vector<Row>>> futures;
  for (const Cell &c : cells) {
    futures.push_back(std::async(std::launch::async, [c, &budget] {
      std::vector<Row> rows;
      if (c.k >= 2)
        rows.push_back(to_row(rhs_corollary(c.k, c.m, c.n)));
      rows.push_back(to_row(lhs_exact(c.k, c.m, c.n, budget)));
      rows.push_back(to_row(rhs_theorem(c.k, c.m, c.n)));
      std::sort(rows.begin(), rows.end(),
                [](const Row &a, const Row &b) { return a.method < b.method; });
      return rows;
    }));
  }

  std::vector<Row> rows;
  std::vector<std::string> mismatches;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<Row> cell_rows = futures[i].get();
    if (inject_mismatch && i == 0) {
      for (Row &r : cell_rows)
        if (r.method == "oracle")
          r.value = (Rational::from_string(r.value) + Rational(1)).to_string();
    }
    bool equal = true;
    for (const Row &r : cell_rows)
      equal = equal && r.value == cell_rows.front().value;
    if (!equal)
      mismatches.push_back("(k=" + std::to_string(cells[i].k) +
                           ", m=" + std::to_string(cells[i].m) +
                           ", n=" + std::to_string(cells[i].n) + ")");
    rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
  }

  if (format == "json") {
    json j{{"rows", json::array()}, {"all_equal", mismatches.empty()}};
    for (const Row &r : rows)
      j["rows"].push_back(row_json(r));
    j["mismatches"] = mismatches;
    out << j.dump(2) << "\n";
  } else {
    emit_rows(out, rows, format == "plain" ? "plain" : "csv");
    if (format == "plain") {
      if (mismatches.empty())
        out << "all equal: " << cells.size() << " cells\n";
      else {
        out << "MISMATCH at";
        for (const auto &s : mismatches)
          out << " " << s;
        out << "\n";
      }
    }
  }
  return mismatches.empty() ? 0 : 1;
}

Certificate tampered(Certificate cert) {
  // Perturb one coefficient of R for x_1.
  const RatFunc &r0 = cert.r_of(1);
  Poly num = r0.num();
  num.add_term(Monomial{}, Rational(1));
  cert.r[0] = RatFunc(num, r0.den());
  return cert;
}

int cmd_verify(const std::string &kind, Range kr, bool show_residual,
               bool tamper, const std::string &format, std::ostream &out) {
  std::vector<VerifyReport> reports;
  for (const char *name : {"wz1", "wz2"}) {
    if (kind != "both" && kind != name)
      continue;
    for (unsigned k = kr.lo; k <= kr.hi; ++k) {
      Certificate cert = std::string(name) == "wz1" ? certificate_wz1(k)
                                                    : certificate_wz2(k);
      if (tamper)
        cert = tampered(std::move(cert));
      reports.push_back(verify(cert));
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const VerifyReport &a, const VerifyReport &b) {
              return std::tie(a.k, a.kind) < std::tie(b.k, b.kind);
            });

  bool all_valid = true;
  for (const auto &r : reports)
    all_valid = all_valid && r.is_valid;

  if (format == "json") {
    json j{{"rows", json::array()}, {"all_valid", all_valid}};
    for (const auto &r : reports) {
      json row{{"k", r.k},
               {"kind", to_string(r.kind)},
               {"valid", r.is_valid},
               {"residual_terms", r.residual_terms},
               {"micros", static_cast<double>(r.wall.count())}};
      if (show_residual || !r.is_valid)
        row["residual"] = r.residual_rendering;
      j["rows"].push_back(row);
    }
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "k,kind,valid,residual_terms,micros\n";
    for (const auto &r : reports)
      out << r.k << "," << to_string(r.kind) << ","
          << (r.is_valid ? "valid" : "invalid") << "," << r.residual_terms
          << "," << format_micros(static_cast<double>(r.wall.count())) << "\n";
  } else {
    out << "k\tkind\tresult\n";
    for (const auto &r : reports) {
      out << r.k << "\t" << to_string(r.kind) << "\t"
          << (r.is_valid ? "valid" : "invalid") << "\n";
      if (show_residual || !r.is_valid)
        out << "  residual: " << r.residual_rendering << "\n";
    }
  }
  return all_valid ? 0 : 1;
}

// Repeats fast evaluations so that tiny cells get a stable average.
template <typename F>
std::pair<EvalResult, double> timed_avg(F &&f) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  EvalResult result = f();
  auto total = clock::now() - t0;
  int count = 1;
  while (total < std::chrono::milliseconds(5) && count < 64) {
    const auto t1 = clock::now();
    f();
    total += clock::now() - t1;
    ++count;
  }
  const double micros =
      std::chrono::duration<double, std::micro>(total).count() / count;
  return {std::move(result), micros};
}

int cmd_bench(Range kr, Range mr, unsigned n, std::vector<std::string> methods,
              const OracleBudget &budget, const std::string &format,
              std::ostream &out) {
  std::sort(methods.begin(), methods.end());
  for (const auto &m : methods)
    if (m != "oracle" && m != "recurrence" && m != "corollary")
      throw std::domain_error("bench: unknown method '" + m + "'");

  std::vector<Row> rows;
  std::vector<std::string> violations;
  std::uint64_t compared = 0;
  for (unsigned k = kr.lo; k <= kr.hi; ++k) {
    for (unsigned m = mr.lo; m <= mr.hi; ++m) {
      std::map<std::string, Row> cell;
      for (const auto &method : methods) {
        Row row;
        try {
          auto [result, micros] =
              timed_avg([&] { return eval_one(method, k, m, n, budget); });
          row = to_row(result);
          row.micros = micros;
        } catch (const BudgetExceeded &) {
          row = Row{k, m, n, method, "", 0, 0.0, "skipped"};
        }
        cell[method] = row;
        rows.push_back(row);
      }
      const bool complete =
          cell.count("oracle") && cell.count("recurrence") &&
          cell.count("corollary") && cell["oracle"].status == "ok" &&
          cell["recurrence"].status == "ok" && cell["corollary"].status == "ok";
      if (complete) {
        ++compared;
        if (!(cell["recurrence"].micros < cell["corollary"].micros &&
              cell["corollary"].micros < cell["oracle"].micros))
          violations.push_back("(k=" + std::to_string(k) +
                               ", m=" + std::to_string(m) +
                               ", n=" + std::to_string(n) + ")");
      }
    }
  }

  const bool ordering_ok = violations.empty();
  if (format == "json") {
    json j{{"rows", json::array()},
           {"summary",
            {{"ordering_ok", ordering_ok},
             {"cells_compared", compared},
             {"violations", violations}}}};
    for (const Row &r : rows)
      j["rows"].push_back(row_json(r));
    out << j.dump(2) << "\n";
  } else {
    emit_rows(out, rows, format == "plain" ? "plain" : "csv");
    if (format == "plain") {
      out << "ordering recurrence < corollary < oracle: "
          << (ordering_ok ? "ok" : "VIOLATED") << " (" << compared
          << " cells compared)\n";
      for (const auto &v : violations)
        out << "  violated at " << v << "\n";
    }
  }
  return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Exact evaluation and certificate verification for the "
               "integral of (e2)^m (e1)^n e^{-e1} over [0,inf)^k"};
  app.require_subcommand(1);

  std::string output = "plain";
  std::uint64_t max_terms = OracleBudget{}.max_terms;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--output", output, "plain|json|csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--max-terms", max_terms,
                    "oracle expansion budget (default 5000000)");
  };

  // eval
  auto *eval_cmd = app.add_subcommand("eval", "evaluate one (k, m, n) cell");
  unsigned ek = 2, em = 0, en = 0;
  std::string method = "recurrence";
  eval_cmd->add_option("--k", ek, "dimension, 1..12")->required();
  eval_cmd->add_option("--m", em, "exponent of e2");
  eval_cmd->add_option("--n", en, "exponent of e1");
  eval_cmd->add_option("--method", method, "oracle|recurrence|corollary")
      ->check(CLI::IsMember({"oracle", "recurrence", "corollary"}));
  add_common(eval_cmd);

  // check
  auto *check_cmd =
      app.add_subcommand("check", "cross-validate all methods on a grid");
  std::string ck = "2..4", cm = "0..3", cn = "0..2";
  bool inject_mismatch = false;
  check_cmd->add_option("--k", ck, "k range A[..B], within 1..8");
  check_cmd->add_option("--m", cm, "m range A[..B], within 0..60");
  check_cmd->add_option("--n", cn, "n range A[..B], within 0..60");
  check_cmd->add_flag("--inject-mismatch", inject_mismatch)->group("");
  add_common(check_cmd);

  // verify
  auto *verify_cmd =
      app.add_subcommand("verify", "verify telescoping certificates");
  std::string kind = "both", vk = "2..5";
  bool show_residual = false, tamper = false;
  verify_cmd->add_option("--kind", kind, "wz1|wz2|both")
      ->check(CLI::IsMember({"wz1", "wz2", "both"}));
  verify_cmd->add_option("--k", vk, "k range A[..B], within 2..6");
  verify_cmd->add_flag("--show-residual", show_residual,
                       "print the residual rational function");
  verify_cmd->add_flag("--tamper", tamper)->group("");
  add_common(verify_cmd);

  // bench
  auto *bench_cmd =
      app.add_subcommand("bench", "compare method cost over a grid");
  std::string bk = "2..4", bm = "0..4", bmethods = "corollary,oracle,recurrence";
  unsigned bn = 0;
  bench_cmd->add_option("--k", bk, "k range A[..B], within 2..8");
  bench_cmd->add_option("--m", bm, "m range A[..B], within 0..60");
  bench_cmd->add_option("--n", bn, "fixed n");
  bench_cmd->add_option("--methods", bmethods, "comma-separated subset");
  add_common(bench_cmd);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const OracleBudget budget{max_terms};
    if (eval_cmd->parsed()) {
      if (ek < 1 || ek > 12)
        throw std::domain_error("eval: --k outside documented cap 1..12");
      return cmd_eval(method, ek, em, en, budget, output, out);
    }
    if (check_cmd->parsed()) {
      return cmd_check(parse_range(ck, 1, 8, "--k"),
                       parse_range(cm, 0, 60, "--m"),
                       parse_range(cn, 0, 60, "--n"), budget, output,
                       inject_mismatch, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(kind, parse_range(vk, 2, 6, "--k"), show_residual,
                        tamper, output, out);
    }
    if (bench_cmd->parsed()) {
      std::vector<std::string> methods;
      std::stringstream ss(bmethods);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty())
          methods.push_back(item);
      if (methods.empty())
        throw std::domain_error("bench: --methods must be nonempty");
      return cmd_bench(parse_range(bk, 2, 8, "--k"),
                       parse_range(bm, 0, 60, "--m"), bn, methods, budget,
                       output, out);
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

} // namespace wzint::cli
