// ivl: command-line front end. Results go to stdout as one JSON document,
// diagnostics to stderr.
//
// exit 0  success
// exit 1  mathematical failure, stdout carries {"status": ...}
// exit 2  bad input or usage

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivl/io/json.hpp"
#include "ivl/ivl.hpp"

namespace {

using ivl::json::value;

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_input = 2;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_input_error(ivl::errc c) {
  switch (c) {
    case ivl::errc::invalid_argument:
    case ivl::errc::reversed_endpoints:
    case ivl::errc::infinite_endpoint:
    case ivl::errc::invalid_encoding:
    case ivl::errc::parse_error:
    case ivl::errc::dimension_mismatch:
    case ivl::errc::unsupported:
      return true;
    default:
      return false;
  }
}

int emit(const value& doc, int code) {
  std::cout << doc.dump() << '\n';
  return code;
}

value read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return value::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

std::vector<double> parse_point(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ivl::parse_endpoint(item));
  if (out.empty()) throw input_error("empty --point");
  return out;
}

int report_status(const ivl::EstimateReport& r) {
  value doc = ivl::json::encode(r);
  return emit(doc, r.status == ivl::EstimateStatus::Ok ? exit_ok : exit_math);
}

// ---- subcommands ----------------------------------------------------------

struct Options {
  std::string expr, x, a, b, semantics = "setbased", file, mode, point, set = "united";
  std::string f, x0;
  double tol = ivl::NewtonConfig{}.tol_width;
  bool precondition = false;
};

int cmd_eval(const Options& o) {
  const ivl::Expr e = ivl::parse_expr(o.expr);
  const ivl::Interval X = ivl::parse_interval(o.x);
  return emit({{"expr", ivl::to_string(e)}, {"result", ivl::json::encode(ivl::eval_interval(e, X))}}, exit_ok);
}

int cmd_div(const Options& o) {
  const auto sem = o.semantics == "containment" ? ivl::ZeroSemantics::Containment : ivl::ZeroSemantics::SetBased;
  const auto r = ivl::ediv(ivl::parse_interval(o.a), ivl::parse_interval(o.b), sem);
  return emit({{"result", ivl::json::encode(r)}}, exit_ok);
}

int cmd_newton(const Options& o) {
  std::string f = o.f;
  std::string x0 = o.x0;
  ivl::NewtonConfig cfg;
  cfg.tol_width = o.tol;
  ivl::Interval X0;
  if (!o.file.empty()) {
    const value doc = read_document(o.file);
    f = ivl::json::field(doc, "f").get<std::string>();
    X0 = ivl::json::decode_interval(ivl::json::field(doc, "X0"));
    if (doc.contains("tol")) cfg.tol_width = doc.at("tol").get<double>();
  } else {
    if (f.empty() || x0.empty()) throw input_error("newton needs FILE or both --f and --x0");
    X0 = ivl::parse_interval(x0);
  }
  const ivl::Expr e = ivl::parse_expr(f);
  value doc = ivl::json::encode(ivl::newton_solve(e, X0, cfg));
  doc["status"] = "ok";
  return emit(doc, exit_ok);
}

int cmd_linsolve(const Options& o) {
  ivl::ILinearSystem sys = ivl::json::decode_system(read_document(o.file));
  if (o.precondition) sys = ivl::precondition_midpoint_inverse(sys);
  if (o.mode == "outer-united") return report_status(ivl::outer_united(sys));
  if (o.mode == "inner-united") return report_status(ivl::inner_united(sys));
  if (o.mode == "inner-tolerable") return report_status(ivl::inner_tolerable(sys));
  return report_status(ivl::outer_tolerable(sys));
}

int cmd_verify(const Options& o) {
  const value doc = read_document(o.file);
  ivl::FormalCheck check;
  const double tol = doc.contains("tol") ? doc.at("tol").get<double>() : ivl::SolverConfig{}.verify_tol;
  if (doc.contains("A")) {
    const ivl::ILinearSystem sys = ivl::json::decode_system(doc);
    const ivl::KVector x = ivl::json::decode_kvector(ivl::json::field(doc, "x"));
    check = ivl::verify_formal_solution(ivl::LinearEquation{sys.A, sys.b}, x, tol);
  } else {
    const ivl::QuadraticEquation eq{ivl::json::decode_kinterval(ivl::json::field(doc, "a")),
                                    ivl::json::decode_kinterval(ivl::json::field(doc, "b")),
                                    ivl::json::decode_kinterval(ivl::json::field(doc, "c"))};
    check = ivl::verify_formal_solution(eq, ivl::json::decode_kinterval(ivl::json::field(doc, "x")), tol);
  }
  value out = ivl::json::encode(check);
  out["status"] = check.ok ? "ok" : "NotVerified";
  return emit(out, check.ok ? exit_ok : exit_math);
}

int cmd_member(const Options& o) {
  const ivl::ILinearSystem sys = ivl::json::decode_system(read_document(o.file));
  const std::vector<double> x = parse_point(o.point);
  const auto which = o.set == "tolerable" ? ivl::SolutionSet::Tolerable : ivl::SolutionSet::United;
  return emit({{"member", ivl::member(sys, x, which)}, {"set", o.set}}, exit_ok);
}

int cmd_dist(const Options& o) {
  return emit({{"result", ivl::kdist(ivl::parse_kinterval(o.a), ivl::parse_kinterval(o.b))}}, exit_ok);
}

int cmd_kmul(const Options& o) {
  return emit({{"result", ivl::json::encode(ivl::parse_kinterval(o.a) * ivl::parse_kinterval(o.b))}}, exit_ok);
}

int cmd_meet(const Options& o) {
  return emit({{"result", ivl::json::encode(ivl::meet(ivl::parse_kinterval(o.a), ivl::parse_kinterval(o.b)))}},
              exit_ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval, Kaucher and extended-division arithmetic with verified solvers", "ivl"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Natural interval extension of an expression in x");
  eval->add_option("EXPR", o.expr)->required();
  eval->add_option("--x", o.x, "Interval for x, e.g. [1,2]")->required();

  const std::vector<std::string> semantics{"containment", "setbased"};
  auto* div = app.add_subcommand("div", "Extended division A / B");
  div->add_option("A", o.a)->required();
  div->add_option("B", o.b)->required();
  div->add_option("--semantics", o.semantics)->check(CLI::IsMember(semantics))->capture_default_str();

  auto* newton = app.add_subcommand("newton", "Interval Newton enclosure of the zeros of f in X0");
  newton->add_option("FILE", o.file, "JSON {\"f\": ..., \"X0\": [lo,hi]}");
  newton->add_option("--f", o.f);
  newton->add_option("--x0", o.x0);
  newton->add_option("--tol", o.tol)->capture_default_str();

  const std::vector<std::string> modes{"outer-united", "inner-united", "inner-tolerable", "outer-tolerable"};
  auto* linsolve = app.add_subcommand("linsolve", "Inner or outer box of a solution set of A x = b");
  linsolve->add_option("FILE", o.file, "JSON {\"A\": ..., \"b\": ...}")->required();
  linsolve->add_option("--mode", o.mode)->required()->check(CLI::IsMember(modes));
  linsolve->add_flag("--precondition", o.precondition, "Multiply by the inverse midpoint matrix first");

  auto* verify = app.add_subcommand("verify", "Check a formal solution of a quadratic or linear interval equation");
  verify->add_option("FILE", o.file)->required();

  const std::vector<std::string> sets{"united", "tolerable"};
  auto* member = app.add_subcommand("member", "Membership of a point in a solution set");
  member->add_option("FILE", o.file)->required();
  member->add_option("--point", o.point, "Comma separated coordinates")->required();
  member->add_option("--set", o.set)->check(CLI::IsMember(sets))->capture_default_str();

  auto* dist = app.add_subcommand("dist", "Distance between two intervals");
  auto* kmul = app.add_subcommand("kmul", "Kaucher product");
  auto* meet = app.add_subcommand("meet", "Meet in the inclusion order");
  for (auto* sub : {dist, kmul, meet}) {
    sub->add_option("A", o.a)->required();
    sub->add_option("B", o.b)->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (eval->parsed()) return cmd_eval(o);
    if (div->parsed()) return cmd_div(o);
    if (newton->parsed()) return cmd_newton(o);
    if (linsolve->parsed()) return cmd_linsolve(o);
    if (verify->parsed()) return cmd_verify(o);
    if (member->parsed()) return cmd_member(o);
    if (dist->parsed()) return cmd_dist(o);
    if (kmul->parsed()) return cmd_kmul(o);
    if (meet->parsed()) return cmd_meet(o);
  } catch (const input_error& e) {
    std::cerr << "ivl: " << e.what() << '\n';
    return exit_input;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ivl: " << e.what() << '\n';
    return exit_input;
  } catch (const ivl::error& e) {
    std::cerr << "ivl: " << e.what() << '\n';
    if (is_input_error(e.code())) return exit_input;
    return emit({{"status", std::string(ivl::to_string(e.code()))}, {"message", e.what()}}, exit_math);
  }
  return exit_input;
}
