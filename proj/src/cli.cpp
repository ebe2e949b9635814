#include "strdet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "strdet/ar_quiver.hpp"
#include "strdet/engine.hpp"
#include "strdet/generators.hpp"
#include "strdet/oracle.hpp"
#include "strdet/parser.hpp"
#include "strdet/report.hpp"
#include "strdet/strings.hpp"

namespace strdet {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

RunResult generate(const RunConfig& c) {
  BoundQuiverAlgebra a;
  if (c.family == "six") a = six_vertex_example();
  else if (c.family == "zigzag") a = zigzag_example();
  else if (c.family == "fork") a = fork_example(false);
  else if (c.family == "fork-single") a = fork_example(true);
  else if (c.family == "lambda") a = lambda_family(c.size);
  else if (c.family == "linear") a = linear_example(c.size, c.orientation);
  else if (c.family == "dn") a = d_example(c.size);
  else return {exit_usage, "", "unknown example family '" + c.family + "'\n"};
  return {exit_ok, serialize(a), ""};
}

const char* const commands[] = {"validate", "classify", "ideals", "determiners",
                                "oracle",   "check",    "export-dot", "gen-example"};

RunResult dispatch(const RunConfig& c) {
  if (std::find(std::begin(commands), std::end(commands), c.command) == std::end(commands))
    return {exit_usage, "", "unknown command '" + c.command + "'\n"};
  if (c.command == "gen-example") {
    try {
      return generate(c);
    } catch (const std::invalid_argument& e) {
      return {exit_usage, "", "error: " + std::string(e.what()) + "\n"};
    }
  }

  BoundQuiverAlgebra a = validate(parse_algebra(read_input(c.input)));
  if (c.command == "validate")
    return {a.certificate.valid() ? exit_ok : exit_invalid, c.json ? emit(certificate_json(a)) : certificate_text(a), ""};
  if (!a.certificate.valid()) return {exit_invalid, "", certificate_text(a)};

  if (c.command == "classify") return {exit_ok, c.json ? emit(classify_json(a)) : classify_text(a), ""};
  if (c.command == "ideals") return {exit_ok, c.json ? emit(ideals_json(a)) : ideals_text(a), ""};
  const DeterminerReport report = determiner_report(a);
  if (c.command == "determiners")
    return {exit_ok, c.json ? emit(determiners_json(report)) : determiners_text(report), ""};
  if (c.command == "export-dot" && !c.with_ar) return {exit_ok, quiver_dot(a), ""};

  const std::size_t strings = enumerate_strings(a).size();
  if (strings > c.max_strings)
    return {exit_usage, "",
            "oracle guard: " + std::to_string(strings) + " indecomposables exceed the limit of " +
                std::to_string(c.max_strings) + " (raise --max-strings)\n"};
  const ARQuiver ar = ar_quiver(a);
  if (c.command == "export-dot") return {exit_ok, ar_quiver_dot(a, ar), ""};

  const OracleResult res = brute_force_det(a, ar);
  if (c.command == "oracle")
    return {res.failures.empty() ? exit_ok : exit_disagreement,
            c.json ? emit(oracle_json(a, ar, res)) : oracle_text(a, ar, res), ""};

  const Agreement agreement = compare(report, res);
  return {agreement.agree() ? exit_ok : exit_disagreement,
          c.json ? emit(check_json(report, res, agreement)) : check_text(report, res, agreement), ""};
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    return dispatch(config);
  } catch (const ParseError& e) {
    return {exit_invalid, "", "parse error: " + std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {exit_invalid, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const std::out_of_range& e) {
    return {exit_usage, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const std::logic_error& e) {
    return {exit_disagreement, "", "oracle invariant breach: " + std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {exit_usage, "", "error: " + std::string(e.what()) + "\n"};
  }
}

}  // namespace strdet
