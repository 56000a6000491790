#include "pcpt/scenario.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "pcpt/error.hpp"

namespace pcpt {

namespace {

using KeyValues = std::map<std::string, std::string, std::less<>>;

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::InvalidConfig,
              "scenario file line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& v, std::size_t line, std::string_view key) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(line, "bad number for " + std::string(key) + ": '" + v + "'");
  }
  return out;
}

std::size_t to_size(const std::string& v, std::size_t line, std::string_view key) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(line, "bad integer for " + std::string(key) + ": '" + v + "'");
  }
  return out;
}

const std::set<std::string_view>& known_keys() {
  static const std::set<std::string_view> keys = {
      "label", "test", "statistic", "scheme", "block", "lrv", "n", "t", "rho",
      "beta", "law", "break", "t0", "s", "b", "alpha"};
  return keys;
}

KeyValues parse_pairs(std::istringstream& tokens, std::size_t line) {
  KeyValues kv;
  std::string tok;
  while (tokens >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) fail(line, "expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    if (!known_keys().contains(key)) fail(line, "unknown key '" + key + "'");
    kv[key] = tok.substr(eq + 1);
  }
  return kv;
}

Scenario build(const KeyValues& kv, std::size_t line) {
  auto get = [&](std::string_view key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto require = [&](std::string_view key) -> const std::string& {
    const auto* v = get(key);
    if (!v) fail(line, "missing required key '" + std::string(key) + "'");
    return *v;
  };

  Scenario sc;
  sc.label = require("label");
  sc.dgp.n = to_size(require("n"), line, "n");
  sc.dgp.t = to_size(require("t"), line, "t");

  std::string block = "adaptive";
  if (const auto* v = get("test")) {
    if (*v == "HCB") {
      sc.test.statistic = StatisticKind::H;
      sc.test.scheme = SchemeKind::Circular;
      block = "reference";
    } else if (*v == "HSB") {
      sc.test.statistic = StatisticKind::H;
      sc.test.scheme = SchemeKind::Stationary;
      block = "reference";
    } else if (*v == "JCS") {
      sc.test.statistic = StatisticKind::J;
      sc.test.scheme = SchemeKind::NonOverlapping;
      block = "reference";
    } else if (*v == "JRS") {
      sc.test.statistic = StatisticKind::J;
      sc.test.scheme = SchemeKind::NonOverlapping;
      block = "adaptive";
    } else {
      fail(line, "unknown test '" + *v + "'");
    }
  }
  if (const auto* v = get("statistic")) {
    if (*v == "H") sc.test.statistic = StatisticKind::H;
    else if (*v == "J") sc.test.statistic = StatisticKind::J;
    else fail(line, "statistic must be H or J");
  }
  if (const auto* v = get("scheme")) {
    if (*v == "nbb") sc.test.scheme = SchemeKind::NonOverlapping;
    else if (*v == "cbb") sc.test.scheme = SchemeKind::Circular;
    else if (*v == "sb") sc.test.scheme = SchemeKind::Stationary;
    else fail(line, "scheme must be nbb, cbb or sb");
  }
  if (const auto* v = get("block")) block = *v;
  if (block == "adaptive") {
    sc.test.block_rule = AdaptiveBlock{};
  } else if (block == "reference") {
    sc.test.block_rule = FixedBlock{reference_fixed_block_length(sc.dgp.t)};
  } else {
    sc.test.block_rule = FixedBlock{to_size(block, line, "block")};
  }
  if (const auto* v = get("lrv"); v && *v != "auto") {
    sc.test.lrv_bandwidth = to_size(*v, line, "lrv");
  }

  if (const auto* v = get("rho")) sc.dgp.rho = to_double(*v, line, "rho");
  if (const auto* v = get("beta")) sc.dgp.beta = to_double(*v, line, "beta");
  if (const auto* v = get("law")) {
    if (*v == "normal") sc.dgp.error_law = ErrorLaw::Normal;
    else if (*v == "t5") sc.dgp.error_law = ErrorLaw::StudentT5Standardized;
    else fail(line, "law must be normal or t5");
  }
  if (const auto* v = get("break")) {
    if (*v == "none") sc.dgp.break_spec = BreakSpec::None;
    else if (*v == "cancel") sc.dgp.break_spec = BreakSpec::CancellingUniform;
    else if (*v == "noncancel") sc.dgp.break_spec = BreakSpec::NonCancellingUniform;
    else fail(line, "break must be none, cancel or noncancel");
  }
  if (const auto* v = get("t0")) sc.dgp.t0_fraction = to_double(*v, line, "t0");
  if (const auto* v = get("s")) sc.s = to_size(*v, line, "s");
  if (const auto* v = get("b")) sc.test.b = to_size(*v, line, "b");
  if (const auto* v = get("alpha")) sc.test.alpha = to_double(*v, line, "alpha");

  try {
    if (sc.s < 1) throw Error(ErrorCode::InvalidConfig, "s must be at least 1");
    sc.dgp.validate();
    sc.test.validate();
  } catch (const Error& e) {
    fail(line, e.what());
  }
  return sc;
}

}  // namespace

std::vector<Scenario> parse_scenarios(std::istream& in) {
  std::vector<Scenario> out;
  KeyValues defaults;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream tokens(text);
    std::string head;
    if (!(tokens >> head)) continue;
    if (head == "defaults") {
      for (auto& [k, v] : parse_pairs(tokens, line)) defaults[k] = v;
    } else if (head == "scenario") {
      KeyValues kv = defaults;
      for (auto& [k, v] : parse_pairs(tokens, line)) kv[k] = v;
      out.push_back(build(kv, line));
    } else {
      fail(line, "expected 'defaults' or 'scenario', got '" + head + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidConfig, "scenario file has no scenarios");
  return out;
}

std::vector<Scenario> load_scenarios(const std::string& source) {
  if (source == "paper_tables") {
    std::istringstream in{std::string(bundled_paper_tables())};
    return parse_scenarios(in);
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open scenario file " + source);
  return parse_scenarios(in);
}

}  // namespace pcpt
