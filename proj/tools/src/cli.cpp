#include "grassline/tools/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "grassline/adhm.hpp"
#include "grassline/tools/json_io.hpp"
#include "grassline/tools/selftest.hpp"

namespace grassline::tools {

namespace {

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + " is not valid JSON: " + e.what());
  }
}

const json& need(const json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key))
    throw UsageError(std::string("payload field \"") + key + "\" is required");
  return payload.at(key);
}

XiClass xi_from_payload(const json& p) {
  return {coweight_from_json(need(p, "lambda")), need(p, "m_plus").get<int>(), need(p, "m_minus").get<int>()};
}

bool has_xi(const json& p) { return p.contains("m_plus") || p.contains("m_minus"); }

SplitOptions split_options(const Request& req) {
  SplitOptions s;
  s.max_orders = req.bounds.split_max_orders;
  return s;
}

SampleOptions sample_options(const Request& req) {
  SampleOptions s;
  if (req.bounds.sample_retries) s.retries = *req.bounds.sample_retries;
  return s;
}

json xi_pairs(const std::vector<XiClass>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back({x.m_plus, x.m_minus});
  return out;
}

void run(const Request& req, Report& rep) {
  const std::string& cmd = req.command;
  const json& p = req.payload;
  if (cmd == "stratum") {
    rep.result = {{"lambda", to_json(stratum(loop_from_json(need(p, "gamma"))))}};
  } else if (cmd == "classify") {
    rep.result = to_json(classify_fixed(loop_from_json(need(p, "gamma"))));
  } else if (cmd == "factorize") {
    const LoopElement g = loop_from_json(need(p, "gamma"));
    const Factorization f = factorize(g);
    rep.result = {{"q1", to_json(f.q1(), kVarT)}, {"lambda", to_json(f.lambda())}, {"q2", to_json(f.q2(), kVarT)}};
    rep.checks.add("reconstruction", f.q1() * tpow_diag(f.lambda().entries()) * f.q2() == g.matrix());
  } else if (cmd == "xi") {
    rep.result = xi_pairs(xi_enumerate(coweight_from_json(need(p, "lambda"))));
  } else if (cmd == "dims") {
    const Coweight lambda = coweight_from_json(need(p, "lambda"));
    const int r = static_cast<int>(lambda.rank());
    const DimVectorA v = v_from_lambda(lambda);
    json tau = json::object();
    if (auto t = tau_multiplicities(v, r))
      for (const auto& [i, m] : *t) tau[std::to_string(i)] = m;
    json typed = json::array();
    for (const XiClass& xi : xi_enumerate(lambda)) {
      json item = {{"m_plus", xi.m_plus}, {"m_minus", xi.m_minus}, {"v", nullptr}};
      if (auto vd = vD_from_xi(xi)) {
        item["v"] = to_json(*vd);
        item["dim"] = quiver_dim(*vd, framing_D(r));
      }
      typed.push_back(item);
    }
    rep.result = {{"v", to_json(v)}, {"chern", chern_number(v)}, {"dim", quiver_dim(v, framing_A(r))},
                  {"tau", tau},      {"typeD", typed}};
  } else if (cmd == "quad") {
    const TransitionQuad q = build_quad(factorize(loop_from_json(need(p, "gamma"))));
    rep.result = {{"quad", to_json(q)}};
    rep.checks = verify_quad(q);
  } else if (cmd == "triple") {
    const TransitionTriple t = build_triple(factorize(loop_from_json(need(p, "gamma"))));
    rep.result = {{"triple", to_json(t)}};
    rep.checks = verify_triple(t);
  } else if (cmd == "extract") {
    if (p.contains("quad")) {
      const TransitionQuad q = quad_from_json(p.at("quad"));
      rep.checks = verify_quad(q);
      rep.result = {{"gamma", to_json(extract_quad(q, split_options(req)))}};
    } else {
      const TransitionTriple t = triple_from_json(need(p, "triple"));
      rep.checks = verify_triple(t);
      rep.result = {{"gamma", to_json(extract_triple(t))}};
    }
  } else if (cmd == "adhm-sample") {
    const std::uint64_t seed = req.seed.value_or(0);
    if (has_xi(p)) {
      const AdhmDatumD d = sample_datum(xi_from_payload(p), seed, sample_options(req));
      rep.checks = validate(d);
      const Stability s = stability(d);
      rep.checks.add("stable", s.stable);
      rep.checks.add("costable", s.costable);
      rep.result = {{"type", "D"}, {"datum", to_json(d)}};
    } else {
      const AdhmDatumA d = sample_datum(coweight_from_json(need(p, "lambda")), seed, sample_options(req));
      rep.checks = validate(d);
      const Stability s = stability(d);
      rep.checks.add("stable", s.stable);
      rep.checks.add("costable", s.costable);
      rep.result = {{"type", "A"}, {"datum", to_json(d)}};
    }
  } else if (cmd == "adhm-to-loop") {
    const json& dj = need(p, "datum");
    if (is_type_d(dj)) {
      const AdhmDatumD d = datum_d_from_json(dj);
      rep.checks = validate(d);
      const LoopElement g = theta_psi_D(d);
      rep.result = {{"gamma", to_json(g)}, {"class", to_json(classify_fixed(g))}};
    } else {
      const AdhmDatumA d = datum_a_from_json(dj);
      rep.checks = validate(d);
      const LoopElement g = theta_psi_A(d);
      rep.result = {{"gamma", to_json(g)}, {"lambda", to_json(stratum(g))}};
    }
  } else if (cmd == "selftest") {
    const std::string suite = p.value("suite", "all");
    SelftestOptions opts;
    if (req.seed) opts.seed = *req.seed;
    opts.split = split_options(req);
    opts.sample = sample_options(req);
    const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    json suites = json::array();
    for (const auto& name : names) {
      const SuiteResult r = run_suite(name, opts);
      json failures = json::array();
      for (std::size_t k = 0; k < r.failures.size() && k < 10; ++k) {
        json f = {{"name", r.failures[k].name}};
        if (r.failures[k].witness) f["witness"] = *r.failures[k].witness;
        failures.push_back(f);
      }
      suites.push_back({{"name", r.name},
                        {"criterion", r.criterion},
                        {"cases", r.cases},
                        {"checks", r.checks_run},
                        {"failed", r.failures.size()},
                        {"failures", failures}});
      std::optional<std::string> witness;
      if (!r.failures.empty())
        witness = r.failures.front().name + (r.failures.front().witness ? ": " + *r.failures.front().witness : "");
      rep.checks.add(r.name, r.passed(), witness);
      rep.summary.push_back(r.summary_line());
    }
    rep.result = {{"suites", suites}};
  } else {
    throw UsageError("unknown command " + cmd);
  }
}

void check_seed(const json& j, Request& req) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0))
    throw UsageError("seed must be a nonnegative integer");
  req.seed = j.get<std::uint64_t>();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"stratum", "classify", "factorize",   "xi",           "dims",    "quad",
                                              "triple",  "extract",  "adhm-sample", "adhm-to-loop", "selftest"};
  return names;
}

Bounds parse_bounds(const std::string& text, Bounds base) {
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bound \"" + item + "\" is not key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(value, &used);
      if (used != value.size() || v <= 0) throw std::invalid_argument("bad");
    } catch (const std::exception&) {
      throw UsageError("bound " + key + " needs a positive integer");
    }
    if (key == "split_max_orders") base.split_max_orders = v;
    else if (key == "sample_retries") base.sample_retries = v;
    else throw UsageError("unknown bound " + key);
  }
  return base;
}

Request parse_request_json(const json& j, Bounds base) {
  if (!j.is_object() || !j.contains("command") || !j.at("command").is_string())
    throw UsageError("request needs a string field \"command\"");
  Request req;
  req.command = j.at("command").get<std::string>();
  if (std::find(command_names().begin(), command_names().end(), req.command) == command_names().end())
    throw UsageError("unknown command " + req.command);
  if (j.contains("payload")) req.payload = j.at("payload");
  if (!req.payload.is_object()) throw UsageError("payload must be an object");
  if (j.contains("seed")) check_seed(j.at("seed"), req);
  req.bounds = base;
  if (j.contains("bounds")) {
    if (!j.at("bounds").is_string()) throw UsageError("bounds must be a key=value string");
    req.bounds = parse_bounds(j.at("bounds").get<std::string>(), base);
  }
  if (j.contains("timing")) req.timing = j.at("timing").get<bool>();
  validate_payload(req);
  return req;
}

void validate_payload(const Request& req) {
  const json& p = req.payload;
  try {
    const std::string& c = req.command;
    if (c == "stratum" || c == "classify" || c == "factorize" || c == "quad" || c == "triple") {
      laurent_from_json<1>(need(p, "gamma"), kVarT);
    } else if (c == "xi" || c == "dims") {
      coweight_from_json(need(p, "lambda"));
    } else if (c == "extract") {
      if (p.contains("quad")) quad_from_json(p.at("quad"));
      else triple_from_json(need(p, "triple"));
    } else if (c == "adhm-sample") {
      coweight_from_json(need(p, "lambda"));
      if (has_xi(p)) xi_from_payload(p);
    } else if (c == "adhm-to-loop") {
      const json& d = need(p, "datum");
      if (is_type_d(d)) datum_d_from_json(d);
      else datum_a_from_json(d);
    } else if (c == "selftest") {
      const std::string suite = p.value("suite", "all");
      if (suite != "all" && !is_suite(suite)) throw UsageError("unknown suite " + suite);
    }
  } catch (const Error& e) {
    // Well-formed input with invalid content is reported by execute.
    if (e.code() == ErrorCode::ParseError) throw UsageError(e.what());
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed payload: ") + e.what());
  }
}

Request parse(const std::vector<std::string>& args, const std::optional<std::string>& env_bounds) {
  CLI::App app{"Loop group strata, transition data and quiver data"};
  app.require_subcommand(1);
  std::string bounds_text;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  app.add_option("--bounds", bounds_text, "Truncation overrides, key=value,...");
  app.add_option("--seed", seed, "Random seed");
  app.add_flag("--timing", timing, "Include wall-clock timing in the report");

  std::string gamma, lambda, quad, triple, datum, suite = "all", request_file = "-";
  std::optional<int> m_plus, m_minus;
  std::map<std::string, CLI::App*> subs;
  const auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    subs[name] = s;
    return s;
  };
  for (const char* name : {"stratum", "classify", "factorize", "quad", "triple"})
    sub(name, std::string(name) + " of a loop element")->add_option("--gamma", gamma, "Matrix of polynomials in t")->required();
  for (const char* name : {"xi", "dims"})
    sub(name, std::string(name) + " for a coweight")->add_option("--lambda", lambda, "Coweight as a JSON array")->required();
  CLI::App* extract = sub("extract", "Recover the loop element from transition data");
  auto* qopt = extract->add_option("--quad", quad, "Transition quadruple JSON");
  auto* topt = extract->add_option("--triple", triple, "Transition triple JSON");
  qopt->excludes(topt);
  CLI::App* sample = sub("adhm-sample", "Sample a stable and costable quiver datum");
  sample->add_option("--lambda", lambda, "Coweight as a JSON array")->required();
  sample->add_option("--m-plus", m_plus, "Type D: m_plus");
  sample->add_option("--m-minus", m_minus, "Type D: m_minus");
  sample->add_option("--seed", seed, "Random seed");
  sub("adhm-to-loop", "Loop element of a quiver datum")->add_option("--datum", datum, "Datum JSON")->required();
  CLI::App* st = sub("selftest", "Run the acceptance suites");
  st->add_option("--suite", suite, "Suite name or all");
  st->add_option("--seed", seed, "Random seed");
  sub("request", "Read a request JSON object from a file or stdin")->add_option("file", request_file, "Path or -");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Bounds bounds;
  if (env_bounds) bounds = parse_bounds(*env_bounds);
  if (!bounds_text.empty()) bounds = parse_bounds(bounds_text, bounds);

  if (subs.at("request")->parsed()) {
    std::string text;
    if (request_file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      std::ifstream in(request_file);
      if (!in) throw UsageError("cannot read " + request_file);
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    Request req = parse_request_json(parse_json_text(text, "request"), bounds);
    if (seed) req.seed = seed;
    if (timing) req.timing = true;
    return req;
  }

  Request req;
  for (const auto& [name, s] : subs)
    if (s->parsed()) req.command = name;
  req.seed = seed;
  req.bounds = bounds;
  req.timing = timing;
  if (!gamma.empty()) req.payload["gamma"] = parse_json_text(gamma, "--gamma");
  if (!lambda.empty()) req.payload["lambda"] = parse_json_text(lambda, "--lambda");
  if (!quad.empty()) req.payload["quad"] = parse_json_text(quad, "--quad");
  if (!triple.empty()) req.payload["triple"] = parse_json_text(triple, "--triple");
  if (!datum.empty()) req.payload["datum"] = parse_json_text(datum, "--datum");
  if (req.command == "extract" && quad.empty() && triple.empty()) throw UsageError("extract needs --quad or --triple");
  if (m_plus.has_value() != m_minus.has_value()) throw UsageError("--m-plus and --m-minus go together");
  if (m_plus) {
    req.payload["m_plus"] = *m_plus;
    req.payload["m_minus"] = *m_minus;
  }
  if (req.command == "selftest") req.payload["suite"] = suite;
  validate_payload(req);
  return req;
}

Report execute(const Request& req) {
  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    run(req, rep);
  } catch (const Error& e) {
    rep.error_code = error_name(e.code());
    rep.error_message = e.what();
    rep.result = nullptr;
  }
  rep.ok = !rep.error_code && rep.checks.ok();
  if (req.timing)
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string emit(const Report& rep) {
  json out = {{"ok", rep.ok}, {"result", rep.result}, {"checks", to_json(rep.checks)}};
  if (rep.timing_ms) out["timing"] = {{"ms", *rep.timing_ms}};
  if (rep.error_code) out["error"] = {{"code", *rep.error_code}, {"message", *rep.error_message}};
  return out.dump(2) + "\n";
}

int exit_code(const Report& rep) { return rep.ok ? 0 : 1; }

}  // namespace grassline::tools
