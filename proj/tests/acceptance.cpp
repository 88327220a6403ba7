// One line per acceptance criterion; exit status 0 only if all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cliffcat/verify.h"

using namespace cliffcat;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_report(const VerifyReport& r, double limit_seconds = 0) {
  std::ostringstream s;
  s << r.cases << " cases, " << r.failures.size() << " failures, " << r.wall_seconds << " s";
  bool ok = r.ok();
  if (limit_seconds > 0 && r.wall_seconds >= limit_seconds) {
    ok = false;
    s << " (limit " << limit_seconds << " s)";
  }
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    s << "; first: " << f.input << " expected " << f.expected << " got " << f.got;
  }
  return {ok, s.str()};
}

struct Run {
  int code;
  std::string out;
};

Run run_cli_binary(const std::string& args) {
  std::string cmd = std::string(CLIFFCAT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_criterion() {
  std::ostringstream s;
  bool ok = true;
  auto expect = [&](const std::string& args, int code, const std::string* out) {
    Run r = run_cli_binary(args);
    bool good = r.code == code && (!out || r.out == *out);
    if (!good) s << "[" << args << " -> exit " << r.code << ", output " << r.out << "] ";
    ok = ok && good;
  };
  expect("verify --suite all", 0, nullptr);
  std::string act = "+1*(5/2,3/2|)\n";
  expect("act --op gamma --index 5/2 --weight \"(3/2|)\"", 0, &act);
  std::string ch = "e^{d1} + 1 + e^{-d1}\n";
  expect("char --weight \"(|3/2)\"", 0, &ch);
  expect("verify --suite clifford --bound 5/2 --grade-max 2", 0, nullptr);
  if (ok) s << "verify --suite all exit 0; act, char and small clifford suite match";
  return {ok, s.str()};
}

}  // namespace

int main() {
  VerifyOptions opt;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Fock Clifford relations", [&] { return from_report(check_fock_relations(opt), 10); }},
      {"Clifford relations on K", [&] { return from_report(check_k_clifford_relations(opt), 60); }},
      {"intertwining f with gamma/eta", [&] { return from_report(check_intertwining(opt)); }},
      {"gamma matches the normalize route", [&] { return from_report(check_normalize_route(opt)); }},
      {"adjointness of gamma and eta", [&] { return from_report(check_adjointness(opt)); }},
      {"character engine", [&] { return from_report(check_characters(opt), 60); }},
      {"Koszul identity", [&] { return from_report(check_koszul(opt)); }},
      {"gl(inf/2) layer", [&] { return from_report(check_glhalf(opt)); }},
      {"CLI", cli_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " - "
              << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
