#include "wick/report.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include <json.hpp>

#include "wick/error.hpp"

namespace wick {

bool Report::all_ok() const {
  for (const auto& c : claims)
    if (!c.verified) return false;
  return true;
}

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {"check",   "thm3.1",  "thm3.2",
                                                 "cor3.1",  "ope2.10", "ope2.15",
                                                 "ope2.18", "identities", "all"};
  return names;
}

bool claim_applicable(const Datum& dt, const std::string& claim) {
  if (claim == "cor3.1") return dt.mode == Mode::Standard;
  return true;
}

namespace {

struct Task {
  std::string id;
  std::function<CheckResult()> run;
};

std::vector<Task> expand(const Datum& dt, const std::vector<std::string>& claims,
                         uint64_t seed) {
  std::vector<Task> tasks;
  auto add = [&](const std::string& id, std::function<CheckResult()> f) {
    tasks.push_back({id, std::move(f)});
  };
  auto add_claim = [&](const std::string& c) {
    if (!claim_applicable(dt, c))
      fail(Errc::BadArgument, "claim '" + c + "' needs the standard mode");
    if (c == "check") {
      add("check", [&dt] { return check_d_squared(dt); });
    } else if (c == "thm3.1") {
      add("thm3.1", [&dt] { return verify_thm31(dt); });
    } else if (c == "thm3.2") {
      add("thm3.2", [&dt] { return verify_thm32(dt); });
    } else if (c == "cor3.1") {
      add("cor3.1", [&dt] { return verify_cor31(dt); });
    } else if (c == "ope2.10") {
      add("ope2.10", [&dt] { return verify_ope_current(dt); });
    } else if (c == "ope2.15") {
      add("ope2.15", [&dt] { return verify_ope_gf0(dt); });
    } else if (c == "ope2.18") {
      add("ope2.18", [&dt] { return verify_ope_mixed(dt); });
    } else if (c == "identities") {
      add("identities.cc", [&dt] { return verify_central_charge(dt); });
      for (const std::string& id : identity_catalog(dt))
        add("identities." + id,
            [&dt, id, seed] { return verify_identity(dt, id, seed); });
    } else {
      fail(Errc::BadArgument, "unknown claim '" + c + "'");
    }
  };
  for (const auto& c : claims) {
    if (c == "all") {
      for (const char* base : {"check", "thm3.1", "thm3.2", "ope2.10", "ope2.15", "ope2.18"})
        add_claim(base);
      if (claim_applicable(dt, "cor3.1")) add_claim("cor3.1");
      add_claim("identities");
    } else {
      add_claim(c);
    }
  }
  return tasks;
}

int env_workers() {
  if (const char* w = std::getenv("WICK_WORKERS")) {
    int n = std::atoi(w);
    if (n > 0) return n;
  }
  return 1;
}

}  // namespace

Report run_claims(const Datum& dt, const std::vector<std::string>& claims, uint64_t seed,
                  int workers) {
  Report rep;
  rep.datum = dt.name;
  rep.seed = seed;
  rep.root_system = dt.rho.record;
  std::vector<Task> tasks = expand(dt, claims, seed);
  rep.claims.resize(tasks.size());
  if (workers <= 0) workers = env_workers();

  auto run_one = [&](size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimResult row;
    row.claim = tasks[i].id;
    try {
      CheckResult r = tasks[i].run();
      row.verified = r.ok;
      if (!r.ok) {
        row.residual = r.note;
        if (!r.residual.is_zero())
          row.residual += " | " + render_expr(dt.ctx, r.residual, Format::Text);
      }
    } catch (const Error& e) {
      row.verified = false;
      row.residual = e.what();
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    rep.claims[i] = std::move(row);
  };

  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  return rep;
}

std::string report_to_json(const Report& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["datum"] = r.datum;
  j["engine"] = r.engine;
  j["seed"] = r.seed;
  j["root_system"] = r.root_system;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) {
    nlohmann::ordered_json row;
    row["claim"] = c.claim;
    row["status"] = c.verified ? "verified" : "failed";
    row["residual"] = c.residual.empty() ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json(c.residual);
    if (with_timings) row["wall_ms"] = c.wall_ms;
    j["claims"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "datum: " << r.datum << "  (" << r.engine << ", seed " << r.seed << ")\n";
  os << "roots: " << r.root_system << "\n";
  for (const auto& c : r.claims) {
    os << (c.verified ? "  [ ok ] " : "  [FAIL] ") << c.claim;
    os << "  (" << c.wall_ms << " ms)";
    if (!c.residual.empty()) os << "\n         " << c.residual;
    os << "\n";
  }
  return os.str();
}

std::string report_to_latex(const Report& r) {
  std::ostringstream os;
  os << "\\documentclass{article}\n\\usepackage{longtable}\n\\begin{document}\n";
  os << "\\section*{Verification report: \\texttt{" << r.datum << "}}\n";
  os << "\\begin{longtable}{ll}\n";
  for (const auto& c : r.claims) {
    std::string id = c.claim;
    for (size_t p = id.find('_'); p != std::string::npos; p = id.find('_', p + 2))
      id.replace(p, 1, "\\_");
    os << "\\texttt{" << id << "} & " << (c.verified ? "verified" : "\\textbf{failed}")
       << " \\\\\n";
  }
  os << "\\end{longtable}\n\\end{document}\n";
  return os.str();
}

}  // namespace wick
