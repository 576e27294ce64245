// End-to-end acceptance gate. One line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tgl/base.hpp"
#include "tgl/cli.hpp"
#include "tgl/corpus.hpp"
#include "tgl/galois.hpp"
#include "tgl/graphs.hpp"
#include "tgl/json_io.hpp"
#include "tgl/matroid.hpp"
#include "tgl/poly.hpp"
#include "tgl/tutte.hpp"

using namespace tgl;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one criterion; the body returns an empty string on success and a
// failure reason otherwise.
void criterion(int idx, const std::string& label, double time_limit_s,
               const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string fail;
  try {
    fail = body();
  } catch (const std::exception& e) {
    fail = std::string("exception: ") + e.what();
  }
  double dt = seconds_since(t0);
  if (fail.empty() && time_limit_s > 0 && dt > time_limit_s) {
    std::ostringstream os;
    os << "took " << dt << " s, limit " << time_limit_s << " s";
    fail = os.str();
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", dt);
  if (fail.empty()) {
    std::cout << "[PASS] criterion " << idx << ": " << label << " (" << buf << " s)\n";
  } else {
    std::cout << "[FAIL] criterion " << idx << ": " << label << " — " << fail << " (" << buf
              << " s)\n";
    ++g_failures;
  }
  std::cout.flush();
}

std::vector<const Matroid*> connected_small_rank_corpus() {
  std::vector<const Matroid*> out;
  for (const auto& e : builtin_corpus())
    if (e.matroid.is_connected() && e.matroid.rank() <= 6) out.push_back(&e.matroid);
  return out;
}

std::string run_cli_capture(std::vector<std::string> args, int* exit_code) {
  args.insert(args.begin(), "tgl");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::stringstream so;
  auto* old = std::cout.rdbuf(so.rdbuf());
  *exit_code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  return so.str();
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l))
    if (!l.empty()) out.push_back(l);
  return out;
}

// --- criterion bodies -------------------------------------------------------

std::string c1_identity_suite() {
  for (const auto& e : builtin_corpus()) {
    IdentityReport rep = check_identities(e.matroid);
    if (!rep.all_pass()) return "identity check failed on " + e.name;
  }
  return "";
}

std::string c2_theorem_rational() {
  for (const Matroid* m : connected_small_rank_corpus()) {
    VerificationReport rep = verify_theorem_main(*m, 0, 10000);
    if (rep.status != "Sn") return m->canonical_key() + " came back " + rep.status;
  }
  return "";
}

std::string c3_theorem_mod_p() {
  std::vector<std::pair<int, int>> k4_edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Matroid> ms = {
      cycle_matroid(make_simple_graph(3, {{0, 1}, {1, 2}, {2, 0}})),
      cycle_matroid(make_simple_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})),
      cycle_matroid(make_simple_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})),
      cycle_matroid(make_simple_graph(4, k4_edges)),
  };
  for (const Matroid& m : ms)
    for (std::uint64_t p : {2, 3, 5, 7}) {
      VerificationReport rep = verify_theorem_mod_p(m, p, 0, 512);
      if (rep.status != "Sn")
        return m.canonical_key() + " mod " + std::to_string(p) + " came back " + rep.status;
    }
  return "";
}

std::string c4_biconnected_sweep() {
  const std::vector<size_t> expected = {1, 3, 10, 56, 468};
  for (int order = 3; order <= 7; ++order) {
    // The enumerator's self-check: a second pass must reproduce the same
    // representatives in the same order.
    std::vector<SimpleGraph> first = enumerate_biconnected(order);
    std::vector<SimpleGraph> second = enumerate_biconnected(order);
    size_t enumerated = first.size();
    bool same = first.size() == second.size();
    for (size_t i = 0; same && i < first.size(); ++i)
      same = emit_graph6(first[i]) == emit_graph6(second[i]);
    if (!same) return "enumeration not reproducible at order " + std::to_string(order);

    int code = -1;
    std::string out = run_cli_capture({"verify-conjecture", "--order", std::to_string(order)},
                                      &code);
    if (code != 0) return "exit code " + std::to_string(code) + " at order " + std::to_string(order);
    auto lines = split_lines(out);
    size_t want = expected[static_cast<size_t>(order - 3)];
    if (enumerated != want || lines.size() != want + 1)
      return "order " + std::to_string(order) + ": expected " + std::to_string(want) +
             " graphs, got " + std::to_string(lines.size() ? lines.size() - 1 : 0);
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
      Json j = Json::parse(lines[i]);
      if (j["status"] != "Sn") return std::string("non-Sn report: ") + lines[i];
      if (j["rank"] != order - 1) return std::string("wrong degree: ") + lines[i];
    }
    Json sum = Json::parse(lines.back());
    if (sum["summary"]["statuses"]["Sn"] != want) return "summary mismatch at order " +
                                                         std::to_string(order);
  }
  // External graph6 input path.
  {
    std::ofstream("acc_ext.g6") << ">>graph6<<\nBw\n";
    int code = -1;
    std::string out = run_cli_capture({"verify-conjecture", "--graph6-file", "acc_ext.g6"}, &code);
    std::remove("acc_ext.g6");
    auto lines = split_lines(out);
    if (code != 0 || lines.size() != 2 || Json::parse(lines[0])["status"] != "Sn")
      return "external graph6 file path failed";
  }
  return "";
}

std::string c5_jacobian() {
  for (const Matroid* m : connected_small_rank_corpus()) {
    JacobianReport rep = jacobian_independence_check(*m, 5, 0);
    if (rep.status != "Independent") return m->canonical_key() + " came back " + rep.status;
  }
  return "";
}

// Trial-division oracle pieces for criterion 6.
std::vector<UniPolyFp> monic_irreducibles(std::uint64_t p, int max_deg) {
  std::vector<UniPolyFp> irr;
  std::vector<std::uint64_t> c;
  for (int d = 1; d <= max_deg; ++d) {
    c.assign(static_cast<size_t>(d) + 1, 0);
    c.back() = 1;
    while (true) {
      UniPolyFp f(p, c);
      bool divisible = false;
      for (const auto& g : irr) {
        if (2 * g.degree() > d) break;
        if (f.divmod(g).second.is_zero()) {
          divisible = true;
          break;
        }
      }
      if (!divisible) irr.push_back(f);
      size_t i = 0;
      while (i + 1 < c.size() && ++c[i] == p) c[i++] = 0;
      if (i + 1 == c.size()) break;
    }
  }
  return irr;
}

// Returns the sorted factor-degree multiset, or a repeated factor marker.
bool factor_degrees(UniPolyFp f, const std::vector<UniPolyFp>& irr, std::vector<int>* out) {
  out->clear();
  for (const auto& g : irr) {
    int count = 0;
    while (f.degree() >= g.degree() && f.divmod(g).second.is_zero()) {
      f = f.divide_exact(g);
      ++count;
    }
    if (count > 1) return false;
    if (count == 1) out->push_back(g.degree());
    if (f.degree() == 0) break;
  }
  std::sort(out->begin(), out->end());
  return true;
}

std::string c6_pattern_oracle() {
  for (std::uint64_t p : {2, 3, 5}) {
    auto irr = monic_irreducibles(p, 5);
    for (int d = 1; d <= 5; ++d) {
      std::vector<std::uint64_t> c(static_cast<size_t>(d) + 1, 0);
      c.back() = 1;
      while (true) {
        UniPolyFp fp(p, c);
        std::vector<long> zc(c.begin(), c.end());
        UniPolyZ fz(zc);
        auto got = degree_pattern_mod_p(fz, p);
        std::vector<int> want;
        bool squarefree = factor_degrees(fp, irr, &want);
        if (squarefree) {
          if (!got || got->parts != want) {
            std::ostringstream os;
            os << "mismatch at p=" << p << " coeffs";
            for (auto x : c) os << ' ' << x;
            return os.str();
          }
        } else if (got) {
          std::ostringstream os;
          os << "repeated factor not rejected at p=" << p << " degree " << d;
          return os.str();
        }
        size_t i = 0;
        while (i + 1 < c.size() && ++c[i] == p) c[i++] = 0;
        if (i + 1 == c.size()) break;
      }
    }
  }
  return "";
}

std::string c7_soundness() {
  // Cyclic cubic: square discriminant, so no certificate may exist.
  CertifyOutcome cyc = certify_sn(UniPolyZ({-1, -3, 0, 1}), 100000);
  if (cyc.sn) return "x^3 - 3x - 1 was certified despite a cyclic Galois group";

  Rng rng(7);
  int certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    long a = rng.next_in(-50, 50);
    long b = rng.next_in(-50, 50);
    UniPolyZ f({b, a, 0, 1});  // x^3 + a x + b
    if (!squarefree_z(f)) continue;
    CertifyOutcome out = certify_sn(f, 10000);
    if (!out.sn) continue;
    ++certified;
    Int disc = Int(-4) * Int(a) * Int(a) * Int(a) - Int(27) * Int(b) * Int(b);
    if (disc == 0) return "certified cubic with zero discriminant";
    if (disc > 0) {
      Int root = sqrt(disc);
      if (root * root == disc) {
        std::ostringstream os;
        os << "certified cubic x^3 + " << a << "x + " << b << " has square discriminant";
        return os.str();
      }
    }
  }
  if (certified <= 100)
    return "only " + std::to_string(certified) + " of 200 random cubics were certified";
  return "";
}

std::string c8_jobs_determinism() {
  const char* bin = TGL_BIN;
  std::string cmd1 = std::string(bin) + " verify-conjecture --order 5 --jobs 1 > acc_j1.ndjson";
  std::string cmd4 = std::string(bin) + " verify-conjecture --order 5 --jobs 4 > acc_j4.ndjson";
  int r1 = std::system(cmd1.c_str());
  int r4 = std::system(cmd4.c_str());
  auto slurp = [](const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  std::string a = slurp("acc_j1.ndjson");
  std::string b = slurp("acc_j4.ndjson");
  std::remove("acc_j1.ndjson");
  std::remove("acc_j4.ndjson");
  if (r1 != 0 || r4 != 0) return "subprocess exit codes " + std::to_string(r1) + ", " +
                                 std::to_string(r4);
  if (a.empty()) return "empty output";
  if (split_lines(a).size() != 11) return "expected 11 lines, got " +
                                          std::to_string(split_lines(a).size());
  if (a != b) return "outputs differ between --jobs 1 and --jobs 4";
  return "";
}

}  // namespace

int main() {
  criterion(1, "symbolic identity suite over the builtin corpus", 30, c1_identity_suite);
  criterion(2, "full symmetric Galois group over Q for connected corpus matroids", 0,
            c2_theorem_rational);
  criterion(3, "full symmetric Galois group mod 2, 3, 5, 7 for small cycle matroids", 30,
            c3_theorem_mod_p);
  criterion(4, "biconnected sweep, orders 3 through 7, all groups full symmetric", 900,
            c4_biconnected_sweep);
  criterion(5, "Jacobian rank equals matroid rank on connected corpus matroids", 10, c5_jacobian);
  criterion(6, "degree patterns match trial-division factorization, degree <= 5, p in {2,3,5}", 60,
            c6_pattern_oracle);
  criterion(7, "no certificate for cyclic cubics; random-cubic discriminant soundness", 0,
            c7_soundness);
  criterion(8, "parallel and serial sweeps emit identical bytes", 0, c8_jobs_determinism);

  if (g_failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
