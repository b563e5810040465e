// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance [--skip-stretch] [--report-dir DIR]

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lcomplex/classify2.hpp"
#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"
#include "lcomplex/harness.hpp"
#include "lcomplex/table_io.hpp"

namespace fs = std::filesystem;
using namespace lcx;

namespace {

int failures = 0;

void line(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

void skipped(int id, const std::string& name, const std::string& why) {
  std::cout << "SKIP  " << id << ". " << name << ": " << why << std::endl;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream os;
  os << r.check_name << " " << to_string(r.status) << ", " << r.counterexamples.size() << " counterexamples";
  return os.str();
}

bool passed(const VerificationReport& r) { return r.status == Status::Pass; }

ComplexityTable timed_build(const BuildConfig& cfg, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  auto t = build_table(cfg);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

int run_cli(std::vector<std::string> args, std::string& err) {
  args.insert(args.begin(), "lcx");
  std::ostringstream out, errs;
  const int code = cli::run(args, out, errs);
  err = errs.str();
  return code;
}

std::vector<std::uint8_t> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_stretch = false;
  fs::path report_dir = fs::current_path();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-stretch") == 0) {
      skip_stretch = true;
    } else if (std::strcmp(argv[i], "--report-dir") == 0 && i + 1 < argc) {
      report_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--skip-stretch] [--report-dir DIR]\n";
      return 2;
    }
  }

  try {
    double secs = 0;
    std::vector<const ComplexityTable*> built;

    // 1 ---------------------------------------------------------------------
    {
      const auto r2 = verify_oracle_equivalence(2, 14);
      const auto r3 = verify_oracle_equivalence(3, 9);
      line(1, "oracle equivalence", passed(r2) && passed(r3),
           "l=2 m<=14 (" + r2.findings["compared"].dump() + " values), l=3 m<=9 (" + r3.findings["compared"].dump() +
               " values): " + summary(r2) + "; " + summary(r3));
    }

    // 2 ---------------------------------------------------------------------
    const ComplexityTable t2_big = timed_build({.l = 2, .max_n = 1 << 20}, secs);
    built.push_back(&t2_big);
    {
      const auto r = verify_classify2_exhaustive(t2_big);
      std::ostringstream d;
      d << "even n <= 2^20 (table built in " << secs << " s), m+1 matches " << r.findings["m_plus_1_count"]
        << ", m+2 matches " << r.findings["m_plus_2_count"] << ": " << summary(r);
      line(2, "m+1 / m+2 classification exhaustive", passed(r), d.str());
    }

    // 3 ---------------------------------------------------------------------
    const ComplexityTable t2_300k = build_table({.l = 2, .max_n = 300000});
    built.push_back(&t2_300k);
    {
      const auto r = verify_six_ten(t2_300k);
      bool ok = passed(r);
      for (unsigned r6 = 1; r6 <= 7; ++r6) ok &= t2_300k[*checked_pow(6, r6)] == 3 * r6;
      for (unsigned r10 = 1; r10 <= 4; ++r10) ok &= t2_300k[*checked_pow(10, r10)] == 4 * r10;
      const unsigned ten5 = t2_300k[100000];
      ok &= ten5 >= 19 && ten5 <= 20;
      line(3, "6^r and 10^r values", ok,
           "||6^r||=3r (r<=7), ||2^m 6^r||=m+3r, ||10^r||=4r (r<=4) in range; exact ||10^5||_2 = " +
               std::to_string(ten5) + " (bracket [19, 20]): " + summary(r));
    }

    // 4 ---------------------------------------------------------------------
    std::optional<ComplexityTable> t2_stretch;
    if (skip_stretch) {
      skipped(4, "6^8 bracket", "--skip-stretch given");
    } else {
      t2_stretch = timed_build({.l = 2, .max_n = 1700000}, secs);
      built.push_back(&*t2_stretch);
      const unsigned v = (*t2_stretch)[1679616];
      std::ostringstream d;
      d << "table to 1.7e6 built in " << secs << " s; exact ||6^8||_2 = " << v << " (bracket [23, 24])";
      line(4, "6^8 bracket", v >= 23 && v <= 24, d.str());
    }

    // 6 (tables reused by 5 and 10) ------------------------------------------
    const ComplexityTable t2_16 = build_table({.l = 2, .max_n = 1 << 16});
    const ComplexityTable t3_10 = build_table({.l = 3, .max_n = 59049});
    built.push_back(&t2_16);
    built.push_back(&t3_10);
    const ComplexityTable t1 = build_table({.l = 1, .max_n = 100000});

    // 5 ---------------------------------------------------------------------
    {
      bool ok = true;
      std::ostringstream d;
      for (const auto* t : built) {
        const auto r = verify_bounds(*t);
        ok &= passed(r);
        d << "l=" << t->l() << " n<=" << t->max_n() << " " << to_string(r.status) << "; ";
      }
      d << "zero violations required";
      line(5, "bound suite", ok, d.str());
    }

    // 6 ---------------------------------------------------------------------
    {
      const auto r2 = verify_reduction(2, 1 << 16);
      const auto r3 = verify_reduction(3, 59049);
      bool identity = true;
      for (u64 k = 1; 4 * k + 2 <= t2_16.max_n(); ++k) identity &= t2_16[4 * k + 2] == t2_16[4 * k] + 1;
      line(6, "reduction identity", passed(r2) && passed(r3) && identity,
           "l=2 to 2^16 and l=3 to 3^10 byte-equal with and without reduction; ||4k+2|| = ||4k||+1 " +
               std::string(identity ? "holds" : "FAILS") + ": " + summary(r2) + "; " + summary(r3));
    }

    // 7 ---------------------------------------------------------------------
    {
      const auto& t = t2_16;
      const auto s = check_a_set(2, 54, 2, t);
      const bool values = t[54] == 8 && t[216] == 9;
      const bool known_witness = t[216] < 2 + t[54];
      const bool non_member = s.verdict == ASetStatus::Verdict::NonMember;
      std::ostringstream d;
      d << "||54||_2 = " << t[54] << ", ||216||_2 = " << t[216] << ", 54 not in A_2 (m=2: " << t[216] << " < "
        << 2 + t[54] << "); check_a_set returns the least violating m = " << s.m << " since ||108||_2 = " << t[108]
        << " < " << 1 + t[54];
      line(7, "A_2 point values", values && known_witness && non_member, d.str());
    }

    // 8 ---------------------------------------------------------------------
    {
      const auto res = verify_question5(1000, 10000, t1, t2_big);
      const fs::path out = report_dir / "question5_report.json";
      std::ofstream(out) << to_json(res.report).dump(2) << "\n";
      std::ostringstream d;
      d << res.pairs << " (n, R) pairs for n <= 1000, structural violations " << res.structural_violations
        << ", equality rate " << res.report.findings["equality_rate"].get<double>() << " ("
        << res.report.counterexamples.size() << " pairs below ||n||_1, "
        << res.no_equal_representation.size() << " n with no equal representation), capped n "
        << res.capped.size() << "; report written to " << out.string();
      line(8, "rereading optimal l=1 trees over l=2", res.structural_violations == 0 && res.pairs > 0, d.str());
    }

    // 9 ---------------------------------------------------------------------
    {
      const auto r = verify_conjecture_l1(t1, 64, 64);
      line(9, "2^a 3^b over l = 1", r.status == Status::BoundedPass && r.counterexamples.empty(),
           r.checked_range + ": " + summary(r));
    }

    // 10 --------------------------------------------------------------------
    {
      bool ok = true;
      std::ostringstream d;
      built.push_back(&t1);
      for (std::size_t i = 0; i < built.size(); ++i) {
        const auto r = verify_witnesses(*built[i], 1000, 1000 + i);
        ok &= passed(r);
        d << "l=" << built[i]->l() << " n<=" << built[i]->max_n() << " " << to_string(r.status) << "; ";
      }
      d << "1000 samples each";
      line(10, "witness soundness", ok, d.str());
    }

    // 11 --------------------------------------------------------------------
    {
      const fs::path dir = fs::temp_directory_path() / "lcx_acceptance";
      fs::create_directories(dir);
      const fs::path file = dir / "t2.lcxt";
      save_table(t2_16, file);
      const auto bytes = read_file(file);
      const auto reloaded = load_table(file);
      const bool round_trip = reloaded == t2_16 && serialize_table(reloaded) == bytes &&
                              crc32_ieee(std::span(bytes).first(bytes.size() - 4)) ==
                                  (bytes[bytes.size() - 4] | bytes[bytes.size() - 3] << 8 |
                                   bytes[bytes.size() - 2] << 16 | static_cast<std::uint32_t>(bytes.back()) << 24);

      auto magic = bytes;
      magic[1] = 'Q';
      auto crc = bytes;
      crc[kTableHeaderSize + 7] ^= 0x10;
      const std::vector<std::uint8_t> trunc(bytes.begin(), bytes.begin() + 17);
      write_file(dir / "magic.lcxt", magic);
      write_file(dir / "crc.lcxt", crc);
      write_file(dir / "trunc.lcxt", trunc);

      bool exits = true;
      std::set<std::string> messages;
      for (const char* name : {"magic.lcxt", "crc.lcxt", "trunc.lcxt"}) {
        std::string err;
        exits &= run_cli({"query", "54", "--table", (dir / name).string()}, err) == cli::kExitIo;
        messages.insert(err);
      }
      fs::remove_all(dir);
      line(11, "file format round trip", round_trip && exits && messages.size() == 3,
           std::string("byte-identical reload with valid CRC ") + (round_trip ? "yes" : "NO") +
               "; bad magic / bad CRC / truncation exit 3 " + (exits ? "yes" : "NO") + " with " +
               std::to_string(messages.size()) + " distinct diagnostics");
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance aborted: " << e.what() << std::endl;
    return 1;
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
