#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "casimir/linalg.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::current_path() / "cli_work";

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::create_directories(kWork);
  const fs::path p = kWork / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

Run run(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path out = kWork / "stdout.txt";
  const fs::path err = kWork / "stderr.txt";
  const std::string cmd = std::string("\"") + CP3BODY_EXE + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string two_atoms(double z1, double z2, double a, const std::string& alpha, bool contact2 = false) {
  std::ostringstream s;
  s << R"({"atoms": [{"position": [0, 0, )" << z1 << R"(], )" << alpha << R"(}, {"position": [)" << a
    << R"(, 0, )" << z2 << R"(], )" << alpha << (contact2 ? R"(, "contact": true)" : "") << "}]}";
  return s.str();
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("energy prints text and json") {
  const auto cfg = write_file("iso.json", two_atoms(1, 1, 1, R"("alpha": 1)"));
  const Run text = run("energy --config \"" + cfg.string() + "\"");
  CHECK(text.code == 0);
  CHECK(text.out.find("e12") == 0);
  CHECK(text.out.find("total") != std::string::npos);

  const Run json = run("energy --format json --config \"" + cfg.string() + "\"");
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["e12"].get<double>() == doctest::Approx(-23.0 / (4 * casimir::kPi)).epsilon(1e-13));
  CHECK(j["e_cp1"].get<double>() == doctest::Approx(-3.0 / (8 * casimir::kPi)).epsilon(1e-13));
}

TEST_CASE("far from the plate the correction vanishes") {
  const auto cfg = write_file("far.json", two_atoms(100, 100, 1, R"("alpha": 1)"));
  const Run r = run("energy --format json --config \"" + cfg.string() + "\"");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double e12 = j["e12"].get<double>();
  CHECK(e12 == doctest::Approx(-23.0 / (4 * casimir::kPi)).epsilon(1e-13));
  CHECK(std::fabs(j["delta_e3"].get<double>() / e12) < 1e-5);
}

TEST_CASE("z-only atoms with one on the plate quadruple the pair energy") {
  // r = 1, a = 0.75: z1 = sqrt(1 - 0.75^2), atom 2 in contact
  const double z1 = std::sqrt(1.0 - 0.5625);
  std::ostringstream s;
  s.precision(17);
  s << z1;
  const auto cfg = write_file("contact.json", R"({"atoms": [{"position": [0, 0, )" + s.str() +
                                                  R"(], "alpha_perp": 0, "alpha_z": 1},
      {"position": [0.75, 0, 0], "alpha_perp": 0, "alpha_z": 1, "contact": true}]})");
  const Run r = run("energy --format json --config \"" + cfg.string() + "\"");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["e_cp2"].is_null());
  CHECK(j["e_pair"].get<double>() == doctest::Approx(4 * j["e12"].get<double>()).epsilon(1e-12));
}

TEST_CASE("error exit codes") {
  const auto bad = write_file("bad.json", "{\n  \"atoms\": [\n    {\"position\": [0, 0, 1],,\n");
  Run r = run("energy --config \"" + bad.string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  const auto field = write_file("field.json", two_atoms(1, 1, 1, R"("alpha": "x")"));
  r = run("energy --config \"" + field.string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("atoms[0].alpha") != std::string::npos);

  const auto coincident = write_file("coincident.json", two_atoms(1, 1, 0, R"("alpha": 1)"));
  CHECK(run("energy --config \"" + coincident.string() + "\"").code == 5);

  const auto on_plate = write_file("on_plate.json", two_atoms(1, 0, 1, R"("alpha": 1)"));
  CHECK(run("energy --config \"" + on_plate.string() + "\"").code == 5);

  CHECK(run("energy --config \"" + (kWork / "missing.json").string() + "\"").code == 4);
  CHECK(run("bogus").code == 2);
  CHECK(run("verify").code == 2);

  const auto iso = write_file("iso.json", two_atoms(1, 1, 1, R"("alpha": 1)"));
  CHECK(run("energy --config \"" + iso.string() + "\" --out \"" + (kWork / "no/such/dir/x").string() + "\"").code ==
        4);
}

TEST_CASE("verify a single configuration") {
  const auto cfg = write_file("verify.json", two_atoms(0.7, 1.3, 1.1, R"("alpha_perp": 0.4, "alpha_z": 1.2)"));
  const Run r = run("verify --config \"" + cfg.string() + "\"");
  CHECK(r.code == 0);
  CHECK(count(r.out, "PASS ") == 6);
  CHECK(r.out.find("verify: 6 checks, 0 failed") != std::string::npos);

  const Run strict = run("verify --tol 1e-15 --config \"" + cfg.string() + "\"");
  CHECK(strict.code == 3);
  CHECK(strict.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify skips the atom-wall term for an atom on the plate") {
  const auto cfg = write_file("verify_contact.json", two_atoms(0.5, 0, 1, R"("alpha": 1)", true));
  const Run r = run("verify --config \"" + cfg.string() + "\"");
  CHECK(r.code == 0);
  CHECK(count(r.out, "PASS ") == 5);
  CHECK(count(r.out, "SKIP ") == 1);
}

TEST_CASE("verify random batch") {
  const Run r = run("verify --random 100 --seed 42");
  CHECK(r.code == 0);
  CHECK(r.out.find("verify: 600 checks, 0 failed") != std::string::npos);
  CHECK(run("verify --random 3 --seed 1 --tol 1e-16").code == 3);
}

TEST_CASE("sweep output") {
  const auto cfg = write_file("sweep.json", R"({"atoms": [{"alpha": 1}, {"alpha": 1}],
    "sweep": {"parameter": "a", "min": 0, "max": 2, "steps": 5, "Z": 0.5}})");
  const Run csv = run("sweep --config \"" + cfg.string() + "\"");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("param,e12,e123,e213,e1323,delta_e3,g,g3,g4\n0,nan,") == 0);
  CHECK(count(csv.out, "\n") == 6);
  CHECK(csv.err.find("warning: a=0") != std::string::npos);

  const Run json = run("sweep --format json --config \"" + cfg.string() + "\"");
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j.size() == 5);
  CHECK(j[0]["g"].is_null());
  CHECK(j[4]["param"].get<double>() == 2.0);

  const auto no_sweep = write_file("nosweep.json", two_atoms(1, 1, 1, R"("alpha": 1)"));
  CHECK(run("sweep --config \"" + no_sweep.string() + "\"").code == 2);
}

TEST_CASE("figure datasets") {
  const fs::path a = kWork / "figs_a";
  const fs::path b = kWork / "figs_b";
  fs::remove_all(a);
  fs::remove_all(b);
  REQUIRE(run("figure all --out \"" + a.string() + "\"").code == 0);
  REQUIRE(run("figure fig2 fig3 fig4 fig5 --out \"" + b.string() + "\"").code == 0);
  for (const char* id : {"fig2", "fig3", "fig4", "fig5"}) {
    const std::string name = std::string(id) + ".csv";
    CHECK(fs::exists(a / name));
    CHECK(slurp(a / name) == slurp(b / name));
  }
  CHECK(run("figure fig7 --out \"" + a.string() + "\"").code == 2);

  const auto blocker = write_file("blocker", "x");
  CHECK(run("figure fig2 --out \"" + (blocker / "sub").string() + "\"").code == 4);
}
