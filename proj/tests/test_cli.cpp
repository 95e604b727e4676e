#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "ndlt/container.hpp"
#include "ndlt/harness.hpp"
#include "ndlt/needlet.hpp"
#include "ndlt/signals.hpp"

namespace fs = std::filesystem;
using namespace ndlt;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ndlt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(NDLT_CLI_PATH) + " " + args + " > " + path("stdout.txt") + " 2> " +
                            path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const std::string& name) const {
    std::ifstream is(path(name), std::ios::binary);
    return {std::istreambuf_iterator<char>(is), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenRandomIsDeterministicInSeed) {
  ASSERT_EQ(run("--seed 7 gen random --manifold so3 -L 6 -o " + path("a.ndlt")), 0);
  ASSERT_EQ(run("gen random --manifold so3 -L 6 --seed 7 -o " + path("b.ndlt")), 0);
  ASSERT_EQ(run("--seed 8 gen random --manifold so3 -L 6 -o " + path("c.ndlt")), 0);
  EXPECT_EQ(slurp("a.ndlt"), slurp("b.ndlt"));
  EXPECT_NE(slurp("a.ndlt"), slurp("c.ndlt"));

  std::mt19937_64 rng(7);
  const auto want = random_spectrum<double, Manifold::SO3>(6, rng);
  EXPECT_EQ(std::get<SpectralSO3>(read_container(path("a.ndlt"))), want);
}

TEST_F(Cli, GenHarmonicHasOneUnitCoefficient) {
  ASSERT_EQ(run("gen harmonic --l 3 --m -2 -L 5 -o " + path("h.ndlt")), 0);
  const auto f = std::get<SpectralS2>(read_container(path("h.ndlt")));
  EXPECT_EQ(f.bandwidth(), 5);
  EXPECT_EQ(squared_norm(f), 1.0);
  EXPECT_EQ(f(0, 3, -2), cdouble(1.0));
  EXPECT_EQ(run("gen harmonic --l 2 --m 3 -o " + path("bad.ndlt")), 64);
}

TEST_F(Cli, TransformRoundTrip) {
  ASSERT_EQ(run("gen random -L 8 -o " + path("f.ndlt")), 0);
  ASSERT_EQ(run("transform -i " + path("f.ndlt") + " -o " + path("g.ndlt")), 0);
  ASSERT_EQ(run("transform -i " + path("g.ndlt") + " -L 8 -o " + path("f2.ndlt")), 0);
  const auto f = std::get<SpectralS2>(read_container(path("f.ndlt")));
  const auto f2 = std::get<SpectralS2>(read_container(path("f2.ndlt")));
  EXPECT_LT(squared_distance(f, f2), 1e-26);
}

TEST_F(Cli, DecomposeReconstructRoundTrip) {
  ASSERT_EQ(run("gen random --manifold so3 -L 8 -o " + path("f.ndlt")), 0);
  ASSERT_EQ(run("decompose -i " + path("f.ndlt") + " --j0 2 -o " + path("c.ndlt")), 0);
  ASSERT_EQ(run("reconstruct -i " + path("c.ndlt") + " -o " + path("r.ndlt")), 0);
  const auto c = std::get<NeedletSO3>(read_container(path("c.ndlt")));
  EXPECT_EQ(c.j0, 2);
  const auto f = std::get<SpectralSO3>(read_container(path("f.ndlt")));
  const auto r = std::get<SpectralSO3>(read_container(path("r.ndlt")));
  EXPECT_LT(squared_distance(f, r), 1e-26);
}

TEST_F(Cli, TruncatedPayloadIsCorruption) {
  ASSERT_EQ(run("gen random -L 4 -o " + path("f.ndlt")), 0);
  const std::string bytes = slurp("f.ndlt");
  std::ofstream(path("t.ndlt"), std::ios::binary) << bytes.substr(0, bytes.size() - 16);
  EXPECT_EQ(run("pool -i " + path("t.ndlt") + " -o " + path("x.ndlt")), 3);
  EXPECT_FALSE(fs::exists(path("x.ndlt")));
}

TEST_F(Cli, MalformedManifestIsParseError) {
  std::ofstream(path("m.ndlt")) << "ndlt-container\nformat_version: 1\nkind: what\n---\n";
  EXPECT_EQ(run("pool -i " + path("m.ndlt") + " -o " + path("x.ndlt")), 2);
}

TEST_F(Cli, WrongKindIsUsageError) {
  ASSERT_EQ(run("gen random -L 4 -o " + path("f.ndlt")), 0);
  EXPECT_EQ(run("reconstruct -i " + path("f.ndlt") + " -o " + path("x.ndlt")), 64);
  EXPECT_EQ(run("no-such-command"), 64);
}

TEST_F(Cli, InsufficientExactnessIsRejected) {
  ASSERT_EQ(run("gen random -L 8 -o " + path("f.ndlt")), 0);
  EXPECT_EQ(run("transform -i " + path("f.ndlt") + " -L 4 -o " + path("g.ndlt")), 4);
}

TEST_F(Cli, MoleculeMatchesLibrary) {
  std::ofstream(path("atoms.txt")) << "# methane fragment\n6 0 0 0\n1 0.63 0.63 0.63\n1 -1.2 0.4 2.0\n";
  ASSERT_EQ(run("gen molecule --atoms " + path("atoms.txt") + " --center 0 --charge 1 -L 6 -o " + path("u.ndlt")), 0);
  const auto grid = std::get<GridSignal>(read_container(path("u.ndlt")));

  const std::vector<Atom> atoms = {{6, {0, 0, 0}}, {1, {0.63, 0.63, 0.63}}, {1, {-1.2, 0.4, 2.0}}};
  const auto want = molecule_potential_signal(atoms, 0, 1.0, std::make_shared<const QuadratureRule>(s2_rule(6)));
  ASSERT_EQ(grid.samples().size(), want.samples().size());
  for (std::size_t k = 0; k < want.samples().size(); ++k) EXPECT_EQ(grid.samples()[k], want.samples()[k]);

  std::ofstream(path("bad.txt")) << "6 0 0 0\n1 0 1 0\n";
  EXPECT_EQ(run("gen molecule --atoms " + path("bad.txt") + " --center 0 --charge 1 -o " + path("v.ndlt")), 4);
  std::ofstream(path("garbled.txt")) << "6 0 0\n";
  EXPECT_EQ(run("gen molecule --atoms " + path("garbled.txt") + " --center 0 --charge 1 -o " + path("v.ndlt")), 2);
}

TEST_F(Cli, FilterReportsAreMachineReadable) {
  ASSERT_EQ(run("--format csv filters --grid 3"), 0);
  EXPECT_EQ(slurp("stdout.txt").substr(0, 3), "xi,");
  ASSERT_EQ(run("verify partition --format json"), 0);
  const std::string out = slurp("stdout.txt");
  EXPECT_NE(out.find("\"partition_of_unity\""), std::string::npos);
}
