// Drives the built command-line tool as a subprocess.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// `env` is prepended verbatim, e.g. "RNANAME_LIBRARY=/x".
Outcome run(const std::string& args, const std::string& env = "")
{
    const auto err_path = std::filesystem::temp_directory_path() / ("rnaname_cli_err_" + std::to_string(::getpid()));
    const std::string cmd = "env -u RNANAME_LIBRARY " + env + " '" + RNANAME_CLI + "' " + args + " 2>'" +
                            err_path.string() + "'";
    Outcome r{};
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, "", "popen failed"};
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.err = slurp(err_path);
    std::filesystem::remove(err_path);
    return r;
}

const std::string kData = RNANAME_TEST_DATA;
const std::string kLibrary = RNANAME_DEFAULT_LIBRARY;

} // namespace

TEST(Cli, NamePrintsOneFullNameLine)
{
    const Outcome r = run("name UAAAGUGCUGACAGUGCAGAU");
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "Epx0-BIN\n");
    EXPECT_EQ(run("name TAAAGTGCTGACAGTGCAGAT").out, r.out);
    EXPECT_EQ(run("--library '" + kLibrary + "' name UAAAGUGCUGACAGUGCAGAU").out, r.out);
}

TEST(Cli, NameErrorsAreMachineReadable)
{
    Outcome r = run("name UAAAGUGC");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(r.err.rfind("error\ttoo-short\t", 0), 0u) << r.err;

    r = run("name UAAAGUGCXGACAG");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.err.rfind("error\tinvalid-alphabet\t", 0), 0u) << r.err;

    r = run("name " + std::string(45, 'A'));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.err.rfind("warning\tlong-sequence\t", 0), 0u) << r.err;
}

TEST(Cli, UsageErrors)
{
    for (const char* args : {"", "frobnicate", "name", "name ACGUACGUA --bogus", "collisions --n 5 --len 61 --seed 1",
                             "collisions --n 0 --len 20 --seed 1", "collisions --len 20 --seed 1"}) {
        const Outcome r = run(args);
        EXPECT_NE(r.status, 0) << args;
        EXPECT_EQ(r.err.rfind("error\tusage\t", 0), 0u) << args << ": " << r.err;
    }
}

TEST(Cli, LibraryFlagAndEnvironment)
{
    Outcome r = run("--library /nonexistent/lib.hexlib name UAAAGUGCUGACAGUGCAGAU");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.err.rfind("error\tio\t", 0), 0u) << r.err;

    r = run("name UAAAGUGCUGACAGUGCAGAU", "RNANAME_LIBRARY=/nonexistent/lib.hexlib");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.err.rfind("error\tio\t", 0), 0u) << r.err;

    // A corrupted copy is refused with the checksum error.
    const auto bad = std::filesystem::temp_directory_path() / "rnaname_cli_bad.hexlib";
    std::string text = slurp(kLibrary);
    text[text.find("\tA\n") + 1] = 'B';
    std::ofstream(bad, std::ios::binary) << text;
    r = run("name UAAAGUGCUGACAGUGCAGAU", "RNANAME_LIBRARY='" + bad.string() + "'");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.err.rfind("error\tchecksum-mismatch\t", 0), 0u) << r.err;
    std::filesystem::remove(bad);

    r = run("name UAAAGUGCUGACAGUGCAGAU", "RNANAME_LIBRARY='" + kLibrary + "'");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "Epx0-BIN\n");
}

TEST(Cli, BatchWritesOneRowPerRecord)
{
    Outcome r = run("batch '" + kData + "/three.fasta'");
    EXPECT_EQ(r.status, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# library=hexlib1:", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line, "id\tsequence\tname\tsignature\tfull_name\terror");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    EXPECT_EQ(rows, 3);
    EXPECT_NE(r.err.find("warning\trecord\tbad"), std::string::npos) << r.err;

    const auto out = std::filesystem::temp_directory_path() / "rnaname_cli_batch.tsv";
    EXPECT_EQ(run("batch '" + kData + "/three.fasta' --out '" + out.string() + "'").status, 0);
    EXPECT_EQ(slurp(out), r.out);
    std::filesystem::remove(out);

    r = run("batch /nonexistent.fasta");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.err.rfind("error\tio\t", 0), 0u);
}

TEST(Cli, EvalReport)
{
    const Outcome r = run("eval '" + kData + "/families5.tsv'");
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("\nbeta\t4\t0\tWVL\t3\t0.750000\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("# mean_coherence=0.770000 families=5/5\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("library=hexlib1:"), std::string::npos);
    EXPECT_EQ(run("eval '" + kData + "/families5.tsv'").out, r.out);
}

TEST(Cli, CollisionsIsReproducible)
{
    const Outcome a = run("collisions --n 2000 --len 22 --seed 7");
    EXPECT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(run("collisions --n 2000 --len 22 --seed 7").out, a.out);
    EXPECT_NE(a.out.find("\nn\t2000\n"), std::string::npos);
    EXPECT_NE(a.out.find("\nseed\t7\n"), std::string::npos);
}
