#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch_amalgamated.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "spikelss_cli";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run cli(const std::string& args) {
    const std::string bin = SPIKELSS_CLI;
    const auto out = workdir() / "stdout.txt", err = workdir() / "stderr.txt";
    const std::string cmd = "'" + bin + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), slurp(out), slurp(err)};
}

void single_error_line(const Run& r) {
    INFO(r.err);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

}  // namespace

TEST_CASE("asymptotics") {
    const auto r = cli("asymptotics");
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("p=100 n=300 M=1") != std::string::npos);
    CHECK(r.out.find("phi=5.4125") != std::string::npos);
    for (const char* t : {"null CLRT", "null CNTT", "null RLRT family=tw1", "alt RLRT", "power CNTT", "lss f_L"})
        CHECK(r.out.find(t) != std::string::npos);

    const auto twice = cli("asymptotics --set spikes.alpha1=8 --set moments.dist=gamma");
    REQUIRE(twice.code == 0);
    CHECK(twice.out.find("alpha=8") != std::string::npos);
    CHECK(twice.out.find("beta_x=1.5") != std::string::npos);
}

TEST_CASE("config errors exit with 2") {
    const auto cfg = workdir() / "bad.cfg";
    std::ofstream(cfg) << "[dims]\np = -5\n";
    auto r = cli("asymptotics --config '" + cfg.string() + "'");
    CHECK(r.code == 2);
    single_error_line(r);
    CHECK(r.err.find("schema_error") != std::string::npos);
    CHECK(r.err.find("dims.p must be positive") != std::string::npos);

    r = cli("asymptotics --set spikes.alpha1=1.2");
    CHECK(r.code == 2);
    single_error_line(r);
    CHECK(r.err.find("gate_violation") != std::string::npos);

    r = cli("asymptotics --set nope.key=1");
    CHECK(r.code == 2);
    single_error_line(r);

    r = cli("frobnicate");
    CHECK(r.code == 2);
    single_error_line(r);

    r = cli("curves --format png");
    CHECK(r.code == 2);
    single_error_line(r);
}

TEST_CASE("I/O errors exit with 4") {
    auto r = cli("asymptotics --config /nonexistent/run.cfg");
    CHECK(r.code == 4);
    single_error_line(r);
    CHECK(r.err.find("io_error") != std::string::npos);

    r = cli("test /nonexistent/data.csv");
    CHECK(r.code == 4);
    single_error_line(r);

    const auto blocker = workdir() / "blocker";
    std::ofstream(blocker) << "x";
    r = cli("curves --quiet --out '" + (blocker / "sub").string() + "'");
    CHECK(r.code == 4);
    single_error_line(r);
}

TEST_CASE("curves write csv and svg") {
    const auto out = workdir() / "curves";
    const auto r = cli("curves --quiet --out '" + out.string() + "' --set spikes.multipliers=1,0.9");
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("wrote") != std::string::npos);
    const auto csv = slurp(out / "curves.csv");
    CHECK(csv.rfind("alpha1,kappa_L,kappa_W,kappa_R\n", 0) == 0);
    const auto svg = slurp(out / "curves.svg");
    CHECK(svg.rfind("<svg", 0) == 0);

    REQUIRE(cli("curves --quiet --out '" + out.string() + "' --set spikes.multipliers=1,0.9").code == 0);
    CHECK(slurp(out / "curves.svg") == svg);
}

TEST_CASE("size run") {
    const auto out = workdir() / "size";
    const auto r = cli("size --reps 100 --set dims.p=20 --set dims.n=60 --out '" + out.string() + "' --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("test,dist,hypothesis,p,n,xi,alpha1,rate,stderr,reps\n", 0) == 0);
    CHECK(slurp(out / "size.csv") == r.out);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    CHECK(r.out.find(",H0,20,60,0.05,") != std::string::npos);

    const auto again = cli("size --reps 100 --set dims.p=20 --set dims.n=60 --out '" + out.string() + "' --format csv");
    CHECK(again.out == r.out);
}

TEST_CASE("test on a data file") {
    const auto data = workdir() / "data.csv";
    {
        std::ofstream f(data);
        // Deterministic, mildly structured p=4, n=12 data.
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 12; ++j) {
                const double x = std::sin(1.7 * (i + 1) * (j + 1)) * (i == 0 ? 3.0 : 1.0);
                f << (j ? "," : "") << x;
            }
            f << "\n";
        }
    }
    auto r = cli("test '" + data.string() + "'");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("p=4 n=12\n", 0) == 0);
    for (const char* t : {"CLRT xi=0.05", "CNTT xi=0.05", "RLRT xi=0.05", "pvalue="}) CHECK(r.out.find(t) != std::string::npos);

    r = cli("test --test CNTT '" + data.string() + "'");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("CLRT") == std::string::npos);

    const auto bad = workdir() / "bad.csv";
    std::ofstream(bad) << "1,2\n3\n";
    r = cli("test '" + bad.string() + "'");
    CHECK(r.code == 2);
    single_error_line(r);
}
