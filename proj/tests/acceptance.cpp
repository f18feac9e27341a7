// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line so a plain run of this binary reads as a checklist.

#include <catch2/catch.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include <json.hpp>

#include <rclosure/rclosure.hpp>
#include <rclosure/trace_json.hpp>

#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace rclosure;

namespace {

const RationalLine line;
constexpr std::uint64_t kSeed = 20250808;

Rational Q(const std::string& s) { return Rational::from_string(s); }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, const char* what, long long failures, double elapsed) {
    std::printf("[%s] criterion %d: %s (%lld failure%s, %.2fs)\n",
                failures == 0 ? "PASS" : "FAIL", criterion, what, failures,
                failures == 1 ? "" : "s", elapsed);
    std::fflush(stdout);
}

std::vector<SpecialTripleInstance> special_triple_instances() {
    std::vector<SpecialTripleInstance> out;
    for (std::uint64_t i = 0; i < 100; ++i)
        out.push_back(make_special_triple_instance(line, kSeed, i));
    return out;
}

} // namespace

TEST_CASE("criterion 1: encode/decode roundtrip over the first 300 rationals") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    const struct {
        const char* name;
        Coloring chi;
    } colorings[] = {
        {"sierpinski-pair", sierpinski_pair_coloring(line)},
        {"rank-hat-triple", rank_hat_triple_coloring(line)},
    };
    for (const auto& c : colorings) {
        const int k = c.chi.arity();
        std::set<std::string> traces;
        long long encoded = 0;
        for (long long rank = 1; rank <= 300; ++rank) {
            if (rank <= k - 1) continue;
            const Rational x = line.enumerate(rank);
            const EncodeOutcome outcome = encode(line, c.chi, x, 10000);
            ++encoded;
            if (!encode_terminated(outcome)) {
                ++failures;
                continue;
            }
            const Terminated& done = std::get<Terminated>(outcome);
            if (decode(line, c.chi, done.trace) != x) ++failures;
            if (!traces.insert(trace_to_json(done.trace)).second) ++failures;
        }
        if (static_cast<long long>(traces.size()) != encoded) ++failures;
    }

    const double elapsed = seconds_since(start);
    report(1, "encode/decode roundtrip, 300 points, two colorings", failures, elapsed);
    CHECK(failures == 0);
    CHECK(elapsed < 120.0);
}

TEST_CASE("criterion 2: the worked trace of -1 under the constant pair coloring") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    const Coloring chi = constant_coloring(2, 2);
    const EncodeOutcome outcome = encode(line, chi, Rational(-1), 10000);
    if (!encode_terminated(outcome)) {
        ++failures;
    } else {
        const Terminated& done = std::get<Terminated>(outcome);
        EncodingTrace expected;
        expected.k = 2;
        expected.steps = 1;
        expected.theta[1] = 2;
        expected.delta[{1}] = 0;
        if (!(done.trace == expected)) ++failures;
        if (trace_to_json(done.trace) !=
            R"({"k":2,"s":1,"theta":{"1":2},"delta":[{"indices":[1],"color":0}]})")
            ++failures;
        if (decode(line, chi, done.trace) != Rational(-1)) ++failures;
    }

    report(2, "worked trace: s=1, theta={1->2}, delta={{1}->0}, decodes to -1", failures,
           seconds_since(start));
    CHECK(failures == 0);
}

TEST_CASE("criterion 3: special triples found on 100 seeded hub instances") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    for (const auto& inst : special_triple_instances()) {
        const auto triple = find_special_triple(line, inst.points, inst.hub);
        if (!triple) {
            ++failures;
            continue;
        }
        if (!(triple->r1 < triple->r2 && triple->r2 < triple->r3)) ++failures;
        else if (!is_special_triple(line, *triple)) ++failures;
    }

    report(3, "find_special_triple succeeds with exact invariants on 100 instances", failures,
           seconds_since(start));
    CHECK(failures == 0);
}

TEST_CASE("criterion 4: every found triple colors its pairs (1, 0)") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    for (const auto& inst : special_triple_instances()) {
        const auto triple = find_special_triple(line, inst.points, inst.hub);
        if (!triple) {
            ++failures;
            continue;
        }
        if (eval_sierpinski_pair(line, KSubset{triple->r1, triple->r2}) != 1) ++failures;
        if (eval_sierpinski_pair(line, KSubset{triple->r2, triple->r3}) != 0) ++failures;
    }

    report(4, "pair colors are 1 then 0 on all 100 triples", failures, seconds_since(start));
    CHECK(failures == 0);
}

TEST_CASE("criterion 5: all-zero triples exist only below size 4") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    for (const auto& inst : special_triple_instances()) {
        const auto triple = find_special_triple(line, inst.points, inst.hub);
        if (!triple || eval_rank_hat_triple(line, KSubset{triple->r1, triple->r2, triple->r3}) != 0)
            ++failures;
    }

    std::vector<Rational> pts;
    for (long long n = 1; n <= 40; ++n) pts.push_back(line.enumerate(n));
    if (check_no_all_zero_quad(line, pts).has_value()) ++failures;

    const double elapsed = seconds_since(start);
    report(5, "triples color 0; no all-zero quad among C(40,4) = 91390 candidates", failures,
           elapsed);
    CHECK(failures == 0);
    CHECK(elapsed < 30.0);
}

TEST_CASE("criterion 6: two-cluster refutations with the exact distance chain") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    const Rational hs[] = {Rational(1), Q("1/3"), Q("7/2")};
    for (std::uint64_t i = 0; i < 50; ++i) {
        const Rational& h = hs[i % 3];
        const ClusterSpec cluster = make_cluster_instance(kSeed, i, h);
        const TwoLimitRefutation ref = refute_two_limits(cluster);
        if (ref.one_color != 1 || ref.zero_color != 0) ++failures;
        if (!(abs(ref.one_triple[0] - ref.one_triple[1]) > Rational(3) * h / Rational(5)))
            ++failures;
        if (!(abs(ref.one_triple[1] - ref.one_triple[2]) <= Rational(2) * h / Rational(5)))
            ++failures;
    }

    report(6, "50 seeded refutations: colors (1,0) and |r1-r2| > 3h/5 >= ... >= |r2-r3|", failures,
           seconds_since(start));
    CHECK(failures == 0);
}

TEST_CASE("criterion 7: extraction soundness on 100 inherited colorings") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto inst = instances::make_inherited_instance(line, kSeed, i);
        if (validate_monotone(inst.seq, inst.chi)) {
            ++failures; // generator must produce monotone-valid instances
            continue;
        }
        const auto set = erdos_rado_extract(line, inst.seq, inst.chi, 4);
        if (!set) {
            ++failures;
            continue;
        }
        if (std::find(set->begin(), set->end(), inst.seq.limit_candidate) == set->end()) ++failures;
        // exhaustive verification under the original coloring
        if (!oracles::brute_monochromatic(line, *set, inst.chi, set->size())) ++failures;
    }

    report(7, "extraction output exhaustively monochromatic on 100 instances", failures,
           seconds_since(start));
    CHECK(failures == 0);
}

TEST_CASE("criterion 8: classical finite checks on 6 and 5 points") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    std::vector<Rational> six;
    for (long long n = 1; n <= 6; ++n) six.push_back(line.enumerate(n));
    std::map<Rational, int> position;
    for (int i = 0; i < 6; ++i) position.emplace(six[static_cast<std::size_t>(i)], i);

    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        int edge_bit[36];
        int bit = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) edge_bit[a * 6 + b] = static_cast<int>((mask >> bit++) & 1u);
        const Coloring chi(2, 2, [&](const KSubset& s) {
            int a = position.at(s[0]), b = position.at(s[1]);
            if (a > b) std::swap(a, b);
            return edge_bit[a * 6 + b];
        });
        const auto found = find_monochromatic(line, six, chi, 3);
        if (!found) ++failures;
        // independent oracle: direct scan over the 20 triples of the mask
        bool oracle_found = false;
        for (int a = 0; a < 6 && !oracle_found; ++a)
            for (int b = a + 1; b < 6 && !oracle_found; ++b)
                for (int c = b + 1; c < 6 && !oracle_found; ++c)
                    if (edge_bit[a * 6 + b] == edge_bit[a * 6 + c] &&
                        edge_bit[a * 6 + c] == edge_bit[b * 6 + c])
                        oracle_found = true;
        if (!oracle_found) ++failures;
        if (found.has_value() != oracle_found) ++failures;
    }

    std::vector<Rational> five(six.begin(), six.begin() + 5);
    const Coloring pentagon(2, 2, [&](const KSubset& s) {
        const int d = std::abs(position.at(s[0]) - position.at(s[1]));
        return (d == 1 || d == 4) ? 1 : 0;
    });
    if (find_monochromatic(line, five, pentagon, 3).has_value()) ++failures;

    const double elapsed = seconds_since(start);
    report(8, "all 32768 colorings of 6 points contain a triangle; the pentagon has none",
           failures, elapsed);
    CHECK(failures == 0);
    CHECK(elapsed < 10.0);
}

TEST_CASE("criterion 9: search agrees with the brute-force oracle on 200 instances") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto inst = instances::make_search_instance(line, kSeed, i);
        const auto fast = find_monochromatic(line, inst.points, inst.chi, inst.m);
        const auto slow = oracles::brute_monochromatic(line, inst.points, inst.chi, inst.m);
        if (fast.has_value() != slow.has_value()) ++failures;
        else if (fast && *fast != *slow) ++failures;
    }

    report(9, "exact agreement on existence and rank-lexicographic witness", failures,
           seconds_since(start));
    CHECK(failures == 0);
}

TEST_CASE("criterion 10: verify-claims reports are byte-identical across runs") {
    const auto start = std::chrono::steady_clock::now();
    long long failures = 0;

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "rclosure-acceptance";
    fs::create_directories(dir);
    const fs::path cfg_path = dir / "claims-config.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"n": 40, "special_triples": 100, "clusters": 50, "seed": 20250808})" << "\n";
    }

    const auto run_once = [&](const fs::path& out) {
        const std::string command = std::string(RCLOSURE_CLI_PATH) + " verify-claims --config " +
                                    cfg_path.string() + " --out " + out.string() + " > " +
                                    (dir / "stdout.txt").string() + " 2>&1";
        const int status = std::system(command.c_str());
        return (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    };
    const auto body = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        const auto newline = text.find('\n');
        return newline == std::string::npos ? std::string() : text.substr(newline + 1);
    };

    const fs::path out1 = dir / "claims-1.json";
    const fs::path out2 = dir / "claims-2.json";
    if (run_once(out1) != 0) ++failures;
    if (run_once(out2) != 0) ++failures;
    const std::string body1 = body(out1);
    const std::string body2 = body(out2);
    if (body1.empty() || body1 != body2) ++failures;

    report(10, "two verify-claims runs differ only in the wall-time header", failures,
           seconds_since(start));
    CHECK(failures == 0);
}
