// kummer: Bernoulli numbers, irregular pairs and their p-adic structure from the command line.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "kummer/bernoulli.hpp"
#include "kummer/errors.hpp"
#include "kummer/pairs.hpp"
#include "kummer/primes.hpp"
#include "suites.hpp"
#include "tables.hpp"

namespace {

using namespace kummer;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct BnArgs {
    std::uint64_t n = 0;
    std::string mod;
    bool via_zeta = false;
};

struct TableArgs {
    std::string kind;
    std::uint64_t pmax = cli::kMaxPrime;
    unsigned order = cli::kMaxOrder;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> l;
    std::string format = "tsv";
};

struct VerifyArgs {
    std::string suite;
    cli::SuiteOptions options;
    std::string format = "text";
};

// "p^k" or "p"
std::pair<std::uint64_t, int> parse_modulus(const std::string& s) {
    const auto caret = s.find('^');
    try {
        const std::uint64_t p = std::stoull(s.substr(0, caret));
        const int k = caret == std::string::npos ? 1 : std::stoi(s.substr(caret + 1));
        require(is_prime(p) && k >= 1, "modulus must be a prime power p^k");
        return {p, k};
    } catch (const std::logic_error&) {
        throw PreconditionError("cannot parse modulus '" + s + "', expected p^k");
    }
}

int cmd_bn(const BnArgs& a) {
    Rational b;
    if (a.via_zeta) {
        require(a.n >= 2 && a.n % 2 == 0, "--via-zeta needs an even index >= 2");
        b = bernoulli_via_zeta(a.n);
    } else {
        b = bernoulli(a.n);
    }
    if (a.mod.empty()) {
        fmt::print("{}\n", b.str());
        return 0;
    }
    const auto [p, k] = parse_modulus(a.mod);
    require(ord_p(b, p) >= Valuation(0), fmt::format("B_{} is not {}-integral", a.n, p));
    fmt::print("{}\n", PadicApprox::from_rational(b, p, k).residue().get_str());
    return 0;
}

std::uint64_t single_pair_index(std::uint64_t p, std::optional<std::uint64_t> l) {
    const auto ls = scan_irregular(p);
    require(!ls.empty(), fmt::format("{} is a regular prime", p));
    if (l) {
        require(std::find(ls.begin(), ls.end(), *l) != ls.end(), fmt::format("({},{}) is not irregular", p, *l));
        return *l;
    }
    require(ls.size() == 1, fmt::format("{} has {} irregular pairs; choose one with --l", p, ls.size()));
    return ls.front();
}

int cmd_table(const TableArgs& a) {
    const bool json = a.format == "json";
    if (a.kind == "A1") {
        std::cout << (json ? cli::a1_json().dump(2) + "\n" : cli::render_a1_tsv());
        return 0;
    }
    if (a.kind == "A3") {
        require(a.pmax >= 3 && a.pmax <= cli::kMaxPrime, fmt::format("--pmax must be in [3, {}]", cli::kMaxPrime));
        require(a.order >= 1 && a.order <= cli::kMaxOrder, fmt::format("--order must be in [1, {}]", cli::kMaxOrder));
        const auto rows = cli::irregular_table(a.pmax, a.order);
        std::cout << (json ? cli::rows_json(rows).dump(2) + "\n" : cli::render_a3_tsv(rows));
        return 0;
    }
    if (a.kind == "A2") {
        require(a.p.has_value(), "table A2 needs --p");
        const std::uint64_t p = *a.p;
        require(p < cli::kMaxPrime && is_prime(p), fmt::format("--p must be a prime below {}", cli::kMaxPrime));
        const bool long_ok = std::find(std::begin(cli::kLongOrderPrimes), std::end(cli::kLongOrderPrimes), p) !=
                             std::end(cli::kLongOrderPrimes);
        const unsigned cap = long_ok ? cli::kMaxLongOrder : cli::kMaxOrder;
        require(a.order >= 1 && a.order <= cap, fmt::format("--order must be in [1, {}] for p = {}", cap, p));
        const auto row = cli::lifted_row(p, single_pair_index(p, a.l), a.order);
        std::cout << (json ? cli::rows_json({row}).dump(2) + "\n" : cli::render_a2_tsv(row));
        return 0;
    }
    require(!json, "trace tables are TSV only");
    const cli::Trace t = a.kind == "A4" ? cli::Trace::A4 : a.kind == "A5" ? cli::Trace::A5 : cli::Trace::A6;
    std::cout << cli::render_trace_tsv(t);
    return 0;
}

int cmd_verify(const VerifyArgs& a) {
    const auto checks = cli::run_suite(a.suite, a.options);
    const std::size_t failed = cli::failures(checks);
    if (a.format == "json") {
        std::cout << cli::checks_json(a.suite, checks).dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            fmt::print("{} {} [{}] {}\n", c.passed ? "PASS" : "FAIL", c.name, c.provenance, c.detail);
        fmt::print("{}: {} of {} checks passed\n", a.suite, checks.size() - failed, checks.size());
    }
    return failed == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernoulli numbers, irregular pairs and p-adic zeta values"};
    app.require_subcommand(1);
    std::string cache_path;
    if (const char* env = std::getenv("BERNOULLI_CACHE")) cache_path = env;
    app.add_option("--cache", cache_path, "Bernoulli cache file (default: $BERNOULLI_CACHE)");

    BnArgs bn;
    auto* bn_cmd = app.add_subcommand("bn", "Print B_n, or its residue modulo p^k");
    bn_cmd->add_option("n", bn.n, "index")->required();
    bn_cmd->add_option("--mod", bn.mod, "reduce modulo p^k, written as p^k");
    bn_cmd->add_flag("--via-zeta", bn.via_zeta, "use the zeta rounding method");

    TableArgs tb;
    auto* tb_cmd = app.add_subcommand("table", "Print a table of Bernoulli data or irregular pairs");
    tb_cmd->add_option("kind", tb.kind, "A1 | A2 | A3 | A4 | A5 | A6")
        ->required()
        ->check(CLI::IsMember({"A1", "A2", "A3", "A4", "A5", "A6"}));
    tb_cmd->add_option("--pmax", tb.pmax, "primes below this bound (A3)");
    tb_cmd->add_option("--order", tb.order, "number of digits s_1 .. s_order");
    tb_cmd->add_option("--p", tb.p, "prime (A2)");
    tb_cmd->add_option("--l", tb.l, "irregular index, when p has several (A2)");
    tb_cmd->add_option("--format", tb.format)->check(CLI::IsMember({"tsv", "json"}));

    VerifyArgs vf;
    auto* vf_cmd = app.add_subcommand("verify", "Run a verification suite");
    vf_cmd->add_option("suite", vf.suite)->required()->check(CLI::IsMember(cli::suite_names()));
    vf_cmd->add_option("--pmax", vf.options.pmax, "prime bound");
    vf_cmd->add_option("--nmax", vf.options.nmax, "index bound");
    vf_cmd->add_option("--samples", vf.options.samples, "random instances");
    vf_cmd->add_option("--seed", vf.options.seed, "random seed")->capture_default_str();
    vf_cmd->add_option("--format", vf.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    int rc = 0;
    try {
        if (!cache_path.empty()) global_cache().load(cache_path);
        if (*bn_cmd) rc = cmd_bn(bn);
        if (*tb_cmd) rc = cmd_table(tb);
        if (*vf_cmd) rc = cmd_verify(vf);
        if (!cache_path.empty() && global_cache().dirty()) global_cache().save(cache_path);
    } catch (const PreconditionError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitFail;
    }
    return rc;
}
