#include "tables.hpp"

#include <fmt/format.h>

#include "kummer/bernoulli.hpp"
#include "kummer/zeta.hpp"

namespace kummer::cli {

namespace {

constexpr std::uint64_t kA1Indices[] = {0, 1, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};

std::string join(const std::vector<std::uint64_t>& v, const char* sep) { return fmt::format("{}", fmt::join(v, sep)); }

std::string residue(const PadicApprox& x) { return x.residue().get_str(); }

}  // namespace

TableRow lifted_row(std::uint64_t p, std::uint64_t l, unsigned order) {
    const IrregularPair pair = certify(p, from_u64(l));
    TableRow row{p, l, delta(pair).value, {}};
    if (order == 1)
        row.digits = {l};
    else
        row.digits = lift_with_shift(pair, order).digits;
    return row;
}

std::vector<TableRow> irregular_table(std::uint64_t pmax, unsigned order) {
    std::vector<TableRow> rows;
    for (const auto& pair : irregular_pairs_up_to(pmax)) {
        if (pair.p >= pmax) continue;
        rows.push_back(lifted_row(pair.p, to_u64(pair.l), order));
    }
    return rows;
}

std::string render_a1_tsv() {
    std::string out = "n\tB_n\tB_n/n\n";
    for (std::uint64_t n : kA1Indices) {
        const std::string bhat = n >= 2 ? divided_bernoulli(n).str() : "";
        out += fmt::format("{}\t{}\t{}\n", n, bernoulli(n).str(), bhat);
    }
    return out;
}

nlohmann::json a1_json() {
    auto rows = nlohmann::json::array();
    for (std::uint64_t n : kA1Indices) {
        nlohmann::json r{{"n", n}, {"bernoulli", bernoulli(n).str()}, {"provenance", "exact"}};
        r["divided"] = n >= 2 ? nlohmann::json(divided_bernoulli(n).str()) : nlohmann::json(nullptr);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string render_a3_tsv(const std::vector<TableRow>& rows) {
    std::string out = "(p,l)\tDelta";
    const std::size_t width = rows.empty() ? kMaxOrder : rows.front().digits.size();
    for (std::size_t i = 1; i <= width; ++i) out += fmt::format("\ts{}", i);
    out += '\n';
    for (const auto& r : rows) out += fmt::format("({},{})\t{}\t{}\n", r.p, r.l, r.delta, join(r.digits, "\t"));
    return out;
}

std::string render_a2_tsv(const TableRow& row) {
    std::string out = "offset\t1\t2\t3\t4\t5\t6\t7\t8\t9\t10\n";
    for (std::size_t i = 0; i < row.digits.size(); i += 10) {
        const auto end = std::min(row.digits.size(), i + 10);
        std::vector<std::uint64_t> chunk(row.digits.begin() + i, row.digits.begin() + end);
        out += fmt::format("{}\t{}\n", i, join(chunk, "\t"));
    }
    return out;
}

nlohmann::json rows_json(const std::vector<TableRow>& rows) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back({{"p", r.p}, {"l", r.l}, {"delta", r.delta}, {"digits", r.digits}, {"provenance", "lift"}});
    return out;
}

std::string render_trace_tsv(Trace t) {
    const std::uint64_t p = 37;
    std::string out;
    if (t == Trace::A4) {
        const IrregularPair pair = certify(p, 32);
        const auto a = alpha_sequence(pair, 0, 4, 3);
        out = "j\tindex\talpha\tdiff_p3\tdiff_p2\n";
        for (std::size_t j = 0; j < a.size(); ++j) {
            const Integer idx = pair.l + pair.phi() * static_cast<unsigned long>(j);
            if (j + 1 < a.size()) {
                const PadicApprox d = a[j + 1] - a[j];
                out += fmt::format("{}\t{}\t{}\t{}\t{}\n", j, idx.get_str(), residue(a[j]), residue(d),
                                   residue(d.truncate(2)));
            } else {
                out += fmt::format("{}\t{}\t{}\t\t\n", j, idx.get_str(), residue(a[j]));
            }
        }
        const DigitPair lifted = lift_order(pair, 3);
        const std::vector<std::uint64_t> s(lifted.digits.begin() + 1, lifted.digits.end());
        out += fmt::format("delta\t{}\n", delta(pair).value);
        out += fmt::format("s\t{}\n", from_base_p_digits(s, p).get_str());
        out += fmt::format("l_3\t{}\n", lifted.index().get_str());
        out += fmt::format("pair\t{}\n", lifted.str());
        return out;
    }

    const auto& oracle = hybrid_oracle();
    const IrregularPair pair = certify(p, 37580, 3, oracle);
    if (t == Trace::A5) {
        const auto a = alpha_sequence(pair, 0, 3, 3, oracle);
        out = "j\tindex\talpha\tdiff_p3\n";
        for (std::size_t j = 0; j < a.size(); ++j) {
            const Integer idx = pair.l + pair.phi() * static_cast<unsigned long>(j);
            const std::string d = j + 1 < a.size() ? residue(a[j + 1] - a[j]) : "";
            out += fmt::format("{}\t{}\t{}\t{}\n", j, idx.get_str(), residue(a[j]), d);
        }
        const DigitPair lifted = lift_order(pair, 2, oracle);
        const std::vector<std::uint64_t> s(lifted.digits.begin() + 3, lifted.digits.end());
        out += fmt::format("delta\t{}\n", delta(pair, oracle).value);
        out += fmt::format("s\t{}\n", from_base_p_digits(s, p).get_str());
        for (const auto& c : chain_of_pair(lifted.pair())) {
            if (c.order < 4) break;
            out += fmt::format("l_{}\t{}\n", c.order, c.l.get_str());
        }
        out += fmt::format("pair\t{}\n", lifted.str());
        return out;
    }

    LiftTrace trace;
    const DigitPair lifted = lift_order(pair, 4, oracle, &trace);
    out = "j\tindex\talpha\n";
    for (std::size_t j = 0; j < trace.initial.size(); ++j)
        out += fmt::format("{}\t{}\t{}\n", j, trace.indices[j].get_str(), trace.initial[j].get_str());
    const std::vector<std::uint64_t> s(lifted.digits.begin() + 3, lifted.digits.end());
    out += fmt::format("digits\t{}\n", join(s, ","));
    out += fmt::format("pair\t{}\n", lifted.str());
    return out;
}

}  // namespace kummer::cli
