#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kummer/pairs.hpp"

namespace kummer::cli {

// Desk-scale limits for table generation.
inline constexpr std::uint64_t kMaxPrime = 1000;
inline constexpr unsigned kMaxOrder = 10;
inline constexpr unsigned kMaxLongOrder = 100;  // only for p in kLongOrderPrimes
inline constexpr std::uint64_t kLongOrderPrimes[] = {37, 59, 67};

struct TableRow {
    std::uint64_t p;
    std::uint64_t l;
    std::uint64_t delta;
    std::vector<std::uint64_t> digits;  // s_1 .. s_order
};

// Irregular pairs p < pmax lifted to the given order, sorted by (p, l).
std::vector<TableRow> irregular_table(std::uint64_t pmax, unsigned order);
TableRow lifted_row(std::uint64_t p, std::uint64_t l, unsigned order);

std::string render_a1_tsv();
nlohmann::json a1_json();

std::string render_a3_tsv(const std::vector<TableRow>& rows);
// Digits in rows of ten, prefixed by the offset of the row.
std::string render_a2_tsv(const TableRow& row);
nlohmann::json rows_json(const std::vector<TableRow>& rows);

// Intermediate values of the three worked lifting runs for (37, 32).
enum class Trace { A4, A5, A6 };
std::string render_trace_tsv(Trace t);

}  // namespace kummer::cli
