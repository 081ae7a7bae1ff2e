#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kummer/arith.hpp"
#include "kummer/padic.hpp"

namespace kummer {

// Supplies B(n)/n mod p^k. Implementations must agree wherever their domains
// overlap; tests substitute synthetic ones to reach the singular branch.
class BernoulliModOracle {
public:
    virtual ~BernoulliModOracle() = default;
    virtual PadicApprox divided_bernoulli_mod(const Integer& n, std::uint64_t p, int k) const = 0;
};

// Reduces the exact rational B(n)/n. Indices above max_index are rejected.
class ExactOracle final : public BernoulliModOracle {
public:
    explicit ExactOracle(std::uint64_t max_index = 1000000) : max_index_(max_index) {}
    PadicApprox divided_bernoulli_mod(const Integer& n, std::uint64_t p, int k) const override;
    std::uint64_t max_index() const { return max_index_; }

private:
    std::uint64_t max_index_;
};

const ExactOracle& exact_oracle();

// (p, l) with 2 <= l < phi(p^order), l even. The constructor checks shape only;
// membership p^order | B(l)/l is checked by certify().
struct IrregularPair {
    std::uint64_t p;
    Integer l;
    unsigned order;

    IrregularPair(std::uint64_t p, const Integer& l, unsigned order = 1);
    Integer phi() const { return phi_prime_power(p, order); }
    std::string str() const;  // "(p,l)"
    friend bool operator==(const IrregularPair& a, const IrregularPair& b) {
        return a.p == b.p && a.order == b.order && a.l == b.l;
    }
};

bool is_member(const IrregularPair& pair, const BernoulliModOracle& oracle = exact_oracle());
// Throws PreconditionError unless p^order | B(l)/l.
IrregularPair certify(std::uint64_t p, const Integer& l, unsigned order = 1,
                      const BernoulliModOracle& oracle = exact_oracle());

// p-adic notation (p, s_1, ..., s_n) with l = s_1 + sum_{v>=2} s_v phi(p^(v-1)).
struct DigitPair {
    std::uint64_t p;
    std::vector<std::uint64_t> digits;

    DigitPair(std::uint64_t p, std::vector<std::uint64_t> digits);
    static DigitPair from_pair(const IrregularPair& pair);

    unsigned order() const { return static_cast<unsigned>(digits.size()); }
    Integer index() const;
    IrregularPair pair() const { return IrregularPair(p, index(), order()); }
    DigitPair truncated(unsigned n) const;
    std::string str() const;  // "(p,s_1,...,s_n)"
    friend bool operator==(const DigitPair&, const DigitPair&) = default;
};

struct DeltaValue {
    std::uint64_t p;
    Integer l;
    unsigned order;
    std::uint64_t value;  // in [0, p)
    bool singular() const { return value == 0; }
};

// alpha_j = p^-n B(l + j phi(p^n)) / (l + j phi(p^n)) mod p^precision for j = start .. start+count-1.
std::vector<PadicApprox> alpha_sequence(const IrregularPair& pair, std::uint64_t start, std::size_t count,
                                        int precision, const BernoulliModOracle& oracle = exact_oracle());

std::vector<std::uint64_t> scan_irregular(std::uint64_t p);
// All order-1 irregular pairs with p <= bound, sorted by (p, l).
std::vector<IrregularPair> irregular_pairs_up_to(std::uint64_t bound);

DeltaValue delta(const IrregularPair& pair, const BernoulliModOracle& oracle = exact_oracle());

IrregularPair lambda_map(const IrregularPair& pair);
// [(p,l_n,n), (p,l_{n-1},n-1), ..., (p,l_1,1)]
std::vector<IrregularPair> chain_of_pair(const IrregularPair& pair);

struct NoDescendant {};
struct AllChildren {
    std::vector<IrregularPair> children;
};
struct UniqueChild {
    std::uint64_t s;
    IrregularPair child;
};
using NextOrder = std::variant<NoDescendant, AllChildren, UniqueChild>;

NextOrder next_order(const IrregularPair& pair, const BernoulliModOracle& oracle = exact_oracle());

// Intermediate data of one lifting run.
struct LiftTrace {
    std::vector<Integer> indices;  // Bernoulli indices feeding the initial sequence
    std::vector<Integer> initial;  // alpha_{j,0} mod p^u
    int precision = 0;             // u
    std::uint64_t delta = 0;
    std::uint64_t shift = 0;
    std::vector<std::uint64_t> digits;  // s_0 .. s_{u-1}
};

// Lifts an order-n pair to its unique related pair of order r*n. Requires
// Delta != 0 and l > (r-1) n.
DigitPair lift_order(const IrregularPair& pair, unsigned r, const BernoulliModOracle& oracle = exact_oracle(),
                     LiftTrace* trace = nullptr);

struct ShiftOptions {
    std::optional<std::uint64_t> forced_shift;
    bool reconcile = true;  // cross-check against an unshifted run at lower r
};

// Like lift_order, but starts the sequence at j = t with the least t making
// l + t phi(p^n) > (r-1) n, so any r is reachable.
DigitPair lift_with_shift(const IrregularPair& pair, unsigned r, const BernoulliModOracle& oracle = exact_oracle(),
                          const ShiftOptions& options = {}, LiftTrace* trace = nullptr);

// Rooted p-ary tree of related pairs below a singular pair.
struct SingularTree {
    IrregularPair node;
    std::vector<SingularTree> children;  // empty or exactly p entries

    unsigned height() const;
    std::size_t leaf_count() const;
};

SingularTree build_singular_tree(const IrregularPair& root, unsigned depth,
                                 const BernoulliModOracle& oracle = exact_oracle());

// Height of the deepest node (p, n mod phi(p^v)) in the tree.
unsigned singular_height(const SingularTree& tree, const Integer& n);

}  // namespace kummer
