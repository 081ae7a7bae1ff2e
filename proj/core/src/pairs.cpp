#include "kummer/pairs.hpp"

#include <algorithm>
#include <string>

#include "kummer/bernoulli.hpp"
#include "kummer/errors.hpp"
#include "kummer/primes.hpp"

namespace kummer {

PadicApprox ExactOracle::divided_bernoulli_mod(const Integer& n, std::uint64_t p, int k) const {
    require(n >= 2 && fits_u64(n) && to_u64(n) <= max_index_,
            "exact oracle index " + n.get_str() + " outside [2, " + std::to_string(max_index_) + "]");
    return kummer::divided_bernoulli_mod(to_u64(n), p, k);
}

const ExactOracle& exact_oracle() {
    static const ExactOracle oracle;
    return oracle;
}

IrregularPair::IrregularPair(std::uint64_t p_, const Integer& l_, unsigned order_) : p(p_), l(l_), order(order_) {
    require(p >= 3 && is_prime(p), "irregular pair needs an odd prime, got " + std::to_string(p));
    require(order >= 1, "irregular pair order must be >= 1");
    require(l >= 2 && l % 2 == 0, "irregular pair index must be even and >= 2, got " + l.get_str());
    require(l < phi_prime_power(p, order), "index " + l.get_str() + " not below phi(" + std::to_string(p) +
                                               "^" + std::to_string(order) + ")");
}

std::string IrregularPair::str() const { return "(" + std::to_string(p) + "," + l.get_str() + ")"; }

bool is_member(const IrregularPair& pair, const BernoulliModOracle& oracle) {
    return oracle.divided_bernoulli_mod(pair.l, pair.p, static_cast<int>(pair.order)).is_zero();
}

IrregularPair certify(std::uint64_t p, const Integer& l, unsigned order, const BernoulliModOracle& oracle) {
    IrregularPair pair(p, l, order);
    require(is_member(pair, oracle), pair.str() + " is not an irregular pair of order " + std::to_string(order));
    return pair;
}

DigitPair::DigitPair(std::uint64_t p_, std::vector<std::uint64_t> digits_) : p(p_), digits(std::move(digits_)) {
    require(p >= 5 && is_prime(p), "digit pair needs a prime >= 5");
    require(!digits.empty(), "digit pair needs at least one digit");
    require(digits[0] >= 2 && digits[0] <= p - 3 && digits[0] % 2 == 0, "first digit must be even in [2, p-3]");
    for (std::uint64_t s : digits) require(s < p, "digit out of range");
}

DigitPair DigitPair::from_pair(const IrregularPair& pair) {
    const std::uint64_t p = pair.p;
    std::vector<std::uint64_t> d{mod_u64(pair.l, p - 1)};
    Integer rest = (pair.l - d[0]) / (p - 1);
    auto tail = base_p_digits(rest, p, pair.order - 1);
    d.insert(d.end(), tail.begin(), tail.end());
    return DigitPair(p, std::move(d));
}

Integer DigitPair::index() const {
    std::vector<std::uint64_t> tail(digits.begin() + 1, digits.end());
    return digits[0] + from_u64(p - 1) * from_base_p_digits(tail, p);
}

DigitPair DigitPair::truncated(unsigned n) const {
    require(n >= 1 && n <= order(), "cannot truncate to order " + std::to_string(n));
    return DigitPair(p, std::vector<std::uint64_t>(digits.begin(), digits.begin() + n));
}

std::string DigitPair::str() const {
    std::string out = "(" + std::to_string(p);
    for (std::uint64_t s : digits) out += "," + std::to_string(s);
    return out + ")";
}

std::vector<PadicApprox> alpha_sequence(const IrregularPair& pair, std::uint64_t start, std::size_t count,
                                        int precision, const BernoulliModOracle& oracle) {
    require(precision >= 1, "alpha precision must be >= 1");
    const int n = static_cast<int>(pair.order);
    const Integer phi = pair.phi();
    std::vector<PadicApprox> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        Integer idx = pair.l + (start + j) * phi;
        PadicApprox b = oracle.divided_bernoulli_mod(idx, pair.p, precision + n);
        require(b.valuation() >= Valuation(n),
                pair.str() + " is not an irregular pair of order " + std::to_string(n));
        out.push_back(b.divide_by_p(n));
    }
    return out;
}

std::vector<std::uint64_t> scan_irregular(std::uint64_t p) {
    require(p >= 3 && is_prime(p), "scan needs an odd prime, got " + std::to_string(p));
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 2; l + 3 <= p; l += 2)
        if (kummer::divided_bernoulli_mod(l, p, 1).is_zero()) out.push_back(l);
    return out;
}

std::vector<IrregularPair> irregular_pairs_up_to(std::uint64_t bound) {
    std::vector<IrregularPair> out;
    for (std::uint64_t p : primes_up_to(bound)) {
        if (p < 3) continue;
        for (std::uint64_t l : scan_irregular(p)) out.emplace_back(p, from_u64(l), 1);
    }
    return out;
}

DeltaValue delta(const IrregularPair& pair, const BernoulliModOracle& oracle) {
    auto a = alpha_sequence(pair, 0, 2, 1, oracle);
    std::uint64_t d = mod_u64((a[1] - a[0]).residue(), pair.p);
    return DeltaValue{pair.p, pair.l, pair.order, d};
}

IrregularPair lambda_map(const IrregularPair& pair) {
    require(pair.order >= 2, "lambda map needs order >= 2");
    const unsigned m = pair.order - 1;
    return IrregularPair(pair.p, mod_floor(pair.l, phi_prime_power(pair.p, m)), m);
}

std::vector<IrregularPair> chain_of_pair(const IrregularPair& pair) {
    std::vector<IrregularPair> out{pair};
    while (out.back().order > 1) out.push_back(lambda_map(out.back()));
    return out;
}

NextOrder next_order(const IrregularPair& pair, const BernoulliModOracle& oracle) {
    auto a = alpha_sequence(pair, 0, 2, 1, oracle);
    const std::uint64_t p = pair.p;
    const std::uint64_t a0 = mod_u64(a[0].residue(), p);
    const std::uint64_t d = mod_u64((a[1] - a[0]).residue(), p);
    const Integer phi = pair.phi();
    if (d == 0) {
        if (a0 != 0) return NoDescendant{};
        AllChildren all;
        for (std::uint64_t nu = 0; nu < p; ++nu) all.children.emplace_back(p, pair.l + nu * phi, pair.order + 1);
        return all;
    }
    // s = -alpha_0 / Delta mod p
    Integer s = mod_floor(-Integer(a0) * mod_inverse(Integer(d), Integer(p)), Integer(p));
    const std::uint64_t su = to_u64(s);
    return UniqueChild{su, IrregularPair(p, pair.l + su * phi, pair.order + 1)};
}

namespace {

// Runs the stepwise lift on alpha'_j = alpha_{j + shift} and returns s_0 .. s_{u-1}.
std::vector<std::uint64_t> lift_digits(const IrregularPair& pair, unsigned r, std::uint64_t shift,
                                       const BernoulliModOracle& oracle, LiftTrace* trace) {
    require(r >= 2, "lift multiplier r must be >= 2");
    const std::uint64_t p = pair.p;
    const int u = static_cast<int>((r - 1) * pair.order);
    const Integer phi = pair.phi();
    require(pair.l + shift * phi > u, "lift needs l + t phi(p^n) > (r-1) n; got l = " + pair.l.get_str() +
                                          ", t = " + std::to_string(shift) + ", (r-1) n = " + std::to_string(u));

    auto init = alpha_sequence(pair, shift, r, u, oracle);
    const Integer P(p);
    const std::uint64_t d = mod_u64((init[1] - init[0]).residue(), p);
    if (d == 0) throw SingularDeltaError("Delta of " + pair.str() + " is singular; no unique lift");
    const Integer d_inv = mod_inverse(Integer(d), P);

    // alpha_{j+r} = sum_{nu<r} coef[nu] alpha_{j+nu}, coef[nu] = (-1)^(r+1+nu) C(r,nu)
    std::vector<Integer> coef(r);
    for (unsigned nu = 0; nu < r; ++nu) {
        coef[nu] = binomial(Integer(r), nu);
        if ((r + 1 + nu) % 2 == 1) coef[nu] = -coef[nu];
    }

    std::vector<Integer> cur(r);
    for (unsigned j = 0; j < r; ++j) cur[j] = init[j].residue();
    if (trace) {
        trace->indices.clear();
        for (unsigned j = 0; j < r; ++j) trace->indices.push_back(pair.l + (shift + j) * phi);
        trace->initial = cur;
        trace->precision = u;
        trace->delta = d;
        trace->shift = shift;
    }

    std::vector<std::uint64_t> digits;
    digits.reserve(u);
    std::uint64_t t = shift;
    std::vector<Integer> seq;
    Integer acc;
    for (int k = 0; k < u; ++k) {
        const Integer mod = pow_u(p, static_cast<std::uint64_t>(u - k));
        seq.assign(cur.begin(), cur.end());
        auto extend_to = [&](std::size_t len) {
            while (seq.size() < len) {
                const std::size_t j = seq.size() - r;
                acc = 0;
                for (unsigned nu = 0; nu < r; ++nu) mpz_addmul(acc.get_mpz_t(), coef[nu].get_mpz_t(), seq[j + nu].get_mpz_t());
                mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
                seq.push_back(acc);
            }
        };
        extend_to(p);
        std::uint64_t j0 = p, zeros = 0;
        for (std::uint64_t j = 0; j < p; ++j) {
            if (mpz_divisible_ui_p(seq[j].get_mpz_t(), p)) {
                if (zeros++ == 0) j0 = j;
            }
        }
        ensure(zeros == 1, "expected exactly one alpha = 0 mod p among p consecutive terms, found " +
                               std::to_string(zeros));
        const std::uint64_t predicted = to_u64(mod_floor(-seq[0] * d_inv, P));
        ensure(predicted == j0, "zero position disagrees with -alpha_0 / Delta");

        digits.push_back((j0 + t) % p);
        t = (j0 + t) / p;
        if (k + 1 < u) {
            extend_to(j0 + (r - 1) * p + 1);
            for (unsigned j = 0; j < r; ++j) {
                const Integer& v = seq[j0 + j * p];
                ensure(mpz_divisible_ui_p(v.get_mpz_t(), p), "subsequence term not divisible by p");
                cur[j] = v / P;
            }
        }
    }
    if (trace) trace->digits = digits;
    return digits;
}

DigitPair append_digits(const IrregularPair& pair, const std::vector<std::uint64_t>& extra) {
    DigitPair base = DigitPair::from_pair(pair);
    base.digits.insert(base.digits.end(), extra.begin(), extra.end());
    return DigitPair(base.p, std::move(base.digits));
}

}  // namespace

DigitPair lift_order(const IrregularPair& pair, unsigned r, const BernoulliModOracle& oracle, LiftTrace* trace) {
    return append_digits(pair, lift_digits(pair, r, 0, oracle, trace));
}

DigitPair lift_with_shift(const IrregularPair& pair, unsigned r, const BernoulliModOracle& oracle,
                          const ShiftOptions& options, LiftTrace* trace) {
    require(r >= 2, "lift multiplier r must be >= 2");
    const Integer u = Integer((r - 1) * pair.order);
    std::uint64_t t = 0;
    if (options.forced_shift) {
        t = *options.forced_shift;
    } else if (pair.l <= u) {
        Integer need = (u - pair.l) / pair.phi() + 1;
        t = to_u64(need);
    }
    auto digits = lift_digits(pair, r, t, oracle, trace);
    if (t > 0 && options.reconcile) {
        // largest r' < r for which the unshifted sequence is admissible
        const Integer max_r = (pair.l - 1) / pair.order + 1;
        const unsigned r_low = static_cast<unsigned>(std::min<Integer>(Integer(r - 1), max_r).get_ui());
        require(r_low >= 2, "no unshifted run available to reconcile " + pair.str());
        auto low = lift_digits(pair, r_low, 0, oracle, nullptr);
        ensure(std::equal(low.begin(), low.end(), digits.begin()),
               "shifted lift of " + pair.str() + " disagrees with the unshifted run at r = " + std::to_string(r_low));
    }
    return append_digits(pair, digits);
}

unsigned SingularTree::height() const {
    unsigned h = 0;
    for (const auto& c : children) h = std::max(h, 1 + c.height());
    return h;
}

std::size_t SingularTree::leaf_count() const {
    if (children.empty()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
}

namespace {

SingularTree grow(const IrregularPair& node, unsigned depth, const BernoulliModOracle& oracle, bool is_root) {
    auto a = alpha_sequence(node, 0, 2, 1, oracle);
    const std::uint64_t d = mod_u64((a[1] - a[0]).residue(), node.p);
    if (d != 0) {
        if (is_root) throw PreconditionError("singular tree requested for nonsingular " + node.str());
        throw ConsistencyError("child " + node.str() + " of a singular pair has Delta = " + std::to_string(d));
    }
    SingularTree tree{node, {}};
    if (depth == 0 || !a[0].is_zero()) return tree;
    const Integer phi = node.phi();
    tree.children.reserve(node.p);
    for (std::uint64_t nu = 0; nu < node.p; ++nu)
        tree.children.push_back(grow(IrregularPair(node.p, node.l + nu * phi, node.order + 1), depth - 1, oracle, false));
    return tree;
}

}  // namespace

SingularTree build_singular_tree(const IrregularPair& root, unsigned depth, const BernoulliModOracle& oracle) {
    return grow(root, depth, oracle, true);
}

unsigned singular_height(const SingularTree& tree, const Integer& n) {
    require(mod_floor(n, tree.node.phi()) == tree.node.l, "n is not in the residue class of the tree root");
    unsigned h = 0;
    const SingularTree* cur = &tree;
    while (!cur->children.empty()) {
        const SingularTree* next = nullptr;
        for (const auto& c : cur->children)
            if (mod_floor(n, c.node.phi()) == c.node.l) next = &c;
        if (!next) break;
        cur = next;
        ++h;
    }
    return h;
}

}  // namespace kummer
