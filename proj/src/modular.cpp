#include "weyltasep/detail/modular.hpp"

#include "weyltasep/errors.hpp"

#include <algorithm>
#include <limits>

namespace wt::detail {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p)
{
    BigInt pz(static_cast<unsigned long>(p));
    BigInt num = q.get_num() % pz;
    if (num < 0)
        num += pz;
    BigInt den = q.get_den() % pz;
    if (den == 0)
        return std::nullopt;
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    return mul_mod(n, inv_mod(d, p), p);
}

struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<std::uint64_t> vals;
    std::uint64_t rhs = 0;

    std::uint64_t at(std::uint32_t c) const
    {
        auto it = std::lower_bound(cols.begin(), cols.end(), c);
        if (it == cols.end() || *it != c)
            return 0;
        return vals[static_cast<std::size_t>(it - cols.begin())];
    }
};

} // namespace

std::uint64_t next_prime_below(std::uint64_t x)
{
    for (std::uint64_t c = x - 1; c > 2; --c) {
        BigInt z(static_cast<unsigned long>(c));
        if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0)
            return c;
    }
    throw RangeError("ran out of primes");
}

std::optional<std::vector<std::uint64_t>>
solve_mod_p(const std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>& input,
            const std::vector<std::uint64_t>& rhs, std::uint64_t p)
{
    const std::size_t m = input.size();
    std::vector<Row> rows(m);
    std::vector<std::uint32_t> col_count(m, 0);
    std::vector<std::vector<std::uint32_t>> col_rows(m);
    for (std::size_t r = 0; r < m; ++r) {
        auto entries = input[r];
        std::sort(entries.begin(), entries.end());
        for (auto [c, v] : entries) {
            v %= p;
            if (v == 0)
                continue;
            if (!rows[r].cols.empty() && rows[r].cols.back() == c) {
                rows[r].vals.back() = (rows[r].vals.back() + v) % p;
                continue;
            }
            rows[r].cols.push_back(c);
            rows[r].vals.push_back(v);
        }
        rows[r].rhs = rhs[r] % p;
        for (std::uint32_t c : rows[r].cols) {
            ++col_count[c];
            col_rows[c].push_back(static_cast<std::uint32_t>(r));
        }
    }

    std::vector<bool> row_active(m, true), col_active(m, true);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order; // (row, col)
    order.reserve(m);
    Row merged;

    for (std::size_t step = 0; step < m; ++step) {
        std::uint32_t best_col = std::numeric_limits<std::uint32_t>::max();
        std::uint32_t best_count = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t c = 0; c < m; ++c)
            if (col_active[c] && col_count[c] < best_count) {
                best_count = col_count[c];
                best_col = c;
                if (best_count <= 1)
                    break;
            }
        if (best_count == 0)
            return std::nullopt;
        const std::uint32_t c = best_col;

        // compact the candidate list and pick the shortest row
        auto& cand = col_rows[c];
        std::vector<std::uint32_t> live;
        for (std::uint32_t r : cand)
            if (row_active[r] && rows[r].at(c) != 0)
                live.push_back(r);
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());
        cand = live;
        if (live.empty())
            return std::nullopt;
        std::uint32_t pivot = live.front();
        for (std::uint32_t r : live)
            if (rows[r].cols.size() < rows[pivot].cols.size())
                pivot = r;

        const Row& pr = rows[pivot];
        const std::uint64_t pinv = inv_mod(pr.at(c), p);
        for (std::uint32_t s : live) {
            if (s == pivot)
                continue;
            Row& sr = rows[s];
            const std::uint64_t f = mul_mod(sr.at(c), pinv, p);
            const std::uint64_t nf = (p - f) % p;
            merged.cols.clear();
            merged.vals.clear();
            std::size_t a = 0, b = 0;
            while (a < sr.cols.size() || b < pr.cols.size()) {
                if (b == pr.cols.size() || (a < sr.cols.size() && sr.cols[a] < pr.cols[b])) {
                    merged.cols.push_back(sr.cols[a]);
                    merged.vals.push_back(sr.vals[a]);
                    ++a;
                } else if (a == sr.cols.size() || pr.cols[b] < sr.cols[a]) {
                    std::uint32_t col = pr.cols[b];
                    std::uint64_t v = mul_mod(nf, pr.vals[b], p);
                    if (v != 0) {
                        merged.cols.push_back(col);
                        merged.vals.push_back(v);
                        ++col_count[col];
                        col_rows[col].push_back(s);
                    }
                    ++b;
                } else {
                    std::uint32_t col = pr.cols[b];
                    std::uint64_t v = (sr.vals[a] + mul_mod(nf, pr.vals[b], p)) % p;
                    if (v != 0) {
                        merged.cols.push_back(col);
                        merged.vals.push_back(v);
                    } else {
                        --col_count[col];
                    }
                    ++a;
                    ++b;
                }
            }
            sr.rhs = (sr.rhs + mul_mod(nf, pr.rhs, p)) % p;
            std::swap(sr.cols, merged.cols);
            std::swap(sr.vals, merged.vals);
        }
        row_active[pivot] = false;
        col_active[c] = false;
        for (std::uint32_t col : pr.cols)
            --col_count[col];
        col_rows[c].clear();
        order.emplace_back(pivot, c);
    }

    std::vector<std::uint64_t> x(m, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Row& r = rows[it->first];
        const std::uint32_t c = it->second;
        std::uint64_t acc = r.rhs;
        std::uint64_t diag = 0;
        for (std::size_t t = 0; t < r.cols.size(); ++t) {
            if (r.cols[t] == c) {
                diag = r.vals[t];
                continue;
            }
            acc = (acc + p - mul_mod(r.vals[t], x[r.cols[t]], p)) % p;
        }
        x[c] = mul_mod(acc, inv_mod(diag, p), p);
    }
    return x;
}

std::optional<Rational> rational_reconstruct(const BigInt& u, const BigInt& modulus)
{
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(modulus / 2).get_mpz_t());
    BigInt r0 = modulus, r1 = u % modulus;
    if (r1 < 0)
        r1 += modulus;
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound)
        return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    Rational out(r1, t1);
    out.canonicalize();
    return out;
}

std::vector<Rational> solve_multimodular_impl(const std::vector<SparseRationalRow>& rows,
                                              const std::vector<Rational>& rhs,
                                              bool (*accept)(const std::vector<Rational>&, void*),
                                              void* ctx)
{
    const std::size_t m = rows.size();
    if (m == 0)
        return {};
    std::vector<BigInt> residue(m, 0);
    BigInt modulus = 1;
    std::uint64_t p = std::uint64_t(1) << 31;
    int used = 0, failures = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> reduced(m);
    std::vector<std::uint64_t> reduced_rhs(m);

    while (true) {
        p = next_prime_below(p);
        bool ok = true;
        for (std::size_t r = 0; r < m && ok; ++r) {
            reduced[r].clear();
            for (const auto& [c, v] : rows[r]) {
                auto red = reduce(v, p);
                if (!red) {
                    ok = false;
                    break;
                }
                reduced[r].emplace_back(static_cast<std::uint32_t>(c), *red);
            }
            if (ok) {
                auto red = reduce(rhs[r], p);
                if (!red)
                    ok = false;
                else
                    reduced_rhs[r] = *red;
            }
        }
        std::optional<std::vector<std::uint64_t>> x;
        if (ok)
            x = solve_mod_p(reduced, reduced_rhs, p);
        if (!x) {
            if (++failures > 20)
                throw NotIrreducible("linear system is singular");
            continue;
        }
        // CRT update: residue' = residue + modulus * ((x - residue) * modulus^{-1} mod p)
        BigInt pz(static_cast<unsigned long>(p));
        BigInt minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t i = 0; i < m; ++i) {
            BigInt diff = (BigInt(static_cast<unsigned long>((*x)[i])) - residue[i]) % pz;
            if (diff < 0)
                diff += pz;
            BigInt k = diff * minv % pz;
            residue[i] += modulus * k;
        }
        modulus *= pz;
        ++used;

        // Reconstruct with a running common denominator.
        std::vector<Rational> candidate(m);
        BigInt common = 1;
        bool good = true;
        for (std::size_t i = 0; i < m && good; ++i) {
            BigInt scaled = residue[i] * common % modulus;
            auto rec = rational_reconstruct(scaled, modulus);
            if (!rec) {
                good = false;
                break;
            }
            candidate[i] = *rec / Rational(common);
            common *= rec->get_den();
        }
        if (good && accept(candidate, ctx))
            return candidate;
        if (used > 4000)
            throw RangeError("multimodular solve did not converge");
    }
}

} // namespace wt::detail
