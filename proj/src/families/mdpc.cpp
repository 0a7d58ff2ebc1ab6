#include <codelab/error.hpp>
#include <codelab/families.hpp>

#include <atomic>
#include <thread>

namespace codelab {

Matrix circulant(FieldPtr f, const Vec& a)
{
    size_t r = a.size();
    Matrix m(f, r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) m.at(i, j) = a[(j + r - i) % r];
    return m;
}

Matrix mdpc_parity_check(const MdpcParams& p, Rng& rng)
{
    if (p.blocks == 0 || p.w % p.blocks) fail(Errc::invalid_block_size, "row weight must split evenly over the blocks");
    if (p.w / p.blocks > p.r) fail(Errc::invalid_argument, "block weight exceeds r");
    auto f = Field::make(2);
    Matrix h;
    for (size_t b = 0; b < p.blocks; ++b) {
        Vec first(p.r, 0);
        for (auto i : rng.subset(p.r, p.w / p.blocks)) first[i] = 1;
        Matrix blk = circulant(f, first);
        h = b == 0 ? blk : h.hstack(blk);
    }
    return h;
}

BitflipResult bitflip_syndrome(const Matrix& h, const Vec& syndrome, size_t threshold, size_t max_iters)
{
    if (h.field()->q() != 2) fail(Errc::invalid_argument, "bit flipping is binary only");
    if (syndrome.size() != h.rows()) fail(Errc::dim_mismatch, "syndrome has wrong length");
    size_t rows = h.rows(), n = h.cols();
    std::vector<std::vector<size_t>> cols(n);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < n; ++j)
            if (h(i, j)) cols[j].push_back(i);
    Vec e(n, 0);
    Vec s = syndrome;
    size_t iters = 0;
    while (weight(s) != 0) {
        if (iters == max_iters) fail(Errc::decode_failure, "no zero syndrome after the iteration limit");
        ++iters;
        std::vector<size_t> upc(n, 0), flips;
        size_t top = 0;
        for (size_t j = 0; j < n; ++j) {
            for (auto i : cols[j]) upc[j] += s[i];
            top = std::max(top, upc[j]);
        }
        for (size_t j = 0; j < n; ++j) {
            size_t b = threshold == flip_max_upc ? std::max<size_t>(top, 1)
                       : threshold                ? threshold
                                                  : cols[j].size() / 2 + 1;
            if (upc[j] >= b) flips.push_back(j);
        }
        if (flips.empty()) fail(Errc::decode_failure, "no bit reaches the threshold");
        for (auto j : flips) {
            e[j] ^= 1;
            for (auto i : cols[j]) s[i] ^= 1;
        }
    }
    return {e, iters};
}

BitflipResult bitflip_decode(const Matrix& h, const Vec& y, size_t threshold, size_t max_iters)
{
    if (y.size() != h.cols()) fail(Errc::dim_mismatch, "received word has wrong length");
    auto r = bitflip_syndrome(h, h.right_mul(y), threshold, max_iters);
    for (size_t j = 0; j < y.size(); ++j) r.codeword[j] ^= y[j];
    return r;
}

DfrEstimate estimate_dfr(const Matrix& h, size_t t, size_t trials, uint64_t seed, size_t max_iters, size_t threshold,
                         unsigned workers)
{
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    auto f = h.field();
    std::atomic<size_t> next{0}, failures{0};
    auto work = [&] {
        for (size_t i; (i = next++) < trials;) {
            Rng rng(seed ^ mix_seed(i + 1));
            Vec e = random_weight_vec(*f, h.cols(), t, rng);
            bool ok = false;
            try {
                ok = weight(bitflip_decode(h, e, threshold, max_iters).codeword) == 0;
            } catch (const Error&) {
            }
            if (!ok) ++failures;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return {failures.load(), trials};
}

}
