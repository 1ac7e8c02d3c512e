#include "borelreg/exact_linalg.hpp"

#include <cassert>
#include <cstdint>

namespace borelreg {

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p < 2)
        throw InvalidField("prime_field: characteristic must be at least 2");
    for (std::uint32_t d = 2; d * static_cast<std::uint64_t>(d) <= p; ++d)
        if (p % d == 0)
            throw InvalidField("prime_field: " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

int rank_over_rationals(ExactMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    int r = 0;
    Int prev = 1;
    while (r < rows && r < cols) {
        int pr = -1, pc = -1;
        for (int i = r; i < rows && pr < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (m(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0)
            break;
        if (pr != r)
            m.swap_rows(pr, r);
        if (pc != r)
            m.swap_cols(pc, r);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                Int t = m(i, j) * m(r, r) - m(i, r) * m(r, j);
                assert(t % prev == 0);  // Sylvester identity keeps this exact
                m(i, j) = t / prev;
            }
            m(i, r) = 0;
        }
        prev = m(r, r);
        ++r;
    }
    return r;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1)
            acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

}  // namespace

int rank_mod_prime(const ExactMatrix& m, std::uint32_t p) {
    if (p < 2)
        throw InvalidField("rank_mod_prime: characteristic must be at least 2");
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(rows),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int e = m(i, j) % p;
            if (e < 0)
                e += p;
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                e.convert_to<std::uint64_t>();
        }
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
        const std::uint64_t inv =
            pow_mod(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], p - 2, p);
        for (int j = c; j < cols; ++j)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            const std::uint64_t f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0)
                continue;
            for (int j = c; j < cols; ++j) {
                const std::uint64_t sub =
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % p;
                std::uint64_t& cell = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                cell = (cell + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

int rank(const ExactMatrix& m, const FieldSpec& field) {
    return field.is_rationals() ? rank_over_rationals(m)
                                : rank_mod_prime(m, field.characteristic());
}

}  // namespace borelreg
