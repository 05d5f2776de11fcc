#include "bwkit/seqcode.hpp"

#include "bwkit/error.hpp"

namespace bwkit {

namespace {

constexpr std::uint64_t sieve_limit = 200000;

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<bool> composite(sieve_limit + 1, false);
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 2; i <= sieve_limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = i * i; j <= sieve_limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (auto p : small_primes()) {
        if (p * p > n) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t d = sieve_limit + 1; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

std::uint64_t nth_prime(std::size_t index) {
    const auto& primes = small_primes();
    if (index < primes.size()) return primes[index];
    std::uint64_t candidate = primes.back();
    for (std::size_t i = primes.size() - 1; i < index;) {
        candidate += 2;
        if (is_prime(candidate)) ++i;
    }
    return candidate;
}

SeqCode seq_code(std::span<const std::uint64_t> values) {
    BigInt code = 1;
    for (std::size_t x = 0; x < values.size(); ++x) {
        BigInt factor;
        mpz_ui_pow_ui(factor.get_mpz_t(), nth_prime(x), values[x] + 1);
        code *= factor;
    }
    return SeqCode(std::move(code));
}

std::optional<std::vector<std::uint64_t>> seq_decode(const BigInt& code) {
    if (code <= 0) return std::nullopt;
    if (code.fits_ulong_p()) return seq_decode(static_cast<std::uint64_t>(code.get_ui()));
    std::vector<std::uint64_t> out;
    BigInt rest = code;
    for (std::size_t x = 0; rest != 1; ++x) {
        const BigInt p(static_cast<unsigned long>(nth_prime(x)));
        std::uint64_t exponent = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++exponent;
        }
        if (exponent == 0) return std::nullopt;
        out.push_back(exponent - 1);
    }
    return out;
}

std::optional<std::vector<std::uint64_t>> seq_decode(std::uint64_t code) {
    if (code == 0) return std::nullopt;
    std::vector<std::uint64_t> out;
    for (std::size_t x = 0; code != 1; ++x) {
        const std::uint64_t p = nth_prime(x);
        if (p > code) return std::nullopt;
        std::uint64_t exponent = 0;
        while (code % p == 0) {
            code /= p;
            ++exponent;
        }
        if (exponent == 0) return std::nullopt;
        out.push_back(exponent - 1);
    }
    return out;
}

std::optional<std::size_t> seq_length(std::uint64_t code) {
    auto decoded = seq_decode(code);
    if (!decoded) return std::nullopt;
    return decoded->size();
}

}  // namespace bwkit
