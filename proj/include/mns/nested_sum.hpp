#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mns/rational.hpp"
#include "mns/sequence.hpp"
#include "mns/tri_matrix.hpp"

namespace mns {

/// weak:   upper >= n_1 >= ... >= n_k >= lower
/// strict: upper >  n_1 >  ... >  n_k >= lower
enum class Mode { weak, strict };

const char* to_string(Mode mode);
/// Accepts "weak"/"strict" (also "S"/"A"); throws std::invalid_argument.
Mode parse_mode(std::string_view text);

/// A multiplicative nested sum sum f_1(n_1) ... f_k(n_k) over a chain of
/// indices between `lower` and `upper`.
struct SumSpec {
    std::vector<Sequence> factors;
    std::size_t upper = 1;
    std::size_t lower = 1;
    Mode mode = Mode::weak;

    /// Throws std::invalid_argument unless 1 <= lower <= upper and every
    /// factor has at least `upper` values.
    void validate() const;
};

/// P times the product of the index matrices (S_f for weak, A_f for
/// strict). Entry (i, j) is the nested sum with bounds upper = i, lower = j.
struct SumTable {
    TriMatrix table;
    Mode mode;
};

inline constexpr std::uint64_t kDefaultExplosionGuard = 10'000'000;

class ExplosionGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact value from row `upper` of P * prod(index matrices), propagated as a
/// row vector through the structured factors. An empty factor list gives 1.
Rational evaluate_matrix(const SumSpec& spec);

/// The full table for bounds 1 <= lower <= upper <= n in one O(k n^2) pass.
SumTable evaluate_table(std::span<const Sequence> factors, Mode mode, std::size_t n);

/// Direct enumeration of every index chain by nested descent.
/// Throws ExplosionGuardError when (upper - lower + 1)^k exceeds `max_tuples`.
Rational evaluate_bruteforce(const SumSpec& spec,
                             std::uint64_t max_tuples = kDefaultExplosionGuard);

/// Harmonic sums with factors sgn(i)^n / n^|i|, lower bound 1.
Rational harmonic_S(std::span<const long> indices, std::size_t n);
Rational harmonic_H(std::span<const long> indices, std::size_t n);

struct ConvergencePoint {
    std::size_t n;
    double value;
};

/// Running double-precision values of the weak sum over factors 1/x^e
/// (e = exponents[l]), lower bound 1, reported at each checkpoint <= n_max.
/// Keeps one partial inner sum per factor, so each step costs O(k).
/// Rejects a leading exponent of 1 (divergent) and exponents below 1.
std::vector<ConvergencePoint> converge_stream(std::span<const int> exponents, std::size_t n_max,
                                              std::span<const std::size_t> checkpoints);

/// start, 2 start, 4 start, ... below n_max, followed by n_max itself.
std::vector<std::size_t> geometric_checkpoints(std::size_t start, std::size_t n_max);

/// Header "N,value", one row per point, 15 significant digits.
std::string to_csv(std::span<const ConvergencePoint> points);

} // namespace mns
