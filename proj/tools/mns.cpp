// mns: command-line front end for exact nested sums and identity checks.
//
// Exit codes: 0 success, 1 an identity came out unequal (or eigen met
// duplicate values), 2 bad arguments.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mns/index_matrix.hpp"
#include "mns/json_io.hpp"
#include "mns/matrix_algebra.hpp"
#include "mns/nested_sum.hpp"
#include "mns/random_instances.hpp"
#include "mns/random_walk.hpp"
#include "mns/relations.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::string format;
    std::uint64_t seed = 1;
    std::string output;
};

struct Emission {
    std::string text;
    int code = 0;
};

std::string pick_format(const Global& g, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
    const std::string f = g.format.empty() ? fallback : g.format;
    for (const char* a : allowed)
        if (f == a) return f;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("format '" + f + "' not available here (use " + list + ")");
}

template <class Int>
std::vector<Int> parse_int_list(const std::string& text, const char* what) {
    std::vector<Int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Int value{};
        const char* end = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(item.data(), end, value);
        if (item.empty() || ec != std::errc() || ptr != end)
            throw UsageError(std::string("bad ") + what + " list: '" + text + "'");
        out.push_back(value);
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
    return out;
}

mns::Sequence read_factor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read factor file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return mns::parse_sequence_lines(buf.str());
}

std::string dump(const mns::Json& j) { return j.dump(2) + "\n"; }

std::string rows_plain(const mns::TriMatrix& m) {
    std::string out;
    for (std::size_t i = 1; i <= m.dim(); ++i) {
        for (std::size_t j = 1; j <= i; ++j) out += (j > 1 ? " " : "") + m(i, j).str();
        out += "\n";
    }
    return out;
}

std::string rows_csv(const mns::TriMatrix& m) {
    std::string out = "i,j,value\n";
    for (std::size_t i = 1; i <= m.dim(); ++i)
        for (std::size_t j = 1; j <= i; ++j)
            out += std::to_string(i) + "," + std::to_string(j) + "," + m(i, j).str() + "\n";
    return out;
}

// sum / table

struct FactorArgs {
    std::string mode = "weak";
    std::string indices;
    std::vector<std::string> files;
    std::size_t upper = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--mode", mode, "weak (n1 >= n2 >= ...) or strict (n1 > n2 > ...)")
            ->check(CLI::IsMember({"weak", "strict"}));
        auto* idx = cmd->add_option("--indices", indices,
                                    "harmonic indices, e.g. 2,1,-3 (factor sgn(i)^n / n^|i|)");
        auto* file = cmd->add_option("--factor-file", files,
                                     "file with one rational per line; repeat once per factor");
        idx->excludes(file);
        cmd->add_option("--N", upper, "upper bound N")->required()->check(CLI::PositiveNumber);
    }

    std::vector<mns::Sequence> factors() const {
        std::vector<mns::Sequence> out;
        if (!indices.empty()) {
            for (long i : parse_int_list<long>(indices, "index")) {
                if (i == 0) throw UsageError("harmonic index 0 is not allowed");
                out.push_back(mns::harmonic_sequence(i, upper));
            }
        }
        for (const auto& path : files) {
            mns::Sequence f = read_factor_file(path);
            if (f.size() < upper)
                throw UsageError("factor file '" + path + "' has " + std::to_string(f.size()) +
                                 " values, need N = " + std::to_string(upper));
            out.push_back(f.truncated(upper));
        }
        return out;
    }
};

struct SumArgs {
    FactorArgs factors;
    std::size_t lower = 1;
    bool table = false;
    bool bruteforce = false;
    std::uint64_t max_tuples = mns::kDefaultExplosionGuard;
};

Emission cmd_sum(const Global& g, const SumArgs& args) {
    const std::string format = pick_format(g, "plain", {"plain", "json"});
    const mns::SumSpec spec{args.factors.factors(), args.factors.upper, args.lower,
                            mns::parse_mode(args.factors.mode)};
    spec.validate();
    const mns::Rational value = args.bruteforce ? mns::evaluate_bruteforce(spec, args.max_tuples)
                                                : mns::evaluate_matrix(spec);
    std::optional<mns::SumTable> table;
    if (args.table) table = mns::evaluate_table(spec.factors, spec.mode, spec.upper);

    if (format == "plain") {
        std::string out = value.str() + "\n";
        if (table) out += rows_plain(table->table);
        return {out};
    }
    mns::Json j = mns::Json::object();
    j["mode"] = mns::to_string(spec.mode);
    j["N"] = spec.upper;
    j["m"] = spec.lower;
    j["value"] = value.str();
    if (table) j["table"] = mns::to_json(table->table);
    return {dump(j)};
}

Emission cmd_table(const Global& g, const FactorArgs& args) {
    const std::string format = pick_format(g, "json", {"json", "csv", "plain"});
    const auto factors = args.factors();
    const auto table = mns::evaluate_table(factors, mns::parse_mode(args.mode), args.upper);
    if (format == "plain") return {rows_plain(table.table)};
    if (format == "csv") return {rows_csv(table.table)};
    mns::Json j = mns::Json::object();
    j["mode"] = mns::to_string(table.mode);
    j.update(mns::to_json(table.table));
    return {dump(j)};
}

// verify

struct VerifyArgs {
    std::string identity;
    std::size_t random = 0;
    std::size_t max_n = 8;
    std::size_t max_k = 4;
    std::optional<std::size_t> upper, lower, k;
    std::optional<std::string> a, f, g, h;
};

const std::vector<std::string> kIdentities = {
    "two-factor", "three-factor", "partial-fraction", "eigen",   "sa-two",          "sa-three",
    "butler-karasik", "symmetric", "dilcher",         "general-dilcher", "walk"};

class InstanceMaker {
public:
    InstanceMaker(const VerifyArgs& args, std::uint64_t seed) : args_(args), rnd_(seed) {}

    mns::IdentityReport next() {
        const std::string& id = args_.identity;
        if (id == "two-factor") {
            const std::size_t n = dim({args_.f, args_.g}, 1);
            return mns::verify_two_factor(seq(args_.f, n, Kind::nonzero),
                                          seq(args_.g, n, Kind::nonzero));
        }
        if (id == "three-factor") {
            const std::size_t n = dim({args_.f, args_.g, args_.h}, 1);
            return mns::verify_three_factor(seq(args_.f, n, Kind::any), seq(args_.g, n, Kind::any),
                                            seq(args_.h, n, Kind::any));
        }
        if (id == "partial-fraction") {
            return mns::verify_partial_fraction(seq(args_.a, dim({args_.a}, 1), Kind::distinct));
        }
        if (id == "eigen") {
            const mns::Sequence a = seq(args_.a, dim({args_.a}, 1), Kind::distinct);
            return mns::verify_eigen(a, static_cast<long>(pick(args_.k, 0, 5)));
        }
        if (id == "sa-two" || id == "sa-three") {
            const bool three = id == "sa-three";
            const std::size_t n = dim({args_.f, args_.g, args_.h}, 2);
            const std::size_t m = pick(args_.lower, 1, n - 1);
            const mns::Sequence f = seq(args_.f, n, Kind::any), gs = seq(args_.g, n, Kind::any);
            if (!three) return mns::verify_sa_two(f, gs, n, m);
            return mns::verify_sa_three(f, gs, seq(args_.h, n, Kind::any), n, m);
        }
        if (id == "butler-karasik") {
            const std::size_t n = dim({args_.a}, 1);
            return mns::verify_butler_karasik(seq(args_.a, n, Kind::any), n,
                                              pick(args_.k, 1, args_.max_k));
        }
        if (id == "symmetric") {
            const mns::Sequence a = seq(args_.a, dim({args_.a}, 1), Kind::distinct);
            return mns::verify_symmetric_expansion(a, pick(args_.k, 0, args_.max_k));
        }
        if (id == "dilcher") {
            const std::size_t n = pick(args_.upper, 1, args_.max_n);
            return mns::verify_dilcher(n, pick(args_.k, 0, args_.max_k));
        }
        if (id == "general-dilcher") {
            const long a = exponent(3);
            const std::size_t n = pick(args_.upper, 1, args_.max_n);
            return mns::verify_general_dilcher(a, n, pick(args_.k, 0, args_.max_k));
        }
        if (id == "walk") {
            const int a = static_cast<int>(exponent(3));
            const std::size_t n = pick(args_.upper, 1, args_.max_n);
            return mns::verify_walk_identity(n, a, pick(args_.k, 0, args_.max_k));
        }
        throw UsageError("unknown identity '" + id + "'");
    }

private:
    enum class Kind { any, nonzero, distinct };

    std::size_t pick(const std::optional<std::size_t>& given, std::size_t lo, std::size_t hi) {
        if (given) return *given;
        if (hi < lo) throw UsageError("--max-n/--max-k too small for this identity");
        return rnd_.index(lo, hi);
    }

    // N from --N, else from the first explicit sequence, else random.
    std::size_t dim(std::initializer_list<std::optional<std::string>> seqs, std::size_t lo) {
        if (args_.upper) return *args_.upper;
        for (const auto& s : seqs)
            if (s) return mns::parse_sequence_list(*s).size();
        return pick(std::nullopt, lo, args_.max_n);
    }

    mns::Sequence seq(const std::optional<std::string>& given, std::size_t n, Kind kind) {
        if (given) {
            const mns::Sequence s = mns::parse_sequence_list(*given);
            if (s.size() < n)
                throw UsageError("sequence (" + *given + ") shorter than N = " + std::to_string(n));
            return s.truncated(n);
        }
        switch (kind) {
            case Kind::nonzero: return rnd_.nonzero_sequence(n);
            case Kind::distinct: return rnd_.distinct_nonzero_sequence(n);
            default: return rnd_.sequence(n);
        }
    }

    long exponent(long hi) {
        if (!args_.a) return static_cast<long>(rnd_.index(1, static_cast<std::size_t>(hi)));
        const auto v = parse_int_list<long>(*args_.a, "exponent");
        if (v.size() != 1 || v[0] < 1) throw UsageError("--a must be a positive integer here");
        return v[0];
    }

    const VerifyArgs& args_;
    mns::RandomInstances rnd_;
};

Emission cmd_verify(const Global& g, const VerifyArgs& args) {
    const std::string format = pick_format(g, "json", {"json", "plain"});
    InstanceMaker maker(args, g.seed);
    const std::size_t count = args.random == 0 ? 1 : args.random;
    std::vector<mns::IdentityReport> reports;
    std::size_t equal = 0;
    for (std::size_t t = 0; t < count; ++t) {
        reports.push_back(maker.next());
        equal += reports.back().equal() ? 1 : 0;
    }
    std::cerr << "verify " << args.identity << ": " << equal << "/" << count << " equal\n";

    std::string out;
    if (format == "json") {
        mns::Json j = mns::Json::array();
        for (const auto& r : reports) j.push_back(mns::to_json(r));
        out = dump(j);
    } else {
        for (const auto& r : reports) {
            out += r.identity + " " + r.params.dump() + ": " + (r.equal() ? "equal" : "NOT EQUAL");
            if (r.lhs.size() == 1) out += " (" + r.lhs[0].str() + " vs " + r.rhs[0].str() + ")";
            out += "\n";
        }
    }
    return {out, equal == count ? 0 : kExitFailure};
}

// walk / converge / eigen / inverse

struct WalkArgs {
    std::size_t sites = 0;
    int exponent = 1;
    std::size_t k = 0;
    std::uint64_t samples = 1'000'000;
};

Emission cmd_walk(const Global& g, const WalkArgs& args) {
    const std::string format = pick_format(g, "json", {"json", "csv", "plain"});
    const mns::Rational exact = mns::absorption_probability_exact(args.sites, args.exponent, args.k);
    const auto mc = mns::absorption_probability_montecarlo(args.sites, args.exponent, args.k,
                                                           args.samples, g.seed);
    if (format == "json") return {dump(mns::to_json(exact, mc))};
    char buf[128];
    if (format == "csv") {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%llu,%llu\n", mc.estimate, mc.standard_error,
                      static_cast<unsigned long long>(mc.samples),
                      static_cast<unsigned long long>(mc.seed));
        return {"exact,estimate,stderr,samples,seed\n" + exact.str() + "," + buf};
    }
    std::snprintf(buf, sizeof buf, "estimate %.17g\nstderr %.17g\n", mc.estimate, mc.standard_error);
    return {"exact " + exact.str() + "\n" + buf};
}

struct ConvergeArgs {
    std::string exponents;
    std::size_t upper = 0;
    std::size_t start = 1;
};

Emission cmd_converge(const Global& g, const ConvergeArgs& args) {
    const std::string format = pick_format(g, "csv", {"csv", "json", "plain"});
    if (args.start > args.upper) throw UsageError("--start exceeds --N");
    const auto exponents = parse_int_list<int>(args.exponents, "exponent");
    const auto checkpoints = mns::geometric_checkpoints(args.start, args.upper);
    const auto points = mns::converge_stream(exponents, args.upper, checkpoints);
    if (format != "json") return {mns::to_csv(points)};
    mns::Json j = mns::Json::array();
    for (const auto& p : points) j.push_back({{"N", p.n}, {"value", p.value}});
    return {dump(j)};
}

Emission cmd_eigen(const Global& g, const std::string& a) {
    const std::string format = pick_format(g, "json", {"json", "plain"});
    try {
        const auto eig = mns::eigendecompose(mns::parse_sequence_list(a));
        if (format == "json") return {dump(mns::to_json(eig))};
        return {"lambda " + mns::to_string(eig.eigenvalues) + "\nD\n" + rows_plain(eig.vectors) +
                "E\n" + rows_plain(eig.inverse_vectors)};
    } catch (const mns::DuplicateEigenvalueError& e) {
        std::cerr << "mns eigen: " << e.what() << "\n";
        return {"", kExitFailure};
    }
}

Emission cmd_inverse(const Global& g, const std::string& a) {
    const std::string format = pick_format(g, "json", {"json", "csv", "plain"});
    const auto inv = mns::inverse_S(mns::parse_sequence_list(a));
    if (format == "plain") return {rows_plain(inv)};
    if (format == "csv") return {rows_csv(inv)};
    return {dump(mns::to_json(inv))};
}

void emit(const Global& g, const Emission& e) {
    if (g.output.empty()) {
        std::cout << e.text << std::flush;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out || !(out << e.text)) throw UsageError("cannot write '" + g.output + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicative nested sums, index-matrix identities and random walks."};
    app.require_subcommand(1);
    app.fallthrough();

    Global global;
    app.add_option("--format", global.format,
                   "json, csv or plain (default depends on the subcommand)")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--seed", global.seed, "seed for random instances and Monte Carlo (default 1)");
    app.add_option("--output", global.output, "write the result to this file instead of stdout");

    std::function<Emission()> run;

    SumArgs sum;
    auto* sum_cmd = app.add_subcommand("sum", "exact value of S or A at (N, m)");
    sum.factors.attach(sum_cmd);
    sum_cmd->add_option("--m", sum.lower, "lower bound m (default 1)")->check(CLI::PositiveNumber);
    sum_cmd->add_flag("--table", sum.table, "also print the table of all (n, m) sums");
    sum_cmd->add_flag("--bruteforce", sum.bruteforce, "evaluate by enumerating index tuples");
    sum_cmd->add_option("--max-tuples", sum.max_tuples, "brute-force guard (default 10000000)");
    sum_cmd->callback([&] { run = [&] { return cmd_sum(global, sum); }; });

    FactorArgs table;
    auto* table_cmd = app.add_subcommand("table", "all sums (n, m) for 1 <= m <= n <= N");
    table.attach(table_cmd);
    table_cmd->callback([&] { run = [&] { return cmd_table(global, table); }; });

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand(
        "verify",
        "check an identity exactly; parameters not given are drawn at random from --seed");
    verify_cmd->set_help_flag("--help", "Print this help message and exit");
    verify_cmd->add_option("identity", verify.identity, "identity name")
        ->required()
        ->check(CLI::IsMember(kIdentities));
    verify_cmd->add_option("--random", verify.random, "number of instances (default 1)");
    verify_cmd->add_option("--max-n", verify.max_n, "largest random N (default 8)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-k", verify.max_k, "largest random k (default 4)");
    verify_cmd->add_option("--N,--n", verify.upper, "dimension / upper bound")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--m", verify.lower, "lower bound (sa-two, sa-three)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--k", verify.k, "power or number of factors");
    verify_cmd->add_option("--a", verify.a,
                           "sequence (partial-fraction, eigen, butler-karasik, symmetric) or "
                           "exponent (general-dilcher, walk)");
    verify_cmd->add_option("--f", verify.f, "first sequence (two-factor, three-factor, sa-*)");
    verify_cmd->add_option("--g", verify.g, "second sequence");
    verify_cmd->add_option("--h", verify.h, "third sequence (three-factor, sa-three)");
    verify_cmd->callback([&] { run = [&] { return cmd_verify(global, verify); }; });

    WalkArgs walk;
    auto* walk_cmd = app.add_subcommand("walk", "absorption probability at site 1, exact and sampled");
    walk_cmd->add_option("--N", walk.sites, "start site")->required()->check(CLI::PositiveNumber);
    walk_cmd->add_option("--a", walk.exponent, "exponent a >= 1 (default 1)")
        ->check(CLI::PositiveNumber);
    walk_cmd->add_option("--k", walk.k, "walk of k + 1 steps (default 0)");
    walk_cmd->add_option("--samples", walk.samples, "Monte Carlo samples (default 1000000)")
        ->check(CLI::PositiveNumber);
    walk_cmd->callback([&] { run = [&] { return cmd_walk(global, walk); }; });

    ConvergeArgs converge;
    auto* converge_cmd = app.add_subcommand(
        "converge", "partial sums of S(H_e1, H_e2, ...; n, 1) in double precision");
    converge_cmd->add_option("--exponents", converge.exponents, "positive exponents, e.g. 2,1")
        ->required();
    converge_cmd->add_option("--N", converge.upper, "last n")->required()->check(CLI::PositiveNumber);
    converge_cmd->add_option("--start", converge.start, "first checkpoint; doubles up to N")
        ->check(CLI::PositiveNumber);
    converge_cmd->callback([&] { run = [&] { return cmd_converge(global, converge); }; });

    std::string eigen_a;
    auto* eigen_cmd = app.add_subcommand("eigen", "closed-form eigendecomposition of S_a");
    eigen_cmd->add_option("--a", eigen_a, "distinct nonzero rationals, e.g. 2,1")->required();
    eigen_cmd->callback([&] { run = [&] { return cmd_eigen(global, eigen_a); }; });

    std::string inverse_a;
    auto* inverse_cmd = app.add_subcommand("inverse", "bidiagonal inverse of S_a");
    inverse_cmd->add_option("--a", inverse_a, "nonzero rationals")->required();
    inverse_cmd->callback([&] { run = [&] { return cmd_inverse(global, inverse_a); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        const Emission e = run();
        emit(global, e);
        return e.code;
    } catch (const mns::ExplosionGuardError& e) {
        std::cerr << "mns: " << e.what() << " (raise --max-tuples)\n";
    } catch (const std::exception& e) {
        std::cerr << "mns: error: " << e.what() << "\n";
    }
    return kExitUsage;
}
