#include "dseq/cli.hpp"

#include "dseq/analysis.hpp"
#include "dseq/error.hpp"
#include "dseq/expand.hpp"
#include "dseq/keygen.hpp"
#include "dseq/sequence.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace dseq::cli {

namespace {

template <typename Seq>
void print_sequence(std::ostream& out, const Seq& values) {
    bool first = true;
    for (auto v : values) {
        if (!first) out << ' ';
        out << static_cast<int>(v);
        first = false;
    }
    out << '\n';
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Options {
    std::uint32_t prime = 0;
    std::uint32_t radix = 3;
    bool balanced = false;
    std::uint8_t initial_prev_bit = 0;
    std::string mode = "ternary";
    std::int64_t max_lag = -1;
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::vector<std::uint32_t> primes;
    std::uint64_t bits = 0;
    std::uint64_t offset = 0;
};

void cmd_generate(std::ostream& out, const Options& opt) {
    DigitSequence seq = generate_digits(opt.prime, opt.radix);
    if (opt.balanced)
        print_sequence(out, to_balanced(seq).values);
    else
        print_sequence(out, seq.digits);
}

void cmd_map(std::ostream& out, const Options& opt) {
    BitSequence seq = map_prime(opt.prime, opt.initial_prev_bit);
    if (opt.balanced)
        print_sequence(out, to_balanced_bits(seq).values);
    else
        print_sequence(out, seq.bits);
}

void cmd_autocorr(std::ostream& out, const Options& opt) {
    std::vector<double> values;
    if (opt.mode == "ternary" || opt.mode == "ternary-balanced") {
        DigitSequence seq = generate_digits(opt.prime, 3);
        if (opt.mode == "ternary") {
            values.assign(seq.digits.begin(), seq.digits.end());
        } else {
            BalancedDigitSequence bal = to_balanced(seq);
            values.assign(bal.values.begin(), bal.values.end());
        }
    } else {
        BitSequence seq = map_prime(opt.prime);
        if (opt.mode == "binary") {
            values.assign(seq.bits.begin(), seq.bits.end());
        } else {
            BalancedBitSequence bal = to_balanced_bits(seq);
            values.assign(bal.values.begin(), bal.values.end());
        }
    }
    std::size_t max_lag =
        opt.max_lag < 0 ? values.size() - 1 : static_cast<std::size_t>(opt.max_lag);
    Correlogram corr = autocorrelation(values, max_lag);
    out << "lag,value\n";
    for (std::size_t k = 0; k < corr.values.size(); ++k)
        out << k << ',' << format_value(corr.values[k]) << '\n';
}

void cmd_table(std::ostream& out, const Options& opt) {
    for (const TableRow& row : build_table(opt.primes)) {
        nlohmann::ordered_json j{{"prime", row.prime},
                                 {"period", row.period},
                                 {"twos", row.twos},
                                 {"enhanced_length", row.enhanced_length},
                                 {"max_length", row.max_length}};
        out << j.dump() << '\n';
    }
}

void cmd_scan(std::ostream& out, const Options& opt) {
    out << "prime,twos\n";
    for (const ScanRecord& rec : scan_twos(opt.from, opt.to))
        out << rec.prime << ',' << rec.twos << '\n';
}

void cmd_key(std::ostream& out, const Options& opt) {
    KeyMaterial key = derive_key({opt.prime, opt.offset, opt.bits, opt.initial_prev_bit});
    out << key.hex << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Inverse-prime digit sequences, binary expansion, and analysis"};
    app.require_subcommand(1);
    Options opt;

    auto* generate = app.add_subcommand("generate", "Emit one period of digits for a prime");
    generate->add_option("--prime", opt.prime, "Prime modulus q")->required();
    generate->add_option("--radix", opt.radix, "Radix r (default 3)");
    generate->add_flag("--balanced", opt.balanced, "Map 2 to -1 (radix 3 only)");

    auto* map = app.add_subcommand("map", "Emit the expanded binary sequence for a prime");
    map->add_option("--prime", opt.prime, "Prime modulus q")->required();
    map->add_flag("--balanced", opt.balanced, "Map 0 to -1");
    map->add_option("--initial-prev-bit", opt.initial_prev_bit, "Bit preceding a leading 2")
        ->check(CLI::Range(0, 1));

    auto* autocorr = app.add_subcommand("autocorr", "Emit a correlogram as CSV");
    autocorr->add_option("--prime", opt.prime, "Prime modulus q")->required();
    autocorr->add_option("--mode", opt.mode, "Sequence flavor")
        ->check(CLI::IsMember({"ternary", "ternary-balanced", "binary", "binary-balanced"}))
        ->required();
    autocorr->add_option("--max-lag", opt.max_lag, "Largest lag (default length-1)");

    auto* table = app.add_subcommand("table", "Per-prime statistics as JSON lines");
    table->add_option("--primes", opt.primes, "Comma-separated primes")
        ->required()
        ->delimiter(',');

    auto* scan = app.add_subcommand("scan", "Count 2s for every prime in a range, CSV");
    scan->add_option("--from", opt.from, "Range start")->required();
    scan->add_option("--to", opt.to, "Range end (inclusive)")->required();

    auto* key = app.add_subcommand("key", "Derive key material as hex");
    key->add_option("--prime", opt.prime, "Prime modulus q")->required();
    key->add_option("--bits", opt.bits, "Number of bits")->required();
    key->add_option("--offset", opt.offset, "Start position in the bit stream");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (generate->parsed()) cmd_generate(out, opt);
        else if (map->parsed()) cmd_map(out, opt);
        else if (autocorr->parsed()) cmd_autocorr(out, opt);
        else if (table->parsed()) cmd_table(out, opt);
        else if (scan->parsed()) cmd_scan(out, opt);
        else if (key->parsed()) cmd_key(out, opt);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace dseq::cli
