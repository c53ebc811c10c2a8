// klang: classify regular languages by the algebra they generate under
// complement and closure, export the generated orbits, and run the
// verification suites.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "klang/klang.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
    std::string alphabet;
    std::string mode = "positive";
};

klang::Mode parse_mode(const std::string& mode) {
    return mode == "kleene" ? klang::Mode::Kleene : klang::Mode::Positive;
}

void print_bundle(const klang::PredicateBundle& b) {
    auto yn = [](bool v) { return v ? "yes" : "no"; };
    std::cout << "open: " << yn(b.open) << "   closed: " << yn(b.closed)
              << "   epsilon: " << yn(b.contains_epsilon) << "\n";
    std::cout << "L^+ clopen: " << yn(b.plus_clopen)
              << "   L^\xe2\x8a\x95 clopen: " << yn(b.interior_clopen) << "\n";
    std::cout << "L^{\xe2\x8a\x95+} = L^+: " << yn(b.eq_int_plus)
              << "   L^{+\xe2\x8a\x95} = L^\xe2\x8a\x95: " << yn(b.eq_plus_int)
              << "   L^{+\xe2\x8a\x95} = L^{\xe2\x8a\x95+}: " << yn(b.eq_mixed)
              << "\n";
}

int cmd_classify(const CommonArgs& args, const std::string& regex) {
    klang::Alphabet alphabet(args.alphabet);
    klang::Lang l = klang::lang_from_regex(regex, alphabet);
    if (parse_mode(args.mode) == klang::Mode::Positive) {
        klang::PositiveCase c = klang::classify_positive(l);
        auto sizes = klang::positive_case_sizes(c);
        std::cout << "case " << klang::positive_case_label(c)
                  << ", |B|=" << sizes.first << ", |A|=" << sizes.second
                  << "\n";
    } else {
        klang::KleeneCase c = klang::classify_kleene(l);
        auto sizes = klang::kleene_case_sizes(c);
        std::cout << "case " << klang::kleene_case_label(c)
                  << ", |E|=" << sizes.first << ", |D|=" << sizes.second
                  << "\n";
    }
    print_bundle(klang::predicates(l));
    if (alphabet == klang::Alphabet("a") &&
        l == klang::lang_from_regex("a|aaa", alphabet)) {
        std::cout << "note: a|aaa is sometimes quoted as the case-(4) "
                     "witness, but it is open (every factorization of a and "
                     "of aaa has a factor in the language), so it belongs to "
                     "case (2); a|aaaa witnesses case (4).\n";
    }
    return kExitOk;
}

int cmd_orbit(const CommonArgs& args, const std::string& regex,
              const std::string& format) {
    klang::Alphabet alphabet(args.alphabet);
    klang::Lang l = klang::lang_from_regex(regex, alphabet);
    klang::Mode mode = parse_mode(args.mode);
    klang::OrbitGraph g = klang::generate_orbit(l, mode);
    std::string label = mode == klang::Mode::Positive
                            ? klang::positive_case_label(klang::classify_positive(l))
                            : klang::kleene_case_label(klang::classify_kleene(l));
    klang::OrbitDocument doc = klang::build_orbit_document(g, regex, label);
    if (format == "dot")
        std::cout << klang::to_dot(doc);
    else
        std::cout << klang::to_json(doc).dump(2) << "\n";
    return kExitOk;
}

int cmd_member(const CommonArgs& args, const std::string& regex,
               const std::string& word) {
    klang::Alphabet alphabet(args.alphabet);
    klang::Lang l = klang::lang_from_regex(regex, alphabet);
    bool in = klang::accepts(l, word);
    std::cout << (in ? "true" : "false") << "\n";
    return in ? kExitOk : kExitFalse;
}

int cmd_verify(const CommonArgs& args, const std::string& suite,
               std::size_t samples, std::uint64_t seed, int horizon) {
    klang::Alphabet alphabet(args.alphabet);
    klang::SuiteReport rep;
    if (suite == "axioms") {
        rep = klang::run_axioms(alphabet, samples, seed);
    } else if (suite == "table1") {
        rep = klang::run_table1();
    } else if (suite == "table2") {
        rep = klang::run_table2();
    } else if (suite == "equations") {
        rep = klang::run_equations(alphabet, samples, seed);
    } else if (suite == "lemma1") {
        rep = klang::run_lemma1(alphabet, samples, seed);
    } else if (suite == "unary") {
        rep = klang::run_unary(alphabet.letter(0), samples, seed);
    } else if (suite == "oracle") {
        rep = klang::run_oracle(alphabet, samples, seed, horizon);
    } else if (suite == "example1") {
        rep = klang::run_example1(alphabet, samples, seed);
    } else {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    klang::print_report(std::cout, rep);
    return rep.all_pass() ? kExitOk : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "klang: algebras of regular languages under complement and "
        "positive/Kleene closure.\n"
        "Set KLANG_STATE_CAP to override the subset-construction cap "
        "(default 1000000)."};
    app.require_subcommand(1);

    CommonArgs common;
    std::string regex, word, format = "json";
    std::string suite;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    int horizon = 8;

    auto add_common = [&common](CLI::App* cmd) {
        cmd->add_option("--alphabet", common.alphabet,
                        "Alphabet letters, e.g. 'ab'")
            ->required();
        cmd->add_option("--mode", common.mode, "positive or kleene")
            ->check(CLI::IsMember({"positive", "kleene"}))
            ->capture_default_str();
    };

    CLI::App* classify =
        app.add_subcommand("classify", "Classify a language's algebra");
    add_common(classify);
    classify->add_option("regex", regex, "Regular expression")->required();

    CLI::App* orbit =
        app.add_subcommand("orbit", "Emit the generated orbit graph");
    add_common(orbit);
    orbit->add_option("regex", regex, "Regular expression")->required();
    orbit->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();

    CLI::App* member =
        app.add_subcommand("member", "Decide membership of a word");
    add_common(member);
    member->add_option("regex", regex, "Regular expression")->required();
    member->add_option("word", word, "Word (may be empty)");

    CLI::App* verify = app.add_subcommand(
        "verify",
        "Run a property suite. table1/table2/example1 use canned alphabets; "
        "unary uses the first --alphabet letter.");
    add_common(verify);
    verify
        ->add_option("suite", suite,
                     "axioms|table1|table2|equations|lemma1|unary|oracle|"
                     "example1")
        ->required()
        ->check(CLI::IsMember({"axioms", "table1", "table2", "equations",
                               "lemma1", "unary", "oracle", "example1"}));
    verify->add_option("--samples", samples, "Random samples per property")
        ->capture_default_str();
    verify->add_option("--seed", seed, "Base seed")->capture_default_str();
    verify->add_option("--horizon", horizon, "Oracle horizon")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(common, regex);
        if (app.got_subcommand(orbit))
            return cmd_orbit(common, regex, format);
        if (app.got_subcommand(member)) return cmd_member(common, regex, word);
        if (app.got_subcommand(verify))
            return cmd_verify(common, suite, samples, seed, horizon);
    } catch (const klang::SyntaxError& e) {
        std::cerr << "parse error at position " << e.position() << ": "
                  << e.what() << "\n";
        return kExitUsage;
    } catch (const klang::UnknownSymbol& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFalse;
    }
    return kExitUsage;
}
