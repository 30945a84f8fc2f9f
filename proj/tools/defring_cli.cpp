// defring: ring presentations of Borel-case deformation rings from
// annotated pro-p presentations.
//
// exit codes: 0 ok, 1 I/O or usage, 2 parse error, 3 invalid input,
// 4 verification failure

#include "defring/defring.hpp"
#include "defring_fixtures.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace defring;

namespace {

enum Exit { kOk = 0, kIo = 1, kParse = 2, kInvalid = 3, kVerify = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::optional<std::uint64_t> p;
    std::optional<unsigned> prec, deg;
    bool json = false;
    std::string out;
};

std::string read_input(const std::string &path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const Common &c, const std::string &text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw IoError("cannot write " + c.out);
    f << text;
}

// DSL or the JSON mirror, with command-line overrides applied.
Presentation load(const std::string &path, const Common &c)
{
    std::string text = read_input(path);
    Presentation pres;
    auto first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && text[first] == '{')
            pres = presentation_from_json(nlohmann::json::parse(text));
        else
            pres = parse_dsl(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(0, e.byte, e.what());
    }
    if (c.p)
        pres.p = *c.p;
    if (c.prec)
        pres.prec = *c.prec;
    if (c.deg)
        pres.deg = *c.deg;
    try {
        normalize(pres);
    } catch (const ArithmeticError &e) {
        throw ValidationError(e.what());
    }
    require_valid(pres);
    return pres;
}

void add_common(CLI::App *sub, Common &c)
{
    sub->add_option("--p", c.p, "override the prime");
    sub->add_option("--prec", c.prec, "override the precision N (work mod p^N)")->check(CLI::Range(1u, 255u));
    sub->add_option("--deg", c.deg, "override the degree cap D")->check(CLI::Range(1u, 255u));
    sub->add_flag("--json", c.json, "JSON output");
    sub->add_option("--out", c.out, "write output to FILE");
}

std::string dump(const ojson &j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Universal deformation rings of Borel-case representations from pro-p presentations"};
    app.require_subcommand(1);
    Common c;
    std::string input, input2, fixture_name;
    int drop = 0;

    auto *compute = app.add_subcommand("compute", "print Z_p[[Y_1..Y_d']]/I for a presentation");
    compute->add_option("input", input, "DSL or JSON file, '-' for stdin")->required();
    add_common(compute, c);

    auto *fox = app.add_subcommand("fox", "print the projected Fox matrix");
    fox->add_option("input", input)->required();
    add_common(fox, c);

    auto *verify = app.add_subcommand("verify", "check every relation image against the ideal");
    verify->add_option("input", input)->required();
    verify->add_option("--drop-generator", drop, "omit the i-th ideal generator (1-based) before checking");
    add_common(verify, c);

    auto *compare = app.add_subcommand("compare", "variable map from R_{G_S} onto R_G");
    compare->add_option("gs", input, "presentation of G_S")->required();
    compare->add_option("g", input2, "presentation of G")->required();
    add_common(compare, c);

    auto *fixture = app.add_subcommand("fixture", "print a bundled fixture");
    fixture->add_option("name", fixture_name)->required();

    auto *show = app.add_subcommand("show", "normalize a presentation and print it (DSL, or JSON with --json)");
    show->add_option("input", input)->required();
    add_common(show, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kIo;
    }

    try {
        if (*fixture) {
            auto it = fixtures::all.find(fixture_name);
            if (it == fixtures::all.end()) {
                std::cerr << "unknown fixture " << fixture_name << "; available:";
                for (const auto &[name, text] : fixtures::all)
                    std::cerr << " " << name;
                std::cerr << "\n";
                return kIo;
            }
            std::cout << it->second;
            return kOk;
        }
        if (*show) {
            auto pres = load(input, c);
            write_output(c, c.json ? dump(presentation_to_json(pres)) : render_dsl(pres));
            return kOk;
        }
        if (*compute) {
            auto rp = ring_presentation(load(input, c));
            write_output(c, c.json ? dump(to_json(rp)) : to_text(rp));
            return kOk;
        }
        if (*fox) {
            auto pres = load(input, c);
            auto fm = fox_matrix(pres);
            write_output(c, c.json ? dump(to_json(fm, pres)) : to_text(fm, pres));
            return kOk;
        }
        if (*verify) {
            auto pres = load(input, c);
            auto rp = ring_presentation(pres);
            if (drop != 0) {
                if (drop < 1 || static_cast<std::size_t>(drop) > rp.ideal.size()) {
                    std::cerr << "--drop-generator: the ideal has " << rp.ideal.size() << " generators\n";
                    return kIo;
                }
                rp.ideal.erase(rp.ideal.begin() + (drop - 1));
            }
            auto rep = check_relations(pres, rp);
            write_output(c, c.json ? dump(to_json(rep, rp)) : to_text(rep, rp));
            return rep.ok ? kOk : kVerify;
        }
        if (*compare) {
            auto rep = compare_surjection(load(input, c), load(input2, c));
            write_output(c, c.json ? dump(to_json(rep)) : to_text(rep));
            return kOk;
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const ArithmeticError &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    }
    return kIo;
}
